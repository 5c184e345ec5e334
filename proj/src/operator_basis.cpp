#include "ucx/operator_basis.hpp"

#include <cmath>
#include <string>

#include "ucx/errors.hpp"

namespace ucx {

ComplexMatrix pauli_i() {
    return ComplexMatrix::identity(2);
}

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2, 2);
    m.at(0, 1) = Complex(0.0, -1.0);
    m.at(1, 0) = Complex(0.0, 1.0);
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = -1.0;
    return m;
}

namespace {

const ComplexMatrix& single_pauli(unsigned code) {
    static const ComplexMatrix table[4] = {pauli_i(), pauli_x(), pauli_y(), pauli_z()};
    return table[code & 3];
}

char pauli_char(unsigned code) {
    static const char names[4] = {'I', 'X', 'Y', 'Z'};
    return names[code & 3];
}

}  // namespace

ComplexMatrix pauli_string_for_label(int n, unsigned label) {
    qubit_dim(n);
    if (static_cast<std::uint64_t>(label) >= (1ull << (2 * n)))
        throw DimensionError("Pauli label out of range for n qubits");
    // Qubit 0 is the first tensor factor and owns the most significant label
    // pair; it is also the most significant bit of state indices.
    ComplexMatrix m = single_pauli((label >> (2 * (n - 1))) & 3);
    for (int shift = 2 * (n - 2); shift >= 0; shift -= 2)
        m = tensor(m, single_pauli((label >> shift) & 3));
    return m;
}

std::string pauli_label_name(int n, unsigned label) {
    std::string s;
    for (int shift = 2 * (n - 1); shift >= 0; shift -= 2)
        s.push_back(pauli_char((label >> shift) & 3));
    return s;
}

OperatorBasis pauli_basis(int n) {
    qubit_dim(n);
    OperatorBasis basis;
    basis.n = n;
    basis.kind = BasisKind::PauliString;
    const std::uint64_t count = 1ull << (2 * n);
    basis.elements.reserve(count);
    basis.labels.reserve(count);
    for (unsigned label = 0; label < count; ++label) {
        basis.elements.push_back(pauli_string_for_label(n, label));
        basis.labels.push_back(pauli_label_name(n, label));
    }
    return basis;
}

namespace {

void subtract_projection(ComplexMatrix& v, const ComplexMatrix& e, int n) {
    const Complex c = hs_inner_normalized(e, v, n);
    for (std::size_t r = 0; r < v.rows(); ++r)
        for (std::size_t col = 0; col < v.cols(); ++col)
            v.at(r, col) -= c * e.at(r, col);
}

double hs_norm_normalized(const ComplexMatrix& m, int n) {
    return std::sqrt(std::abs(hs_inner_normalized(m, m, n).real()));
}

}  // namespace

OperatorBasis gram_schmidt_with_seed(const ComplexMatrix& seed, int n,
                                     double degeneracy_tol) {
    const std::size_t dim = qubit_dim(n);
    if (seed.rows() != dim || seed.cols() != dim)
        throw DimensionError("seed matrix has wrong shape for n qubits");

    const std::uint64_t count = 1ull << (2 * n);
    std::vector<ComplexMatrix> candidates;
    candidates.reserve(count + 1);
    candidates.push_back(seed);
    for (unsigned label = 0; label < count; ++label)
        candidates.push_back(pauli_string_for_label(n, label));

    OperatorBasis basis;
    basis.n = n;
    basis.kind = BasisKind::GramSchmidt;
    const std::size_t target = static_cast<std::size_t>(count);

    for (const ComplexMatrix& cand : candidates) {
        if (basis.elements.size() == target) break;
        ComplexMatrix v = cand;
        for (const ComplexMatrix& e : basis.elements) subtract_projection(v, e, n);
        // One re-orthogonalization pass for numerical stability.
        for (const ComplexMatrix& e : basis.elements) subtract_projection(v, e, n);
        const double norm = hs_norm_normalized(v, n);
        if (norm < degeneracy_tol) continue;
        basis.elements.push_back(v * Complex(1.0 / norm, 0.0));
        basis.labels.push_back(std::to_string(basis.elements.size() - 1));
    }

    if (basis.elements.size() != target)
        throw InternalError("Gram-Schmidt did not produce a complete basis");
    return basis;
}

std::vector<Complex> decompose(const ComplexMatrix& m, const OperatorBasis& basis) {
    const std::size_t dim = qubit_dim(basis.n);
    if (m.rows() != dim || m.cols() != dim)
        throw DimensionError("matrix shape does not match basis dimension");
    std::vector<Complex> coeffs;
    coeffs.reserve(basis.size());
    for (const ComplexMatrix& e : basis.elements)
        coeffs.push_back(hs_inner_normalized(e, m, basis.n));
    return coeffs;
}

bool verify_parseval(const UnitaryOperator& u, const OperatorBasis& basis, double tol) {
    if (u.n() != basis.n) throw DimensionError("unitary and basis qubit counts differ");
    double total = 0.0;
    for (const ComplexMatrix& e : basis.elements)
        total += std::norm(hs_inner_normalized(e, u.matrix(), basis.n));
    return std::abs(total - 1.0) <= tol;
}

double basis_orthonormality_error(const OperatorBasis& basis) {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const Complex g =
                hs_inner_normalized(basis.elements[i], basis.elements[j], basis.n);
            const double expect = (i == j) ? 1.0 : 0.0;
            const double err = std::abs(g - Complex(expect, 0.0));
            if (err > worst) worst = err;
        }
    }
    return worst;
}

}  // namespace ucx
