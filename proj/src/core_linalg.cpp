#include "ucx/core_linalg.hpp"

#include <cmath>
#include <string>

#include "ucx/errors.hpp"

namespace ucx {

namespace {

void require_same_square(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw DimensionError("hs_inner: matrices must be square with identical dimension (got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
    }
}

double clamp_fidelity(double f) {
    if (f > 1.0 + 1e-9) {
        throw InternalError("fidelity exceeds 1 by more than 1e-9: " + std::to_string(f));
    }
    if (f > 1.0) return 1.0;
    if (f < 0.0) return 0.0;
    return f;
}

}  // namespace

std::size_t qubit_dim(int n) {
    if (n < 1 || n > 16) {
        throw DimensionError("qubit count must be in [1,16], got " + std::to_string(n));
    }
    return std::size_t{1} << n;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("matrix dimensions must be positive");
    }
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("entry count " + std::to_string(entries_.size()) +
                             " does not match shape " + std::to_string(rows_) + "x" +
                             std::to_string(cols_));
    }
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = Complex(1.0, 0.0);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = std::conj(at(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw DimensionError("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                             std::to_string(cols_) + " * " + std::to_string(rhs.rows_) + "x" +
                             std::to_string(rhs.cols_));
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = at(r, k);
            if (a == Complex(0.0, 0.0)) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) {
                out.at(r, c) += a * rhs.at(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix diff shape mismatch");
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    ComplexMatrix out = *this;
    for (Complex& z : out.entries_) z *= scalar;
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("max_abs_diff shape mismatch");
    }
    double m = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        m = std::max(m, std::abs(entries_[i] - other.entries_[i]));
    }
    return m;
}

UnitaryOperator::UnitaryOperator(int n, ComplexMatrix matrix, double tol)
    : n_(n), matrix_(std::move(matrix)) {
    const std::size_t dim = qubit_dim(n);
    if (matrix_.rows() != dim || matrix_.cols() != dim) {
        throw DimensionError("unitary for n=" + std::to_string(n) + " must be " +
                             std::to_string(dim) + "x" + std::to_string(dim) + ", got " +
                             std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
    }
    if (!check_unitary(matrix_, tol)) {
        throw ValidationError("matrix fails the unitarity check at tolerance " + std::to_string(tol));
    }
}

PureState::PureState(int n, std::vector<Complex> amplitudes, double tol)
    : n_(n), amplitudes_(std::move(amplitudes)) {
    const std::size_t dim = qubit_dim(n);
    if (amplitudes_.size() != dim) {
        throw DimensionError("state for n=" + std::to_string(n) + " must have " +
                             std::to_string(dim) + " amplitudes, got " +
                             std::to_string(amplitudes_.size()));
    }
    double norm2 = 0.0;
    for (const Complex& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("state amplitudes must be finite");
        }
        norm2 += std::norm(a);
    }
    if (std::abs(norm2 - 1.0) > tol) {
        throw ValidationError("state norm^2 deviates from 1 by " + std::to_string(norm2 - 1.0));
    }
}

PureState PureState::computational_basis(int n, std::uint64_t label) {
    const std::size_t dim = qubit_dim(n);
    if (label >= dim) {
        throw DimensionError("basis label " + std::to_string(label) + " out of range for n=" +
                             std::to_string(n));
    }
    std::vector<Complex> amps(dim, Complex(0.0, 0.0));
    amps[label] = Complex(1.0, 0.0);
    return PureState(n, std::move(amps));
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_square(a, b);
    // Tr[A†B] = sum_ij conj(A_ij) B_ij
    Complex acc(0.0, 0.0);
    const std::vector<Complex>& av = a.entries();
    const std::vector<Complex>& bv = b.entries();
    for (std::size_t i = 0; i < av.size(); ++i) acc += std::conj(av[i]) * bv[i];
    return acc;
}

Complex hs_inner_normalized(const ComplexMatrix& a, const ComplexMatrix& b, int n) {
    const std::size_t dim = qubit_dim(n);
    if (a.rows() != dim || a.cols() != dim || b.rows() != dim || b.cols() != dim) {
        throw DimensionError("hs_inner_normalized: operands must be 2^n x 2^n");
    }
    return hs_inner(a, b) / static_cast<double>(dim);
}

double fidelity_matrices(const ComplexMatrix& a, const ComplexMatrix& b, int n) {
    return clamp_fidelity(std::norm(hs_inner_normalized(a, b, n)));
}

double fidelity(const UnitaryOperator& a, const UnitaryOperator& b) {
    if (a.n() != b.n()) {
        throw DimensionError("fidelity: qubit counts differ (" + std::to_string(a.n()) + " vs " +
                             std::to_string(b.n()) + ")");
    }
    return fidelity_matrices(a.matrix(), b.matrix(), a.n());
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ra = 0; ra < a.rows(); ++ra)
        for (std::size_t ca = 0; ca < a.cols(); ++ca) {
            const Complex va = a.at(ra, ca);
            if (va == Complex(0.0, 0.0)) continue;
            for (std::size_t rb = 0; rb < b.rows(); ++rb)
                for (std::size_t cb = 0; cb < b.cols(); ++cb) {
                    out.at(ra * b.rows() + rb, ca * b.cols() + cb) = va * b.at(rb, cb);
                }
        }
    return out;
}

PureState apply(const UnitaryOperator& u, const PureState& s) {
    if (u.n() != s.n()) {
        throw DimensionError("apply: qubit counts differ");
    }
    const std::size_t dim = s.dim();
    std::vector<Complex> out(dim, Complex(0.0, 0.0));
    const ComplexMatrix& m = u.matrix();
    for (std::size_t r = 0; r < dim; ++r) {
        Complex acc(0.0, 0.0);
        for (std::size_t c = 0; c < dim; ++c) acc += m.at(r, c) * s.amplitudes()[c];
        out[r] = acc;
    }
    return PureState(s.n(), std::move(out));
}

UnitaryOperator unitary_from_basis_images(const std::vector<PureState>& v,
                                          const std::vector<PureState>& w,
                                          double ortho_tol) {
    if (v.empty() || v.size() != w.size()) {
        throw DimensionError("basis image lists must be nonempty and of equal length");
    }
    const int n = v.front().n();
    const std::size_t dim = qubit_dim(n);
    if (v.size() != dim) {
        throw DimensionError("expected " + std::to_string(dim) + " basis states, got " +
                             std::to_string(v.size()));
    }
    for (const auto* list : {&v, &w}) {
        for (std::size_t i = 0; i < dim; ++i) {
            if ((*list)[i].n() != n) throw DimensionError("mixed qubit counts in basis list");
            for (std::size_t j = i; j < dim; ++j) {
                const Complex ip = state_inner((*list)[i], (*list)[j]);
                const double target = (i == j) ? 1.0 : 0.0;
                if (std::abs(ip - Complex(target, 0.0)) > ortho_tol) {
                    throw ValidationError("basis list is not orthonormal at tolerance " +
                                          std::to_string(ortho_tol));
                }
            }
        }
    }
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t r = 0; r < dim; ++r) {
            const Complex wr = w[i].amplitudes()[r];
            if (wr == Complex(0.0, 0.0)) continue;
            for (std::size_t c = 0; c < dim; ++c) {
                m.at(r, c) += wr * std::conj(v[i].amplitudes()[c]);
            }
        }
    }
    return UnitaryOperator(n, std::move(m));
}

bool check_unitary(const ComplexMatrix& m, double tol) {
    if (!m.is_square()) return false;
    const std::size_t dim = m.rows();
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            // (M†M)[r][c] = sum_k conj(M[k][r]) M[k][c]
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < dim; ++k) acc += std::conj(m.at(k, r)) * m.at(k, c);
            const Complex target = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            if (std::abs(acc - target) > tol) return false;
        }
    }
    return true;
}

Complex state_inner(const PureState& a, const PureState& b) {
    if (a.n() != b.n()) throw DimensionError("state_inner: qubit counts differ");
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        acc += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
    }
    return acc;
}

double state_fidelity(const PureState& a, const PureState& b) {
    return clamp_fidelity(std::norm(state_inner(a, b)));
}

}  // namespace ucx
