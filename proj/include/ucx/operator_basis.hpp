#pragma once

#include <string>
#include <vector>

#include "ucx/core_linalg.hpp"

namespace ucx {

enum class BasisKind { PauliString, GramSchmidt };

// Orthonormal operator basis of 4^n elements under the normalized
// Hilbert-Schmidt inner product <A,B> = Tr(A^dagger B) / 2^n.
struct OperatorBasis {
    int n = 0;
    BasisKind kind = BasisKind::PauliString;
    std::vector<ComplexMatrix> elements;
    // Human-readable labels, e.g. "XZ" for X (x) Z. Gram-Schmidt bases use
    // positional indices "0", "1", ...
    std::vector<std::string> labels;

    std::size_t size() const { return elements.size(); }
};

// Single-qubit Pauli matrices.
ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// Tensor product of Paulis for a 2n-bit label: per qubit 00=I, 01=X, 10=Y,
// 11=Z; qubit 0 is the first tensor factor and owns the most significant
// label pair.
ComplexMatrix pauli_string_for_label(int n, unsigned label);
std::string pauli_label_name(int n, unsigned label);

// All 4^n Pauli strings in label order.
OperatorBasis pauli_basis(int n);

// Modified Gram-Schmidt over the Pauli strings with `seed` inserted as the
// first candidate. Residuals below `degeneracy_tol` in norm are dropped.
// Produces exactly 4^n elements or throws InternalError.
OperatorBasis gram_schmidt_with_seed(const ComplexMatrix& seed, int n,
                                     double degeneracy_tol = 1e-8);

// Coefficients c_i = <e_i, M> in basis order.
std::vector<Complex> decompose(const ComplexMatrix& m, const OperatorBasis& basis);

// Checks sum_i |<e_i, U>|^2 == 1 for a unitary U within `tol`.
bool verify_parseval(const UnitaryOperator& u, const OperatorBasis& basis,
                     double tol = 1e-9);

// Max-abs deviation of the basis Gram matrix from the identity.
double basis_orthonormality_error(const OperatorBasis& basis);

}  // namespace ucx
