#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ucx {

using Complex = std::complex<double>;

// Tolerances fixed for the whole artifact (double precision, dims <= 2^n with
// small n keeps accumulated error far below these).
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kStateNormTol = 1e-10;
inline constexpr double kBasisOrthoTol = 1e-9;

// Dense row-major complex matrix. Immutable by convention once built; all
// operations return fresh values.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    // Validates entries.size() == rows*cols and that every entry is finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(Complex scalar) const;

    // max_ij |a_ij - b_ij|; throws DimensionError on shape mismatch.
    double max_abs_diff(const ComplexMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

// A 2^n x 2^n matrix validated against U†U = I at construction.
class UnitaryOperator {
public:
    UnitaryOperator(int n, ComplexMatrix matrix, double tol = kUnitarityTol);

    int n() const { return n_; }
    std::size_t dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    int n_;
    ComplexMatrix matrix_;
};

// Unit vector in the 2^n-dimensional state space.
class PureState {
public:
    PureState(int n, std::vector<Complex> amplitudes, double tol = kStateNormTol);

    static PureState computational_basis(int n, std::uint64_t label);
    static PureState zero_state(int n) { return computational_basis(n, 0); }

    int n() const { return n_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

private:
    int n_;
    std::vector<Complex> amplitudes_;
};

// Tr[A†B], unnormalized. Inputs must be square and of equal dimension.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr[A†B] / 2^n. Unitaries are unit vectors under this inner product.
Complex hs_inner_normalized(const ComplexMatrix& a, const ComplexMatrix& b, int n);

// |<A,B>_norm|^2 clamped to [0,1]. Excess above 1 beyond 1e-9 signals an
// internal consistency failure and throws.
double fidelity_matrices(const ComplexMatrix& a, const ComplexMatrix& b, int n);
double fidelity(const UnitaryOperator& a, const UnitaryOperator& b);

// Kronecker product, row (i_A,i_B), column (j_A,j_B) -> A[iA,jA]*B[iB,jB].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

PureState apply(const UnitaryOperator& u, const PureState& s);

// U = sum_i |w_i><v_i| from two orthonormal lists of 2^n states each.
UnitaryOperator unitary_from_basis_images(const std::vector<PureState>& v,
                                          const std::vector<PureState>& w,
                                          double ortho_tol = kBasisOrthoTol);

bool check_unitary(const ComplexMatrix& m, double tol);

// <a|b> and |<a|b>|^2 (clamped like fidelity).
Complex state_inner(const PureState& a, const PureState& b);
double state_fidelity(const PureState& a, const PureState& b);

// 2^n as size_t, with a range guard on n.
std::size_t qubit_dim(int n);

}  // namespace ucx
