#include "ucx/random_unitary.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "ucx/errors.hpp"

namespace ucx {

namespace {

// std::normal_distribution is implementation-defined, so roll Box-Muller by
// hand to keep streams identical everywhere.
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    Complex next_complex() {
        const double u1 = uniform_open();
        const double u2 = uniform_open();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::acos(-1.0) * u2;
        return Complex(r * std::cos(theta), r * std::sin(theta));
    }

private:
    double uniform_open() {
        // (0, 1]: 53-bit mantissa, shifted away from zero.
        return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
    }

    std::mt19937_64 rng_;
};

double column_norm(const ComplexMatrix& m, std::size_t col) {
    double s = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) s += std::norm(m.at(r, col));
    return std::sqrt(s);
}

void subtract_column_projection(ComplexMatrix& m, std::size_t target, std::size_t onto) {
    Complex c(0.0, 0.0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        c += std::conj(m.at(r, onto)) * m.at(r, target);
    for (std::size_t r = 0; r < m.rows(); ++r)
        m.at(r, target) -= c * m.at(r, onto);
}

}  // namespace

UnitaryOperator haar_random_unitary(int n, std::uint64_t seed) {
    const std::size_t dim = qubit_dim(n);
    GaussianSource gauss(seed);
    ComplexMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = gauss.next_complex();

    for (std::size_t col = 0; col < dim; ++col) {
        for (std::size_t prev = 0; prev < col; ++prev)
            subtract_column_projection(m, col, prev);
        for (std::size_t prev = 0; prev < col; ++prev)
            subtract_column_projection(m, col, prev);
        const double norm = column_norm(m, col);
        if (norm < 1e-12)
            throw InternalError("degenerate Gaussian sample during orthonormalization");
        for (std::size_t r = 0; r < dim; ++r)
            m.at(r, col) = m.at(r, col) * (1.0 / norm);
    }
    return UnitaryOperator(n, std::move(m));
}

PureState haar_random_state(int n, std::uint64_t seed) {
    const std::size_t dim = qubit_dim(n);
    GaussianSource gauss(seed);
    std::vector<Complex> amplitudes(dim);
    double norm2 = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        amplitudes[i] = gauss.next_complex();
        norm2 += std::norm(amplitudes[i]);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : amplitudes) a *= inv;
    return PureState(n, std::move(amplitudes));
}

}  // namespace ucx
