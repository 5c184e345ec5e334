#pragma once

#include <cstdint>

#include "ucx/core_linalg.hpp"

namespace ucx {

// Reproducible Haar-random unitary: a seeded complex Gaussian matrix pushed
// through modified Gram-Schmidt, which leaves the R diagonal positive real.
// The generator and the Gaussian transform are pinned (mt19937_64 plus
// Box-Muller) so outputs are bit-identical across runs and platforms.
UnitaryOperator haar_random_unitary(int n, std::uint64_t seed);

// Normalized seeded complex Gaussian vector.
PureState haar_random_state(int n, std::uint64_t seed);

}  // namespace ucx
