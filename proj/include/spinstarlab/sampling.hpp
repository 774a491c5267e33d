// sampling.hpp — random states for property tests and validation sweeps

#pragma once

#include <random>

#include "spinstarlab/xstate.hpp"

namespace spinstarlab {

// Populations from a flat Dirichlet, |c| uniform in [0, sqrt(b d)] (so the
// positivity boundary is reached), phase uniform in [0, 2 pi).
XState random_x_state(std::mt19937& rng);

// Gaussian ket, normalized.
Vector random_ket(std::mt19937& rng, int dim);

// (A + A^dag)/2 with Gaussian A, scaled to ||H||_max <= scale.
Matrix random_hermitian(std::mt19937& rng, int dim, double scale = 1.0);

}  // namespace spinstarlab
