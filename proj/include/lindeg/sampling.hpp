#pragma once

// Seeded random inputs for property sweeps.

#include <cstddef>
#include <random>

#include "lindeg/quiver.hpp"

namespace lindeg {

using Rng = std::mt19937_64;

/// Uniform entries; over Q, integers in [-9, 9].
Matrix random_matrix(const Field& field, std::size_t rows, std::size_t cols, Rng& rng);
Matrix random_invertible(const Field& field, std::size_t n, Rng& rng);
/// Product of random (rows x r) and (r x cols) factors; rank at most r.
Matrix random_low_rank(const Field& field, std::size_t rows, std::size_t cols, std::size_t r, Rng& rng);

/// Random interval multiplicities on A_n with every vertex dimension at most max_dim.
Decomposition random_decomposition(int n, int max_dim, Rng& rng);

/// g_i' = P_{i+1} g_i P_i^{-1} for random invertible P_i: an isomorphic copy.
RepMatrices random_base_change(const RepMatrices& rep, Rng& rng);

/// Uniform integer in [lo, hi].
int uniform(Rng& rng, int lo, int hi);

}  // namespace lindeg
