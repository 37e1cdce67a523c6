#pragma once

// Seeded samplers. All randomness flows from an explicit 64-bit seed into a
// std::mt19937_64; sub-streams are derived with splitmix64 so parallel work
// stays reproducible.

#include <cstdint>
#include <random>

#include "loowit/matcore.hpp"

namespace loowit {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

/// Independent seed for stream `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

RMatrix gaussian_real(int rows, int cols, Rng& rng);
CMatrix gaussian_complex(int rows, int cols, Rng& rng);

/// Haar-distributed orthogonal n x n matrix (QR with sign-fixed R diagonal).
RMatrix random_orthogonal(int n, Rng& rng);

/// Haar-distributed unitary n x n matrix (QR with phase-fixed R diagonal).
CMatrix random_unitary(int n, Rng& rng);

/// Haar-random pure state projector.
CMatrix random_pure_density(int d, Rng& rng);

/// Normalized Wishart mixture G G^dagger / Tr(G G^dagger) with G d x d.
CMatrix random_mixed_density(int d, Rng& rng);

/// Uniform point on the probability simplex of size n.
RVector random_simplex(int n, Rng& rng);

}  // namespace loowit
