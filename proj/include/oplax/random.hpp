#pragma once

#include <cstdint>
#include <random>

#include "oplax/operation.hpp"

namespace oplax {

using Rng = std::mt19937_64;

/// Independent stream for trial `index` of a run seeded with `seed`.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

/// Entries uniform in [-1, 1].
Operation random_operation(std::size_t dim, std::size_t degree, Rng& rng);
Vector random_vector(std::size_t dim, Rng& rng);

}  // namespace oplax
