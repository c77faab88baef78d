#pragma once

#include <cstdint>

#include "thp/thcore.hpp"

namespace thp {

/// 64-bit linear congruential generator, identical on every platform:
/// state <- state * 6364136223846793005 + 1442695040888963407, and each draw
/// is the top 31 bits of the new state.
class DeterministicRng {
 public:
  explicit DeterministicRng(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next_u31() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::uint32_t>(state_ >> 33);
  }

  /// Uniform-ish value in [0, bound); bound must be positive.
  std::uint32_t next_below(std::uint32_t bound);

  /// Over the rationals: numerator in [-99, 99], denominator in [1, 9].
  /// Over gf:p: a uniform residue.
  Scalar next_scalar(const FieldSpec& field);

 private:
  std::uint64_t state_;
};

/// A valid parameter array of diameter d drawn from the seed: distinct theta,
/// distinct theta_star, nonzero phi, all by rejection.  Over gf:p the field
/// must hold d+1 distinct values (DomainError when p < d+1).
ParameterArray random_parameter_array(std::size_t d, const FieldSpec& field,
                                      std::uint64_t seed);

}  // namespace thp
