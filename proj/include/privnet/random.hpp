#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "privnet/linalg.hpp"

namespace privnet {

/// Seeded random source with platform-independent conversions.
///
/// Only the raw std::mt19937_64 output is used; uniform and normal variates
/// are derived here so that samples are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in (0, 1].
  double uniform_open_zero() { return 1.0 - uniform(); }
  double normal();
  Complex complex_normal();
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Independent stream id for (seed, name, index); order-independent.
std::uint64_t stream_seed(std::uint64_t seed, std::string_view name, std::uint64_t index);

}  // namespace privnet
