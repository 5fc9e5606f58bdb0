#pragma once

#include <cstdint>
#include <random>

namespace geomaug::pipeline {

/// Deterministic random stream keyed by (seed, stream, index).
///
/// Each pipeline stage draws from its own stream (stream = stage position) for
/// each image index, so adding a stage never perturbs draws of the others.
/// Only the raw 64-bit engine output is used; conversions to reals and ranges
/// are done here so results do not depend on the standard library's
/// distribution implementations.
class SeededRng {
 public:
  SeededRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform();
  /// Uniform in [lo, hi); returns lo when lo == hi.
  double uniform(double lo, double hi);
  /// Uniform integer in the closed range [lo, hi], unbiased.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Combined key of a (seed, stream, index) triple.
std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

/// The draw that decides whether a stage fires for an image: uniform in [0, 1).
/// Computed by hashing alone so it is cheap enough to evaluate for many indices.
double firing_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept;

}  // namespace geomaug::pipeline
