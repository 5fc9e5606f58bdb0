#include "geomaug/pipeline/rng.hpp"

#include "geomaug/core/error.hpp"

namespace geomaug::pipeline {

namespace {

constexpr std::uint64_t kFiringSalt = 0xa0761d6478bd642fULL;
constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
  return mix64(mix64(mix64(seed) ^ stream) ^ index);
}

double firing_draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) noexcept {
  return static_cast<double>(mix64(stream_key(seed, stream, index) ^ kFiringSalt) >> 11) * kTwoPowMinus53;
}

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
    : engine_(stream_key(seed, stream, index)) {}

double SeededRng::uniform() { return static_cast<double>(engine_() >> 11) * kTwoPowMinus53; }

double SeededRng::uniform(double lo, double hi) {
  if (hi < lo) throw InvalidArgument("uniform: empty range");
  return lo + (hi - lo) * uniform();
}

std::int64_t SeededRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidArgument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());  // full 64-bit range
  const std::uint64_t threshold = (0 - span) % span;
  std::uint64_t r = engine_();
  while (r < threshold) r = engine_();
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r % span);
}

}  // namespace geomaug::pipeline
