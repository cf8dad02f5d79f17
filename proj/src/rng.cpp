#include "cepseval/rng.hpp"

#include <cmath>

#include "cepseval/error.hpp"

namespace cepseval {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  for (auto& s : state_) s = splitmix64(seed);
}

std::uint64_t Xoshiro256pp::next() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Xoshiro256pp::uniform() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double Xoshiro256pp::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform();
}

std::uint64_t Xoshiro256pp::below(std::uint64_t bound) {
  if (bound == 0) throw Error("below(0) is undefined");
  // Rejection from the top bits of a power-of-two window.
  const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::uint64_t Xoshiro256pp::poisson(double mean) {
  if (mean < 0 || !std::isfinite(mean)) throw Error("poisson mean must be finite and >= 0");
  std::uint64_t total = 0;
  // Poisson(a + b) = Poisson(a) + Poisson(b) for independent draws, so large
  // means are sampled in chunks where exp(-chunk) stays well above the
  // smallest normal double.
  constexpr double kChunk = 400.0;
  while (mean > kChunk) {
    total += poisson(kChunk);
    mean -= kChunk;
  }
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double product = uniform();
  while (product > limit) {
    ++k;
    product *= uniform();
  }
  return total + k;
}

}  // namespace cepseval
