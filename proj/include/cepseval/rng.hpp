#pragma once

#include <array>
#include <cstdint>

namespace cepseval {

// xoshiro256++ (Blackman & Vigna), state seeded with splitmix64. Chosen over
// std:: engines/distributions because its output sequence is fully specified,
// so runs are reproducible bit-for-bit across platforms and ports.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);

  std::uint64_t next();

  // Uniform double in [0, 1) from the top 53 bits.
  double uniform();

  double uniform(double lo, double hi);

  // Uniform integer in [0, bound), bound > 0, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound);

  // Poisson sample by chunked Knuth inversion; exact for any mean >= 0
  // (chunks keep exp(-mean) inside normal double range).
  std::uint64_t poisson(double mean);

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace cepseval
