#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

namespace disrupt {

// Counter-based generator: output i is the SplitMix64 finalizer applied to
// key + (i + 1) * kGamma. A stream is fully described by (key, counter), so
// any draw can be replayed without running the sequence, and split() derives
// independent child keys. Satisfies UniformRandomBitGenerator.
//
// Identifier "splitmix64-ctr/1". Derived quantities:
//   uniform()        (x >> 11) * 2^-53, in [0, 1)
//   uniform_open01() 1 - uniform(), in (0, 1]
//   below(n)         Lemire multiply-shift with rejection
//   coin()           top bit of the next draw
class CounterRng {
 public:
  using result_type = std::uint64_t;

  static constexpr std::string_view kName = "splitmix64-ctr/1";
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit CounterRng(std::uint64_t seed = 0) : key_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Draw at an absolute position without advancing the stream.
  result_type at(std::uint64_t counter) const;

  // Independent child stream. Children of the same parent with distinct ids
  // do not overlap; the parent stream is not advanced.
  CounterRng split(std::uint64_t stream_id) const;

  double uniform();
  double uniform_open01();
  std::uint64_t below(std::uint64_t bound);
  bool coin();
  bool bernoulli(double p);

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace disrupt
