#include "disrupt/rng.hpp"

#include <stdexcept>

namespace disrupt {

std::uint64_t CounterRng::mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

CounterRng::result_type CounterRng::at(std::uint64_t counter) const {
  return mix(key_ + (counter + 1) * kGamma);
}

CounterRng::result_type CounterRng::operator()() { return at(counter_++); }

CounterRng CounterRng::split(std::uint64_t stream_id) const {
  // Two rounds keep child keys decorrelated from the parent's output sequence.
  return CounterRng(mix(mix(key_ ^ 0x5851F42D4C957F2DULL) + stream_id * kGamma));
}

double CounterRng::uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double CounterRng::uniform_open01() { return 1.0 - uniform(); }

std::uint64_t CounterRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("CounterRng::below: bound is 0");
  // Lemire, "Fast random integer generation in an interval" (2019).
  unsigned __int128 product =
      static_cast<unsigned __int128>((*this)()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>((*this)()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

bool CounterRng::coin() { return ((*this)() >> 63) != 0; }

bool CounterRng::bernoulli(double p) { return uniform() < p; }

}  // namespace disrupt
