#include "ratde/random_ics.hpp"

namespace ratde {

RationalSampler::RationalSampler(std::uint64_t seed, long num_lo, long num_hi,
                                 long den_lo, long den_hi)
    : gen_(seed), num_lo_(num_lo), num_hi_(num_hi), den_lo_(den_lo), den_hi_(den_hi) {}

long RationalSampler::bounded(long lo, long hi) {
  return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
}

Ratio RationalSampler::next() {
  return Ratio(bounded(num_lo_, num_hi_), bounded(den_lo_, den_hi_));
}

InitialConditions RationalSampler::next_ics(int k) {
  std::vector<Ratio> v;
  v.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) v.push_back(next());
  return InitialConditions::from_rationals(v);
}

}  // namespace ratde
