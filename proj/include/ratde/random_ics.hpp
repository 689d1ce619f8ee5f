#ifndef RATDE_RANDOM_ICS_HPP
#define RATDE_RANDOM_ICS_HPP

#include <cstdint>
#include <random>

#include "ratde/reductions.hpp"

namespace ratde {

// Deterministic rational sampler: p/q with p, q drawn uniformly from
// configurable integer ranges. mt19937_64 plus a plain modulus keeps the
// stream identical across platforms; reproducibility outranks statistical
// polish here.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long num_lo = 1, long num_hi = 16,
                           long den_lo = 1, long den_hi = 16);

  Ratio next();
  InitialConditions next_ics(int k);
  std::uint64_t raw() { return gen_(); }

 private:
  long bounded(long lo, long hi);
  std::mt19937_64 gen_;
  long num_lo_, num_hi_, den_lo_, den_hi_;
};

}  // namespace ratde

#endif  // RATDE_RANDOM_ICS_HPP
