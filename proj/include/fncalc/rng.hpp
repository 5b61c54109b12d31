#ifndef FNCALC_RNG_HPP
#define FNCALC_RNG_HPP

#include <cstdint>

#include "fncalc/connection.hpp"

namespace fncalc {

/// Deterministic, platform-independent generator (splitmix64). The
/// verification suites derive one instance per check so reports are
/// byte-identical for a given seed regardless of thread schedule.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi], inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Polynomial of total degree <= max_degree with integer coefficients drawn
/// uniformly from [-coeff_bound, coeff_bound].
Poly random_poly(SplitMix64& rng, int nvars, int max_degree = 2, int coeff_bound = 5);
Section random_section(SplitMix64& rng, int rank, int nvars, int max_degree = 2,
                       int coeff_bound = 5);
VForm random_vform(SplitMix64& rng, const Algebroid& A, int degree, Target target,
                   int max_degree = 2, int coeff_bound = 5);
Connection random_connection(SplitMix64& rng, const Algebroid& A, Target bundle,
                             int max_degree = 2, int coeff_bound = 5);
/// symmetrize(random connection on A): torsion-free by construction.
Connection random_torsion_free(SplitMix64& rng, const Algebroid& A, int max_degree = 2,
                               int coeff_bound = 5);

} // namespace fncalc

#endif
