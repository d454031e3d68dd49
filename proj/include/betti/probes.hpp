#pragma once

// Randomized and parametric probes: the genericity of beta_min under
// random sampling, and the behaviour of beta along chart parameter paths.

#include <functional>

#include "betti/ideal.hpp"

namespace betti {

struct GenericityResult {
  long trials{0};
  long hits{0};  // samples landing in the beta_min stratum
  double fraction() const {
    return trials ? static_cast<double>(hits) / static_cast<double>(trials)
                  : 0.0;
  }
};

// Fraction of random_ideal samples with the generic (minimal) beta.
template <class K>
GenericityResult genericity_probe(const OSequence& h, const Field<K>& field,
                                  long trials, std::uint64_t seed) {
  GenericityResult result;
  result.trials = trials;
  const BettiTriple generic = beta_min_triple(h);
  for (long t = 0; t < trials; ++t) {
    auto ideal = random_ideal(h, field, mix_seed(seed, static_cast<std::uint64_t>(t)));
    if (invariants_of(ideal).triple == generic) ++result.hits;
  }
  return result;
}

struct PathPoint {
  Rat t;
  std::vector<long> eta;
  long codim{0};
};

struct SpecializationResult {
  std::vector<PathPoint> points;  // the t = 0 point comes first
  // beta(A(0)) >= beta(A(t)) termwise for every sampled t != 0.
  bool limit_dominates{true};
};

// Evaluates the chart ideal along a rational parameter path and records the
// stratum at each point.  The path is a callback t -> parameter vector.
SpecializationResult specialization_probe(
    const OSequence& h, const std::function<std::vector<Rat>(const Rat&)>& path,
    const std::vector<Rat>& t_values);

}  // namespace betti
