#pragma once

// Exhaustive enumeration of G(H)(F_q) by chained Schubert-cell extension of
// degreewise subspace flags, and stratum censuses tallied by eta-coordinate.

#include <cstdint>
#include <functional>
#include <map>

#include "betti/ideal.hpp"

namespace betti {

struct StratumCensus {
  OSequence H;
  long q{0};
  // Every lattice node appears, absent strata as explicit zeros.
  std::map<std::vector<long>, std::uint64_t> counts;
  std::uint64_t total{0};

  StratumCensus& merge(const StratumCensus& other);
};

// Product of the per-level Schubert-cell bounds: an upper bound for the
// number of flags the enumeration can visit.
std::uint64_t census_size_bound(const OSequence& h, long q);

// All k-dimensional subspaces of F_q^n, one canonical basis each, in
// RREF-cell order.
void enumerate_subspaces(long n, long k, long q,
                         const std::function<void(const Mat<Fp>&)>& emit);

// [n choose k]_q, saturating instead of overflowing.
std::uint64_t gaussian_binomial_count(long n, long k, long q);

inline std::uint64_t default_census_budget() { return 200'000'000ULL; }

// Calls the visitor once per graded ideal over F_q with H(R/I) = H, passing
// the pieces in degrees mu..s and the tau sequence (indices mu..s) read off
// the flag extension dimensions.  Enumeration order is deterministic.
// Partition/stride select one residue class of the top-level cells, so
// workers can split the walk and merge censuses by addition.
void enumerate_flags(
    const OSequence& h, long q,
    const std::function<void(const std::vector<GradedSubspace<Fp>>&,
                             const std::vector<long>&)>& visit,
    std::uint64_t budget = default_census_budget(), int stride = 1,
    int offset = 0);

// Materializing wrapper: streams complete GradedIdeals (degrees 0..s+1).
void enumerate_GH(const OSequence& h, long q,
                  const std::function<void(const GradedIdeal<Fp>&)>& visit,
                  std::uint64_t budget = default_census_budget());

StratumCensus stratum_census(const OSequence& h, long q,
                             std::uint64_t budget = default_census_budget(),
                             int jobs = 1);

// (q^{e+1} - 1)/(q - 1): points of P^e(F_q).
std::uint64_t projective_space_points(long q, long e);

// The beta_max stratum count predicted by its product-of-projective-spaces
// structure: prod_{i=mu+1}^{s} |P^{e_i}(F_q)|.
std::uint64_t beta_max_predicted_count(const OSequence& h, long q);

}  // namespace betti
