#pragma once

// Exact interpolation of stratum counts as polynomials in q, and the
// comparison of fitted degrees against the predicted codimensions.

#include <string>
#include <vector>

#include "betti/census.hpp"
#include "betti/field.hpp"

namespace betti {

// Lagrange interpolation through (x_i, y_i) with exact rational arithmetic;
// coefficients returned lowest degree first, trailing zeros trimmed.
std::vector<Rat> interpolate_exact(const std::vector<long>& xs,
                                   const std::vector<Rat>& ys);

Rat evaluate_poly(const std::vector<Rat>& coeffs, long x);

struct StratumFit {
  std::vector<long> eta;
  std::vector<long> beta;
  long codim_predicted{0};
  long expected_degree{0};  // dim G(H) - codim
  long fitted_degree{0};
  bool integer_coefficients{false};
  bool holdout_ok{true};
  std::vector<Rat> coefficients;
  bool pass{false};
};

struct CodimReport {
  OSequence H;
  std::vector<long> fit_primes;
  long holdout_prime{0};  // 0 when no holdout census was supplied
  std::vector<StratumFit> nodes;
  // beta_max counts equal prod (q^{e_i+1}-1)/(q-1) at every supplied prime.
  bool beta_max_product_ok{true};
  bool pass{false};
};

// Interpolates each stratum count across the supplied censuses (one per
// distinct prime), checks fitted degree == dim - codim, integrality, the
// optional held-out prime, and the beta_max product formula.
CodimReport verify_codim_report(const OSequence& h,
                                const std::vector<StratumCensus>& fit,
                                const StratumCensus* holdout = nullptr);

}  // namespace betti
