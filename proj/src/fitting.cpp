#include "betti/fitting.hpp"

#include <algorithm>

namespace betti {

std::vector<Rat> interpolate_exact(const std::vector<long>& xs,
                                   const std::vector<Rat>& ys) {
  internal_check(xs.size() == ys.size() && !xs.empty(),
                 "interpolation needs matching nonempty points");
  const size_t n = xs.size();
  std::vector<Rat> coeffs(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    // Build the i-th Lagrange basis polynomial scaled by y_i.
    std::vector<Rat> basis{Rat(1)};
    Rat denom(1);
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      // basis *= (x - xs[j])
      std::vector<Rat> next(basis.size() + 1, Rat(0));
      for (size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t];
        next[t] -= basis[t] * Rat(xs[j]);
      }
      basis = std::move(next);
      denom *= Rat(xs[i] - xs[j]);
    }
    internal_check(denom != 0, "interpolation nodes must be distinct");
    for (size_t t = 0; t < basis.size(); ++t)
      coeffs[t] += ys[i] * basis[t] / denom;
  }
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

Rat evaluate_poly(const std::vector<Rat>& coeffs, long x) {
  Rat acc(0);
  for (size_t t = coeffs.size(); t-- > 0;) acc = acc * Rat(x) + coeffs[t];
  return acc;
}

CodimReport verify_codim_report(const OSequence& h,
                                const std::vector<StratumCensus>& fit,
                                const StratumCensus* holdout) {
  const long dim = h.dim_moduli();
  if (static_cast<long>(fit.size()) < dim + 1)
    throw InputError("need at least dim+1 = " + std::to_string(dim + 1) +
                     " censuses at distinct primes");
  CodimReport report;
  report.H = h;
  for (const auto& census : fit) {
    internal_check(census.H == h, "census H mismatch");
    report.fit_primes.push_back(census.q);
  }
  if (holdout) report.holdout_prime = holdout->q;

  const auto lattice = build_lattice(h);
  report.pass = true;
  for (const auto& node : lattice.nodes) {
    StratumFit sf;
    sf.eta = node.eta;
    sf.beta = node.triple.beta.vals;
    sf.codim_predicted = node.codim;
    sf.expected_degree = dim - node.codim;
    std::vector<long> xs;
    std::vector<Rat> ys;
    for (const auto& census : fit) {
      xs.push_back(census.q);
      ys.push_back(Rat(static_cast<long>(census.counts.at(node.eta))));
    }
    sf.coefficients = interpolate_exact(xs, ys);
    sf.fitted_degree = static_cast<long>(sf.coefficients.size()) - 1;
    sf.integer_coefficients = true;
    for (const auto& c : sf.coefficients)
      if (c.get_den() != 1) sf.integer_coefficients = false;
    if (holdout) {
      Rat predicted = evaluate_poly(sf.coefficients, holdout->q);
      sf.holdout_ok =
          predicted == Rat(static_cast<long>(holdout->counts.at(node.eta)));
    }
    sf.pass = sf.integer_coefficients && sf.holdout_ok &&
              sf.fitted_degree == sf.expected_degree;
    report.pass = report.pass && sf.pass;
    report.nodes.push_back(std::move(sf));
  }

  // beta_max sits at the top of each chain: eta_i = min(e_i, e_{i+1}).
  std::vector<long> eta_max;
  for (int i = h.mu(); i < h.s(); ++i)
    eta_max.push_back(std::min(h.e(i), h.e(i + 1)));
  auto check_product = [&](const StratumCensus& census) {
    return census.counts.at(eta_max) == beta_max_predicted_count(h, census.q);
  };
  for (const auto& census : fit)
    report.beta_max_product_ok = report.beta_max_product_ok && check_product(census);
  if (holdout)
    report.beta_max_product_ok =
        report.beta_max_product_ok && check_product(*holdout);
  report.pass = report.pass && report.beta_max_product_ok;
  return report;
}

}  // namespace betti
