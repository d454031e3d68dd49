#include "betti/betti.hpp"

#include <algorithm>
#include <string>

namespace betti {

namespace {

void check_tau_bounds(const OSequence& h, const IndexedSeq& tau) {
  for (int i = h.mu(); i <= h.s(); ++i) {
    long lo = 1, hi = 1 + std::min(h.e(i), h.e(i + 1));
    if (tau.at(i) < lo || tau.at(i) > hi)
      throw InputError("tau_" + std::to_string(i) + " = " +
                       std::to_string(tau.at(i)) + " outside [" +
                       std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

BettiTriple assemble_from_tau(const OSequence& h, IndexedSeq tau) {
  const int mu = h.mu(), s = h.s();
  check_tau_bounds(h, tau);
  BettiTriple t;
  t.H = h;
  t.tau = std::move(tau);
  t.nu = IndexedSeq(mu, std::vector<long>(static_cast<size_t>(s - mu + 1)));
  t.beta =
      IndexedSeq(mu + 1, std::vector<long>(static_cast<size_t>(s - mu + 1)));
  t.nu.ref(mu) = h.e(mu) + 1;
  for (int i = mu; i <= s; ++i) {
    if (i < s) t.nu.ref(i + 1) = h.e(i + 1) + 1 - t.tau.at(i);
    t.beta.ref(i + 1) = h.e(i) + 1 - t.tau.at(i);
  }
  // nu_{s+1} = e_{s+1} + 1 - tau_s must vanish; tau_s = 1 by the bounds.
  internal_check(t.tau.at(s) == 1, "tau_s != 1");

  // Bounds on nu and beta and the rank-one cokernel count.
  long sum_nu = 0, sum_beta = 0;
  for (int i = mu; i <= s; ++i) {
    long lo = pos_part(h.e(i + 1) - h.e(i));
    if (i >= mu && i < s && (t.nu.at(i + 1) > h.e(i + 1) || t.nu.at(i + 1) < lo))
      throw InputError("nu_" + std::to_string(i + 1) + " outside bounds");
    long blo = pos_part(h.e(i) - h.e(i + 1));
    if (t.beta.at(i + 1) > h.e(i) || t.beta.at(i + 1) < blo)
      throw InputError("beta_" + std::to_string(i + 1) + " outside bounds");
    sum_nu += t.nu.at(i);
    sum_beta += t.beta.at(i + 1);
  }
  internal_check(sum_nu - sum_beta == 1, "sum(nu) - sum(beta) != 1");
  // tau_i = tau_{i-1} + nu_i - beta_{i+1} for mu < i <= s.
  for (int i = mu + 1; i <= s; ++i)
    internal_check(
        t.tau.at(i) == t.tau.at(i - 1) + t.nu.at(i) - t.beta.at(i + 1),
        "tau recursion failed at i = " + std::to_string(i));
  return t;
}

}  // namespace

BettiTriple BettiTriple::from_tau(const OSequence& h,
                                  const std::vector<long>& tau) {
  const int mu = h.mu(), s = h.s();
  std::vector<long> full = tau;
  if (static_cast<int>(full.size()) == s - mu) full.push_back(1);
  if (static_cast<int>(full.size()) != s - mu + 1)
    throw InputError("tau needs indices mu..s");
  return assemble_from_tau(h, IndexedSeq(mu, full));
}

BettiTriple BettiTriple::from_nu(const OSequence& h,
                                 const std::vector<long>& nu) {
  const int mu = h.mu(), s = h.s();
  if (static_cast<int>(nu.size()) != s - mu + 1)
    throw InputError("nu needs indices mu..s");
  if (nu[0] != h.e(mu) + 1) throw InputError("nu_mu must equal e_mu + 1");
  std::vector<long> tau(static_cast<size_t>(s - mu + 1));
  for (int i = mu; i < s; ++i)
    tau[static_cast<size_t>(i - mu)] =
        h.e(i + 1) + 1 - nu[static_cast<size_t>(i + 1 - mu)];
  tau[static_cast<size_t>(s - mu)] = 1;
  return assemble_from_tau(h, IndexedSeq(mu, tau));
}

BettiTriple BettiTriple::from_beta(const OSequence& h,
                                   const std::vector<long>& beta) {
  const int mu = h.mu(), s = h.s();
  std::vector<long> full = beta;
  if (static_cast<int>(full.size()) == s - mu) full.push_back(h.e(s));
  if (static_cast<int>(full.size()) != s - mu + 1)
    throw InputError("beta needs indices mu+1..s (or ..s+1)");
  if (full.back() != h.e(s))
    throw InputError("beta_{s+1} must equal e_s = " + std::to_string(h.e(s)));
  std::vector<long> tau(static_cast<size_t>(s - mu + 1));
  for (int i = mu; i <= s; ++i)
    tau[static_cast<size_t>(i - mu)] =
        h.e(i) + 1 - full[static_cast<size_t>(i - mu)];
  return assemble_from_tau(h, IndexedSeq(mu, tau));
}

long BettiTriple::codim() const { return codim_stratum(H, *this); }

bool BettiTriple::dominates(const BettiTriple& o) const {
  for (int i = beta.lo; i <= beta.hi(); ++i)
    if (beta.at(i) < o.beta.at0(i)) return false;
  return true;
}

BettiTriple beta_max_triple(const OSequence& h) {
  std::vector<long> tau(static_cast<size_t>(h.s() - h.mu() + 1), 1);
  return BettiTriple::from_tau(h, tau);
}

BettiTriple beta_min_triple(const OSequence& h) {
  std::vector<long> tau;
  for (int i = h.mu(); i <= h.s(); ++i)
    tau.push_back(1 + std::min(h.e(i), h.e(i + 1)));
  return BettiTriple::from_tau(h, tau);
}

long codim_stratum(const OSequence& h, const BettiTriple& t) {
  long by_beta_nu = 0;
  for (int i = h.mu() + 1; i <= h.s() + 1; ++i)
    by_beta_nu += t.beta.at0(i) * t.nu.at0(i);
  long by_tau = 0;
  for (int i = h.mu(); i <= h.s(); ++i)
    by_tau += (h.e(i) + 1 - t.tau.at(i)) * (h.e(i + 1) + 1 - t.tau.at(i));
  internal_check(by_beta_nu == by_tau,
                 "codimension formulas disagree: " +
                     std::to_string(by_beta_nu) + " vs " +
                     std::to_string(by_tau));
  return by_beta_nu;
}

std::vector<long> eta_of(const BettiTriple& t) {
  std::vector<long> eta;
  for (int i = t.H.mu(); i < t.H.s(); ++i)
    eta.push_back(t.beta.at(i + 1) - pos_part(t.H.e(i) - t.H.e(i + 1)));
  return eta;
}

BettiTriple triple_from_eta(const OSequence& h, const std::vector<long>& eta) {
  if (static_cast<int>(eta.size()) != std::max(h.s() - h.mu(), 0))
    throw InputError("eta has the wrong length");
  std::vector<long> beta;
  for (int i = h.mu(); i < h.s(); ++i)
    beta.push_back(eta[static_cast<size_t>(i - h.mu())] +
                   pos_part(h.e(i) - h.e(i + 1)));
  beta.push_back(h.e(h.s()));
  return BettiTriple::from_beta(h, beta);
}

std::vector<long> StratumLattice::shape() const {
  std::vector<long> sh;
  for (int i = H.mu(); i < H.s(); ++i)
    sh.push_back(std::min(H.e(i), H.e(i + 1)));
  return sh;
}

int StratumLattice::node_index(const std::vector<long>& eta) const {
  for (size_t k = 0; k < nodes.size(); ++k)
    if (nodes[k].eta == eta) return static_cast<int>(k);
  return -1;
}

std::vector<std::pair<int, int>> chart_parameters(const OSequence& h) {
  if (!h.artinian()) throw InputError("chart parameters need an Artinian H");
  std::vector<std::pair<int, int>> out;
  for (int v = h.mu() - 1; v <= h.s(); ++v) {
    for (long i = h.value(v + 1); i <= h.value(v); ++i)
      for (long u = h.value(v + 2); u <= h.value(v + 1) - 1; ++u)
        out.emplace_back(static_cast<int>(i), static_cast<int>(u));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  internal_check(static_cast<long>(out.size()) == h.dim_moduli(),
                 "chart parameter count disagrees with dim G(H)");
  return out;
}

StratumLattice build_lattice(const OSequence& h) {
  StratumLattice lat;
  lat.H = h;
  const std::vector<long> shape = [&] {
    std::vector<long> sh;
    for (int i = h.mu(); i < h.s(); ++i)
      sh.push_back(std::min(h.e(i), h.e(i + 1)));
    return sh;
  }();

  std::vector<long> eta(shape.size(), 0);
  while (true) {
    LatticeNode node;
    node.eta = eta;
    node.triple = triple_from_eta(h, eta);
    node.codim = node.triple.codim();
    lat.nodes.push_back(std::move(node));
    // Odometer over the product of chains, lexicographic.
    size_t k = shape.size();
    while (k > 0 && eta[k - 1] == shape[k - 1]) {
      eta[k - 1] = 0;
      --k;
    }
    if (k == 0) break;
    ++eta[k - 1];
  }

  for (size_t a = 0; a < lat.nodes.size(); ++a) {
    for (size_t b = 0; b < lat.nodes.size(); ++b) {
      // Covering edge: b exceeds a by one in exactly one coordinate.
      long diff = 0;
      bool cover = true;
      for (size_t k = 0; k < shape.size() && cover; ++k) {
        long d = lat.nodes[b].eta[k] - lat.nodes[a].eta[k];
        if (d < 0) cover = false;
        diff += d;
      }
      if (cover && diff == 1)
        lat.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  return lat;
}

}  // namespace betti
