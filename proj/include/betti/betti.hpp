#pragma once

// The coupled invariant sequences (beta, nu, tau) attached to a Hilbert
// function, the stratum codimension formulas, and the lattice of strata.

#include <vector>

#include "betti/osequence.hpp"

namespace betti {

// For a fixed H, any one of tau (indices mu..s), nu (mu..s) or
// beta (mu+1..s+1) determines the other two through
//   tau_i = e_{i+1} + 1 - nu_{i+1} = e_i + 1 - beta_{i+1}.
// beta is stored through s+1 with beta_{s+1} = e_s, the value forced by the
// rank-one cokernel count sum(nu) - sum(beta) = 1.
struct BettiTriple {
  OSequence H;
  IndexedSeq tau;   // mu .. s
  IndexedSeq nu;    // mu .. s
  IndexedSeq beta;  // mu+1 .. s+1

  // All identities and bounds are re-checked; violations throw InputError
  // (bad data) with the offending index.
  static BettiTriple from_tau(const OSequence& h, const std::vector<long>& tau);
  static BettiTriple from_nu(const OSequence& h, const std::vector<long>& nu);
  // Accepts beta through s (the usual presentation) or through s+1.
  static BettiTriple from_beta(const OSequence& h,
                               const std::vector<long>& beta);

  // sum_{i > mu} beta_i nu_i; asserts agreement with
  // sum_{i >= mu} (e_i + 1 - tau_i)(e_{i+1} + 1 - tau_i).
  long codim() const;

  // Termwise order on beta: this >= o elementwise.
  bool dominates(const BettiTriple& o) const;
  bool operator==(const BettiTriple& o) const {
    return H == o.H && tau == o.tau;
  }
};

// The most special stratum: tau_i = 1 for all i in [mu, s].
BettiTriple beta_max_triple(const OSequence& h);
// The generic stratum: tau maximal, tau_i = 1 + min(e_i, e_{i+1}).
BettiTriple beta_min_triple(const OSequence& h);

long codim_stratum(const OSequence& h, const BettiTriple& t);

// eta coordinates: eta_i = beta_{i+1} - (e_i - e_{i+1})^+ for mu <= i < s,
// a bijection onto prod [0, min(e_i, e_{i+1})].
std::vector<long> eta_of(const BettiTriple& t);
BettiTriple triple_from_eta(const OSequence& h, const std::vector<long>& eta);

struct LatticeNode {
  BettiTriple triple;
  long codim;
  std::vector<long> eta;
};

struct StratumLattice {
  OSequence H;
  std::vector<LatticeNode> nodes;          // sorted by eta, lexicographic
  std::vector<std::pair<int, int>> edges;  // covering pairs (lower, higher)

  // Per-coordinate sizes of the product of chains [min(e_i, e_{i+1})].
  std::vector<long> shape() const;
  int node_index(const std::vector<long>& eta) const;
};

StratumLattice build_lattice(const OSequence& h);

// Free coefficient positions (i, u) of the affine chart U_B over H: the
// coefficient of f_u : x^{...} in the standard generator f_i is a chart
// parameter exactly when some degree v has H_{v+1} <= i <= H_v and
// H_{v+2} <= u <= H_{v+1} - 1.  Ordered by i descending, then u descending;
// the count equals dim G(H).
std::vector<std::pair<int, int>> chart_parameters(const OSequence& h);

}  // namespace betti
