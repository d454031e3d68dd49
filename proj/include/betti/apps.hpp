#pragma once

// Socle-type feasibility and realization, subspace-avoiding beta_max
// construction, and intersections of general enough level ideals.

#include <optional>

#include "betti/ideal.hpp"
#include "betti/staircase.hpp"

namespace betti {

// Socle type: dimensions of the socle per degree, index 0 upward.
using SocleType = std::vector<long>;

// Termwise test of e_{i+1} - e_{i+2} <= ST_i <= e_{i+1}.
bool socle_feasible(const OSequence& h, const SocleType& st);

// All Artinian H with s <= degree_bound admitting the given socle type.
std::vector<OSequence> enumerate_H_for_socle(const SocleType& st,
                                             int degree_bound);

// The relation sequence beta_i = ST_{i-2} induced by a feasible socle type.
BettiTriple triple_from_socle(const OSequence& h, const SocleType& st);

SocleType socle_type_of(const IndexedSeq& socle, int top);

// A monomial witness whose socle equals ST exactly.
template <class K>
GradedIdeal<K> realize_socle(const OSequence& h, const SocleType& st,
                             const Field<K>& field) {
  if (!socle_feasible(h, st))
    throw InputError("socle type infeasible for this H");
  auto triple = triple_from_socle(h, st);
  auto stair = find_monomial_with_beta(h, triple);
  internal_check(stair.has_value(),
                 "no monomial witness for a feasible socle type");
  std::vector<BiForm<K>> gens;
  for (const auto& [r, c] : stair->corners())
    gens.push_back(shift_form(monomial_form(0, 0, field.make(1)),
                              static_cast<int>(c), static_cast<int>(r)));
  auto ideal = span_ideal(gens, h.s() + 1, field);
  auto inv = invariants_of(ideal);
  internal_check(inv.H == h, "witness Hilbert function drifted");
  SocleType target = st;
  while (target.size() > 1 && target.back() == 0) target.pop_back();
  internal_check(socle_type_of(inv.socle, h.s()) == target,
                 "realized socle differs from the target");
  return ideal;
}

// ---------------------------------------------------------------------------
// Subspace avoidance (the beta_max construction)
// ---------------------------------------------------------------------------

// Builds an ideal with tau = 1 in every degree and I_i inter W_i = 0, by
// choosing dual linear forms whose powers stay independent of the perps of
// the W_i, then multiplying the annihilator factors down the chain.
// W maps degree -> subspace; missing degrees mean no constraint.
template <class K>
GradedIdeal<K> avoid_subspaces(const OSequence& h,
                               const std::map<int, GradedSubspace<K>>& w,
                               const Field<K>& field, std::uint64_t seed) {
  if (!h.artinian()) throw InputError("avoid_subspaces needs Artinian H");
  require_characteristic_at_least(field.spec, h.s() + 1, "avoid_subspaces");
  const int mu = h.mu(), s = h.s();
  for (const auto& [deg, sub] : w) {
    if (deg < mu || deg > s - 1)
      throw InputError("W graded piece outside [mu, s-1]");
    if (sub.dim() > h.value(deg))
      throw InputError("dim W_i exceeds H_i at degree " + std::to_string(deg));
  }
  Rng rng(seed);
  const int budget = 128;
  for (int attempt = 0; attempt < budget; ++attempt) {
    // Dual points chosen so far; factor of f for each.
    std::vector<ProjectivePoint<K>> points;
    std::vector<K> used_roots;
    bool ok = true;
    for (int i = s - 1; i >= mu && ok; --i) {
      const long need = h.e(i + 1);
      for (long n = 0; n < need && ok; ++n) {
        bool fresh = false;
        for (int tries = 0; tries < 64 && !fresh; ++tries) {
          K a = field.random(rng);
          fresh = true;
          for (const auto& r : used_roots)
            if (r == a) fresh = false;
          if (fresh) {
            used_roots.push_back(a);
            points.push_back({a, field.make(1)});
          }
        }
        if (!fresh) ok = false;
      }
      if (!ok) break;
      // The u-th powers of all points so far must be independent of
      // W_u-perp for mu <= u <= i.
      for (int u = mu; u <= i && ok; ++u) {
        auto it = w.find(u);
        Mat<K> stack = zero_matrix<K>(0, u + 1);
        if (it != w.end() && it->second.dim() > 0)
          stack = perp_of(it->second, field).basis;
        const Eigen::Index base = stack.rows();
        Mat<K> with_powers =
            zero_matrix<K>(base + static_cast<Eigen::Index>(points.size()),
                           u + 1);
        with_powers.topRows(base) = stack;
        for (size_t t = 0; t < points.size(); ++t)
          with_powers.row(base + static_cast<Eigen::Index>(t)) =
              dual_power(points[t], u, field);
        if (rank_of(Mat<K>(with_powers)) !=
            static_cast<int>(base + points.size()))
          ok = false;
      }
    }
    if (!ok) continue;
    // f_i = prod of the annihilator factors x - a y chosen at steps >= i.
    GradedIdeal<K> ideal;
    ideal.field = field;
    ideal.top = s + 1;
    ideal.pieces.resize(static_cast<size_t>(s) + 2);
    for (int d = 0; d < mu; ++d)
      ideal.pieces[static_cast<size_t>(d)] = GradedSubspace<K>(d);
    BiForm<K> f(0);
    f.coeffs(0) = field.make(1);
    size_t consumed = 0;
    for (int i = s - 1; i >= mu; --i) {
      for (long n = 0; n < h.e(i + 1); ++n) {
        const auto& pt = points[consumed++];
        BiForm<K> lin(1);
        lin.coeffs(0) = field.make(0) - pt.a;
        lin.coeffs(1) = field.make(1);
        f = multiply_forms(f, lin);
      }
      ideal.pieces[static_cast<size_t>(i)] = principal_piece(f, i);
    }
    ideal.pieces[static_cast<size_t>(s)] = full_space(s, field);
    ideal.pieces[static_cast<size_t>(s) + 1] = full_space(s + 1, field);
    // Exact post-hoc verification.
    bool verified = hilbert_function_of(ideal) == h;
    for (int i = mu; i <= s - 1 && verified; ++i) {
      if (tau_of(ideal.piece(i)) != 1) verified = false;
      auto it = w.find(i);
      if (verified && it != w.end() && it->second.dim() > 0) {
        auto inter = intersect_rowspaces(ideal.piece(i).basis, it->second.basis);
        if (inter.rows() != 0) verified = false;
      }
    }
    if (verified) return ideal;
  }
  throw SamplingError("avoid_subspaces: retry budget exhausted over "
                      "characteristic " +
                      std::to_string(field.spec.characteristic()));
}

// ---------------------------------------------------------------------------
// Intersections of level ideals
// ---------------------------------------------------------------------------

struct LevelSpec {
  long j{0};                      // socle degree
  long d{0};                      // dim V
  std::optional<long> tau_target;

  void validate() const {
    if (d < 1 || d > j + 1) throw InputError("LevelSpec: need 1 <= d <= j+1");
    if (tau_target) {
      long hi = std::min(d, j + 2 - d);
      if (*tau_target < 1 || *tau_target > hi)
        throw InputError("LevelSpec: tau must lie in [1, min(d, j+2-d)]");
    }
  }
};

// Samples V of dimension d in R_j with the requested tau: generic when
// unconstrained, otherwise a product g * V' with V' generic in low degree
// (generic tau there equals the target), verified exactly and retried.
template <class K>
GradedSubspace<K> sample_level_subspace(const LevelSpec& spec,
                                        const Field<K>& field, Rng& rng) {
  spec.validate();
  const int j = static_cast<int>(spec.j), d = static_cast<int>(spec.d);
  for (int attempt = 0; attempt < 64; ++attempt) {
    GradedSubspace<K> v(j);
    if (!spec.tau_target) {
      v = random_subspace_of_dim(j, d, field, rng);
    } else {
      const int t = static_cast<int>(*spec.tau_target);
      const int inner_degree = d - 2 + t;  // generic tau there is min(d,t)=t
      if (inner_degree >= j) {
        v = random_subspace_of_dim(j, d, field, rng);
      } else {
        auto inner = random_subspace_of_dim(inner_degree, d, field, rng);
        BiForm<K> g(j - inner_degree);
        for (Eigen::Index m = 0; m < g.coeffs.cols(); ++m)
          g.coeffs(m) = field.random(rng);
        if (g.is_zero()) continue;
        Mat<K> rows = zero_matrix<K>(d, j + 1);
        for (int r = 0; r < d; ++r)
          rows.row(r) =
              multiply_forms(BiForm<K>(inner_degree,
                                       Row<K>(inner.basis.row(r))),
                             g)
                  .coeffs;
        v = GradedSubspace<K>(j, std::move(rows));
      }
    }
    if (v.dim() != d) continue;
    if (spec.tau_target && tau_of(v) != *spec.tau_target) continue;
    return v;
  }
  throw SamplingError("level subspace sampling failed for j=" +
                      std::to_string(spec.j) + " d=" + std::to_string(spec.d));
}

template <class K>
struct IntersectionResult {
  GradedIdeal<K> ideal;
  OSequence H;
  std::vector<long> expected_H;           // min(sum N_u, u+1) termwise
  bool H_matches{false};
  std::vector<long> tau_measured;         // degrees mu(I) .. j_1
  std::vector<long> tau_predicted;        // sum over specs with j_i >= u
  bool tau_additive{false};
  std::vector<long> tau_subspaces;        // tau(V_i) per spec
};

template <class K>
IntersectionResult<K> intersect_levels(std::vector<LevelSpec> specs,
                                       const Field<K>& field,
                                       std::uint64_t seed) {
  if (specs.empty()) throw InputError("need at least one level spec");
  std::sort(specs.begin(), specs.end(),
            [](const LevelSpec& a, const LevelSpec& b) { return a.j > b.j; });
  Rng rng(seed);
  const int j1 = static_cast<int>(specs.front().j);
  const int top = j1 + 2;

  std::vector<GradedIdeal<K>> members;
  std::vector<long> tau_subspaces;
  std::vector<std::vector<long>> member_H;
  for (const auto& spec : specs) {
    auto v = sample_level_subspace(spec, field, rng);
    tau_subspaces.push_back(tau_of(v));
    auto li = level_ideal(v, field);
    while (li.top < top) {
      li.pieces.push_back(full_space(li.top + 1, field));
      ++li.top;
    }
    member_H.push_back(hilbert_function_of(li).values());
    members.push_back(std::move(li));
  }

  IntersectionResult<K> result;
  result.ideal.field = field;
  result.ideal.top = top;
  for (int u = 0; u <= top; ++u) {
    Mat<K> inter = members.front().piece(u).basis;
    for (size_t m = 1; m < members.size(); ++m)
      inter = intersect_rowspaces(inter, members[m].piece(u).basis);
    result.ideal.pieces.emplace_back(u, std::move(inter));
  }
  result.H = hilbert_function_of(result.ideal);
  for (int u = 0; u <= top; ++u) {
    long sum = 0;
    for (size_t m = 0; m < members.size(); ++m) {
      const auto& hv = member_H[m];
      sum += u < static_cast<int>(hv.size()) ? hv[static_cast<size_t>(u)] : 0;
    }
    result.expected_H.push_back(std::min<long>(sum, u + 1));
  }
  {
    std::vector<long> actual;
    for (int u = 0; u <= top; ++u) actual.push_back(result.H.value(u));
    result.H_matches = actual == result.expected_H;
  }

  const int mu = result.H.mu();
  result.tau_additive = true;
  for (int u = mu; u <= j1; ++u) {
    result.tau_measured.push_back(tau_of(result.ideal.piece(u)));
    long sum = 0;
    for (size_t m = 0; m < specs.size(); ++m)
      if (specs[m].j >= u) sum += tau_subspaces[m];
    result.tau_predicted.push_back(sum);
    if (result.tau_measured.back() != sum) result.tau_additive = false;
  }
  result.tau_subspaces = tau_subspaces;

  // The intersection is contained in every member, degreewise.
  for (const auto& m : members)
    for (int u = 0; u <= top; ++u)
      internal_check(
          rowspace_contains(m.piece(u).basis, result.ideal.piece(u).basis),
          "intersection not contained in a member ideal");
  return result;
}

struct IntersectionReport {
  long trials{0};
  long H_matches{0};
  long tau_additive{0};
  double H_fraction() const {
    return trials ? static_cast<double>(H_matches) / static_cast<double>(trials)
                  : 0.0;
  }
  double tau_fraction() const {
    return trials
               ? static_cast<double>(tau_additive) / static_cast<double>(trials)
               : 0.0;
  }
};

template <class K>
IntersectionReport intersection_report(const std::vector<LevelSpec>& specs,
                                       const Field<K>& field, long trials,
                                       std::uint64_t seed) {
  IntersectionReport report;
  report.trials = trials;
  for (long t = 0; t < trials; ++t) {
    auto r = intersect_levels(specs, field,
                              mix_seed(seed, static_cast<std::uint64_t>(t)));
    if (r.H_matches) ++report.H_matches;
    if (r.tau_additive) ++report.tau_additive;
  }
  return report;
}

}  // namespace betti
