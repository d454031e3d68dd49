#pragma once

// Graded ideals of k[x,y] as degreewise subspace flags, and everything
// computed from an actual ideal: Hilbert function, generator/relation/tau
// invariants, socle, normal patterns, standard generators, the affine chart
// over the coefficient parameters, theta matrices, level ideals,
// common-factor splitting, and seeded random sampling.

#include <map>
#include <optional>
#include <vector>

#include "betti/betti.hpp"
#include "betti/subspace.hpp"

namespace betti {

template <class K>
struct GradedIdeal {
  Field<K> field;
  int top{0};
  std::vector<GradedSubspace<K>> pieces;  // degrees 0 .. top

  const GradedSubspace<K>& piece(int d) const {
    internal_check(0 <= d && d <= top, "piece degree out of range");
    return pieces[static_cast<size_t>(d)];
  }
  int dim_piece(int d) const {
    if (d < 0) return 0;
    internal_check(d <= top, "ideal not materialized through this degree");
    return pieces[static_cast<size_t>(d)].dim();
  }
  // R_1 pieces[d] inside pieces[d+1] for every materialized degree.
  bool closed_under_r1() const {
    for (int d = 0; d < top; ++d) {
      auto up = multiply_by_r1(piece(d));
      if (!rowspace_contains(piece(d + 1).basis, up.basis)) return false;
    }
    return true;
  }
};

template <class K>
struct IdealInvariants {
  OSequence H;
  BettiTriple triple;
  IndexedSeq socle;  // degrees mu-1 .. s-1, socle_i = beta_{i+2}
};

template <class K>
struct StandardGenerators {
  std::vector<long> k;            // alignment character k_0 > ... > k_mu
  std::vector<BiForm<K>> gens;    // f_0, ..., f_mu with f_i = y^i x^{k_i} + g_i
  std::map<std::pair<int, int>, K> coeffs;  // a_{i,u} over pairs deg f_u > deg f_i
  int degree_of(int i) const {
    return i + static_cast<int>(k[static_cast<size_t>(i)]);
  }
};

template <class K>
struct ThetaMatrix {
  int i{0};
  std::vector<int> domain_gens;  // generator indices, descending
  std::vector<int> range_gens;
  Mat<K> entries;  // (e_{i+1}+1) x (e_i+1)
};

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

template <class K>
GradedIdeal<K> span_ideal(const std::vector<BiForm<K>>& gens, int top,
                          const Field<K>& field) {
  for (const auto& g : gens)
    if (g.degree > top)
      throw InputError("span_ideal: top below a generator degree");
  GradedIdeal<K> ideal;
  ideal.field = field;
  ideal.top = top;
  ideal.pieces.reserve(static_cast<size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) {
    Mat<K> rows = zero_matrix<K>(0, d + 1);
    if (d > 0) rows = multiply_by_r1(ideal.pieces.back()).basis;
    Mat<K> with_gens = rows;
    for (const auto& g : gens) {
      if (g.degree != d) continue;
      Mat<K> one(1, d + 1);
      one.row(0) = g.coeffs;
      with_gens = stack_rows(with_gens, one);
    }
    ideal.pieces.emplace_back(d, std::move(with_gens));
  }
  return ideal;
}

// The ancestor ideal of V: degree j-a piece R_{-a}V, V in degree j, and the
// generated ideal above, materialized through `top`.
template <class K>
GradedIdeal<K> ancestor_ideal(const GradedSubspace<K>& v, int top,
                              const Field<K>& field) {
  const int j = v.degree;
  if (top < j) throw InputError("ancestor_ideal: top below deg V");
  GradedIdeal<K> ideal;
  ideal.field = field;
  ideal.top = top;
  ideal.pieces.resize(static_cast<size_t>(top) + 1);
  ideal.pieces[static_cast<size_t>(j)] = v;
  for (int d = j - 1; d >= 0; --d)
    ideal.pieces[static_cast<size_t>(d)] =
        divide_by_r1_once(ideal.pieces[static_cast<size_t>(d) + 1]);
  for (int d = j + 1; d <= top; ++d)
    ideal.pieces[static_cast<size_t>(d)] =
        multiply_by_r1(ideal.pieces[static_cast<size_t>(d) - 1]);
  return ideal;
}

// L(V) = ancestor(V) + M^{j+1}: the level ideal, materialized through j+2.
template <class K>
GradedIdeal<K> level_ideal(const GradedSubspace<K>& v, const Field<K>& field) {
  if (v.dim() == 0) throw InputError("level_ideal: V must be nonzero");
  const int j = v.degree;
  GradedIdeal<K> ideal = ancestor_ideal(v, j, field);
  ideal.top = j + 2;
  ideal.pieces.push_back(full_space(j + 1, field));
  ideal.pieces.push_back(full_space(j + 2, field));
  return ideal;
}

// f * R_{d - deg f} as a subspace of R_d.
template <class K>
GradedSubspace<K> principal_piece(const BiForm<K>& f, int d) {
  internal_check(!f.is_zero() && f.degree <= d, "principal_piece degree");
  const int m = d - f.degree;
  Mat<K> rows = zero_matrix<K>(m + 1, d + 1);
  for (int a = 0; a <= m; ++a)
    rows.block(a, a, 1, f.degree + 1) = f.coeffs;
  return GradedSubspace<K>(d, std::move(rows));
}

// ---------------------------------------------------------------------------
// Invariants
// ---------------------------------------------------------------------------

// New generators in degree d: rows of pieces[d] outside R_1 pieces[d-1],
// picked greedily from the canonical basis.
template <class K>
std::vector<BiForm<K>> minimal_generators(const GradedIdeal<K>& ideal) {
  std::vector<BiForm<K>> gens;
  for (int d = 0; d <= ideal.top; ++d) {
    const auto& piece = ideal.piece(d);
    if (piece.dim() == 0) continue;
    Mat<K> seen = (d == 0) ? zero_matrix<K>(0, 1)
                           : multiply_by_r1(ideal.piece(d - 1)).basis;
    if (static_cast<int>(seen.rows()) == piece.dim()) continue;
    for (int r = 0; r < piece.dim(); ++r) {
      Row<K> row = piece.basis.row(r);
      if (in_rowspace(row, seen)) continue;
      gens.emplace_back(d, row);
      Mat<K> one(1, d + 1);
      one.row(0) = row;
      seen = sum_rowspaces(seen, one);
    }
  }
  return gens;
}

template <class K>
long minimal_generator_count(const GradedIdeal<K>& ideal) {
  long count = 0;
  for (int d = 0; d <= ideal.top; ++d) {
    long prev = (d == 0) ? 0 : multiply_by_r1(ideal.piece(d - 1)).dim();
    count += ideal.dim_piece(d) - prev;
  }
  return count;
}

template <class K>
OSequence hilbert_function_of(const GradedIdeal<K>& ideal) {
  std::vector<long> h;
  for (int d = 0; d <= ideal.top; ++d)
    h.push_back(d + 1 - ideal.dim_piece(d));
  return OSequence::analyze(h);
}

// H, nu, beta, tau and the socle of an Artinian-complete ideal.  nu comes
// from R_1-multiplication dimensions, beta independently from
// R_{-1}-division dimensions; the assembled triple re-checks every identity
// coupling them, so a formula mismatch surfaces as InternalError.
template <class K>
IdealInvariants<K> invariants_of(const GradedIdeal<K>& ideal) {
  OSequence h = hilbert_function_of(ideal);
  if (!h.artinian())
    throw InputError("invariants_of: non-Artinian input (H ends at " +
                     std::to_string(h.c()) + ")");
  if (ideal.top < h.s() + 1)
    throw InputError("invariants_of: ideal must be materialized through s+1");
  const int mu = h.mu(), s = h.s();

  std::vector<long> tau, nu, beta;
  for (int d = mu; d <= s; ++d) {
    long rdim = multiply_by_r1(ideal.piece(d)).dim();
    long prev_rdim = (d == mu) ? 0 : multiply_by_r1(ideal.piece(d - 1)).dim();
    tau.push_back(rdim - ideal.dim_piece(d));
    nu.push_back(ideal.dim_piece(d) - prev_rdim);
    beta.push_back(divide_by_r1(ideal.piece(d)).dim() - ideal.dim_piece(d - 1));
  }

  IdealInvariants<K> inv;
  inv.H = h;
  inv.triple = BettiTriple::from_tau(h, tau);
  for (int d = mu; d <= s; ++d) {
    internal_check(inv.triple.nu.at(d) == nu[static_cast<size_t>(d - mu)],
                   "nu mismatch against the multiplication route");
    internal_check(inv.triple.beta.at(d + 1) == beta[static_cast<size_t>(d - mu)],
                   "beta mismatch against the division route");
  }
  inv.socle = IndexedSeq(mu - 1, {});
  for (int i = mu - 1; i <= s - 1; ++i)
    inv.socle.vals.push_back(inv.triple.beta.at(i + 2));
  return inv;
}

// ---------------------------------------------------------------------------
// Normal pattern and standard generators
// ---------------------------------------------------------------------------

template <class K>
GradedIdeal<K> monomial_ideal_of(const OSequence& h, const Field<K>& field,
                                 int top = -1) {
  if (top < 0) top = h.s() + 1;
  GradedIdeal<K> ideal;
  ideal.field = field;
  ideal.top = top;
  for (int d = 0; d <= top; ++d) {
    long dim = d + 1 - h.value(d);
    Mat<K> rows = zero_matrix<K>(dim, d + 1);
    for (long r = 0; r < dim; ++r) rows(r, r) = field.make(1);
    ideal.pieces.emplace_back(d, std::move(rows));
  }
  return ideal;
}

// I_u + B_u = R_u for every degree: the canonical basis has its pivots in
// the leading (low x-power) columns.
template <class K>
bool has_normal_pattern(const GradedIdeal<K>& ideal) {
  for (int d = 0; d <= ideal.top; ++d) {
    auto piv = pivot_columns(ideal.piece(d).basis);
    for (size_t i = 0; i < piv.size(); ++i)
      if (piv[i] != static_cast<int>(i)) return false;
  }
  return true;
}

template <class K>
StandardGenerators<K> standard_generators(const GradedIdeal<K>& ideal) {
  if (!has_normal_pattern(ideal))
    throw InputError("standard generators need the normal pattern");
  OSequence h = hilbert_function_of(ideal);
  if (!h.artinian()) throw InputError("standard generators need Artinian H");
  StandardGenerators<K> sg;
  sg.k = h.alignment();
  const int mu = h.mu();
  for (int i = 0; i <= mu; ++i) {
    const int d = i + static_cast<int>(sg.k[static_cast<size_t>(i)]);
    internal_check(d <= ideal.top, "pattern generator beyond materialization");
    const auto& piece = ideal.piece(d);
    const int pivot = static_cast<int>(sg.k[static_cast<size_t>(i)]);
    internal_check(pivot < piece.dim(), "alignment row not a pivot");
    sg.gens.emplace_back(d, Row<K>(piece.basis.row(pivot)));
  }
  // Coefficient table: f_i = y^i x^{k_i} + sum a_{i,u} (f_u : x^{...}).
  for (int i = 1; i <= mu; ++i) {
    std::vector<int> us;
    for (int u = 0; u < i; ++u)
      if (sg.degree_of(u) > sg.degree_of(i)) us.push_back(u);
    if (us.empty()) continue;
    Mat<K> basis = zero_matrix<K>(static_cast<Eigen::Index>(us.size()),
                                  sg.degree_of(i) + 1);
    for (size_t t = 0; t < us.size(); ++t) {
      auto v = colon_by_x_power(sg.gens[static_cast<size_t>(us[t])],
                                sg.degree_of(us[t]) - sg.degree_of(i));
      basis.row(static_cast<Eigen::Index>(t)) = v.coeffs;
    }
    Row<K> g = sg.gens[static_cast<size_t>(i)].coeffs;
    g(sg.k[static_cast<size_t>(i)]) -= ideal.field.make(1);
    Row<K> coords = coordinates_in(g, basis);
    for (size_t t = 0; t < us.size(); ++t)
      sg.coeffs[{i, us[t]}] = coords(static_cast<Eigen::Index>(t));
  }
  return sg;
}

// ---------------------------------------------------------------------------
// The affine chart over the free coefficients A
// ---------------------------------------------------------------------------

template <class K>
GradedIdeal<K> chart_ideal(const OSequence& h, const std::vector<K>& params,
                           const Field<K>& field) {
  if (!h.artinian()) throw InputError("chart_ideal needs an Artinian H");
  require_characteristic_at_least(field.spec, h.s(), "chart_ideal");
  const auto positions = chart_parameters(h);
  if (params.size() != positions.size())
    throw InputError("chart_ideal: expected " +
                     std::to_string(positions.size()) + " parameters, got " +
                     std::to_string(params.size()));
  std::map<std::pair<int, int>, K> given;
  for (size_t t = 0; t < positions.size(); ++t) given[positions[t]] = params[t];

  const std::vector<long> k = h.alignment();
  const int mu = h.mu();
  auto deg_of = [&](int i) { return i + static_cast<int>(k[static_cast<size_t>(i)]); };

  std::vector<BiForm<K>> gens;
  for (int i = 0; i <= mu; ++i) {
    BiForm<K> lead = monomial_form(deg_of(i), static_cast<int>(k[static_cast<size_t>(i)]),
                                   field.make(1));
    std::vector<int> unknowns;
    std::vector<BiForm<K>> unknown_vecs;
    BiForm<K> body = lead;
    for (int u = 0; u < i; ++u) {
      if (deg_of(u) <= deg_of(i)) continue;
      BiForm<K> v = colon_by_x_power(gens[static_cast<size_t>(u)],
                                     deg_of(u) - deg_of(i));
      auto it = given.find({i, u});
      if (it != given.end()) {
        for (Eigen::Index j = 0; j < body.coeffs.cols(); ++j)
          body.coeffs(j) += it->second * v.coeffs(j);
      } else {
        unknowns.push_back(u);
        unknown_vecs.push_back(v);
      }
    }
    if (i == 0) {
      gens.push_back(body);
      continue;
    }
    // Pattern closure pins the dependent coefficients: x^{k_{i-1}-k_i} f_i
    // must lie in the span of the same-degree multiples of f_0 .. f_{i-1}.
    const int w = static_cast<int>(k[static_cast<size_t>(i) - 1] -
                                   k[static_cast<size_t>(i)]);
    const int target_degree = deg_of(i - 1) + 1;
    std::vector<BiForm<K>> multiples;
    for (int u = 0; u < i; ++u) {
      const int gap = target_degree - deg_of(u);
      if (gap < 0) continue;
      for (int a = 0; a <= gap; ++a)
        multiples.push_back(shift_form(gens[static_cast<size_t>(u)], a, gap - a));
    }
    GradedSubspace<K> span = rref_basis(multiples, target_degree);
    const auto piv = pivot_columns(span.basis);
    Row<K> r0 = reduce_against(Row<K>(shift_form(body, w, 0).coeffs),
                               span.basis, piv);
    if (unknowns.empty()) {
      for (Eigen::Index j = 0; j < r0.cols(); ++j)
        internal_check(scalar_is_zero(r0(j)),
                       "chart closure violated with no free coefficient");
      gens.push_back(body);
      continue;
    }
    Mat<K> sys = zero_matrix<K>(static_cast<Eigen::Index>(unknowns.size()),
                                target_degree + 1);
    for (size_t t = 0; t < unknowns.size(); ++t)
      sys.row(static_cast<Eigen::Index>(t)) = reduce_against(
          Row<K>(shift_form(unknown_vecs[t], w, 0).coeffs), span.basis, piv);
    Row<K> rhs = -r0;
    Row<K> alpha = coordinates_in(rhs, sys);
    for (size_t t = 0; t < unknowns.size(); ++t)
      for (Eigen::Index j = 0; j < body.coeffs.cols(); ++j)
        body.coeffs(j) += alpha(static_cast<Eigen::Index>(t)) *
                          unknown_vecs[t].coeffs(j);
    gens.push_back(body);
  }

  GradedIdeal<K> ideal = span_ideal(gens, h.s() + 1, field);
  internal_check(hilbert_function_of(ideal) == h,
                 "chart_ideal: Hilbert function drifted");
  internal_check(has_normal_pattern(ideal),
                 "chart_ideal: normal pattern lost");
  return ideal;
}

// ---------------------------------------------------------------------------
// Theta matrices
// ---------------------------------------------------------------------------

// theta_i: multiplication by x on the generator space F'_i, reduced mod
// y*I_i and expressed in the F'_{i+1} basis.  rank(theta_i) = tau(I_i).
template <class K>
ThetaMatrix<K> theta_matrix(const GradedIdeal<K>& ideal, int i,
                            const StandardGenerators<K>& sg) {
  OSequence h = hilbert_function_of(ideal);
  if (i < h.mu() || i >= h.s())
    throw InputError("theta_matrix: need mu <= i < s");
  auto gen_list = [&](int degree) {
    std::vector<int> idx;
    for (int u = static_cast<int>(h.value(degree - 1)); u >= h.value(degree);
         --u)
      idx.push_back(u);
    return idx;
  };
  ThetaMatrix<K> theta;
  theta.i = i;
  theta.domain_gens = gen_list(i);
  theta.range_gens = gen_list(i + 1);
  internal_check(static_cast<long>(theta.domain_gens.size()) == h.e(i) + 1 &&
                     static_cast<long>(theta.range_gens.size()) == h.e(i + 1) + 1,
                 "theta: generator space dimensions");

  // Basis of I_{i+1} split as y*I_i (+) F'_{i+1}.
  const auto& vi = ideal.piece(i);
  Mat<K> basis = zero_matrix<K>(vi.dim() + static_cast<int>(theta.range_gens.size()),
                                i + 2);
  for (int r = 0; r < vi.dim(); ++r)
    basis.block(r, 0, 1, i + 1) = vi.basis.row(r);  // y * row keeps x-exponents
  std::vector<BiForm<K>> range_vecs;
  for (size_t t = 0; t < theta.range_gens.size(); ++t) {
    int u = theta.range_gens[t];
    auto lifted = shift_form(sg.gens[static_cast<size_t>(u)],
                             i + 1 - sg.degree_of(u), 0);
    basis.row(vi.dim() + static_cast<Eigen::Index>(t)) = lifted.coeffs;
    range_vecs.push_back(lifted);
  }

  theta.entries = zero_matrix<K>(static_cast<Eigen::Index>(theta.range_gens.size()),
                                 static_cast<Eigen::Index>(theta.domain_gens.size()));
  for (size_t col = 0; col < theta.domain_gens.size(); ++col) {
    int u = theta.domain_gens[col];
    auto xv = shift_form(sg.gens[static_cast<size_t>(u)],
                         i + 1 - sg.degree_of(u), 0);
    Row<K> coords = coordinates_in(Row<K>(xv.coeffs), basis);
    for (size_t row = 0; row < theta.range_gens.size(); ++row)
      theta.entries(static_cast<Eigen::Index>(row),
                    static_cast<Eigen::Index>(col)) =
          coords(vi.dim() + static_cast<Eigen::Index>(row));
  }
  return theta;
}

template <class K>
ThetaMatrix<K> theta_matrix(const GradedIdeal<K>& ideal, int i) {
  return theta_matrix(ideal, i, standard_generators(ideal));
}

// ---------------------------------------------------------------------------
// Common factor and random sampling
// ---------------------------------------------------------------------------

template <class K>
std::pair<BiForm<K>, GradedIdeal<K>> common_factor_split(
    const GradedIdeal<K>& ideal) {
  OSequence h = hilbert_function_of(ideal);
  const long c = h.c();
  if (c == 0) {
    BiForm<K> unit(0);
    unit.coeffs(0) = ideal.field.make(1);
    return {unit, ideal};
  }
  if (ideal.top < h.s() + 1)
    throw InputError("common_factor_split: materialize through s+1 first");
  BiForm<K> f = gcd_of_forms(minimal_generators(ideal));
  internal_check(f.degree == c, "gcd degree disagrees with the stable value");
  GradedIdeal<K> reduced;
  reduced.field = ideal.field;
  reduced.top = ideal.top - static_cast<int>(c);
  for (int d = 0; d <= reduced.top; ++d) {
    const auto& src = ideal.piece(d + static_cast<int>(c));
    Mat<K> rows = zero_matrix<K>(src.dim(), d + 1);
    for (int r = 0; r < src.dim(); ++r) {
      auto q = divide_forms(BiForm<K>(src.degree, Row<K>(src.basis.row(r))), f);
      internal_check(q.has_value(), "common factor does not divide the piece");
      rows.row(r) = q->coeffs;
    }
    reduced.pieces.emplace_back(d, std::move(rows));
    // Exact degreewise reassembly.
    const auto& back = reduced.pieces.back();
    internal_check(back.dim() == src.dim(), "division collapsed the piece");
    for (int r = 0; r < back.dim(); ++r) {
      auto prod = multiply_forms(
          BiForm<K>(d, Row<K>(back.basis.row(r))), f);
      internal_check(src.contains(prod), "f * I' does not reassemble I");
    }
  }
  return {f, reduced};
}

template <class K>
GradedSubspace<K> random_subspace_of_dim(int degree, int dim,
                                         const Field<K>& field, Rng& rng) {
  internal_check(0 <= dim && dim <= degree + 1, "random subspace dimension");
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat<K> m = zero_matrix<K>(dim, degree + 1);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= degree; ++j) m(i, j) = field.random(rng);
    GradedSubspace<K> v(degree, std::move(m));
    if (v.dim() == dim) return v;
  }
  throw SamplingError("random_subspace: could not reach full rank");
}

// Uniformly seeded flag sampling: V_mu at random, then a random complement
// of R_1 V_i in each higher degree; rejection on H or tau mismatches.
template <class K>
GradedIdeal<K> random_ideal(const OSequence& h, const Field<K>& field,
                            std::uint64_t seed,
                            const std::optional<std::vector<long>>& target_tau =
                                std::nullopt) {
  if (!h.artinian())
    throw InputError("random_ideal samples Artinian H; strip the common "
                     "factor first");
  if (target_tau) BettiTriple::from_tau(h, *target_tau);  // bounds check
  Rng rng(seed);
  const int mu = h.mu(), s = h.s();
  const int budget = 256;
  for (int attempt = 0; attempt < budget; ++attempt) {
    GradedIdeal<K> ideal;
    ideal.field = field;
    ideal.top = s + 1;
    ideal.pieces.resize(static_cast<size_t>(s) + 2);
    for (int d = 0; d < mu; ++d)
      ideal.pieces[static_cast<size_t>(d)] = GradedSubspace<K>(d);
    bool ok = true;
    for (int d = mu; d <= s + 1 && ok; ++d) {
      const long want = d + 1 - h.value(d);
      GradedSubspace<K> grown(d);
      if (d == mu) {
        grown = random_subspace_of_dim(d, static_cast<int>(want), field, rng);
      } else {
        grown = multiply_by_r1(ideal.pieces[static_cast<size_t>(d) - 1]);
        if (grown.dim() > want) {
          ok = false;
          break;
        }
        int extra_tries = 0;
        while (grown.dim() < want && ++extra_tries < 64) {
          Mat<K> add = zero_matrix<K>(1, d + 1);
          for (int j = 0; j <= d; ++j) add(0, j) = field.random(rng);
          grown = GradedSubspace<K>(d, stack_rows(grown.basis, add));
        }
        if (grown.dim() != want) ok = false;
      }
      ideal.pieces[static_cast<size_t>(d)] = std::move(grown);
    }
    if (!ok) continue;
    if (target_tau) {
      std::vector<long> tau;
      for (int d = mu; d <= s; ++d)
        tau.push_back(multiply_by_r1(ideal.piece(d)).dim() -
                      ideal.dim_piece(d));
      if (tau != *target_tau) continue;
    }
    return ideal;
  }
  throw SamplingError(
      "random_ideal: retry budget exhausted for H = " + h.to_string() +
      (target_tau ? " with a tau target" : "") + " over characteristic " +
      std::to_string(field.spec.characteristic()));
}

}  // namespace betti
