#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "betti/ideal.hpp"

using namespace betti;

namespace {

const Field<Rat> QQ;

OSequence H(std::initializer_list<long> v) {
  return OSequence::analyze(std::vector<long>(v));
}

template <class K>
BiForm<K> form_from(const Field<K>& f, int degree,
                    std::initializer_list<long> coeffs_by_x_exp) {
  BiForm<K> out(degree);
  int m = 0;
  for (long c : coeffs_by_x_exp) out.coeffs(m++) = f.make(c);
  return out;
}

template <class K>
std::vector<K> values(const Field<K>& f, std::initializer_list<long> xs) {
  std::vector<K> out;
  for (long x : xs) out.push_back(f.make(x));
  return out;
}

std::vector<long> tau_vals(const IdealInvariants<Rat>& inv) {
  return inv.triple.tau.vals;
}

}  // namespace

TEST_CASE("span_ideal basics") {
  auto maximal = span_ideal<Rat>(
      {form_from(QQ, 1, {0, 1}), form_from(QQ, 1, {1, 0})}, 4, QQ);
  for (int d = 1; d <= 4; ++d) CHECK(maximal.piece(d).is_full());
  CHECK(maximal.dim_piece(0) == 0);
  CHECK(maximal.closed_under_r1());

  auto principal = span_ideal<Rat>({form_from(QQ, 2, {0, 0, 1})}, 5, QQ);
  for (int d = 2; d <= 5; ++d) CHECK(principal.dim_piece(d) == d - 1);
  CHECK(principal.closed_under_r1());
}

TEST_CASE("invariants of the Example 1 monomial ideal") {
  // (x^5, y x^3, y^2 x^2, y^3): the beta_max point of H = (1,2,3,3,1,0).
  auto ideal = span_ideal<Rat>({form_from(QQ, 5, {0, 0, 0, 0, 0, 1}),
                                form_from(QQ, 4, {0, 0, 0, 1, 0}),
                                form_from(QQ, 4, {0, 0, 1, 0, 0}),
                                form_from(QQ, 3, {1, 0, 0, 0})},
                               6, QQ);
  auto inv = invariants_of(ideal);
  CHECK(inv.H == H({1, 2, 3, 3, 1, 0}));
  CHECK(inv.triple.nu.vals == std::vector<long>{1, 2, 1});
  CHECK(inv.triple.tau.vals == std::vector<long>{1, 1, 1});
  CHECK(inv.triple.beta.vals == std::vector<long>{0, 2, 1});
  CHECK(inv.socle.vals == std::vector<long>{0, 2, 1});
  CHECK(inv.triple == beta_max_triple(inv.H));
  CHECK(minimal_generator_count(ideal) == 4);
}

TEST_CASE("complete intersection (x, y^4)") {
  auto ideal = span_ideal<Rat>(
      {form_from(QQ, 1, {0, 1}), form_from(QQ, 4, {1, 0, 0, 0, 0})}, 5, QQ);
  auto inv = invariants_of(ideal);
  CHECK(inv.H == H({1, 1, 1, 1, 0}));
  // Generators in degrees 1 and 4, single relation in degree 5.
  CHECK(inv.triple.beta.vals == std::vector<long>{0, 0, 0, 1});
  CHECK(inv.triple.nu.vals == std::vector<long>{1, 0, 0, 1});
}

TEST_CASE("monomial_ideal_of") {
  auto h1 = H({1, 2, 3, 3, 1, 0});
  auto m = monomial_ideal_of(h1, QQ);
  CHECK(invariants_of(m).H == h1);
  // M(H)_4 = <y^4, y^3 x, y^2 x^2, y x^3>: x-exponents 0..3.
  CHECK(m.dim_piece(4) == 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c <= 4; ++c)
      CHECK(m.piece(4).basis(r, c) == (r == c ? QQ.make(1) : QQ.make(0)));
  CHECK(has_normal_pattern(m));

  // M((1,1,0)) = (y, x^2): the degree-1 piece is <y>, not <x>.
  auto m2 = monomial_ideal_of(H({1, 1, 0}), QQ);
  CHECK(m2.dim_piece(1) == 1);
  CHECK(m2.piece(1).basis(0, 0) == QQ.make(1));
  CHECK(m2.piece(1).basis(0, 1) == QQ.make(0));

  for (const auto& h : all_artinian_sequences(6))
    CHECK(invariants_of(monomial_ideal_of(h, QQ)).H == h);
}

TEST_CASE("alignment characters") {
  CHECK(H({1, 2, 3, 3, 1, 0}).alignment() == std::vector<long>{5, 3, 2, 0});
  CHECK(H({1, 2, 3, 4, 2, 1, 0}).alignment() ==
        std::vector<long>{6, 4, 2, 1, 0});
  CHECK(H({1, 1, 0}).alignment() == std::vector<long>{2, 0});
}

TEST_CASE("normal pattern detects the swapped ideal") {
  // (y^5, x y^3, x^2 y^2, x^3) is the x<->y mirror; same H, wrong pattern.
  auto swapped = span_ideal<Rat>({form_from(QQ, 5, {1, 0, 0, 0, 0, 0}),
                                  form_from(QQ, 4, {0, 1, 0, 0, 0}),
                                  form_from(QQ, 4, {0, 0, 1, 0, 0}),
                                  form_from(QQ, 3, {0, 0, 0, 1})},
                                 6, QQ);
  CHECK(invariants_of(swapped).H == H({1, 2, 3, 3, 1, 0}));
  CHECK(!has_normal_pattern(swapped));
}

TEST_CASE("ancestor ideal of a principal subspace") {
  auto v = rref_basis<Rat>({form_from(QQ, 2, {0, 0, 1})}, 2);
  auto anc = ancestor_ideal(v, 4, QQ);
  CHECK(anc.dim_piece(0) == 0);
  CHECK(anc.dim_piece(1) == 0);  // R_{-1}<x^2> = 0 since y x is missing
  CHECK(anc.dim_piece(2) == 1);
  CHECK(anc.dim_piece(3) == 2);  // <x^3, x^2 y>
  CHECK(anc.piece(3).contains(form_from(QQ, 3, {0, 0, 1, 0})));
  CHECK(minimal_generator_count(anc) == tau_of(v));

  // Full R_j pulls back to full spaces.
  auto full = full_space(3, QQ);
  auto anc2 = ancestor_ideal(full, 5, QQ);
  for (int d = 0; d <= 5; ++d) CHECK(anc2.piece(d).is_full());
}

TEST_CASE("ancestor generator count equals tau on random subspaces") {
  Field<Fp> f{FieldSpec::prime(10007)};
  Rng rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    int degree = 2 + static_cast<int>(rng_below(rng, 5));
    int dim = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(degree)));
    auto v = random_subspace_of_dim(degree, dim, f, rng);
    auto anc = ancestor_ideal(v, degree + 2, f);
    CHECK(minimal_generator_count(anc) == tau_of(v));
    CHECK(anc.closed_under_r1());
  }
}

TEST_CASE("chart at zero parameters is the initial monomial ideal") {
  for (auto h : {H({1, 2, 3, 3, 1, 0}), H({1, 2, 3, 4, 2, 1, 0}),
                 H({1, 1, 0}), H({1, 2, 2, 1, 0})}) {
    std::vector<Rat> zeros(chart_parameters(h).size(), Rat(0));
    auto ideal = chart_ideal(h, zeros, QQ);
    auto m = monomial_ideal_of(h, QQ);
    for (int d = 0; d <= ideal.top; ++d)
      CHECK(ideal.piece(d) == m.piece(d));
  }
}

TEST_CASE("chart parameter order matches the worked examples") {
  // Example 1: (a,b,c,d,e) = a_{3,2}, a_{3,1}, a_{3,0}, a_{2,0}, a_{1,0}.
  auto p1 = chart_parameters(H({1, 2, 3, 3, 1, 0}));
  REQUIRE(p1.size() == 5);
  CHECK(p1[0] == std::pair<int, int>{3, 2});
  CHECK(p1[1] == std::pair<int, int>{3, 1});
  CHECK(p1[2] == std::pair<int, int>{3, 0});
  CHECK(p1[3] == std::pair<int, int>{2, 0});
  CHECK(p1[4] == std::pair<int, int>{1, 0});
  // Example 2: a_{4,1}, a_{3,1}, a_{2,1}, a_{2,0}, a_{1,0}; the positions
  // (3,0) and (4,0) carry dependent coefficients instead.
  auto p2 = chart_parameters(H({1, 2, 3, 4, 2, 1, 0}));
  REQUIRE(p2.size() == 5);
  CHECK(p2[0] == std::pair<int, int>{4, 1});
  CHECK(p2[1] == std::pair<int, int>{3, 1});
  CHECK(p2[2] == std::pair<int, int>{2, 1});
  CHECK(p2[3] == std::pair<int, int>{2, 0});
  CHECK(p2[4] == std::pair<int, int>{1, 0});
}

TEST_CASE("Example 1 standard generators and coefficients") {
  auto h = H({1, 2, 3, 3, 1, 0});
  // A = (a,b,c,d,e) = (2,3,5,7,11); no dependent coefficients here.
  auto ideal = chart_ideal(h, values(QQ, {2, 3, 5, 7, 11}), QQ);
  auto sg = standard_generators(ideal);
  REQUIRE(sg.gens.size() == 4);
  CHECK(sg.k == std::vector<long>{5, 3, 2, 0});
  // f_0 = x^5, f_1 = y x^3 + e x^4, f_2 = y^2 x^2 + d x^4,
  // f_3 = y^3 + a f_2:x + b f_1:x + c x^3.
  CHECK(sg.gens[0].coeffs == form_from(QQ, 5, {0, 0, 0, 0, 0, 1}).coeffs);
  CHECK(sg.gens[1].coeffs == form_from(QQ, 4, {0, 0, 0, 1, 11}).coeffs);
  CHECK(sg.gens[2].coeffs == form_from(QQ, 4, {0, 0, 1, 0, 7}).coeffs);
  {
    // f_3 expanded: y^3 + a(y^2 x + d x^3) + b(y x^2 + e x^3) + c x^3.
    BiForm<Rat> f3(3);
    f3.coeffs(0) = Rat(1);
    f3.coeffs(1) = Rat(2);
    f3.coeffs(2) = Rat(3);
    f3.coeffs(3) = Rat(2) * Rat(7) + Rat(3) * Rat(11) + Rat(5);
    CHECK(sg.gens[3].coeffs == f3.coeffs);
  }
  CHECK(sg.coeffs.at({3, 2}) == Rat(2));
  CHECK(sg.coeffs.at({3, 1}) == Rat(3));
  CHECK(sg.coeffs.at({3, 0}) == Rat(5));
  CHECK(sg.coeffs.at({2, 0}) == Rat(7));
  CHECK(sg.coeffs.at({1, 0}) == Rat(11));
}

TEST_CASE("Example 2 dependent coefficients solved by the chart") {
  auto h = H({1, 2, 3, 4, 2, 1, 0});
  const Rat a = 2, b = -3, c = 5, d = -7, e = 11;
  auto ideal = chart_ideal(h, {a, b, c, d, e}, QQ);
  auto sg = standard_generators(ideal);
  // Hand reduction of the pattern closure gives
  //   a_{3,0} = -cd - ce^2 - ed,  a_{4,0} = -bd - be^2 + cde + ce^3 + de^2.
  CHECK(sg.coeffs.at({3, 0}) == -c * d - c * e * e - e * d);
  CHECK(sg.coeffs.at({4, 0}) ==
        -b * d - b * e * e + c * d * e + c * e * e * e + d * e * e);
  CHECK(sg.coeffs.at({4, 1}) == a);
  CHECK(sg.coeffs.at({3, 1}) == b);
  CHECK(sg.coeffs.at({2, 1}) == c);
  CHECK(sg.coeffs.at({2, 0}) == d);
  CHECK(sg.coeffs.at({1, 0}) == e);
}

TEST_CASE("chart is a section of the coefficient extraction") {
  std::vector<OSequence> hs = {H({1, 2, 3, 3, 1, 0}), H({1, 2, 3, 4, 2, 1, 0}),
                               H({1, 2, 3, 4, 4, 2, 1, 0}),
                               H({1, 2, 2, 2, 1, 0}), H({1, 2, 3, 2, 1, 0})};
  Field<Fp> f{FieldSpec::prime(10007)};
  Rng rng(123);
  for (const auto& h : hs) {
    auto positions = chart_parameters(h);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Fp> a;
      for (size_t t = 0; t < positions.size(); ++t) a.push_back(f.random(rng));
      auto ideal = chart_ideal(h, a, f);
      CHECK(invariants_of(ideal).H == h);
      auto sg = standard_generators(ideal);
      for (size_t t = 0; t < positions.size(); ++t)
        CHECK(sg.coeffs.at(positions[t]) == a[t]);
    }
  }
}

TEST_CASE("theta matrices: structure and ranks") {
  auto h = H({1, 2, 3, 3, 1, 0});
  Field<Fp> f{FieldSpec::prime(10007)};
  Rng rng(5);
  auto positions = chart_parameters(h);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Fp> a;
    for (size_t t = 0; t < positions.size(); ++t) a.push_back(f.random(rng));
    auto ideal = chart_ideal(h, a, f);
    auto sg = standard_generators(ideal);
    for (int i = h.mu(); i < h.s(); ++i) {
      auto theta = theta_matrix(ideal, i, sg);
      CHECK(static_cast<long>(theta.entries.rows()) == h.e(i + 1) + 1);
      CHECK(static_cast<long>(theta.entries.cols()) == h.e(i) + 1);
      CHECK(rank_of(Mat<Fp>(theta.entries)) == tau_of(ideal.piece(i)));
      // The column of the lowest involved generator is (1, 0, ..., 0)^T.
      Eigen::Index last = theta.entries.cols() - 1;
      CHECK(theta.entries(0, last) == f.make(1));
      for (Eigen::Index r = 1; r < theta.entries.rows(); ++r)
        CHECK(theta.entries(r, last) == f.make(0));
    }
  }
  // N_3 at the monomial point of Example 1 is (1,0,0)^T of rank one.
  std::vector<Rat> zeros(positions.size(), Rat(0));
  auto m = chart_ideal(H({1, 2, 3, 3, 1, 0}), zeros, QQ);
  auto theta3 = theta_matrix(m, 3);
  REQUIRE(theta3.entries.rows() == 3);
  REQUIRE(theta3.entries.cols() == 1);
  CHECK(theta3.entries(0, 0) == Rat(1));
  CHECK(theta3.entries(1, 0) == Rat(0));
  CHECK(theta3.entries(2, 0) == Rat(0));
}

TEST_CASE("rank-one locus of Example 1 in honest coordinates") {
  auto h = H({1, 2, 3, 3, 1, 0});
  // With generators f_1 = y x^3 + e x^4, f_2 = y^2 x^2 + d x^4,
  // f_3 = y^3 + a f_2:x + b f_1:x + c x^3, the common-factor chain
  // (tau = 1 everywhere) happens at d = -e^2, c = e^3.
  auto on_locus = chart_ideal(h, values(QQ, {0, 0, 1, -1, 1}), QQ);
  CHECK(tau_vals(invariants_of(on_locus)) == std::vector<long>{1, 1, 1});
  CHECK(invariants_of(on_locus).triple == beta_max_triple(h));
  // The printed sign convention (c,d,e) = (-1,1,1) lands in the generic
  // stratum instead.
  auto off_locus = chart_ideal(h, values(QQ, {0, 0, -1, 1, 1}), QQ);
  CHECK(tau_vals(invariants_of(off_locus)) == std::vector<long>{1, 2, 1});
  CHECK(invariants_of(off_locus).triple.codim() == 0);
}

TEST_CASE("level ideals") {
  // V = x R_3 (dimension 4): the ancestor is (x), so L(V) = (x) + M^5 and
  // H = (1,1,1,1,1,0) with a type-1 socle in degree 4.
  auto v1 = rref_basis<Rat>(
      {form_from(QQ, 4, {0, 1, 0, 0, 0}), form_from(QQ, 4, {0, 0, 1, 0, 0}),
       form_from(QQ, 4, {0, 0, 0, 1, 0}), form_from(QQ, 4, {0, 0, 0, 0, 1})},
      4);
  auto inv1 = invariants_of(level_ideal(v1, QQ));
  CHECK(inv1.H == H({1, 1, 1, 1, 1, 0}));
  for (int i = inv1.socle.lo; i <= inv1.socle.hi(); ++i)
    CHECK(inv1.socle.at(i) == (i == 4 ? 1 : 0));

  // V = <x^4> alone has ancestor (x^4): H = (1,2,3,4,4,0), socle dim 4.
  auto v0 = rref_basis<Rat>({form_from(QQ, 4, {0, 0, 0, 0, 1})}, 4);
  auto inv0 = invariants_of(level_ideal(v0, QQ));
  CHECK(inv0.H == H({1, 2, 3, 4, 4, 0}));
  {
    auto [ok, tau] = level_sequence_check(inv0.H, 1, 4);
    CHECK(ok);
    CHECK(tau == 1);
  }

  // Generic V of dimension 2 in R_4: H = (1,2,3,4,3,0); the socle sits in
  // degree 4 with dimension N_4 = j+1-dim V = 3.
  Field<Fp> f{FieldSpec::prime(10007)};
  Rng rng(77);
  auto v2 = random_subspace_of_dim(4, 2, f, rng);
  auto l2 = level_ideal(v2, f);
  auto inv2 = invariants_of(l2);
  CHECK(inv2.H == H({1, 2, 3, 4, 3, 0}));
  for (int i = inv2.socle.lo; i <= inv2.socle.hi(); ++i)
    CHECK(inv2.socle.at(i) == (i == 4 ? 3 : 0));
  auto [ok, tau] = level_sequence_check(inv2.H, 2, 4);
  CHECK(ok);
  CHECK(tau == tau_of(v2));

  // V = <x^4, y^4>: same H; socle again concentrated in degree 4.
  auto v3 = rref_basis<Rat>({form_from(QQ, 4, {0, 0, 0, 0, 1}),
                             form_from(QQ, 4, {1, 0, 0, 0, 0})},
                            4);
  auto inv3 = invariants_of(level_ideal(v3, QQ));
  CHECK(inv3.H == H({1, 2, 3, 4, 3, 0}));
  for (int i = inv3.socle.lo; i <= inv3.socle.hi(); ++i)
    CHECK(inv3.socle.at(i) == (i == 4 ? 3 : 0));
}

TEST_CASE("common factor split") {
  // (x^2 y, x^3) = x^2 * (y, x).
  auto ideal = span_ideal<Rat>(
      {form_from(QQ, 3, {0, 0, 1, 0}), form_from(QQ, 3, {0, 0, 0, 1})}, 5, QQ);
  auto [f, reduced] = common_factor_split(ideal);
  CHECK(f.degree == 2);
  CHECK(f.coeffs == form_from(QQ, 2, {0, 0, 1}).coeffs);
  CHECK(hilbert_function_of(reduced) == H({1, 0}));

  // Artinian input returns the unit.
  auto art = span_ideal<Rat>(
      {form_from(QQ, 1, {0, 1}), form_from(QQ, 2, {1, 0, 0})}, 3, QQ);
  auto [u, same] = common_factor_split(art);
  CHECK(u.degree == 0);
  CHECK(hilbert_function_of(same) == hilbert_function_of(art));
}

TEST_CASE("random ideals hit the requested data") {
  Field<Fp> f{FieldSpec::prime(10007)};
  auto h = H({1, 1, 0});
  auto ideal = random_ideal(h, f, 42);
  CHECK(invariants_of(ideal).H == h);
  CHECK(ideal.dim_piece(1) == 1);

  // Targeting beta_max on Example 1 forces the divisibility chain; over a
  // small field the rejection loop has real mass to hit.
  Field<Fp> f3{FieldSpec::prime(3)};
  auto h1 = H({1, 2, 3, 3, 1, 0});
  auto bm = random_ideal(h1, f3, 7, std::vector<long>{1, 1, 1});
  auto inv = invariants_of(bm);
  CHECK(inv.triple == beta_max_triple(h1));
  auto g4 = gcd_of_forms(basis_forms(bm.piece(4)));
  auto g3 = gcd_of_forms(basis_forms(bm.piece(3)));
  CHECK(g4.degree == 1);   // f_4 of degree H_4 = 1
  CHECK(g3.degree == 3);   // f_3 of degree H_3 = 3
  CHECK(divide_forms(g3, g4).has_value());  // f_4 | f_3

  // An out-of-bounds tau target is rejected up front.
  CHECK_THROWS_AS(random_ideal(h1, f, 3, std::vector<long>{1, 3, 1}),
                  InputError);
}
