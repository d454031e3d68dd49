#pragma once

// Homogeneous forms in k[x,y].  Coefficients follow the monomial basis
// (y^d, y^{d-1}x, ..., x^d), so index m is the x-exponent; standard
// generators f_i = y^i x^{k_i} + (pattern terms) then have unit leading
// coefficient at index k_i.

#include <optional>
#include <vector>

#include "betti/linalg.hpp"

namespace betti {

template <class K>
struct BiForm {
  int degree{0};
  Row<K> coeffs;  // length degree + 1

  BiForm() : coeffs(zero_row<K>(1)) {}
  explicit BiForm(int d) : degree(d), coeffs(zero_row<K>(d + 1)) {}
  BiForm(int d, Row<K> c) : degree(d), coeffs(std::move(c)) {
    internal_check(coeffs.cols() == degree + 1, "BiForm: bad coefficient count");
  }

  bool is_zero() const {
    for (Eigen::Index j = 0; j < coeffs.cols(); ++j)
      if (!scalar_is_zero(coeffs(j))) return false;
    return true;
  }
  // x-exponent of the lowest-x (leftmost) monomial present, -1 when zero.
  int leading_index() const {
    for (Eigen::Index j = 0; j < coeffs.cols(); ++j)
      if (!scalar_is_zero(coeffs(j))) return static_cast<int>(j);
    return -1;
  }
  // x-exponent of the highest-x monomial present, -1 when zero.
  int top_index() const {
    for (Eigen::Index j = coeffs.cols() - 1; j >= 0; --j)
      if (!scalar_is_zero(coeffs(j))) return static_cast<int>(j);
    return -1;
  }
};

// y^(d-m) x^m as an element of R_d.
template <class K>
BiForm<K> monomial_form(int d, int x_exp, const K& one) {
  internal_check(0 <= x_exp && x_exp <= d, "monomial_form: exponent range");
  BiForm<K> f(d);
  f.coeffs(x_exp) = one;
  return f;
}

template <class K>
BiForm<K> multiply_forms(const BiForm<K>& f, const BiForm<K>& g) {
  BiForm<K> h(f.degree + g.degree);
  for (Eigen::Index i = 0; i <= f.degree; ++i) {
    if (scalar_is_zero(f.coeffs(i))) continue;
    for (Eigen::Index j = 0; j <= g.degree; ++j)
      h.coeffs(i + j) += f.coeffs(i) * g.coeffs(j);
  }
  return h;
}

// f * x^a * y^b.
template <class K>
BiForm<K> shift_form(const BiForm<K>& f, int a, int b) {
  BiForm<K> h(f.degree + a + b);
  for (Eigen::Index i = 0; i <= f.degree; ++i) h.coeffs(i + a) = f.coeffs(i);
  return h;
}

// Monomial-wise division by x^a; requires every support monomial divisible.
template <class K>
BiForm<K> colon_by_x_power(const BiForm<K>& f, int a) {
  internal_check(a >= 0 && (f.is_zero() || f.leading_index() >= a),
                 "colon f : x^a with x^a not dividing the support");
  BiForm<K> h(f.degree - a);
  for (Eigen::Index i = a; i <= f.degree; ++i) h.coeffs(i - a) = f.coeffs(i);
  return h;
}

// Exact division f / g; nullopt when g does not divide f.
template <class K>
std::optional<BiForm<K>> divide_forms(const BiForm<K>& f, const BiForm<K>& g) {
  internal_check(!g.is_zero(), "division by the zero form");
  if (f.is_zero()) return BiForm<K>(std::max(0, f.degree - g.degree));
  if (f.degree < g.degree) return std::nullopt;
  const int gt = g.top_index();
  BiForm<K> rem = f;
  BiForm<K> quo(f.degree - g.degree);
  // Eliminate from the x-heavy end; the quotient in x of the dehomogenized
  // polynomials, with y-powers carried by degree bookkeeping.
  for (int qx = quo.degree; qx >= 0; --qx) {
    int target = gt + qx;
    if (target > rem.degree) continue;
    K c = rem.coeffs(target);
    if (scalar_is_zero(c)) continue;
    if (qx > quo.degree) return std::nullopt;
    K q = c / g.coeffs(gt);
    quo.coeffs(qx) = q;
    for (Eigen::Index j = 0; j <= g.degree; ++j)
      rem.coeffs(j + qx) -= q * g.coeffs(j);
  }
  if (!rem.is_zero()) return std::nullopt;
  return quo;
}

// Monic (in x) homogeneous gcd via the Euclidean algorithm on the
// dehomogenizations, with the common y-power tracked separately.
template <class K>
BiForm<K> gcd_of_forms(const std::vector<BiForm<K>>& fs) {
  std::vector<std::vector<K>> polys;  // coefficients in x, index = x-exponent
  int y_power = -1;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    int top = f.top_index();
    int yp = f.degree - top;
    y_power = (y_power < 0) ? yp : std::min(y_power, yp);
    std::vector<K> p(static_cast<size_t>(top) + 1);
    for (int i = 0; i <= top; ++i) p[static_cast<size_t>(i)] = f.coeffs(i);
    polys.push_back(std::move(p));
  }
  if (polys.empty()) throw InputError("gcd of an all-zero set of forms");

  auto deg = [](const std::vector<K>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
      if (!scalar_is_zero(p[static_cast<size_t>(i)])) return i;
    return -1;
  };
  auto rem = [&](std::vector<K> a, const std::vector<K>& b) {
    int db = deg(b);
    for (int da = deg(a); da >= db && da >= 0; da = deg(a)) {
      K q = a[static_cast<size_t>(da)] / b[static_cast<size_t>(db)];
      for (int j = 0; j <= db; ++j)
        a[static_cast<size_t>(da - db + j)] -= q * b[static_cast<size_t>(j)];
    }
    return a;
  };

  std::vector<K> g = polys[0];
  for (size_t i = 1; i < polys.size() && deg(g) > 0; ++i) {
    std::vector<K> a = g, b = polys[i];
    while (deg(b) >= 0) {
      auto r = rem(a, b);
      a = b;
      b = r;
    }
    g = a;
  }
  int dg = deg(g);
  K lead = g[static_cast<size_t>(dg)];
  BiForm<K> result(dg + y_power);
  for (int i = 0; i <= dg; ++i)
    result.coeffs(i) = g[static_cast<size_t>(i)] / lead;
  return result;
}

// A point (a : b) of P^1, i.e. the root of the linear factor b*x - a*y.
template <class K>
struct ProjectivePoint {
  K a;
  K b;
};

// Splits f into pairwise-distinct linear factors, returning their roots and
// the leading unit; nullopt if f does not split or has a repeated factor.
template <class K>
std::optional<std::pair<K, std::vector<ProjectivePoint<K>>>>
split_distinct_linear_factors(const BiForm<K>& f, const Field<K>& field);

namespace detail {

// Root scan for the dehomogenization over F_p (exhaustive) or over Q
// (bounded rational-root search).  Returns all roots with multiplicity by
// repeated deflation.
inline std::vector<Fp> poly_roots(std::vector<Fp> p, const Field<Fp>& field) {
  auto deg = [](const std::vector<Fp>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
      if (!(v[static_cast<size_t>(i)] == Fp(0))) return i;
    return -1;
  };
  auto eval = [&](const std::vector<Fp>& v, const Fp& x) {
    Fp val(0, field.spec.p);
    for (int i = deg(v); i >= 0; --i) val = val * x + v[static_cast<size_t>(i)];
    return val;
  };
  std::vector<Fp> roots;
  for (std::int64_t r = 0; r < field.spec.p && deg(p) > 0; ++r) {
    Fp x = field.make(r);
    while (deg(p) > 0 && eval(p, x) == Fp(0)) {
      roots.push_back(x);
      // Synthetic division by (t - r).
      int d = deg(p);
      std::vector<Fp> q(static_cast<size_t>(d));
      Fp acc = p[static_cast<size_t>(d)];
      for (int i = d - 1; i >= 0; --i) {
        q[static_cast<size_t>(i)] = acc;
        acc = p[static_cast<size_t>(i)] + acc * x;
      }
      p = q;
    }
  }
  return roots;
}

inline std::vector<Rat> poly_roots(std::vector<Rat> p, const Field<Rat>&) {
  auto deg = [](const std::vector<Rat>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
      if (!(v[static_cast<size_t>(i)] == 0)) return i;
    return -1;
  };
  // Clear denominators and content to get a primitive integer polynomial.
  mpz_class denom_lcm = 1;
  for (const auto& c : p)
    if (c != 0) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                        c.get_den().get_mpz_t());
  std::vector<mpz_class> ip;
  ip.reserve(p.size());
  for (const auto& c : p) {
    Rat scaled = c * Rat(denom_lcm);
    internal_check(scaled.get_den() == 1, "denominator clearing failed");
    ip.push_back(scaled.get_num());
  }
  auto divisors = [](mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> ds;
    if (n == 0) return ds;
    for (mpz_class d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
      if (ds.size() > 4096)
        throw InputError("factorization failure: coefficients too large");
    }
    return ds;
  };
  std::vector<Rat> roots;
  int d = deg(p);
  while (d > 0) {
    mpz_class lead = ip[static_cast<size_t>(d)];
    int low = 0;
    while (low < d && ip[static_cast<size_t>(low)] == 0) ++low;
    if (low > 0) {
      // t = 0 is a root.
      roots.push_back(Rat(0));
      ip.erase(ip.begin());
      --d;
      continue;
    }
    bool found = false;
    for (const auto& num : divisors(ip[0])) {
      for (const auto& den : divisors(lead)) {
        for (int sign = 0; sign < 2 && !found; ++sign) {
          Rat cand = Rat(sign ? -num : num) / Rat(den);
          cand.canonicalize();
          Rat val = 0;
          for (int i = d; i >= 0; --i)
            val = val * cand + Rat(ip[static_cast<size_t>(i)]);
          if (val == 0) {
            roots.push_back(cand);
            // Rational deflation, then re-clear denominators.
            std::vector<Rat> rq(static_cast<size_t>(d));
            Rat acc2 = Rat(ip[static_cast<size_t>(d)]);
            for (int i = d - 1; i >= 0; --i) {
              rq[static_cast<size_t>(i)] = acc2;
              acc2 = Rat(ip[static_cast<size_t>(i)]) + acc2 * cand;
            }
            mpz_class l2 = 1;
            for (const auto& c : rq)
              if (c != 0) mpz_lcm(l2.get_mpz_t(), l2.get_mpz_t(),
                                  c.get_den().get_mpz_t());
            ip.resize(static_cast<size_t>(d));
            for (int i = 0; i < d; ++i) {
              Rat scaled = rq[static_cast<size_t>(i)] * Rat(l2);
              ip[static_cast<size_t>(i)] = scaled.get_num();
            }
            --d;
            found = true;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return roots;
}

}  // namespace detail

template <class K>
std::optional<std::pair<K, std::vector<ProjectivePoint<K>>>>
split_distinct_linear_factors(const BiForm<K>& f, const Field<K>& field) {
  internal_check(!f.is_zero(), "factoring the zero form");
  const int top = f.top_index();
  const int y_mult = f.degree - top;  // multiplicity of the factor y
  if (y_mult > 1) return std::nullopt;
  std::vector<K> p(static_cast<size_t>(top) + 1);
  for (int i = 0; i <= top; ++i) p[static_cast<size_t>(i)] = f.coeffs(i);
  std::vector<K> roots = detail::poly_roots(p, field);
  if (static_cast<int>(roots.size()) != top) return std::nullopt;
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j]) return std::nullopt;
  std::vector<ProjectivePoint<K>> pts;
  pts.reserve(roots.size() + 1);
  // Factor x - r*y has root (r : 1); the factor y has root (1 : 0).
  for (const auto& r : roots) pts.push_back({r, field.make(1)});
  if (y_mult == 1) pts.push_back({field.make(1), field.make(0)});
  return std::make_pair(f.coeffs(top), pts);
}

}  // namespace betti
