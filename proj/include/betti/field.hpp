#pragma once

// Exact scalars used throughout: arbitrary-precision rationals (GMP) and
// prime fields F_p with a runtime modulus.  Both plug into Eigen dense
// matrices; no floating point is used anywhere in the library.

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

#include "betti/error.hpp"

namespace betti {

using Rat = mpq_class;

// ---------------------------------------------------------------------------
// F_p element carrying its modulus.
//
// A default-constructed or int-constructed element has p == 0 and acts as a
// neutral literal: it adopts the modulus of the first attached operand it
// meets.  Eigen's generic kernels materialize Scalar(0)/Scalar(1) literals,
// so this is required for Matrix<Fp> to behave.
// ---------------------------------------------------------------------------
struct Fp {
  std::int64_t v{0};
  std::int64_t p{0};

  Fp() = default;
  Fp(std::int64_t x) : v(x) {}
  Fp(std::int64_t x, std::int64_t mod) : v(x % mod), p(mod) {
    if (v < 0) v += mod;
  }
};

namespace detail {
inline std::int64_t fp_red(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}
inline std::int64_t fp_join(const Fp& a, const Fp& b) {
  if (a.p && b.p && a.p != b.p)
    throw InternalError("F_p arithmetic across distinct moduli");
  return a.p ? a.p : b.p;
}
}  // namespace detail

inline Fp operator+(const Fp& a, const Fp& b) {
  auto p = detail::fp_join(a, b);
  if (!p) return Fp(a.v + b.v);
  return Fp(detail::fp_red(a.v, p) + detail::fp_red(b.v, p), p);
}
inline Fp operator-(const Fp& a, const Fp& b) {
  auto p = detail::fp_join(a, b);
  if (!p) return Fp(a.v - b.v);
  return Fp(detail::fp_red(a.v, p) - detail::fp_red(b.v, p), p);
}
inline Fp operator-(const Fp& a) {
  if (!a.p) return Fp(-a.v);
  return Fp(-a.v, a.p);
}
inline Fp operator*(const Fp& a, const Fp& b) {
  auto p = detail::fp_join(a, b);
  if (!p) return Fp(a.v * b.v);
  return Fp(detail::fp_red(a.v, p) * detail::fp_red(b.v, p), p);
}
inline Fp fp_inverse(const Fp& a) {
  if (!a.p) {
    if (a.v == 1 || a.v == -1) return a;
    throw InternalError("inverse of unattached F_p literal");
  }
  std::int64_t t = 0, new_t = 1, r = a.p, new_r = detail::fp_red(a.v, a.p);
  if (new_r == 0) throw InternalError("division by zero in F_p");
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  internal_check(r == 1, "non-invertible element; modulus not prime?");
  return Fp(t, a.p);
}
inline Fp operator/(const Fp& a, const Fp& b) {
  auto p = detail::fp_join(a, b);
  if (!p) return a * fp_inverse(b);  // only the units +1/-1 can appear here
  return a * fp_inverse(b.p ? b : Fp(b.v, p));
}
inline Fp& operator+=(Fp& a, const Fp& b) { return a = a + b; }
inline Fp& operator-=(Fp& a, const Fp& b) { return a = a - b; }
inline Fp& operator*=(Fp& a, const Fp& b) { return a = a * b; }
inline Fp& operator/=(Fp& a, const Fp& b) { return a = a / b; }
inline bool operator==(const Fp& a, const Fp& b) {
  auto p = detail::fp_join(a, b);
  if (!p) return a.v == b.v;
  return detail::fp_red(a.v, p) == detail::fp_red(b.v, p);
}
inline bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

// ---------------------------------------------------------------------------
// Field description and per-scalar context.
// ---------------------------------------------------------------------------

bool is_prime(std::int64_t n);

struct FieldSpec {
  enum class Kind { rationals, prime };
  Kind kind{Kind::rationals};
  std::int64_t p{0};

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::int64_t p) {
    if (p < 2 || p >= (std::int64_t{1} << 31))
      throw InputError("prime modulus out of range: " + std::to_string(p));
    if (!is_prime(p))
      throw InputError("modulus is not prime: " + std::to_string(p));
    FieldSpec s;
    s.kind = Kind::prime;
    s.p = p;
    return s;
  }
  // 0 for the rationals.
  std::int64_t characteristic() const {
    return kind == Kind::rationals ? 0 : p;
  }
  bool operator==(const FieldSpec& o) const {
    return kind == o.kind && p == o.p;
  }
};

// Chart theory (standard generators, theta maps) needs char k = 0 or
// char k >= s(H); apolarity perps need char 0 or char > the working degree.
inline void require_characteristic_at_least(const FieldSpec& f, long bound,
                                            const char* what) {
  if (f.kind == FieldSpec::Kind::prime && f.p < bound)
    throw InputError(std::string(what) + ": needs char 0 or p >= " +
                     std::to_string(bound) + ", got p = " +
                     std::to_string(f.p));
}

using Rng = std::mt19937_64;

// Deterministic and platform-independent; the slight modulo bias is
// irrelevant for the randomized probes.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) { return rng() % n; }

// Derives independent per-trial streams from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

template <class K>
struct Field;

template <>
struct Field<Rat> {
  FieldSpec spec{FieldSpec::rationals()};

  Field() = default;
  explicit Field(const FieldSpec& s) : spec(s) {
    if (s.kind != FieldSpec::Kind::rationals)
      throw InternalError("Field<Rat> built from a prime spec");
  }

  Rat make(long x) const { return Rat(x); }
  Rat parse(const std::string& s) const {
    Rat r(s);
    r.canonicalize();
    return r;
  }
  std::string str(const Rat& x) const { return x.get_str(); }
  // Small random integers; enough genericity for char-0 sampling.
  Rat random(Rng& rng) const {
    return Rat(static_cast<long>(rng_below(rng, 41)) - 20);
  }
  bool is_zero(const Rat& x) const { return x == 0; }
};

template <>
struct Field<Fp> {
  FieldSpec spec;

  Field() : spec(FieldSpec::prime(2)) {}
  explicit Field(const FieldSpec& s) : spec(s) {
    if (s.kind != FieldSpec::Kind::prime)
      throw InternalError("Field<Fp> built from the rational spec");
  }

  Fp make(long x) const { return Fp(x, spec.p); }
  Fp parse(const std::string& s) const { return make(std::stoll(s)); }
  std::string str(const Fp& x) const {
    return std::to_string(detail::fp_red(x.v, spec.p));
  }
  Fp random(Rng& rng) const {
    return Fp(static_cast<std::int64_t>(rng_below(rng, spec.p)), spec.p);
  }
  bool is_zero(const Fp& x) const { return x == Fp(0); }
};

template <class K>
bool scalar_is_zero(const K& x) {
  return x == K(0);
}
inline bool scalar_is_zero(const Rat& x) { return x == 0; }

}  // namespace betti

namespace Eigen {

template <>
struct NumTraits<betti::Fp> {
  using Real = betti::Fp;
  using NonInteger = betti::Fp;
  using Literal = betti::Fp;
  using Nested = betti::Fp;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8
  };
  static inline betti::Fp epsilon() { return betti::Fp(0); }
  static inline betti::Fp dummy_precision() { return betti::Fp(0); }
  static inline int digits10() { return 18; }
};

template <>
struct NumTraits<betti::Rat> {
  using Real = betti::Rat;
  using NonInteger = betti::Rat;
  using Literal = betti::Rat;
  using Nested = betti::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 50,
    MulCost = 50
  };
  static inline betti::Rat epsilon() { return betti::Rat(0); }
  static inline betti::Rat dummy_precision() { return betti::Rat(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
