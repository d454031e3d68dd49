#pragma once

// Hilbert functions of graded quotients of k[x,y]: validation, the first
// difference sequence e, and the numerical invariants that depend on H only.

#include <string>
#include <utility>
#include <vector>

#include "betti/error.hpp"

namespace betti {

// A sequence with an explicit index range [lo, hi]; out-of-range reads via
// at0() return 0.  Used for e, tau, nu, beta, socle types, so that indices
// match the degree they refer to instead of drifting by mu.
struct IndexedSeq {
  int lo{0};
  std::vector<long> vals;

  IndexedSeq() = default;
  IndexedSeq(int lo_, std::vector<long> v) : lo(lo_), vals(std::move(v)) {}
  int hi() const { return lo + static_cast<int>(vals.size()) - 1; }
  long at(int i) const {
    if (i < lo || i > hi()) throw InternalError("IndexedSeq: out of range");
    return vals[static_cast<size_t>(i - lo)];
  }
  long at0(int i) const {
    return (i < lo || i > hi()) ? 0 : vals[static_cast<size_t>(i - lo)];
  }
  long& ref(int i) {
    if (i < lo || i > hi()) throw InternalError("IndexedSeq: out of range");
    return vals[static_cast<size_t>(i - lo)];
  }
  bool operator==(const IndexedSeq& o) const {
    return lo == o.lo && vals == o.vals;
  }
};

inline long pos_part(long n) { return n > 0 ? n : 0; }

// Validated O-sequence: H_i = i+1 below the order mu, then weakly
// decreasing to the eventual value c; s is the first index attaining c.
class OSequence {
 public:
  // Throws InputError naming the offending index if the values cannot be a
  // Hilbert function of a graded quotient of k[x,y].
  static OSequence analyze(const std::vector<long>& values);

  long value(int i) const {
    if (i < 0) return 0;
    return i < static_cast<int>(values_.size())
               ? values_[static_cast<size_t>(i)]
               : c_;
  }
  long operator[](int i) const { return value(i); }

  int mu() const { return mu_; }
  int s() const { return s_; }
  long c() const { return c_; }
  bool artinian() const { return c_ == 0; }
  // Stored through s (values stabilize beyond).
  const std::vector<long>& values() const { return values_; }

  // e_i = H_{i-1} - H_i for i >= mu and 0 below mu (and beyond s, where H
  // has stabilized).
  long e(int i) const {
    if (i < mu_ || i > s_) return 0;
    return value(i - 1) - value(i);
  }

  // dim G(H) = c + sum_{i >= mu} (e_i + 1) e_{i+1}.
  long dim_moduli() const;
  // Minimum total number of generators: 1 + e_mu + sum (e_{i+1} - e_i)^+.
  long nu_min() const;
  // Artinian reduction (c, H:c) with (H:c)_i = H_{i+c} - c.
  std::pair<long, OSequence> strip_common() const;
  // Socle bounds [max(0, e_{i+1} - e_{i+2}), e_{i+1}] per degree i,
  // supported on [0, s-1]; requires an Artinian H.
  std::vector<std::pair<long, long>> socle_bounds() const;

  // Alignment character K = (k_0 > ... > k_mu): row lengths of the
  // staircase complement, k_i = #{ u : H_u >= i+1 }.  The last entry k_mu
  // is always 0; displays conventionally drop it.  Requires Artinian H.
  std::vector<long> alignment() const;

  std::string to_string() const;
  bool operator==(const OSequence& o) const { return values_ == o.values_; }
  bool operator<(const OSequence& o) const { return values_ < o.values_; }

 private:
  std::vector<long> values_;
  int mu_{0};
  int s_{0};
  long c_{0};
};

// Admissibility of N as the Hilbert function of a level algebra of type d
// and socle degree j; returns (admissible, tau(V) = e_j(N) + 1).
std::pair<bool, long> level_sequence_check(const OSequence& n, long d, long j);

// All valid Artinian O-sequences with H_0 = 1 and s <= max_s.
std::vector<OSequence> all_artinian_sequences(int max_s);

}  // namespace betti
