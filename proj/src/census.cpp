#include "betti/census.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace betti {

StratumCensus& StratumCensus::merge(const StratumCensus& other) {
  internal_check(H == other.H && q == other.q, "census merge mismatch");
  for (const auto& [eta, n] : other.counts) counts[eta] += n;
  total += other.total;
  return *this;
}

std::uint64_t projective_space_points(long q, long e) {
  std::uint64_t n = 0, pw = 1;
  for (long t = 0; t <= e; ++t) {
    n += pw;
    pw *= static_cast<std::uint64_t>(q);
  }
  return n;
}

std::uint64_t beta_max_predicted_count(const OSequence& h, long q) {
  std::uint64_t n = 1;
  for (int i = h.mu() + 1; i <= h.s(); ++i)
    n *= projective_space_points(q, h.e(i));
  return n;
}

namespace {

// Gaussian binomial [n choose k]_q, saturating at a large cap.
std::uint64_t gaussian_binomial(long n, long k, long q) {
  if (k < 0 || k > n) return 0;
  const std::uint64_t cap = ~std::uint64_t{0} / 4;
  // prod (q^{n-i} - 1)/(q^{i+1} - 1): compute as exact integers stepwise.
  unsigned __int128 num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    std::uint64_t qa = 1, qb = 1;
    for (long t = 0; t < n - i; ++t) qa = std::min<std::uint64_t>(cap, qa * static_cast<std::uint64_t>(q));
    for (long t = 0; t < i + 1; ++t) qb *= static_cast<std::uint64_t>(q);
    num *= qa - 1;
    den *= qb - 1;
    if (num / den > cap) return cap;
  }
  return static_cast<std::uint64_t>(num / den);
}

// All k-dim subspaces of F_q^n in RREF-cell order.  The callback gets the
// canonical basis; when `count_only` the callback is skipped and only the
// number of cells is returned.
struct SubspaceEnumerator {
  long n, k, q;
  std::int64_t p;

  template <class F>
  void run(const F& emit) const {
    if (k == 0) {
      emit(zero_matrix<Fp>(0, n));
      return;
    }
    std::vector<long> piv(static_cast<size_t>(k));
    for (long i = 0; i < k; ++i) piv[static_cast<size_t>(i)] = i;
    while (true) {
      emit_cell(piv, emit);
      // Next pivot combination in lexicographic order.
      long i = k - 1;
      while (i >= 0 && piv[static_cast<size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++piv[static_cast<size_t>(i)];
      for (long j = i + 1; j < k; ++j)
        piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
    }
  }

  template <class F>
  void emit_cell(const std::vector<long>& piv, const F& emit) const {
    // Free positions: (row, col) with col > piv[row] and col not a pivot.
    std::vector<std::pair<long, long>> free_pos;
    std::vector<bool> is_piv(static_cast<size_t>(n), false);
    for (long c : piv) is_piv[static_cast<size_t>(c)] = true;
    for (long r = 0; r < k; ++r)
      for (long c = piv[static_cast<size_t>(r)] + 1; c < n; ++c)
        if (!is_piv[static_cast<size_t>(c)]) free_pos.emplace_back(r, c);

    Mat<Fp> m = zero_matrix<Fp>(k, n);
    for (long r = 0; r < k; ++r) m(r, piv[static_cast<size_t>(r)]) = Fp(1, p);
    std::vector<std::int64_t> vals(free_pos.size(), 0);
    while (true) {
      emit(m);
      size_t t = 0;
      while (t < vals.size()) {
        if (++vals[t] < q) {
          m(free_pos[t].first, free_pos[t].second) = Fp(vals[t], p);
          break;
        }
        vals[t] = 0;
        m(free_pos[t].first, free_pos[t].second) = Fp(0, p);
        ++t;
      }
      if (t == vals.size()) break;
    }
  }
};

struct FlagWalker {
  const OSequence& h;
  long q;
  Field<Fp> field;
  std::uint64_t budget;
  std::uint64_t visited{0};
  const std::function<void(const std::vector<GradedSubspace<Fp>>&,
                           const std::vector<long>&)>& visit;
  std::vector<GradedSubspace<Fp>> pieces;  // indices mu..current
  std::vector<long> tau;

  void leaf() {
    if (++visited > budget)
      throw BudgetError("enumeration budget exceeded (estimated " +
                        std::to_string(census_size_bound(h, q)) + " flags)");
    visit(pieces, tau);
  }

  // Extend the flag into degree d; pieces currently hold V_mu .. V_{d-1}.
  void extend(int d) {
    const int s = h.s();
    if (d > s) {
      tau.push_back(1);  // tau_s: V_s is the full R_s
      leaf();
      tau.pop_back();
      return;
    }
    const auto& below = pieces.back();
    GradedSubspace<Fp> grown = multiply_by_r1(below);
    const long want = d + 1 - h.value(d);
    if (grown.dim() > want) return;  // H mismatch on this branch
    tau.push_back(grown.dim() - below.dim());
    if (grown.dim() == want) {
      pieces.push_back(std::move(grown));
      extend(d + 1);
      pieces.pop_back();
    } else {
      // Choose a complement inside the quotient by the pivot columns of
      // the grown basis.
      const auto piv = pivot_columns(grown.basis);
      std::vector<long> nonpiv;
      for (long c = 0; c <= d; ++c)
        if (std::find(piv.begin(), piv.end(), static_cast<int>(c)) ==
            piv.end())
          nonpiv.push_back(c);
      SubspaceEnumerator sub{static_cast<long>(nonpiv.size()),
                             want - grown.dim(), q, field.spec.p};
      sub.run([&](const Mat<Fp>& lifted_small) {
        Mat<Fp> rows =
            zero_matrix<Fp>(grown.dim() + lifted_small.rows(), d + 1);
        rows.topRows(grown.dim()) = grown.basis;
        for (Eigen::Index r = 0; r < lifted_small.rows(); ++r)
          for (Eigen::Index j = 0; j < lifted_small.cols(); ++j)
            rows(grown.dim() + r, nonpiv[static_cast<size_t>(j)]) =
                lifted_small(r, j);
        GradedSubspace<Fp> next(d, std::move(rows));
        internal_check(next.dim() == want, "cell lift lost rank");
        pieces.push_back(std::move(next));
        extend(d + 1);
        pieces.pop_back();
      });
    }
    tau.pop_back();
  }

  void run(int stride, int offset) {
    const int mu = h.mu();
    const long m0 = mu + 1 - h.value(mu);
    SubspaceEnumerator top{mu + 1, m0, q, field.spec.p};
    std::uint64_t index = 0;
    top.run([&](const Mat<Fp>& basis) {
      const bool mine =
          (index++ % static_cast<std::uint64_t>(stride)) ==
          static_cast<std::uint64_t>(offset);
      if (!mine) return;
      pieces.clear();
      tau.clear();
      pieces.emplace_back(mu, Mat<Fp>(basis));
      internal_check(pieces.back().dim() == m0, "top cell lost rank");
      extend(mu + 1);
    });
  }
};

}  // namespace

void enumerate_subspaces(long n, long k, long q,
                         const std::function<void(const Mat<Fp>&)>& emit) {
  FieldSpec spec = FieldSpec::prime(q);
  SubspaceEnumerator sub{n, k, q, spec.p};
  sub.run(emit);
}

std::uint64_t gaussian_binomial_count(long n, long k, long q) {
  return gaussian_binomial(n, k, q);
}

std::uint64_t census_size_bound(const OSequence& h, long q) {
  const int mu = h.mu(), s = h.s();
  const std::uint64_t cap = ~std::uint64_t{0} / 4;
  std::uint64_t bound = gaussian_binomial(mu + 1, mu + 1 - h.value(mu), q);
  for (int d = mu; d < s; ++d) {
    std::uint64_t level = gaussian_binomial(h.value(d), h.e(d + 1), q);
    if (level && bound > cap / level) return cap;
    bound *= std::max<std::uint64_t>(level, 1);
  }
  return bound;
}

void enumerate_flags(
    const OSequence& h, long q,
    const std::function<void(const std::vector<GradedSubspace<Fp>>&,
                             const std::vector<long>&)>& visit,
    std::uint64_t budget, int stride, int offset) {
  if (!h.artinian())
    throw InputError("enumeration needs an Artinian H; strip the common "
                     "factor first");
  FieldSpec spec = FieldSpec::prime(q);  // validates primality
  if (census_size_bound(h, q) > budget)
    throw BudgetError("enumeration budget exceeded: bound " +
                      std::to_string(census_size_bound(h, q)) + " > budget " +
                      std::to_string(budget));
  FlagWalker walker{h, q, Field<Fp>(spec), budget, 0, visit, {}, {}};
  // Degenerate H = (0): the unit ideal only.
  if (h.mu() == 0) {
    std::vector<GradedSubspace<Fp>> pieces{full_space(0, walker.field)};
    std::vector<long> tau{1};
    if (offset == 0) visit(pieces, tau);
    return;
  }
  walker.run(stride, offset);
}

void enumerate_GH(const OSequence& h, long q,
                  const std::function<void(const GradedIdeal<Fp>&)>& visit,
                  std::uint64_t budget) {
  Field<Fp> field(FieldSpec::prime(q));
  enumerate_flags(
      h, q,
      [&](const std::vector<GradedSubspace<Fp>>& pieces,
          const std::vector<long>&) {
        GradedIdeal<Fp> ideal;
        ideal.field = field;
        ideal.top = h.s() + 1;
        for (int d = 0; d < h.mu(); ++d) ideal.pieces.emplace_back(d);
        for (const auto& p : pieces) ideal.pieces.push_back(p);
        while (static_cast<int>(ideal.pieces.size()) <= ideal.top)
          ideal.pieces.push_back(multiply_by_r1(ideal.pieces.back()));
        visit(ideal);
      },
      budget);
}

StratumCensus stratum_census(const OSequence& h, long q, std::uint64_t budget,
                             int jobs) {
  if (jobs < 1) throw InputError("jobs must be >= 1");
  auto lattice = build_lattice(h);
  auto empty_census = [&] {
    StratumCensus c;
    c.H = h;
    c.q = q;
    for (const auto& node : lattice.nodes) c.counts[node.eta] = 0;
    return c;
  };

  auto tally_into = [&](StratumCensus& census,
                        const std::vector<long>& tau) {
    std::vector<long> eta;
    eta.reserve(tau.size());
    for (int i = h.mu(); i < h.s(); ++i) {
      long v = std::min(h.e(i), h.e(i + 1)) + 1 -
               tau[static_cast<size_t>(i - h.mu())];
      internal_check(0 <= v && v <= std::min(h.e(i), h.e(i + 1)),
                     "enumerated ideal outside the stratum lattice");
      eta.push_back(v);
    }
    auto it = census.counts.find(eta);
    internal_check(it != census.counts.end(), "eta missing from the lattice");
    ++it->second;
    ++census.total;
  };

  if (jobs == 1) {
    StratumCensus census = empty_census();
    enumerate_flags(
        h, q,
        [&](const std::vector<GradedSubspace<Fp>>&,
            const std::vector<long>& tau) { tally_into(census, tau); },
        budget);
    return census;
  }

  std::vector<StratumCensus> parts(static_cast<size_t>(jobs), empty_census());
  std::vector<std::thread> threads;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int t = 0; t < jobs; ++t) {
    threads.emplace_back([&, t] {
      try {
        enumerate_flags(
            h, q,
            [&](const std::vector<GradedSubspace<Fp>>&,
                const std::vector<long>& tau) {
              tally_into(parts[static_cast<size_t>(t)], tau);
            },
            budget, jobs, t);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  if (failure) std::rethrow_exception(failure);
  StratumCensus census = empty_census();
  for (const auto& part : parts) census.merge(part);
  return census;
}

}  // namespace betti
