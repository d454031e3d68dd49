#include "betti/staircase.hpp"

#include <algorithm>
#include <functional>

namespace betti {

long Staircase::cells_in_degree(int d) const {
  long count = std::min<long>(infinite_rows, d + 1);
  for (long r = infinite_rows; r <= d; ++r) {
    long len = row_length(r);
    if (len == 0) break;
    if (d - r < len) ++count;
  }
  return count;
}

std::vector<long> Staircase::hilbert(int top) const {
  std::vector<long> h;
  h.reserve(static_cast<size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) h.push_back(cells_in_degree(d));
  return h;
}

std::vector<std::pair<long, long>> Staircase::corners() const {
  std::vector<std::pair<long, long>> out;
  const long nrows = infinite_rows + static_cast<long>(rows.size());
  for (long r = infinite_rows; r <= nrows; ++r) {
    long len = row_length(r);
    long above = (r == 0) ? -1 : row_length(r - 1);
    if (r == 0 || above < 0 || len < above) out.emplace_back(r, len);
  }
  return out;
}

std::vector<std::pair<long, long>> Staircase::inner_corners() const {
  std::vector<std::pair<long, long>> out;
  auto cs = corners();
  for (size_t k = 0; k + 1 < cs.size(); ++k)
    out.emplace_back(cs[k + 1].first, cs[k].second);
  return out;
}

Staircase staircase_of_monomial_ideal(const OSequence& h) {
  Staircase st;
  st.infinite_rows = h.c();
  for (long r = h.c();; ++r) {
    long len = 0;
    for (int d = 0; d <= h.s(); ++d)
      if (h.value(d) >= r + 1) ++len;
    if (len == 0) break;
    st.rows.push_back(len);
  }
  return st;
}

namespace {

void search_staircases(const OSequence& h, std::vector<long>& rows,
                       std::vector<long>& partial, long total_so_far,
                       long total_target,
                       std::vector<Staircase>* all,
                       const std::function<bool(const Staircase&)>& accept,
                       std::optional<Staircase>* found) {
  if (found && found->has_value()) return;
  const long r = static_cast<long>(rows.size());
  // Degrees below r are final; all must already match.
  for (int d = 0; d < r && d <= h.s(); ++d)
    if (partial[static_cast<size_t>(d)] != h.value(d)) return;
  if (total_so_far == total_target) {
    // Complete: every degree must match exactly.
    bool ok = true;
    for (int d = 0; d <= h.s() && ok; ++d)
      if (partial[static_cast<size_t>(d)] != h.value(d)) ok = false;
    if (ok) {
      Staircase st;
      st.rows = rows;
      if (all) all->push_back(st);
      if (found && accept(st)) *found = st;
    }
    return;
  }
  const long prev = rows.empty() ? h.s() : rows.back();
  for (long len = std::min<long>(prev, h.s()); len >= 1; --len) {
    // Add row r with `len` cells in degrees r .. r+len-1.
    bool feasible = true;
    for (long c = 0; c < len && feasible; ++c) {
      long d = r + c;
      if (d > h.s() || partial[static_cast<size_t>(d)] + 1 > h.value(static_cast<int>(d)))
        feasible = false;
    }
    if (!feasible) continue;
    for (long c = 0; c < len; ++c) ++partial[static_cast<size_t>(r + c)];
    rows.push_back(len);
    search_staircases(h, rows, partial, total_so_far + len, total_target, all,
                      accept, found);
    rows.pop_back();
    for (long c = 0; c < len; ++c) --partial[static_cast<size_t>(r + c)];
    if (found && found->has_value()) return;
  }
}

void run_search(const OSequence& h, std::vector<Staircase>* all,
                const std::function<bool(const Staircase&)>& accept,
                std::optional<Staircase>* found) {
  internal_check(h.artinian(), "staircase search needs an Artinian H");
  long total = 0;
  for (int d = 0; d <= h.s(); ++d) total += h.value(d);
  std::vector<long> rows;
  std::vector<long> partial(static_cast<size_t>(h.s()) + 1, 0);
  search_staircases(h, rows, partial, 0, total, all, accept, found);
}

// Tally of bidegree lists into per-degree counts over [lo, hi].
IndexedSeq tally_degrees(const std::vector<std::pair<long, long>>& pts, int lo,
                         int hi) {
  IndexedSeq seq(lo, std::vector<long>(static_cast<size_t>(hi - lo + 1), 0));
  for (const auto& [r, c] : pts) {
    long d = r + c;
    internal_check(d >= lo && d <= hi, "bidegree outside the expected range");
    ++seq.ref(static_cast<int>(d));
  }
  return seq;
}

}  // namespace

std::vector<Staircase> all_staircases(const OSequence& h) {
  std::vector<Staircase> out;
  run_search(h, &out, {}, nullptr);
  return out;
}

std::optional<Staircase> find_monomial_with_beta(const OSequence& h,
                                                 const BettiTriple& target) {
  if (!h.artinian()) {
    // Split off the common factor y^c and search the Artinian part.
    auto [c, reduced] = h.strip_common();
    std::vector<long> beta_shift;
    for (int i = reduced.mu() + 1; i <= reduced.s() + 1; ++i)
      beta_shift.push_back(target.beta.at(i + static_cast<int>(c)));
    auto triple = BettiTriple::from_beta(reduced, beta_shift);
    auto inner = find_monomial_with_beta(reduced, triple);
    if (!inner) return std::nullopt;
    inner->infinite_rows = c;
    return inner;
  }
  auto accept = [&](const Staircase& st) {
    auto nu = tally_degrees(st.corners(), h.mu(), h.s());
    auto beta = tally_degrees(st.inner_corners(), h.mu() + 1, h.s() + 1);
    return nu == target.nu && beta == target.beta;
  };
  std::optional<Staircase> found;
  run_search(h, nullptr, accept, &found);
  return found;
}

}  // namespace betti
