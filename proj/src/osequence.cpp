#include "betti/osequence.hpp"

#include <algorithm>
#include <sstream>

namespace betti {

OSequence OSequence::analyze(const std::vector<long>& values) {
  if (values.empty()) throw InputError("empty Hilbert function");
  for (size_t i = 0; i < values.size(); ++i)
    if (values[i] < 0)
      throw InputError("negative value at index " + std::to_string(i));

  OSequence h;
  // Order: first index with H_i < i+1; the ramp below it must be exact.
  int mu = static_cast<int>(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    if (values[i] < static_cast<long>(i) + 1) {
      mu = static_cast<int>(i);
      break;
    }
    if (values[i] > static_cast<long>(i) + 1)
      throw InputError("H exceeds i+1 at index " + std::to_string(i));
  }
  if (mu == static_cast<int>(values.size()))
    throw InputError("H never drops below i+1; the sequence is not "
                     "eventually constant as given");
  for (size_t i = static_cast<size_t>(mu) + 1; i < values.size(); ++i) {
    if (values[i] > values[i - 1])
      throw InputError("increase after the order at index " +
                       std::to_string(i));
  }

  const long c = values.back();
  int s = static_cast<int>(values.size()) - 1;
  while (s > 0 && values[static_cast<size_t>(s) - 1] == c) --s;
  // mu > s happens for non-Artinian H that stabilize inside the ramp,
  // e.g. (1,2,3,3,...); every e_i is then zero.
  h.values_.assign(values.begin(), values.begin() + s + 1);
  h.mu_ = mu;
  h.s_ = s;
  h.c_ = c;
  return h;
}

long OSequence::dim_moduli() const {
  long dim = c_;
  for (int i = mu_; i <= s_; ++i) dim += (e(i) + 1) * e(i + 1);
  return dim;
}

long OSequence::nu_min() const {
  long nu = 1 + e(mu_);
  for (int i = mu_; i <= s_; ++i) nu += pos_part(e(i + 1) - e(i));
  return nu;
}

std::pair<long, OSequence> OSequence::strip_common() const {
  if (c_ == 0) return {0, *this};
  std::vector<long> reduced;
  const int top = std::max(s_ - static_cast<int>(c_), 0);
  for (int i = 0; i <= top + 1; ++i)
    reduced.push_back(value(i + static_cast<int>(c_)) - c_);
  // All-zero reduction (the unit ideal) is the H of R/R; keep one entry.
  while (reduced.size() > 1 && reduced.back() == reduced[reduced.size() - 2])
    reduced.pop_back();
  return {c_, OSequence::analyze(reduced)};
}

std::vector<std::pair<long, long>> OSequence::socle_bounds() const {
  if (!artinian()) throw InputError("socle bounds need an Artinian H");
  std::vector<std::pair<long, long>> out;
  for (int i = 0; i <= s_ - 1; ++i)
    out.emplace_back(pos_part(e(i + 1) - e(i + 2)), e(i + 1));
  return out;
}

std::vector<long> OSequence::alignment() const {
  if (!artinian()) throw InputError("alignment character needs an Artinian H");
  std::vector<long> k;
  for (int i = 0; i <= mu_; ++i) {
    long count = 0;
    for (int u = 0; u <= s_; ++u)
      if (value(u) >= i + 1) ++count;
    k.push_back(count);
  }
  for (size_t i = 0; i + 1 < k.size(); ++i)
    internal_check(k[i] > k[i + 1], "alignment character not strictly decreasing");
  internal_check(k.back() == 0, "k_mu must vanish");
  return k;
}

std::string OSequence::to_string() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < values_.size(); ++i)
    os << (i ? "," : "") << values_[i];
  os << ")";
  return os.str();
}

std::pair<bool, long> level_sequence_check(const OSequence& n, long d, long j) {
  const int ji = static_cast<int>(j);
  const long tau = n.e(ji) + 1;
  bool ok = n.artinian() && d >= 1 && d <= j + 1 &&
            n.value(ji) == j + 1 - d && n.value(ji + 1) == 0;
  // e_{j+1} = j+1-d >= e_j >= e_{j-1} >= ... : e weakly increases up to j+1.
  for (int i = n.mu(); ok && i <= ji; ++i)
    if (n.e(i) > n.e(i + 1)) ok = false;
  if (tau < 1 || tau > std::min(d, j + 2 - d)) ok = false;
  return {ok, tau};
}

namespace {
void extend_tails(std::vector<long>& h, long prev, int s_limit,
                  std::vector<OSequence>& out) {
  // h currently ends with a value > 0; try terminating with 0 or extending.
  {
    std::vector<long> done = h;
    done.push_back(0);
    if (static_cast<int>(done.size()) - 1 <= s_limit)
      out.push_back(OSequence::analyze(done));
  }
  if (static_cast<int>(h.size()) >= s_limit) return;
  for (long next = prev; next >= 1; --next) {
    h.push_back(next);
    extend_tails(h, next, s_limit, out);
    h.pop_back();
  }
}
}  // namespace

std::vector<OSequence> all_artinian_sequences(int max_s) {
  std::vector<OSequence> out;
  for (int mu = 1; mu <= max_s; ++mu) {
    std::vector<long> ramp;
    for (int i = 0; i < mu; ++i) ramp.push_back(i + 1);
    // H_mu from mu down to 1, or terminate right away at 0.
    {
      std::vector<long> h = ramp;
      h.push_back(0);
      out.push_back(OSequence::analyze(h));
    }
    for (long hmu = mu; hmu >= 1; --hmu) {
      std::vector<long> h = ramp;
      h.push_back(hmu);
      extend_tails(h, hmu, max_s, out);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace betti
