#include "betti/apps.hpp"

namespace betti {

bool socle_feasible(const OSequence& h, const SocleType& st) {
  if (!h.artinian()) throw InputError("socle feasibility needs Artinian H");
  const int top = std::max<int>(h.s() + 1, static_cast<int>(st.size()));
  for (int i = 0; i <= top; ++i) {
    const long sti =
        i < static_cast<int>(st.size()) ? st[static_cast<size_t>(i)] : 0;
    if (sti < 0) return false;
    const long lo = pos_part(h.e(i + 1) - h.e(i + 2));
    const long hi = h.e(i + 1);
    if (sti < lo || sti > hi) return false;
  }
  return true;
}

std::vector<OSequence> enumerate_H_for_socle(const SocleType& st,
                                             int degree_bound) {
  std::vector<OSequence> out;
  for (const auto& h : all_artinian_sequences(degree_bound))
    if (socle_feasible(h, st)) out.push_back(h);
  return out;
}

BettiTriple triple_from_socle(const OSequence& h, const SocleType& st) {
  std::vector<long> beta;
  for (int i = h.mu() + 1; i <= h.s() + 1; ++i) {
    const int deg = i - 2;
    beta.push_back(deg >= 0 && deg < static_cast<int>(st.size())
                       ? st[static_cast<size_t>(deg)]
                       : 0);
  }
  return BettiTriple::from_beta(h, beta);
}

SocleType socle_type_of(const IndexedSeq& socle, int top) {
  SocleType st(static_cast<size_t>(top) + 1, 0);
  for (int i = socle.lo; i <= socle.hi(); ++i) {
    if (socle.at(i) == 0) continue;
    internal_check(i >= 0 && i <= top, "socle entry outside [0, top]");
    st[static_cast<size_t>(i)] = socle.at(i);
  }
  while (st.size() > 1 && st.back() == 0) st.pop_back();
  return st;
}

}  // namespace betti
