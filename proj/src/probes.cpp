#include "betti/probes.hpp"

#include <algorithm>

namespace betti {

SpecializationResult specialization_probe(
    const OSequence& h, const std::function<std::vector<Rat>(const Rat&)>& path,
    const std::vector<Rat>& t_values) {
  Field<Rat> field;
  std::vector<Rat> ordered = t_values;
  auto zero_it = std::find(ordered.begin(), ordered.end(), Rat(0));
  if (zero_it == ordered.end())
    throw InputError("specialization probe needs t = 0 among the values");
  std::iter_swap(ordered.begin(), zero_it);

  SpecializationResult result;
  for (const auto& t : ordered) {
    auto ideal = chart_ideal(h, path(t), field);
    auto inv = invariants_of(ideal);
    PathPoint point;
    point.t = t;
    point.eta = eta_of(inv.triple);
    point.codim = inv.triple.codim();
    result.points.push_back(std::move(point));
  }
  const auto limit = triple_from_eta(h, result.points.front().eta);
  for (size_t i = 1; i < result.points.size(); ++i) {
    const auto at_t = triple_from_eta(h, result.points[i].eta);
    if (!limit.dominates(at_t)) result.limit_dominates = false;
  }
  return result;
}

}  // namespace betti
