#include "search_common.hpp"

namespace polyadica {

std::vector<RankedSolution> search_reference(const PowerSumInstance& inst, const SearchOptions& opts) {
  using detail::for_each_nondecreasing;
  const auto plan = detail::make_plan(inst, opts, false);
  const Ring& ring = inst.ring;
  const std::size_t count = plan.values.size();

  struct Side {
    std::vector<std::size_t> pos;
    BigInt value;
  };
  auto enumerate = [&](std::size_t width, std::int64_t steps) {
    std::vector<Side> sides;
    Elements scratch;
    for_each_nondecreasing(0, count, width, [&](const std::vector<std::size_t>& pos) {
      sides.push_back({pos, detail::side_value(ring, steps, plan.powers, pos, scratch)});
    });
    return sides;
  };
  const auto us = enumerate(plan.len_u, plan.steps_u);
  const auto vs = enumerate(plan.len_v, plan.steps_v);

  std::vector<RankedSolution> out;
  for (const auto& u : us) {
    for (const auto& v : vs) {
      if (u.value != v.value) continue;
      RankedSolution r;
      if (detail::accept(inst, detail::gather(plan.values, u.pos), detail::gather(plan.values, v.pos),
                         u.value, r)) {
        out.push_back(std::move(r));
      }
    }
  }
  detail::finish(out);
  return out;
}

}  // namespace polyadica
