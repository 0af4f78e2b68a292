#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "search_common.hpp"

namespace polyadica {

namespace detail {

SearchPlan make_plan(const PowerSumInstance& inst, const SearchOptions& opts, bool parallel_powers) {
  validate(inst);
  check_range(opts);
  const Ring& ring = inst.ring;
  SearchPlan plan;
  plan.len_u = side_length(ring, inst.p);
  plan.len_v = side_length(ring, inst.q);
  plan.steps_u = inst.p;
  plan.steps_v = inst.q;
  const bool drop_shift_zero = opts.exclude_shift_zero && ring.descriptor().kind == RingKind::kExotic32;
  for (std::int64_t i = opts.lo; i <= opts.hi; ++i) {
    BigInt x = ring.element_at(i);
    if (drop_shift_zero && x == -1) continue;
    plan.indices.push_back(i);
    plan.values.push_back(std::move(x));
  }
  plan.powers.resize(plan.values.size());
  const auto count = static_cast<std::int64_t>(plan.values.size());
  const auto l = static_cast<unsigned>(inst.l);
  if (parallel_powers) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      plan.powers[static_cast<std::size_t>(i)] = ring.power(plan.values[static_cast<std::size_t>(i)], l);
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      plan.powers[static_cast<std::size_t>(i)] = polyadic_power(ring, plan.values[static_cast<std::size_t>(i)], l);
    }
  }
  return plan;
}

}  // namespace detail

std::vector<std::vector<std::int64_t>> nondecreasing_tuples(std::int64_t lo, std::int64_t hi,
                                                            std::size_t width) {
  std::vector<std::vector<std::int64_t>> out;
  if (hi < lo) return out;
  detail::for_each_nondecreasing(0, static_cast<std::size_t>(hi - lo + 1), width,
                                 [&](const std::vector<std::size_t>& pos) {
                                   std::vector<std::int64_t> t;
                                   for (auto p : pos) t.push_back(lo + static_cast<std::int64_t>(p));
                                   out.push_back(std::move(t));
                                 });
  return out;
}

std::vector<RankedSolution> search(const PowerSumInstance& inst, const SearchOptions& opts) {
  using detail::for_each_nondecreasing;
  const auto plan = detail::make_plan(inst, opts, true);
  const Ring& ring = inst.ring;
  const std::size_t count = plan.values.size();

  // Build side: the shorter (u) side keyed by its value.
  std::unordered_map<BigInt, std::vector<std::vector<std::size_t>>, BigIntHash> table;
  {
    Elements scratch;
    for_each_nondecreasing(0, count, plan.len_u, [&](const std::vector<std::size_t>& pos) {
      table[detail::side_value(ring, plan.steps_u, plan.powers, pos, scratch)].push_back(pos);
    });
  }

  // Probe side: v tuples split by their leading element.
  const auto leads = static_cast<std::int64_t>(count);
  std::vector<std::vector<RankedSolution>> found(count);
#ifdef _OPENMP
  const int threads = opts.workers > 0 ? opts.workers : omp_get_max_threads();
#endif
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t lead = 0; lead < leads; ++lead) {
    const auto first = static_cast<std::size_t>(lead);
    auto& local = found[first];
    Elements scratch;
    std::vector<std::size_t> pos(plan.len_v);
    pos[0] = first;
    for_each_nondecreasing(first, count, plan.len_v - 1, [&](const std::vector<std::size_t>& tail) {
      std::copy(tail.begin(), tail.end(), pos.begin() + 1);
      const BigInt value = detail::side_value(ring, plan.steps_v, plan.powers, pos, scratch);
      const auto hit = table.find(value);
      if (hit == table.end()) return;
      for (const auto& u_pos : hit->second) {
        RankedSolution r;
        if (detail::accept(inst, detail::gather(plan.values, u_pos), detail::gather(plan.values, pos),
                           value, r)) {
          local.push_back(std::move(r));
        }
      }
    });
  }

  std::vector<RankedSolution> out;
  for (auto& v : found) {
    for (auto& r : v) out.push_back(std::move(r));
  }
  detail::finish(out);
  return out;
}

}  // namespace polyadica
