#pragma once

// Pieces shared by the parallel and the reference search kernels.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "polyadica/diophantine.hpp"
#include "polyadica/error.hpp"

namespace polyadica::detail {

struct SearchPlan {
  std::size_t len_u = 1;
  std::size_t len_v = 1;
  std::int64_t steps_u = 0;
  std::int64_t steps_v = 0;
  std::vector<std::int64_t> indices;  // admissible indices after filtering
  Elements values;                    // element_at(index)
  Elements powers;                    // l-th polyadic power of each value
};

inline void check_range(const SearchOptions& opts) {
  if (opts.hi < opts.lo) throw Error(ErrorCode::kInvalidArgument, "empty search range");
  if (opts.hi - opts.lo > 100000) throw Error(ErrorCode::kInvalidArgument, "search range too large");
}

// Visits non-decreasing positions into [first, count) of the given width;
// the callback gets the position vector.
inline void for_each_nondecreasing(std::size_t first, std::size_t count, std::size_t width,
                                   const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (first >= count) return;
  std::vector<std::size_t> pos(width, first);
  if (width == 0) {
    fn(pos);
    return;
  }
  while (true) {
    fn(pos);
    std::size_t i = width;
    while (i > 0 && pos[i - 1] + 1 == count) --i;
    if (i == 0) return;
    ++pos[i - 1];
    for (std::size_t j = i; j < width; ++j) pos[j] = pos[i - 1];
  }
}

inline BigInt side_value(const Ring& ring, std::int64_t steps, const Elements& powers,
                         const std::vector<std::size_t>& pos, Elements& scratch) {
  scratch.resize(pos.size());
  for (std::size_t i = 0; i < pos.size(); ++i) scratch[i] = powers[pos[i]];
  return long_add(ring, steps, scratch);
}

inline Elements gather(const Elements& values, const std::vector<std::size_t>& pos) {
  Elements out;
  out.reserve(pos.size());
  for (auto i : pos) out.push_back(values[i]);
  return out;
}

inline bool ranked_less(const RankedSolution& x, const RankedSolution& y) {
  if (x.sum != y.sum) return x.sum < y.sum;
  if (x.solution.u != y.solution.u) return lex_less(x.solution.u, y.solution.u);
  return lex_less(x.solution.v, y.solution.v);
}

inline void finish(std::vector<RankedSolution>& out) {
  std::sort(out.begin(), out.end(), ranked_less);
  out.erase(std::unique(out.begin(), out.end(),
                        [](const RankedSolution& x, const RankedSolution& y) {
                          return x.solution == y.solution;
                        }),
            out.end());
}

// Nontrivial check plus canonical form; returns false for rejected pairs.
inline bool accept(const PowerSumInstance& inst, Elements u, Elements v, const BigInt& sum,
                   RankedSolution& out) {
  out.solution = canonicalize({std::move(u), std::move(v)}, inst.p == inst.q);
  if (out.solution.u == out.solution.v) return false;
  out.sum = sum;
  return true;
}

SearchPlan make_plan(const PowerSumInstance& inst, const SearchOptions& opts, bool parallel_powers);

}  // namespace polyadica::detail
