#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "polyadica/congruence.hpp"
#include "polyadica/diophantine.hpp"
#include "polyadica/error.hpp"

using namespace polyadica;

namespace {

std::set<oracle::Sol> as_set(const std::vector<RankedSolution>& xs) {
  std::set<oracle::Sol> out;
  for (const auto& r : xs) out.insert({r.solution.u, r.solution.v});
  return out;
}

void check_against_oracle(const PowerSumInstance& inst, int lo, int hi, unsigned plain_exponent, int shift) {
  SearchOptions opts;
  opts.lo = lo;
  opts.hi = hi;
  const auto fast = search(inst, opts);
  const auto slow = search_reference(inst, opts);
  CHECK(fast.size() == slow.size());
  for (std::size_t i = 0; i < std::min(fast.size(), slow.size()); ++i) {
    CHECK(fast[i].solution == slow[i].solution);
    CHECK(fast[i].sum == slow[i].sum);
  }
  const auto expected = oracle::power_sum_solutions(
      lo, hi, side_length(inst.ring, inst.p), side_length(inst.ring, inst.q),
      [&](int i) { return inst.ring.element_at(i); },
      [&](const oracle::Big& x) { return oracle::pow_naive(x + shift, plain_exponent); });
  CHECK(as_set(fast) == expected);
}

}  // namespace

TEST_CASE("search agrees with the reference and the oracle: exotic ring") {
  const auto ex = builtin_exotic_32();
  check_against_oracle({ex, 2, 0, 1}, 0, 12, 3, 1);
  check_against_oracle({ex, 1, 0, 1}, -3, 10, 2, 1);
  check_against_oracle({ex, 1, 1, 1}, 0, 6, 2, 1);
}

TEST_CASE("search agrees with the reference and the oracle: congruence rings") {
  const auto c23 = congruence::make_congruence_ring({2, 3});
  CHECK(c23.n() == 3);
  check_against_oracle({c23, 1, 0, 1}, -4, 8, 3, 0);
  const auto c15 = congruence::make_congruence_ring({1, 5});
  check_against_oracle({c15, 1, 0, 1}, -3, 4, 2, 0);
}

TEST_CASE("search agrees with the reference and the oracle: binary integers") {
  const auto z = builtin_binary_Z();
  check_against_oracle({z, 1, 1, 1}, 0, 12, 2, 0);
  check_against_oracle({z, 2, 1, 1}, -6, 12, 3, 0);
  check_against_oracle({z, 2, 0, 2}, 0, 12, 3, 0);
}

TEST_CASE("squares in the exotic ring over 0..20") {
  const auto res = search({builtin_exotic_32(), 1, 0, 1}, {0, 20, false, 0});
  REQUIRE(!res.empty());
  CHECK(res.front().solution.u == Elements{BigInt(2)});
  CHECK(res.front().solution.v == (Elements{BigInt(0), BigInt(1), BigInt(1)}));
  CHECK(res.front().sum == 8);
  for (std::size_t i = 1; i < res.size(); ++i) CHECK(res[i - 1].sum <= res[i].sum);
  for (const auto& r : res) CHECK(verify({builtin_exotic_32(), 1, 0, 1}, r.solution).holds);
  bool found = false;
  for (const auto& r : res)
    found = found || (r.solution.u == Elements{BigInt(14)} &&
                      r.solution.v == (Elements{BigInt(1), BigInt(9), BigInt(10)}));
  CHECK(found);
}

TEST_CASE("no fifth powers as sums of three in small range") {
  const auto res = search({builtin_exotic_32(), 4, 0, 1}, {0, 100, false, 0});
  CHECK(res.empty());
}

TEST_CASE("worker count does not change the result") {
  const PowerSumInstance inst{builtin_exotic_32(), 2, 0, 1};
  const auto base = search(inst, {0, 25, false, 1});
  for (int w : {2, 3, 8}) {
    const auto other = search(inst, {0, 25, false, w});
    REQUIRE(other.size() == base.size());
    for (std::size_t i = 0; i < base.size(); ++i) CHECK(other[i].solution == base[i].solution);
  }
}

TEST_CASE("shift-zero exclusion") {
  const PowerSumInstance inst{builtin_exotic_32(), 1, 0, 1};
  for (const auto& r : search(inst, {-3, 6, true, 0})) {
    for (const auto& x : r.solution.u) CHECK(x != -1);
    for (const auto& x : r.solution.v) CHECK(x != -1);
  }
}

TEST_CASE("nondecreasing tuples") {
  const auto t = nondecreasing_tuples(0, 2, 2);
  using T = std::vector<std::vector<std::int64_t>>;
  CHECK(t == T{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  CHECK(nondecreasing_tuples(0, 9, 3).size() == 220);
}

TEST_CASE("search rejects bad ranges") {
  const PowerSumInstance inst{builtin_exotic_32(), 2, 0, 1};
  CHECK_THROWS_AS(search(inst, {5, 1, false, 0}), Error);
  CHECK_THROWS_AS(search(inst, {0, 200000, false, 0}), Error);
  CHECK_THROWS_AS(search({builtin_exotic_32(), 0, 0, 1}, {0, 5, false, 0}), Error);
}
