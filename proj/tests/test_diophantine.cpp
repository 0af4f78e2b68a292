#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "polyadica/congruence.hpp"
#include "polyadica/diophantine.hpp"
#include "polyadica/error.hpp"
#include "reference_data.hpp"

using namespace polyadica;

namespace {

Elements E(std::initializer_list<long long> xs) {
  Elements out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("evaluate_side") {
  const auto ex = builtin_exotic_32();
  // (3^3 + 4^3 + 5^3) - 1
  CHECK(evaluate_side(ex, 2, E({2, 3, 4})) == 215);
  CHECK(evaluate_side(ex, 2, E({5})) == 215);
  CHECK(evaluate_side(congruence::make_congruence_ring({2, 3}), 1, E({2})) == 8);
  CHECK(evaluate_side(builtin_binary_Z(), 2, E({3, 4, 5})) == 216);
  CHECK_THROWS_AS(evaluate_side(ex, 2, E({1, 2})), Error);
}

TEST_CASE("verify the displayed identities") {
  const PowerSumInstance cubes{builtin_exotic_32(), 2, 0, 1};
  CHECK(verify(cubes, {E({5}), E({2, 3, 4})}).holds);
  const PowerSumInstance quartic{builtin_exotic_32(), 3, 0, 1};
  const auto q = verify(quartic, {E({422480}), E({95799, 217518, 414559})});
  CHECK(q.holds);
  REQUIRE(q.plain_form_holds);
  CHECK(*q.plain_form_holds);
  const PowerSumInstance sextic{builtin_exotic_32(), 5, 1, 1};
  CHECK(verify(sextic, {E({2, 18, 21}), E({9, 14, 22})}).holds);
  // the variant with u1 = 3 does not hold
  CHECK_FALSE(verify(sextic, {E({3, 18, 21}), E({9, 14, 22})}).holds);
}

TEST_CASE("the quintic over [[2]]_3 is malformed and false") {
  const PowerSumInstance inst{congruence::make_congruence_ring({2, 3}), 2, 0, 5};
  const Elements v = E({-1, -1, -1, -1, 5, 5, 5, 5, 5, 5, 5, 8, 11, 11});
  const auto verdict = verify(inst, {E({14}), v});
  CHECK_FALSE(verdict.holds);
  CHECK_FALSE(verdict.length_ok);
  CHECK(side_length(inst.ring, 5) == 16);
  CHECK(v.size() == 14);
  REQUIRE(verdict.lhs);
  REQUIRE(verdict.rhs);
  CHECK(*verdict.lhs == 537824);
  CHECK(*verdict.rhs == 376741);
  // independent arithmetic
  oracle::Big rhs = 0;
  for (const auto& x : v) rhs += oracle::pow_naive(x, 5);
  CHECK(rhs == 376741);
  CHECK(oracle::pow_naive(14, 5) == 537824);
}

TEST_CASE("identity registry") {
  const auto& reg = known_identities();
  CHECK(reg.size() == 10);
  for (const auto& id : reg) {
    const PowerSumInstance inst{make_ring(id.ring), id.l, id.p, id.q};
    const auto v = verify(inst, id.solution);
    CHECK_MESSAGE(v.holds == id.expected_holds, id.id);
    if (v.plain_form_holds) CHECK_MESSAGE(*v.plain_form_holds == v.holds, id.id);
  }
  CHECK(std::count_if(reg.begin(), reg.end(), [](const KnownIdentity& k) { return k.suspect; }) == 1);
}

TEST_CASE("verify ignores the order inside each side") {
  std::mt19937_64 rng(3);
  for (const auto& id : known_identities()) {
    const PowerSumInstance inst{make_ring(id.ring), id.l, id.p, id.q};
    auto sol = id.solution;
    for (int i = 0; i < 5; ++i) {
      std::shuffle(sol.u.begin(), sol.u.end(), rng);
      std::shuffle(sol.v.begin(), sol.v.end(), rng);
      CHECK(verify(inst, sol).holds == id.expected_holds);
    }
  }
}

TEST_CASE("exotic verify agrees with the plain binary form on random candidates") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(-5, 30);
  const auto ex = builtin_exotic_32();
  int agreeing = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int l = 1 + trial % 3;
    const PowerSumInstance inst{ex, l, 0, 1};
    PowerSumSolution s{E({pick(rng)}), E({pick(rng), pick(rng), pick(rng)})};
    const auto v = verify(inst, s);
    oracle::Big lhs = oracle::pow_naive(s.u[0] + 1, static_cast<unsigned>(l + 1));
    oracle::Big rhs = 0;
    for (const auto& x : s.v) rhs += oracle::pow_naive(x + 1, static_cast<unsigned>(l + 1));
    CHECK(v.holds == (lhs == rhs));
    agreeing += v.holds ? 1 : 0;
  }
  CHECK(agreeing >= 0);
}

TEST_CASE("congruence verify agrees with plain power sums") {
  const congruence::CongruenceClass cls{4, 5};
  const auto ring = congruence::make_congruence_ring(cls);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(-10, 10);
  for (int trial = 0; trial < 300; ++trial) {
    PowerSumSolution s;
    for (int i = 0; i < 6; ++i) s.u.push_back(congruence::value_of(cls, pick(rng)));
    for (int i = 0; i < 6; ++i) s.v.push_back(congruence::value_of(cls, pick(rng)));
    const auto v = verify({ring, 1, 1, 1}, s);
    oracle::Big a = 0, b = 0;
    for (const auto& x : s.u) a += oracle::pow_naive(x, 3);
    for (const auto& x : s.v) b += oracle::pow_naive(x, 3);
    CHECK(v.holds == (a == b));
  }
}

TEST_CASE("verify rejects elements outside the carrier") {
  const PowerSumInstance inst{congruence::make_congruence_ring({4, 5}), 2, 1, 1};
  const auto v = verify(inst, {E({4, 99, 129, 289, 314, 435}), E({14, 59, 204, 214, 349, 429})});
  CHECK_FALSE(v.in_carrier);
  CHECK_FALSE(v.holds);
}

TEST_CASE("binary LPS bound") {
  const auto a = lps_bound_binary(0, 2, 2, 2);
  CHECK(a.value == 3);
  CHECK(a.exact);
  // p = q = 1 over the (3,2)-ring: (n-1) l = 2(m-1) + 1 = 5
  CHECK(lps_bound_binary(1, 1, 3, 2).value == 5);
  // with m = n = 2 the same equation gives 3
  CHECK(lps_bound_binary(1, 1, 2, 2).value == 3);
  CHECK(lps_bound_binary(0, 5, 4, 3).value == 8);
  // 2l = 2(2-1) + 1 has no integer solution
  const auto inexact = lps_bound_binary(0, 2, 2, 3);
  CHECK(inexact.value == 1);
  CHECK_FALSE(inexact.exact);
}

TEST_CASE("polyadic LPS bound and limiting arities") {
  CHECK(lps_bound_polyadic(0, 2) == 3);
  CHECK(lps_bound_polyadic(1, 1) == 3);
  CHECK(lps_bound_polyadic(0, 5) == 6);
  for (const auto& c : refdata::limiting_table()) {
    const auto r = limiting_arities(c.pq, c.k);
    CHECK(r.m0 == c.m0);
    CHECK(r.n0 == c.n0);
    CHECK(r.m0 - r.n0 == c.k + 1);
  }
  CHECK_THROWS_AS(limiting_arities(1, 0), Error);
}

TEST_CASE("conjecture report") {
  const auto window = conjecture_report(1, 1, 3, 2);
  CHECK(window.regime == Regime::kCounterexampleWindow);
  REQUIRE(window.window);
  CHECK(window.window->first == 3);
  CHECK(window.window->second == 5);

  const auto weaker = conjecture_report(2, 2, 12, 16);
  CHECK(weaker.l_plps == 5);
  CHECK(weaker.l_lps.value == 3);
  CHECK(weaker.regime == Regime::kPolyadicWeaker);

  const auto agree = conjecture_report(0, 2, 2, 2);
  CHECK(agree.l_plps == 3);
  CHECK(agree.l_lps.value == 3);
  CHECK(agree.regime == Regime::kAgree);
}
