#include "polyadica/diophantine.hpp"

#include <algorithm>

#include "polyadica/error.hpp"

namespace polyadica {

void validate(const PowerSumInstance& inst) {
  if (inst.l < 1) throw Error(ErrorCode::kInvalidArgument, "l must be >= 1");
  if (inst.p < 0 || inst.q < inst.p || inst.p + inst.q < 1) {
    throw Error(ErrorCode::kInvalidArgument, "need 0 <= p <= q and p + q >= 1");
  }
}

std::size_t side_length(const Ring& ring, int additions) {
  return static_cast<std::size_t>(additions) * static_cast<std::size_t>(ring.m() - 1) + 1;
}

PowerSumSolution canonicalize(PowerSumSolution sol, bool equal_sides) {
  std::sort(sol.u.begin(), sol.u.end());
  std::sort(sol.v.begin(), sol.v.end());
  if (equal_sides && lex_less(sol.v, sol.u)) std::swap(sol.u, sol.v);
  return sol;
}

BigInt evaluate_side(const Ring& ring, int l, const Elements& xs) {
  if (l < 0) throw Error(ErrorCode::kInvalidArgument, "l must be >= 0");
  const auto steps = steps_for_length(ring.m(), xs.size());
  if (!steps) {
    throw Error(ErrorCode::kLengthMismatch,
                std::to_string(xs.size()) + " terms is not of the form ell(m-1)+1 for m=" +
                    std::to_string(ring.m()));
  }
  Elements powers;
  powers.reserve(xs.size());
  for (const auto& x : xs) powers.push_back(polyadic_power(ring, x, static_cast<unsigned>(l)));
  return long_add(ring, *steps, powers);
}

namespace {

// Power sum in the ring's underlying binary arithmetic, when it has one.
std::optional<BigInt> plain_power_sum(const Ring& ring, int l, const Elements& xs) {
  const auto kind = ring.descriptor().kind;
  BigInt sum = 0;
  switch (kind) {
    case RingKind::kExotic32:
      for (const auto& x : xs) sum += ipow(x + 1, static_cast<unsigned>(l + 1));
      return sum;
    case RingKind::kBinaryZ:
    case RingKind::kCongruence: {
      const auto e = static_cast<unsigned>(l * (ring.n() - 1) + 1);
      for (const auto& x : xs) sum += ipow(x, e);
      return sum;
    }
    default: return std::nullopt;
  }
}

bool additive_is_plain_sum(const Ring& ring) {
  const auto kind = ring.descriptor().kind;
  return kind == RingKind::kBinaryZ || kind == RingKind::kCongruence;
}

}  // namespace

Verdict verify(const PowerSumInstance& inst, const PowerSumSolution& sol) {
  validate(inst);
  const Ring& ring = inst.ring;
  Verdict v;
  v.length_ok = sol.u.size() == side_length(ring, inst.p) && sol.v.size() == side_length(ring, inst.q);
  v.in_carrier = std::all_of(sol.u.begin(), sol.u.end(), [&](const BigInt& x) { return ring.contains(x); }) &&
                 std::all_of(sol.v.begin(), sol.v.end(), [&](const BigInt& x) { return ring.contains(x); });
  auto su = sol.u, sv = sol.v;
  std::sort(su.begin(), su.end());
  std::sort(sv.begin(), sv.end());
  v.nontrivial = su != sv;

  auto side = [&](const Elements& xs) -> std::optional<BigInt> {
    if (steps_for_length(ring.m(), xs.size())) return evaluate_side(ring, inst.l, xs);
    // A malformed side still has a plain value when addition is the integer sum.
    if (additive_is_plain_sum(ring)) return plain_power_sum(ring, inst.l, xs);
    return std::nullopt;
  };
  if (v.in_carrier) {
    v.lhs = side(sol.u);
    v.rhs = side(sol.v);
    auto pu = plain_power_sum(ring, inst.l, sol.u);
    auto pv = plain_power_sum(ring, inst.l, sol.v);
    if (pu && pv) v.plain_form_holds = *pu == *pv;
  }

  v.holds = v.length_ok && v.in_carrier && v.lhs && v.rhs && *v.lhs == *v.rhs;
  if (!v.in_carrier) {
    v.reason = "element outside the carrier";
  } else if (!v.length_ok) {
    v.reason = "side lengths must be " + std::to_string(side_length(ring, inst.p)) + " and " +
               std::to_string(side_length(ring, inst.q)) + ", got " + std::to_string(sol.u.size()) +
               " and " + std::to_string(sol.v.size());
  } else if (!v.holds) {
    v.reason = "sides differ";
  } else if (!v.nontrivial) {
    v.reason = "trivial: both sides are the same multiset";
  } else {
    v.reason = "ok";
  }
  return v;
}

LpsBound lps_bound_binary(int p, int q, int m, int n) {
  if (p < 0 || q < 0 || m < 2 || n < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need p, q >= 0 and m, n >= 2");
  }
  const std::int64_t rhs = static_cast<std::int64_t>(p + q) * (m - 1) + 1;
  return {rhs / (n - 1), rhs % (n - 1) == 0};
}

std::int64_t lps_bound_polyadic(int p, int q) {
  if (p < 0 || q < 0) throw Error(ErrorCode::kInvalidArgument, "need p, q >= 0");
  return static_cast<std::int64_t>(p) + q + 1;
}

LimitingArities limiting_arities(std::int64_t pq, std::int64_t k) {
  if (pq < 2 || k < 0) throw Error(ErrorCode::kInvalidArgument, "need p+q >= 2 and k >= 0");
  return {3 + pq + (pq + 1) * k, 2 + pq + pq * k};
}

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::kAgree: return "agree";
    case Regime::kCounterexampleWindow: return "counterexample-window";
    case Regime::kPolyadicWeaker: return "polyadic-weaker";
  }
  return "agree";
}

ConjectureReport conjecture_report(int p, int q, int m, int n) {
  ConjectureReport r;
  r.l_lps = lps_bound_binary(p, q, m, n);
  r.l_plps = lps_bound_polyadic(p, q);
  if (r.l_plps < r.l_lps.value) {
    r.regime = Regime::kCounterexampleWindow;
    r.window = std::make_pair(r.l_plps, r.l_lps.value);
  } else if (r.l_plps > r.l_lps.value) {
    r.regime = Regime::kPolyadicWeaker;
  }
  return r;
}

namespace {

Elements ints(std::initializer_list<long long> xs) {
  Elements out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

std::vector<KnownIdentity> build_registry() {
  const RingDescriptor exotic{RingKind::kExotic32, 0, 0};
  std::vector<KnownIdentity> r;
  r.push_back({"pyth-3", "3^2=1^2+2^2+2^2", exotic, 1, 0, 1, {ints({2}), ints({0, 1, 1})}, true, false, ""});
  r.push_back({"pyth-15", "15^2=2^2+10^2+11^2", exotic, 1, 0, 1, {ints({14}), ints({1, 9, 10})}, true, false, ""});
  r.push_back({"cube-6", "6^3=3^3+4^3+5^3", exotic, 2, 0, 1, {ints({5}), ints({2, 3, 4})}, true, false, ""});
  r.push_back({"cube-709", "709^3=193^3+461^3+631^3", exotic, 2, 0, 1,
               {ints({708}), ints({192, 460, 630})}, true, false, ""});
  r.push_back({"quartic-422481", "422481^4=95800^4+217519^4+414560^4", exotic, 3, 0, 1,
               {ints({422480}), ints({95799, 217518, 414559})}, true, false, ""});
  r.push_back({"sextic-3-19-22", "3^6+19^6+22^6=10^6+15^6+23^6", exotic, 5, 1, 1,
               {ints({2, 18, 21}), ints({9, 14, 22})}, true, false, ""});
  r.push_back({"quintic-4-5", "4^5+99^5+129^5+289^5+314^5+434^5=14^5+59^5+204^5+214^5+349^5+429^5",
               {RingKind::kCongruence, 4, 5}, 2, 1, 1,
               {ints({4, 99, 129, 289, 314, 434}), ints({14, 59, 204, 214, 349, 429})}, true, false, ""});
  r.push_back({"quintic-4-10", "4^5+194^5+254^5+574^5+624^5+864^5=24^5+114^5+404^5+424^5+694^5+854^5",
               {RingKind::kCongruence, 4, 10}, 2, 1, 1,
               {ints({4, 194, 254, 574, 624, 864}), ints({24, 114, 404, 424, 694, 854})}, true, false, ""});
  r.push_back({"cubic-6-7",
               "6^3+27^3+41^3+48^3+69^3+76^3+90^3+111^3=13^3+20^3+34^3+55^3+62^3+83^3+97^3+104^3",
               {RingKind::kCongruence, 6, 7}, 1, 1, 1,
               {ints({6, 27, 41, 48, 69, 76, 90, 111}), ints({13, 20, 34, 55, 62, 83, 97, 104})}, true,
               false, ""});
  r.push_back({"quintic-2-3", "14^5=4*(-1)^5+7*5^5+8^5+2*11^5", {RingKind::kCongruence, 2, 3}, 2, 0, 5,
               {ints({14}), ints({-1, -1, -1, -1, 5, 5, 5, 5, 5, 5, 5, 8, 11, 11})}, false, true,
               "suspected erratum: 14 terms where 16 are required, and the sides differ "
               "(537824 vs 376741)"});
  return r;
}

}  // namespace

const std::vector<KnownIdentity>& known_identities() {
  static const std::vector<KnownIdentity> registry = build_registry();
  return registry;
}

}  // namespace polyadica
