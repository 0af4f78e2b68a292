#pragma once

// Equal sums of like powers over an (m,n)-ring:
//   long sum of p(m-1)+1 l-th polyadic powers = long sum of q(m-1)+1 of them.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyadica/bigint.hpp"
#include "polyadica/ring.hpp"

namespace polyadica {

struct PowerSumInstance {
  Ring ring;
  int l = 1;
  int p = 0;
  int q = 1;
};

// Throws Error(kInvalidArgument) unless l >= 1, 0 <= p <= q, p + q >= 1.
void validate(const PowerSumInstance& inst);

std::size_t side_length(const Ring& ring, int additions);  // additions(m-1)+1

struct PowerSumSolution {
  Elements u;
  Elements v;

  bool operator==(const PowerSumSolution&) const = default;
};

// Sorts both sides; for p = q the lexicographically smaller side goes first.
PowerSumSolution canonicalize(PowerSumSolution sol, bool equal_sides);

// Long sum of the l-th polyadic powers. Throws Error(kLengthMismatch).
BigInt evaluate_side(const Ring& ring, int l, const Elements& xs);

struct Verdict {
  bool holds = false;
  bool nontrivial = false;
  bool length_ok = false;
  bool in_carrier = false;
  std::optional<BigInt> lhs;
  std::optional<BigInt> rhs;
  // Exotic ring: sum (u+1)^(l+1) = sum (v+1)^(l+1). Congruence and binary
  // rings: plain integer power sums. Absent for other rings.
  std::optional<bool> plain_form_holds;
  std::string reason;
};

Verdict verify(const PowerSumInstance& inst, const PowerSumSolution& sol);

struct SearchOptions {
  std::int64_t lo = 0;  // index range mapped through ring.element_at
  std::int64_t hi = 20;
  bool exclude_shift_zero = false;  // drop tuples with x+1 = 0 in the exotic ring
  int workers = 0;                  // 0 = OpenMP default
};

struct RankedSolution {
  PowerSumSolution solution;
  BigInt sum;
};

// Every nontrivial solution in range, canonical, deduplicated, ordered by
// (sum, u, v). Hash join on side values, parallel over the leading element.
std::vector<RankedSolution> search(const PowerSumInstance& inst, const SearchOptions& opts);

// Same contract, serial nested comparison of every pair of sides.
std::vector<RankedSolution> search_reference(const PowerSumInstance& inst, const SearchOptions& opts);

// Non-decreasing index tuples of the given width over [lo, hi], in lexicographic order.
std::vector<std::vector<std::int64_t>> nondecreasing_tuples(std::int64_t lo, std::int64_t hi,
                                                            std::size_t width);

struct LpsBound {
  std::int64_t value = 0;  // exact solution, or floor when inexact
  bool exact = true;
};

// (n-1) l = (p+q)(m-1) + 1.
LpsBound lps_bound_binary(int p, int q, int m, int n);
// p + q + 1.
std::int64_t lps_bound_polyadic(int p, int q);

struct LimitingArities {
  std::int64_t m0 = 0;
  std::int64_t n0 = 0;
};

// pq stands for p + q >= 2.
LimitingArities limiting_arities(std::int64_t pq, std::int64_t k);

enum class Regime { kAgree, kCounterexampleWindow, kPolyadicWeaker };
std::string_view to_string(Regime r);

struct ConjectureReport {
  LpsBound l_lps;
  std::int64_t l_plps = 0;
  Regime regime = Regime::kAgree;
  // Counterexample window (l_plps, l_lps] when regime is kCounterexampleWindow.
  std::optional<std::pair<std::int64_t, std::int64_t>> window;
};

ConjectureReport conjecture_report(int p, int q, int m, int n);

struct KnownIdentity {
  std::string id;
  std::string display;
  RingDescriptor ring;
  int l = 1;
  int p = 0;
  int q = 1;
  PowerSumSolution solution;
  bool expected_holds = true;
  bool suspect = false;
  std::string note;
};

const std::vector<KnownIdentity>& known_identities();

}  // namespace polyadica
