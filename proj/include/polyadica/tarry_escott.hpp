#pragma once

// Multigrade (Tarry-Escott) solutions and their transfer to congruence-class rings.

#include <cstdint>
#include <vector>

#include "polyadica/bigint.hpp"
#include "polyadica/congruence.hpp"
#include "polyadica/diophantine.hpp"

namespace polyadica::te {

struct MultigradeSolution {
  Elements left;
  Elements right;
  int degree = 0;

  bool operator==(const MultigradeSolution&) const = default;
};

// Largest s with equal power sums for r = 1..s.
// Throws Error(kLengthMismatch) for unequal lengths and Error(kTrivialSolution)
// when both lists are the same multiset.
int verify_degree(const Elements& left, const Elements& right);

// x -> a + b x on both sides; the degree is recomputed, not inherited.
MultigradeSolution frolov_transform(const MultigradeSolution& sol, const BigInt& a, const BigInt& b);

// Splits 0..2^(s+1)-1 by the parity of the bit count; even parity goes left.
MultigradeSolution prouhet_thue_morse(int s);

// {0,19,25,57,62,86} / {2,11,40,42,69,85}, degree 5.
MultigradeSolution golden_solution();
// The eight-term PTM partition, degree 3.
MultigradeSolution octet_solution();

struct ArityMatch {
  int p = 1;
  int m = 2;
  int l = 1;
  int n = 2;
  bool satisfies_bound = false;  // l(n-1)+1 <= p(m-1)
  bool non_binary = false;       // m > 2 and n > 2
  bool ptm_size_law = false;     // p(m-1)+1 = 2^(l(n-1)+1)

  bool operator==(const ArityMatch&) const = default;
};

// Every factorization p(m-1) = P-1, l(n-1) = s-1 with m, n >= 2 and p, l >= 1,
// ordered by (p, l).
std::vector<ArityMatch> arity_match(int P, int s);

struct ClassSolution {
  congruence::CongruenceClass cls;
  congruence::ShapeInvariants shape;
  ArityMatch match;
  MultigradeSolution transformed;
  PowerSumSolution solution;  // canonical, over make_congruence_ring(cls)
  int l = 1;
  int p = 1;
  int q = 1;
};

// One verified equation per class with shape (m, n) and b <= b_max.
// Throws Error(kNoMatchingClass) when there is none.
std::vector<ClassSolution> generate_class_solutions(const MultigradeSolution& sol,
                                                    const ArityMatch& match, std::int64_t b_max);

// "x1^r+...=y1^r+..." with r = l(n-1)+1.
std::string display(const PowerSumSolution& sol, int r);

}  // namespace polyadica::te
