#include "polyadica/tarry_escott.hpp"

#include <algorithm>
#include <bit>

#include "polyadica/error.hpp"

namespace polyadica::te {

int verify_degree(const Elements& left, const Elements& right) {
  if (left.size() != right.size()) {
    throw Error(ErrorCode::kLengthMismatch, "multigrade sides need equal length");
  }
  auto l = left, r = right;
  std::sort(l.begin(), l.end());
  std::sort(r.begin(), r.end());
  if (l == r) throw Error(ErrorCode::kTrivialSolution, "both sides are the same multiset");
  // Equal power sums up to the length would force equal multisets, so the
  // loop always stops before running out.
  Elements pl = l, pr = r;  // running x^e
  for (int e = 1;; ++e) {
    BigInt sl = 0, sr = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
      sl += pl[i];
      sr += pr[i];
      pl[i] *= l[i];
      pr[i] *= r[i];
    }
    if (sl != sr) return e - 1;
  }
}

MultigradeSolution frolov_transform(const MultigradeSolution& sol, const BigInt& a, const BigInt& b) {
  if (b == 0) throw Error(ErrorCode::kInvalidArgument, "Frolov transform needs b != 0");
  MultigradeSolution out;
  for (const auto& x : sol.left) out.left.push_back(a + b * x);
  for (const auto& x : sol.right) out.right.push_back(a + b * x);
  out.degree = verify_degree(out.left, out.right);
  return out;
}

MultigradeSolution prouhet_thue_morse(int s) {
  if (s < 1 || s > 20) throw Error(ErrorCode::kInvalidArgument, "PTM degree must lie in 1..20");
  MultigradeSolution out;
  const std::uint64_t size = std::uint64_t{1} << (s + 1);
  for (std::uint64_t i = 0; i < size; ++i) {
    (std::popcount(i) % 2 == 0 ? out.left : out.right).emplace_back(i);
  }
  out.degree = verify_degree(out.left, out.right);
  return out;
}

namespace {

MultigradeSolution from_lists(std::initializer_list<int> left, std::initializer_list<int> right) {
  MultigradeSolution s;
  for (int x : left) s.left.emplace_back(x);
  for (int x : right) s.right.emplace_back(x);
  s.degree = verify_degree(s.left, s.right);
  return s;
}

}  // namespace

MultigradeSolution golden_solution() {
  return from_lists({0, 19, 25, 57, 62, 86}, {2, 11, 40, 42, 69, 85});
}

MultigradeSolution octet_solution() {
  return from_lists({0, 3, 5, 6, 9, 10, 12, 15}, {1, 2, 4, 7, 8, 11, 13, 14});
}

std::vector<ArityMatch> arity_match(int P, int s) {
  if (P < 2 || s < 1) throw Error(ErrorCode::kInvalidArgument, "need P >= 2 and s >= 1");
  std::vector<ArityMatch> out;
  const int sum_side = P - 1;
  const int mul_side = s - 1;
  for (int p = 1; p <= sum_side; ++p) {
    if (sum_side % p != 0) continue;
    const int m = sum_side / p + 1;
    for (int l = 1; l <= mul_side; ++l) {
      if (mul_side % l != 0) continue;
      const int n = mul_side / l + 1;
      ArityMatch c{p, m, l, n, false, false, false};
      c.satisfies_bound = l * (n - 1) + 1 <= p * (m - 1);
      c.non_binary = m > 2 && n > 2;
      const int r = l * (n - 1) + 1;
      c.ptm_size_law = r < 31 && p * (m - 1) + 1 == (1 << r);
      out.push_back(c);
    }
  }
  return out;
}

std::vector<ClassSolution> generate_class_solutions(const MultigradeSolution& sol,
                                                    const ArityMatch& match, std::int64_t b_max) {
  const auto size = sol.left.size();
  if (size != static_cast<std::size_t>(match.p) * (match.m - 1) + 1) {
    throw Error(ErrorCode::kInvalidArgument, "match does not fit the number of summands");
  }
  const int r = match.l * (match.n - 1) + 1;
  const int degree = verify_degree(sol.left, sol.right);
  if (degree < r) {
    throw Error(ErrorCode::kInvalidArgument, "solution degree " + std::to_string(degree) +
                                                 " is below the required power " + std::to_string(r));
  }
  const auto classes = congruence::same_shape_classes(b_max, match.m, match.n);
  if (classes.empty()) {
    throw Error(ErrorCode::kNoMatchingClass,
                "no class with shape (" + std::to_string(match.m) + "," + std::to_string(match.n) +
                    ") and b <= " + std::to_string(b_max));
  }
  std::vector<ClassSolution> out;
  for (const auto& cls : classes) {
    ClassSolution cs;
    cs.cls = cls;
    cs.shape = congruence::arity_shape(cls);
    cs.match = match;
    cs.transformed = frolov_transform(sol, cls.a, cls.b);
    cs.l = match.l;
    cs.p = match.p;
    cs.q = match.p;
    cs.solution = canonicalize({cs.transformed.left, cs.transformed.right}, true);
    const PowerSumInstance inst{congruence::make_congruence_ring(cls), cs.l, cs.p, cs.q};
    const auto verdict = verify(inst, cs.solution);
    if (!verdict.holds || !verdict.nontrivial) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generated equation over " + congruence::to_string(cls) + " failed: " + verdict.reason);
    }
    out.push_back(std::move(cs));
  }
  return out;
}

std::string display(const PowerSumSolution& sol, int r) {
  auto side = [r](const Elements& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += '+';
      s += xs[i] < 0 ? "(" + to_string(xs[i]) + ")" : to_string(xs[i]);
      s += '^' + std::to_string(r);
    }
    return s;
  };
  return side(sol.u) + "=" + side(sol.v);
}

}  // namespace polyadica::te
