#include "polyadica/axioms.hpp"

#include <functional>
#include <random>

#include "polyadica/error.hpp"

namespace polyadica {

std::string_view to_string(Operation op) {
  return op == Operation::kAddition ? "addition" : "multiplication";
}

namespace {

std::vector<BigInt> sample_pool(const Ring& ring, const SampleSpec& s) {
  if (ring.is_finite()) return ring.elements();
  if (s.window_hi < s.window_lo) throw Error(ErrorCode::kInvalidArgument, "empty sample window");
  std::vector<BigInt> pool;
  for (std::int64_t i = s.window_lo; i <= s.window_hi; ++i) pool.push_back(ring.element_at(i));
  return pool;
}

// Calls visit(tuple) for each sampled tuple of the given width; stops early
// when visit returns false.
void for_each_tuple(const Ring& ring, const SampleSpec& s, std::size_t width,
                    const std::function<bool(const std::vector<BigInt>&)>& visit) {
  const auto pool = sample_pool(ring, s);
  std::vector<BigInt> tuple(width);
  if (s.mode == SampleSpec::Mode::kRandom) {
    std::mt19937_64 rng(s.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int c = 0; c < s.count; ++c) {
      for (auto& x : tuple) x = pool[pick(rng)];
      if (!visit(tuple)) return;
    }
    return;
  }
  double total = 1;
  for (std::size_t i = 0; i < width; ++i) total *= static_cast<double>(pool.size());
  if (total > static_cast<double>(s.max_cases)) {
    throw Error(ErrorCode::kInvalidArgument, "exhaustive sample of " + std::to_string(total) +
                                                 " polyads exceeds the cap");
  }
  std::vector<std::size_t> idx(width, 0);
  while (true) {
    for (std::size_t i = 0; i < width; ++i) tuple[i] = pool[idx[i]];
    if (!visit(tuple)) return;
    std::size_t i = 0;
    while (i < width && ++idx[i] == pool.size()) idx[i++] = 0;
    if (i == width) return;
  }
}

BigInt apply(const Ring& ring, Operation op, std::span<const BigInt> xs) {
  return op == Operation::kAddition ? ring.add(xs) : ring.mul(xs);
}

int arity_of(const Ring& ring, Operation op) { return op == Operation::kAddition ? ring.m() : ring.n(); }

}  // namespace

AxiomVerdict check_associativity(const Ring& ring, Operation op, const SampleSpec& sample) {
  const int k = arity_of(ring, op);
  AxiomVerdict v;
  std::vector<BigInt> outer(static_cast<std::size_t>(k));
  for_each_tuple(ring, sample, static_cast<std::size_t>(2 * k - 1), [&](const std::vector<BigInt>& xs) {
    ++v.cases;
    BigInt reference;
    for (int place = 0; place < k; ++place) {
      const auto p = static_cast<std::size_t>(place);
      for (std::size_t j = 0; j < p; ++j) outer[j] = xs[j];
      outer[p] = apply(ring, op, std::span(xs).subspan(p, static_cast<std::size_t>(k)));
      for (std::size_t j = p + 1; j < outer.size(); ++j) outer[j] = xs[j + static_cast<std::size_t>(k) - 1];
      BigInt r = apply(ring, op, outer);
      v.evaluations += 2;
      if (place == 0) {
        reference = std::move(r);
      } else if (r != reference) {
        v.holds = false;
        v.witness = Counterexample{xs, place, reference, r};
        return false;
      }
    }
    return true;
  });
  return v;
}

DistributivityVerdict check_distributivity(const Ring& ring, const SampleSpec& sample) {
  const auto m = static_cast<std::size_t>(ring.m());
  const auto n = static_cast<std::size_t>(ring.n());
  DistributivityVerdict out;
  // Arguments: n-1 multiplicands followed by the m summands.
  for (std::size_t rel = 0; rel < n; ++rel) {
    AxiomVerdict v;
    std::vector<BigInt> factors(n), terms(m);
    for_each_tuple(ring, sample, n - 1 + m, [&](const std::vector<BigInt>& xs) {
      ++v.cases;
      auto place = [&](const BigInt& y) {
        for (std::size_t i = 0, j = 0; i < n; ++i) factors[i] = i == rel ? y : xs[j++];
      };
      const std::span<const BigInt> summands = std::span(xs).subspan(n - 1, m);
      place(ring.add(summands));
      const BigInt lhs = ring.mul(factors);
      for (std::size_t t = 0; t < m; ++t) {
        place(summands[t]);
        terms[t] = ring.mul(factors);
      }
      const BigInt rhs = ring.add(terms);
      v.evaluations += m + 3;
      if (lhs != rhs) {
        v.holds = false;
        v.witness = Counterexample{xs, static_cast<int>(rel), lhs, rhs};
        return false;
      }
      return true;
    });
    out.all_hold = out.all_hold && v.holds;
    out.relations.push_back(std::move(v));
  }
  return out;
}

AxiomVerdict check_commutativity(const Ring& ring, Operation op, const SampleSpec& sample) {
  const auto k = static_cast<std::size_t>(arity_of(ring, op));
  AxiomVerdict v;
  std::vector<BigInt> perm(k);
  for_each_tuple(ring, sample, k, [&](const std::vector<BigInt>& xs) {
    ++v.cases;
    const BigInt reference = apply(ring, op, xs);
    // generator 0: swap first two; generator 1: rotate left by one
    perm = xs;
    std::swap(perm[0], perm[1]);
    BigInt r = apply(ring, op, perm);
    v.evaluations += 2;
    if (r != reference) {
      v.holds = false;
      v.witness = Counterexample{xs, 0, reference, r};
      return false;
    }
    for (std::size_t i = 0; i < k; ++i) perm[i] = xs[(i + 1) % k];
    r = apply(ring, op, perm);
    ++v.evaluations;
    if (r != reference) {
      v.holds = false;
      v.witness = Counterexample{xs, 1, reference, r};
      return false;
    }
    return true;
  });
  return v;
}

AxiomVerdict check_closure(const Ring& ring, Operation op, const SampleSpec& sample) {
  const auto k = static_cast<std::size_t>(arity_of(ring, op));
  AxiomVerdict v;
  for_each_tuple(ring, sample, k, [&](const std::vector<BigInt>& xs) {
    ++v.cases;
    ++v.evaluations;
    BigInt r = apply(ring, op, xs);
    if (!ring.contains(r)) {
      v.holds = false;
      v.witness = Counterexample{xs, 0, r, r};
      return false;
    }
    return true;
  });
  return v;
}

AxiomVerdict check_group_solvability(const Ring& ring) {
  const auto& carrier = ring.elements();
  const auto m = static_cast<std::size_t>(ring.m());
  AxiomVerdict v;
  SampleSpec all = SampleSpec::exhaustive();
  std::vector<BigInt> args(m);
  // Tuple layout: the m-1 fixed arguments, then the target c.
  for (std::size_t slot = 0; slot < m && v.holds; ++slot) {
    for_each_tuple(ring, all, m, [&](const std::vector<BigInt>& xs) {
      ++v.cases;
      int solutions = 0;
      for (const auto& x : carrier) {
        for (std::size_t i = 0, j = 0; i < m; ++i) args[i] = i == slot ? x : xs[j++];
        ++v.evaluations;
        if (ring.add(args) == xs[m - 1]) ++solutions;
      }
      if (solutions != 1) {
        v.holds = false;
        v.witness = Counterexample{xs, static_cast<int>(slot), BigInt(1), BigInt(solutions)};
        return false;
      }
      return true;
    });
  }
  return v;
}

}  // namespace polyadica
