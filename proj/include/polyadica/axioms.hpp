#pragma once

// Sampled and exhaustive checkers for the polyadic ring axioms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyadica/bigint.hpp"
#include "polyadica/ring.hpp"

namespace polyadica {

enum class Operation { kAddition, kMultiplication };

std::string_view to_string(Operation op);

inline constexpr std::uint64_t kDefaultSampleSeed = 20240611;

// Random mode draws `count` polyads from the pool; exhaustive mode walks
// every polyad over it. The pool is the finite carrier, or element_at(i)
// for i in [window_lo, window_hi] on infinite carriers.
struct SampleSpec {
  enum class Mode { kRandom, kExhaustive };
  Mode mode = Mode::kRandom;
  std::uint64_t seed = kDefaultSampleSeed;
  std::int64_t window_lo = -10;
  std::int64_t window_hi = 10;
  int count = 200;
  std::uint64_t max_cases = 5'000'000;  // exhaustive runs beyond this are rejected

  static SampleSpec exhaustive(std::int64_t lo = -10, std::int64_t hi = 10) {
    SampleSpec s;
    s.mode = Mode::kExhaustive;
    s.window_lo = lo;
    s.window_hi = hi;
    return s;
  }
};

struct Counterexample {
  std::vector<BigInt> args;
  int placement = 0;  // inner-operation position, relation index or generator index
  BigInt expected;
  BigInt actual;
};

struct AxiomVerdict {
  bool holds = true;
  std::uint64_t cases = 0;
  std::uint64_t evaluations = 0;
  std::optional<Counterexample> witness;
};

// All placements of the inner operation inside the outer one agree.
AxiomVerdict check_associativity(const Ring& ring, Operation op, const SampleSpec& sample = {});

struct DistributivityVerdict {
  bool all_hold = true;
  std::vector<AxiomVerdict> relations;  // relation i distributes over slot i
};

DistributivityVerdict check_distributivity(const Ring& ring, const SampleSpec& sample = {});

// Invariance under a transposition and a full cycle, which generate S_k.
AxiomVerdict check_commutativity(const Ring& ring, Operation op, const SampleSpec& sample = {});

// Results stay inside the carrier.
AxiomVerdict check_closure(const Ring& ring, Operation op, const SampleSpec& sample = {});

// Finite carriers only: every equation add[..x at slot i..] = c has exactly one solution x.
AxiomVerdict check_group_solvability(const Ring& ring);

}  // namespace polyadica
