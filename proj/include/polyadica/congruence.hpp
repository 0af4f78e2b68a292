#pragma once

// Polyadic ring structure of a fixed congruence class [[a]]_b: elements
// a + b k under plain integer addition and multiplication.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyadica/bigint.hpp"
#include "polyadica/ring.hpp"

namespace polyadica::congruence {

struct CongruenceClass {
  std::int64_t a = 1;
  std::int64_t b = 2;

  bool operator==(const CongruenceClass&) const = default;
};

// Throws Error(kInvalidArgument) unless 0 < a < b.
void validate(const CongruenceClass& cls);
std::string to_string(const CongruenceClass& cls);  // "[[a]]b"

struct ShapeInvariants {
  int m = 2;
  int n = 2;
  BigInt I;  // (m-1)a/b
  BigInt J;  // (a^n - a)/b

  bool operator==(const ShapeInvariants&) const = default;
};

// Minimal arities m, n >= 2 and the invariants I, J.
// Throws Error(kNoMultiplicativeArity) when no n <= b satisfies a^n = a (mod b).
ShapeInvariants arity_shape(const CongruenceClass& cls);
std::optional<ShapeInvariants> try_arity_shape(const CongruenceClass& cls);

struct ClassElement {
  BigInt k;
  BigInt value;
};

BigInt value_of(const CongruenceClass& cls, const BigInt& k);
// Throws Error(kNotInCarrier) when value is not congruent to a.
BigInt index_of(const CongruenceClass& cls, const BigInt& value);

// ks has length m (resp. n).
ClassElement add(const CongruenceClass& cls, const std::vector<BigInt>& ks);
ClassElement mul(const CongruenceClass& cls, const std::vector<BigInt>& ks);

// The index completing m-1 copies of k back to k: (2-m)k - I.
BigInt querelement(const CongruenceClass& cls, const BigInt& k);

// ks has length m-1; neutral iff the indices sum to -I.
bool neutral_sequence_check(const CongruenceClass& cls, const std::vector<BigInt>& ks);

enum class ClassKind { kUnitClass, kNegativeUnitClass, kNonLimiting };

struct ZeroUnitReport {
  ClassKind kind = ClassKind::kNonLimiting;
  bool has_additive_zero = false;
  std::optional<BigInt> unit;           // e with mu[e,...,e,x] = x
  std::vector<BigInt> querable;         // among +-1, values with a multiplicative querelement
  bool all_querable = false;            // n = 2 with 1 in the class: every x has querelement 1
  std::string summary;
};

ZeroUnitReport zero_and_unit_analysis(const CongruenceClass& cls);

// All classes with b <= b_max whose shape is (m, n), ordered by (b, a).
std::vector<CongruenceClass> same_shape_classes(std::int64_t b_max, int m, int n);

struct TableRow {
  CongruenceClass cls;
  std::optional<ShapeInvariants> shape;
};

// Every (a, b) with 2 <= b <= b_max, 1 <= a < b, ordered by (a, b).
std::vector<TableRow> class_table(std::int64_t b_max);

// Serial versions kept as the reference for the parallel scans.
std::vector<CongruenceClass> same_shape_classes_reference(std::int64_t b_max, int m, int n);
std::vector<TableRow> class_table_reference(std::int64_t b_max);

struct InvariantVerdict {
  bool pass = false;
  bool same_shape = false;
  BigInt common_ratio;  // b I / a, equal to m-1 on both sides
  bool power_identity_first = false;   // a + b J = a^n
  bool power_identity_second = false;
  std::optional<BigRational> ij_ratio_first;  // I/J when a = a' and J != 0
  std::optional<BigRational> ij_ratio_second;
  std::vector<std::string> violations;
};

InvariantVerdict equal_arity_invariants(const CongruenceClass& c1, const CongruenceClass& c2);

// (m, n)-ring over the values of the class.
Ring make_congruence_ring(const CongruenceClass& cls);

// Elements (1 + b k1)/(1 + b k2) of the (b+1, 2)-field of polyadic rationals.
struct PolyadicRational {
  BigInt num;  // = 1 + b k1
  BigInt den;  // = 1 + b k2

  bool operator==(const PolyadicRational&) const = default;
  BigRational value() const { return BigRational(num) / BigRational(den); }
};

PolyadicRational make_rational(std::int64_t b, const BigInt& k1, const BigInt& k2);

// Canonical representative: lowest terms scaled by the smallest positive c
// making both parts congruent to 1 mod b. Throws Error(kNotInCarrier) if impossible.
PolyadicRational canonical_rational(std::int64_t b, const BigRational& x);

// xs has length b+1.
PolyadicRational rational_add(std::int64_t b, const std::vector<PolyadicRational>& xs);

// -(b-1) x.
PolyadicRational rational_querelement(std::int64_t b, const PolyadicRational& x);

}  // namespace polyadica::congruence
