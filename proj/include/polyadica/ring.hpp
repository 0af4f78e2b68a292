#pragma once

// Uniform handle for (m,n)-ary rings over integer-encoded carriers.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polyadica/bigint.hpp"

namespace polyadica {

enum class RingKind { kExotic32, kFinite34, kBinaryZ, kCongruence, kCustom };

std::string_view to_string(RingKind kind);
RingKind parse_ring_kind(std::string_view text);  // throws Error(kParse)

// Serializable identity of a ring. a and b are only meaningful for congruence rings.
struct RingDescriptor {
  RingKind kind = RingKind::kBinaryZ;
  std::int64_t a = 0;
  std::int64_t b = 0;

  bool operator==(const RingDescriptor&) const = default;
};

std::string describe(const RingDescriptor& d);  // "exotic32", "congruence[[2]]3", ...

using Elements = std::vector<BigInt>;
using OpRule = std::function<BigInt(std::span<const BigInt>)>;

struct RingSpec {
  std::string name;
  RingDescriptor descriptor;
  int m = 2;
  int n = 2;
  OpRule add;
  OpRule mul;
  // Finite carriers list their canonical elements; infinite ones leave this empty.
  std::optional<Elements> finite_carrier;
  std::function<bool(const BigInt&)> contains;
  // Maps an integer index onto the carrier (identity for Z-like rings).
  std::function<BigInt(const BigInt&)> element_at;
  // Optional closed form for polyadic_power; must agree with the long product.
  std::function<BigInt(const BigInt&, unsigned)> power;
};

// Immutable, cheap to copy.
class Ring {
 public:
  explicit Ring(RingSpec spec);

  int m() const noexcept { return spec_->m; }
  int n() const noexcept { return spec_->n; }
  const std::string& name() const noexcept { return spec_->name; }
  const RingDescriptor& descriptor() const noexcept { return spec_->descriptor; }

  bool is_finite() const noexcept { return spec_->finite_carrier.has_value(); }
  const Elements& elements() const;  // throws for infinite carriers
  bool contains(const BigInt& x) const { return spec_->contains(x); }
  BigInt element_at(const BigInt& index) const { return spec_->element_at(index); }

  // Exactly m (resp. n) arguments; throws Error(kLengthMismatch) otherwise.
  BigInt add(std::span<const BigInt> xs) const;
  BigInt mul(std::span<const BigInt> xs) const;

  bool has_closed_power() const noexcept { return static_cast<bool>(spec_->power); }
  // Closed form when available, long product otherwise.
  BigInt power(const BigInt& x, unsigned l) const;

 private:
  std::shared_ptr<const RingSpec> spec_;
};

// Left-nested long operations over ell(arity-1)+1 arguments.
BigInt long_add(const Ring& ring, std::int64_t ell, std::span<const BigInt> xs);
BigInt long_mul(const Ring& ring, std::int64_t ell, std::span<const BigInt> xs);

// Long product of l(n-1)+1 copies of x; always evaluated by folding.
BigInt polyadic_power(const Ring& ring, const BigInt& x, unsigned l);

// Number of steps ell for a list of `count` arguments, or nullopt if count
// is not of the form ell(arity-1)+1.
std::optional<std::int64_t> steps_for_length(int arity, std::size_t count);

// nu3 = x+y+z+2, mu2 = xy+x+y over Z. Unit 0; querelement -x-2.
Ring builtin_exotic_32();
BigInt exotic_querelement(const BigInt& x);
BigInt exotic_power_closed_form(const BigInt& x, unsigned l);  // (x+1)^(l+1) - 1

// Two elements a=0, b=1. nu3 flips the parity of the b-count, mu4 keeps it.
Ring builtin_finite_34();

Ring builtin_binary_Z();

// mu2 = exponentiation, nu3 = product over positive integers. Distributive
// only in the first relation; mu2 itself is not associative.
Ring example_power_product_structure();

// Builds a ring from a descriptor; congruence rings require a valid class.
Ring make_ring(const RingDescriptor& d);

}  // namespace polyadica
