#include "polyadica/ring.hpp"

#include "polyadica/error.hpp"

namespace polyadica {

std::string_view to_string(RingKind kind) {
  switch (kind) {
    case RingKind::kExotic32: return "exotic32";
    case RingKind::kFinite34: return "finite34";
    case RingKind::kBinaryZ: return "binaryZ";
    case RingKind::kCongruence: return "congruence";
    case RingKind::kCustom: return "custom";
  }
  return "custom";
}

RingKind parse_ring_kind(std::string_view text) {
  for (RingKind k : {RingKind::kExotic32, RingKind::kFinite34, RingKind::kBinaryZ,
                     RingKind::kCongruence, RingKind::kCustom}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::kParse, "unknown ring kind '" + std::string(text) + "'");
}

std::string describe(const RingDescriptor& d) {
  if (d.kind == RingKind::kCongruence) {
    return "congruence[[" + std::to_string(d.a) + "]]" + std::to_string(d.b);
  }
  return std::string(to_string(d.kind));
}

Ring::Ring(RingSpec spec) {
  if (spec.m < 2 || spec.n < 2) throw Error(ErrorCode::kInvalidArgument, "ring arities must be >= 2");
  if (!spec.add || !spec.mul) throw Error(ErrorCode::kInvalidArgument, "ring needs both operations");
  if (!spec.contains) {
    if (spec.finite_carrier) {
      auto carrier = *spec.finite_carrier;
      spec.contains = [carrier](const BigInt& x) {
        for (const auto& e : carrier) {
          if (e == x) return true;
        }
        return false;
      };
    } else {
      spec.contains = [](const BigInt&) { return true; };
    }
  }
  if (!spec.element_at) {
    if (spec.finite_carrier) {
      auto carrier = *spec.finite_carrier;
      spec.element_at = [carrier](const BigInt& i) {
        return carrier[static_cast<std::size_t>(mod_floor(i, static_cast<std::int64_t>(carrier.size())))];
      };
    } else {
      spec.element_at = [](const BigInt& i) { return i; };
    }
  }
  spec_ = std::make_shared<const RingSpec>(std::move(spec));
}

const Elements& Ring::elements() const {
  if (!spec_->finite_carrier) {
    throw Error(ErrorCode::kInvalidArgument, name() + " has an infinite carrier");
  }
  return *spec_->finite_carrier;
}

namespace {

void check_arity(const Ring& ring, const char* op, std::size_t expected, std::size_t got) {
  if (expected != got) {
    throw Error(ErrorCode::kLengthMismatch, ring.name() + ": " + op + " expects " +
                                                std::to_string(expected) + " arguments, got " +
                                                std::to_string(got));
  }
}

BigInt fold(const Ring& ring, int arity, std::int64_t ell, std::span<const BigInt> xs, bool additive) {
  if (ell < 0) throw Error(ErrorCode::kInvalidArgument, "ell must be >= 0");
  const std::size_t expected = static_cast<std::size_t>(ell) * static_cast<std::size_t>(arity - 1) + 1;
  if (xs.size() != expected) {
    throw Error(ErrorCode::kLengthMismatch,
                ring.name() + ": long " + (additive ? "sum" : "product") + " with ell=" +
                    std::to_string(ell) + " needs " + std::to_string(expected) +
                    " arguments, got " + std::to_string(xs.size()));
  }
  if (ell == 0) return xs[0];
  std::vector<BigInt> buf(static_cast<std::size_t>(arity));
  BigInt acc = xs[0];
  std::size_t pos = 1;
  for (std::int64_t step = 0; step < ell; ++step) {
    buf[0] = acc;
    for (int j = 1; j < arity; ++j) buf[static_cast<std::size_t>(j)] = xs[pos++];
    acc = additive ? ring.add(buf) : ring.mul(buf);
  }
  return acc;
}

}  // namespace

BigInt Ring::add(std::span<const BigInt> xs) const {
  check_arity(*this, "addition", static_cast<std::size_t>(m()), xs.size());
  return spec_->add(xs);
}

BigInt Ring::mul(std::span<const BigInt> xs) const {
  check_arity(*this, "multiplication", static_cast<std::size_t>(n()), xs.size());
  return spec_->mul(xs);
}

BigInt Ring::power(const BigInt& x, unsigned l) const {
  if (spec_->power) return spec_->power(x, l);
  return polyadic_power(*this, x, l);
}

BigInt long_add(const Ring& ring, std::int64_t ell, std::span<const BigInt> xs) {
  return fold(ring, ring.m(), ell, xs, true);
}

BigInt long_mul(const Ring& ring, std::int64_t ell, std::span<const BigInt> xs) {
  return fold(ring, ring.n(), ell, xs, false);
}

BigInt polyadic_power(const Ring& ring, const BigInt& x, unsigned l) {
  const std::vector<BigInt> copies(static_cast<std::size_t>(l) * (ring.n() - 1) + 1, x);
  return long_mul(ring, l, copies);
}

std::optional<std::int64_t> steps_for_length(int arity, std::size_t count) {
  if (count == 0 || (count - 1) % static_cast<std::size_t>(arity - 1) != 0) return std::nullopt;
  return static_cast<std::int64_t>((count - 1) / static_cast<std::size_t>(arity - 1));
}

BigInt exotic_querelement(const BigInt& x) { return -x - 2; }

BigInt exotic_power_closed_form(const BigInt& x, unsigned l) { return ipow(x + 1, l + 1) - 1; }

Ring builtin_exotic_32() {
  RingSpec s;
  s.name = "exotic32";
  s.descriptor = {RingKind::kExotic32, 0, 0};
  s.m = 3;
  s.n = 2;
  s.add = [](std::span<const BigInt> v) { return BigInt(v[0] + v[1] + v[2] + 2); };
  s.mul = [](std::span<const BigInt> v) { return BigInt(v[0] * v[1] + v[0] + v[1]); };
  s.power = exotic_power_closed_form;
  return Ring(std::move(s));
}

Ring builtin_finite_34() {
  // Encoding: 0 is a, 1 is b. The nine listed relations together with
  // commutativity say nu3 = (#b + 1) mod 2 and mu4 = #b mod 2.
  RingSpec s;
  s.name = "finite34";
  s.descriptor = {RingKind::kFinite34, 0, 0};
  s.m = 3;
  s.n = 4;
  auto count_b = [](std::span<const BigInt> v) {
    int c = 0;
    for (const auto& x : v) c += x == 1 ? 1 : 0;
    return c;
  };
  s.add = [count_b](std::span<const BigInt> v) { return BigInt((count_b(v) + 1) % 2); };
  s.mul = [count_b](std::span<const BigInt> v) { return BigInt(count_b(v) % 2); };
  s.finite_carrier = Elements{0, 1};
  return Ring(std::move(s));
}

Ring builtin_binary_Z() {
  RingSpec s;
  s.name = "binaryZ";
  s.descriptor = {RingKind::kBinaryZ, 0, 0};
  s.add = [](std::span<const BigInt> v) { return BigInt(v[0] + v[1]); };
  s.mul = [](std::span<const BigInt> v) { return BigInt(v[0] * v[1]); };
  s.power = [](const BigInt& x, unsigned l) { return ipow(x, l + 1); };
  return Ring(std::move(s));
}

Ring example_power_product_structure() {
  RingSpec s;
  s.name = "power-product";
  s.descriptor = {RingKind::kCustom, 0, 0};
  s.m = 3;
  s.n = 2;
  s.add = [](std::span<const BigInt> v) { return BigInt(v[0] * v[1] * v[2]); };
  s.mul = [](std::span<const BigInt> v) {
    if (v[1] < 0 || v[1] > 4096) throw Error(ErrorCode::kInvalidArgument, "exponent out of range");
    return ipow(v[0], static_cast<unsigned>(v[1]));
  };
  s.contains = [](const BigInt& x) { return x >= 1; };
  // Keep sampled values small so nested exponentials stay cheap.
  s.element_at = [](const BigInt& i) { return BigInt(mod_floor(i, 3) + 1); };
  return Ring(std::move(s));
}

}  // namespace polyadica
