#include "polyadica/congruence.hpp"

#include <numeric>

#include "polyadica/error.hpp"

namespace polyadica::congruence {

void validate(const CongruenceClass& cls) {
  if (cls.b < 2 || cls.a <= 0 || cls.a >= cls.b) {
    throw Error(ErrorCode::kInvalidArgument,
                "congruence class needs 0 < a < b, got a=" + std::to_string(cls.a) +
                    ", b=" + std::to_string(cls.b));
  }
}

std::string to_string(const CongruenceClass& cls) {
  return "[[" + std::to_string(cls.a) + "]]" + std::to_string(cls.b);
}

namespace {

std::int64_t mulmod(std::int64_t x, std::int64_t y, std::int64_t mod) {
  return static_cast<std::int64_t>(static_cast<__int128>(x) * y % mod);
}

}  // namespace

std::optional<ShapeInvariants> try_arity_shape(const CongruenceClass& cls) {
  validate(cls);
  const auto [a, b] = cls;
  ShapeInvariants s;
  s.m = static_cast<int>(b / std::gcd(a, b) + 1);
  // m a = a (mod b) must hold by construction; keep the check honest.
  if (mulmod(s.m, a, b) != a % b) throw Error(ErrorCode::kInvalidArgument, "additive arity check failed");
  s.I = BigInt(s.m - 1) * a / b;

  std::int64_t power = a % b;
  for (std::int64_t n = 2; n <= b; ++n) {
    power = mulmod(power, a, b);
    if (power == a % b) {
      s.n = static_cast<int>(n);
      s.J = (ipow(BigInt(a), static_cast<unsigned>(n)) - a) / b;
      return s;
    }
  }
  return std::nullopt;
}

ShapeInvariants arity_shape(const CongruenceClass& cls) {
  auto s = try_arity_shape(cls);
  if (!s) {
    throw Error(ErrorCode::kNoMultiplicativeArity,
                to_string(cls) + " has no n <= b with a^n = a (mod b)");
  }
  return *s;
}

BigInt value_of(const CongruenceClass& cls, const BigInt& k) { return cls.a + cls.b * k; }

BigInt index_of(const CongruenceClass& cls, const BigInt& value) {
  const BigInt diff = value - cls.a;
  if (diff % cls.b != 0) {
    throw Error(ErrorCode::kNotInCarrier, polyadica::to_string(value) + " is not in " + to_string(cls));
  }
  return diff / cls.b;
}

ClassElement add(const CongruenceClass& cls, const std::vector<BigInt>& ks) {
  const auto shape = arity_shape(cls);
  if (ks.size() != static_cast<std::size_t>(shape.m)) {
    throw Error(ErrorCode::kLengthMismatch, "addition in " + to_string(cls) + " takes " +
                                                std::to_string(shape.m) + " elements");
  }
  BigInt k0 = shape.I;
  for (const auto& k : ks) k0 += k;
  return {k0, value_of(cls, k0)};
}

ClassElement mul(const CongruenceClass& cls, const std::vector<BigInt>& ks) {
  const auto shape = arity_shape(cls);
  if (ks.size() != static_cast<std::size_t>(shape.n)) {
    throw Error(ErrorCode::kLengthMismatch, "multiplication in " + to_string(cls) + " takes " +
                                                std::to_string(shape.n) + " elements");
  }
  BigInt product = 1;
  for (const auto& k : ks) product *= value_of(cls, k);
  return {index_of(cls, product), product};
}

BigInt querelement(const CongruenceClass& cls, const BigInt& k) {
  const auto shape = arity_shape(cls);
  return (2 - shape.m) * k - shape.I;
}

bool neutral_sequence_check(const CongruenceClass& cls, const std::vector<BigInt>& ks) {
  const auto shape = arity_shape(cls);
  if (ks.size() != static_cast<std::size_t>(shape.m - 1)) {
    throw Error(ErrorCode::kLengthMismatch, "neutral sequence in " + to_string(cls) + " has " +
                                                std::to_string(shape.m - 1) + " elements");
  }
  BigInt sum = 0;
  for (const auto& k : ks) sum += k;
  return sum == -shape.I;
}

ZeroUnitReport zero_and_unit_analysis(const CongruenceClass& cls) {
  const auto shape = arity_shape(cls);
  auto in_class = [&](std::int64_t v) { return ((v - cls.a) % cls.b) == 0; };
  ZeroUnitReport r;
  r.has_additive_zero = in_class(0);
  const bool has_one = in_class(1);
  const bool has_minus_one = in_class(-1);
  if (has_one) {
    r.kind = ClassKind::kUnitClass;
    r.unit = BigInt(1);
  } else if (has_minus_one) {
    r.kind = ClassKind::kNegativeUnitClass;
    if (shape.n % 2 == 1) r.unit = BigInt(-1);
  }
  // x is querable iff x^(n-2) y = 1 has y in the class; only +-1 qualify,
  // except n = 2 where y = 1 serves every x.
  r.all_querable = shape.n == 2 && has_one;
  for (std::int64_t x : {1, -1}) {
    if (!in_class(x)) continue;
    const std::int64_t y = (shape.n % 2 == 0) ? 1 : x;  // x^(2-n)
    if (in_class(y)) r.querable.emplace_back(x);
  }
  switch (r.kind) {
    case ClassKind::kUnitClass:
      r.summary = "unit e=1; every element querable with querelement 1";
      break;
    case ClassKind::kNegativeUnitClass:
      r.summary = r.unit ? "unit e=-1 (n odd); only -1 querable"
                         : "no unit (n even); -1 is the only candidate";
      break;
    case ClassKind::kNonLimiting:
      r.summary = "no unit and no querable elements";
      break;
  }
  return r;
}

InvariantVerdict equal_arity_invariants(const CongruenceClass& c1, const CongruenceClass& c2) {
  const auto s1 = arity_shape(c1);
  const auto s2 = arity_shape(c2);
  InvariantVerdict v;
  v.same_shape = s1.m == s2.m && s1.n == s2.n;
  if (!v.same_shape) v.violations.push_back("arity shapes differ");

  const BigRational r1(BigInt(c1.b) * s1.I, BigInt(c1.a));
  const BigRational r2(BigInt(c2.b) * s2.I, BigInt(c2.a));
  if (r1 != r2) v.violations.push_back("bI/a differs");
  if (r1 != BigRational(s1.m - 1)) v.violations.push_back("bI/a != m-1 for first class");
  if (r2 != BigRational(s2.m - 1)) v.violations.push_back("bI/a != m-1 for second class");
  v.common_ratio = BigInt(boost::multiprecision::numerator(r1));

  v.power_identity_first = c1.a + c1.b * s1.J == ipow(BigInt(c1.a), static_cast<unsigned>(s1.n));
  v.power_identity_second = c2.a + c2.b * s2.J == ipow(BigInt(c2.a), static_cast<unsigned>(s2.n));
  if (!v.power_identity_first) v.violations.push_back("a + bJ != a^n for first class");
  if (!v.power_identity_second) v.violations.push_back("a + bJ != a^n for second class");

  if (c1.a == c2.a && s1.J != 0 && s2.J != 0) {
    v.ij_ratio_first = BigRational(s1.I, s1.J);
    v.ij_ratio_second = BigRational(s2.I, s2.J);
    if (*v.ij_ratio_first != *v.ij_ratio_second) v.violations.push_back("I/J differs");
  }
  v.pass = v.violations.empty();
  return v;
}

Ring make_congruence_ring(const CongruenceClass& cls) {
  const auto shape = arity_shape(cls);
  RingSpec s;
  s.name = "congruence" + to_string(cls);
  s.descriptor = {RingKind::kCongruence, cls.a, cls.b};
  s.m = shape.m;
  s.n = shape.n;
  s.add = [](std::span<const BigInt> v) {
    BigInt r = 0;
    for (const auto& x : v) r += x;
    return r;
  };
  s.mul = [](std::span<const BigInt> v) {
    BigInt r = 1;
    for (const auto& x : v) r *= x;
    return r;
  };
  s.contains = [cls](const BigInt& x) { return (x - cls.a) % cls.b == 0; };
  s.element_at = [cls](const BigInt& k) { return value_of(cls, k); };
  const unsigned step = static_cast<unsigned>(shape.n - 1);
  s.power = [step](const BigInt& x, unsigned l) { return ipow(x, l * step + 1); };
  return Ring(std::move(s));
}

PolyadicRational make_rational(std::int64_t b, const BigInt& k1, const BigInt& k2) {
  if (b < 2) throw Error(ErrorCode::kInvalidArgument, "base must be >= 2");
  PolyadicRational r{1 + b * k1, 1 + b * k2};
  if (r.den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  return r;
}

PolyadicRational canonical_rational(std::int64_t b, const BigRational& x) {
  if (b < 2) throw Error(ErrorCode::kInvalidArgument, "base must be >= 2");
  const BigInt p = boost::multiprecision::numerator(x);
  const BigInt q = boost::multiprecision::denominator(x);  // already positive, lowest terms
  const std::int64_t pr = mod_floor(p, b);
  const std::int64_t qr = mod_floor(q, b);
  for (std::int64_t c = 1; c < b + 1; ++c) {
    if ((c * pr) % b == 1 % b && (c * qr) % b == 1 % b) return {c * p, c * q};
  }
  throw Error(ErrorCode::kNotInCarrier,
              x.str() + " has no representative (1+" + std::to_string(b) + "k)/(1+" +
                  std::to_string(b) + "k')");
}

PolyadicRational rational_add(std::int64_t b, const std::vector<PolyadicRational>& xs) {
  if (xs.size() != static_cast<std::size_t>(b + 1)) {
    throw Error(ErrorCode::kLengthMismatch,
                "rational addition in base " + std::to_string(b) + " takes " +
                    std::to_string(b + 1) + " elements");
  }
  BigRational sum = 0;
  for (const auto& x : xs) sum += x.value();
  return canonical_rational(b, sum);
}

PolyadicRational rational_querelement(std::int64_t b, const PolyadicRational& x) {
  return canonical_rational(b, BigRational(-(b - 1)) * x.value());
}

}  // namespace polyadica::congruence
