#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace polyadica {

// Every ring element and every power sum is carried as an arbitrary-precision
// integer; 422481^4 alone overflows 64 bits.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& x);

// Accepts an optional sign followed by decimal digits. Throws Error(kParse).
BigInt parse_bigint(std::string_view text);

BigInt ipow(const BigInt& base, unsigned exponent);

// Floor-mod with a non-negative result for positive modulus.
std::int64_t mod_floor(const BigInt& x, std::int64_t modulus);

struct BigIntHash {
  std::size_t operator()(const BigInt& x) const noexcept;
};

// Lexicographic order on element lists; shorter prefix sorts first.
bool lex_less(const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs);

}  // namespace polyadica
