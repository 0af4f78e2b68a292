#include "polyadica/bigint.hpp"

#include <algorithm>
#include <cctype>

#include "polyadica/error.hpp"

namespace polyadica {

std::string to_string(const BigInt& x) { return x.str(); }

BigInt parse_bigint(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) {
    throw Error(ErrorCode::kParse, "not an integer: '" + std::string(text) + "'");
  }
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::kParse, "not an integer: '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

std::int64_t mod_floor(const BigInt& x, std::int64_t modulus) {
  BigInt r = x % modulus;
  if (r < 0) r += modulus;
  return static_cast<std::int64_t>(r);
}

std::size_t BigIntHash::operator()(const BigInt& x) const noexcept {
  return boost::multiprecision::hash_value(x);
}

bool lex_less(const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs) {
  return std::lexicographical_compare(lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
}

}  // namespace polyadica
