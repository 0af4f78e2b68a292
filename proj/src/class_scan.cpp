#include <algorithm>
#include <tuple>

#include "polyadica/congruence.hpp"
#include "polyadica/error.hpp"

namespace polyadica::congruence {

namespace {

void check_bmax(std::int64_t b_max) {
  if (b_max < 2 || b_max > 100000) {
    throw Error(ErrorCode::kInvalidArgument, "b_max must lie in 2..100000");
  }
}

bool by_a_then_b(const TableRow& x, const TableRow& y) {
  return std::tie(x.cls.a, x.cls.b) < std::tie(y.cls.a, y.cls.b);
}

std::vector<TableRow> rows_for_modulus(std::int64_t b) {
  std::vector<TableRow> rows;
  for (std::int64_t a = 1; a < b; ++a) rows.push_back({{a, b}, try_arity_shape({a, b})});
  return rows;
}

}  // namespace

std::vector<TableRow> class_table(std::int64_t b_max) {
  check_bmax(b_max);
  const std::int64_t count = b_max - 1;
  std::vector<std::vector<TableRow>> per_b(static_cast<std::size_t>(count));
  // Larger moduli cost more; dynamic scheduling evens that out.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) per_b[static_cast<std::size_t>(i)] = rows_for_modulus(i + 2);

  std::vector<TableRow> out;
  for (auto& rows : per_b) out.insert(out.end(), rows.begin(), rows.end());
  std::sort(out.begin(), out.end(), by_a_then_b);
  return out;
}

std::vector<TableRow> class_table_reference(std::int64_t b_max) {
  check_bmax(b_max);
  std::vector<TableRow> out;
  for (std::int64_t a = 1; a < b_max; ++a) {
    for (std::int64_t b = a + 1; b <= b_max; ++b) out.push_back({{a, b}, try_arity_shape({a, b})});
  }
  return out;
}

std::vector<CongruenceClass> same_shape_classes(std::int64_t b_max, int m, int n) {
  check_bmax(b_max);
  std::vector<CongruenceClass> out;
  // m = b/gcd(a,b) + 1 forces (m-1) | b, so only those moduli are scanned.
  if (m < 2 || n < 2) return out;
  const std::int64_t count = b_max - 1;
  std::vector<std::vector<CongruenceClass>> per_b(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    const std::int64_t b = i + 2;
    if (b % (m - 1) != 0) continue;
    for (std::int64_t a = 1; a < b; ++a) {
      auto s = try_arity_shape({a, b});
      if (s && s->m == m && s->n == n) per_b[static_cast<std::size_t>(i)].push_back({a, b});
    }
  }
  for (auto& v : per_b) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<CongruenceClass> same_shape_classes_reference(std::int64_t b_max, int m, int n) {
  check_bmax(b_max);
  std::vector<CongruenceClass> out;
  for (std::int64_t b = 2; b <= b_max; ++b) {
    for (std::int64_t a = 1; a < b; ++a) {
      auto s = try_arity_shape({a, b});
      if (s && s->m == m && s->n == n) out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace polyadica::congruence
