#include "polyadica/arity_shape.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace polyadica::shape {

std::string_view to_string(ShapeFailure failure) {
  switch (failure) {
    case ShapeFailure::kNotQuantized: return "NotQuantized";
    case ShapeFailure::kOutOfBounds: return "OutOfBounds";
    case ShapeFailure::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string_view to_string(AdditionMode mode) {
  return mode == AdditionMode::kUniform ? "uniform" : "mixed";
}

namespace {

ShapeError invalid(std::string relation, std::string detail) {
  return {ShapeFailure::kInvalidArgument, std::move(relation), std::move(detail)};
}

ShapeError not_quantized(std::string relation, std::string detail) {
  return {ShapeFailure::kNotQuantized, std::move(relation), std::move(detail)};
}

ShapeError out_of_bounds(std::string relation, std::string detail) {
  return {ShapeFailure::kOutOfBounds, std::move(relation), std::move(detail)};
}

std::optional<ShapeError> check_arity(const char* name, int value) {
  if (value < kMinArity || value > kMaxArity) {
    std::ostringstream os;
    os << name << "=" << value << " outside " << kMinArity << ".." << kMaxArity;
    return invalid(std::string(name) + " in [2,64]", os.str());
  }
  return std::nullopt;
}

std::optional<ShapeError> check_places(const char* name, std::int64_t value) {
  if (value < 1 || value > kMaxPlaces) {
    std::ostringstream os;
    os << name << "=" << value << " outside 1.." << kMaxPlaces;
    return invalid(std::string(name) + " >= 1", os.str());
  }
  return std::nullopt;
}

// Shared solver for the three multiaction quantizations:
//   k * out = in * ell_mu + ell_id,  k = ell_mu + ell_id
// which gives ell_mu = k (out-1)/(in-1), ell_id = k (in-out)/(in-1).
ShapeResult<LShape> quantize(const char* in_name, int in, int k, const char* out_name, int out) {
  if (auto e = check_arity(in_name, in)) return *e;
  if (auto e = check_arity(out_name, out)) return *e;
  if (auto e = check_places("k_rho", k)) return *e;

  const std::int64_t denom = in - 1;
  const std::int64_t mu_num = static_cast<std::int64_t>(k) * (out - 1);
  const std::int64_t id_num = static_cast<std::int64_t>(k) * (in - out);
  const std::string in_s(in_name), out_s(out_name);
  if (mu_num % denom != 0 || id_num % denom != 0) {
    std::ostringstream os;
    os << "k_rho(" << out_s << "-1)=" << mu_num << " and k_rho(" << in_s << "-" << out_s
       << ")=" << id_num << " must both be divisible by " << in_s << "-1=" << denom;
    return not_quantized("ell_mu = k_rho(" + out_s + "-1)/(" + in_s + "-1)", os.str());
  }
  const LShape s{mu_num / denom, id_num / denom};
  if (out > in) {
    std::ostringstream os;
    os << out_s << "=" << out << " exceeds " << in_s << "=" << in;
    return out_of_bounds("2 <= " + out_s + " <= " + in_s, os.str());
  }
  if (s.ell_mu < 1 || s.ell_mu > k || s.ell_id < 0 || s.ell_id > k - 1 ||
      k > (in - 1) * s.ell_mu) {
    std::ostringstream os;
    os << "ell_mu=" << s.ell_mu << ", ell_id=" << s.ell_id << ", k_rho=" << k;
    return out_of_bounds("1 <= ell_mu <= k_rho <= (" + in_s + "-1) ell_mu", os.str());
  }
  return s;
}

}  // namespace

ShapeResult<LShape> composition_shape(int n_K, int k_rho, int n_rho) {
  return quantize("n_K", n_K, k_rho, "n_rho", n_rho);
}

ShapeResult<LShape> distributivity_shape(int m_K, int k_rho, int n_rho) {
  return quantize("m_K", m_K, k_rho, "n_rho", n_rho);
}

ShapeResult<LShape> algebra_compat_shape(int n_K, int k_rho, int n_A) {
  return quantize("n_K", n_K, k_rho, "n_A", n_A);
}

EqualShapeReport equal_lshape_arity_conditions(const VectorSpaceSignature& sig, int n_A, int m_A) {
  (void)m_A;
  EqualShapeReport r;
  r.field_arities_equal = sig.n_K == sig.m_K;
  r.semigroup_matches_algebra = sig.n_rho == n_A;
  if (!r.field_arities_equal) {
    r.violations.push_back("n_K != m_K (" + std::to_string(sig.n_K) + " vs " +
                           std::to_string(sig.m_K) + ")");
  }
  if (!r.semigroup_matches_algebra) {
    r.violations.push_back("n_rho != n_A (" + std::to_string(sig.n_rho) + " vs " +
                           std::to_string(n_A) + ")");
  }
  r.satisfied = r.violations.empty();
  return r;
}

ShapeResult<std::vector<QuantizedRow>> enumerate_quantized(int k_rho, int max_arity) {
  if (auto e = check_places("k_rho", k_rho)) return *e;
  if (auto e = check_arity("max_arity", max_arity)) return *e;

  std::vector<QuantizedRow> rows;
  for (std::int64_t ell_mu = 1; ell_mu <= k_rho; ++ell_mu) {
    const std::int64_t ell_id = k_rho - ell_mu;
    for (int n_K = kMinArity; n_K <= max_arity; ++n_K) {
      const std::int64_t num = static_cast<std::int64_t>(n_K - 1) * ell_mu;
      if (num % k_rho != 0) continue;
      const std::int64_t n_rho = num / k_rho + 1;
      if (n_rho < kMinArity || n_rho > n_K) continue;
      rows.push_back({ell_mu, ell_id, n_K, static_cast<int>(n_rho)});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const QuantizedRow& a, const QuantizedRow& b) {
    return std::tie(a.ell_mu, a.n_K) < std::tie(b.ell_mu, b.n_K);
  });
  return rows;
}

ShapeResult<std::int64_t> regular_multiaction_places(int n_K, std::int64_t ell_kappa) {
  if (auto e = check_arity("n_K", n_K)) return *e;
  if (ell_kappa < 1) return invalid("ell_kappa >= 1", "ell_kappa=" + std::to_string(ell_kappa));
  return ell_kappa * (n_K - 1);
}

ShapeResult<std::int64_t> long_product_length(int arity, std::int64_t ell) {
  if (auto e = check_arity("arity", arity)) return *e;
  if (ell < 0) return invalid("ell >= 0", "ell=" + std::to_string(ell));
  return ell * (arity - 1) + 1;
}

ShapeResult<MappingSignature> mapping_shape(int m_V, int m_V_prime, int k_F, int k_rho,
                                            int k_rho_prime) {
  if (auto e = check_arity("m_V", m_V)) return *e;
  if (auto e = check_arity("m_V_prime", m_V_prime)) return *e;
  if (auto e = check_places("k_F", k_F)) return *e;
  if (auto e = check_places("k_rho", k_rho)) return *e;
  if (auto e = check_places("k_rho_prime", k_rho_prime)) return *e;

  // From the first two equations: ell_mu^k (m_V - 1) = k_F (m_V' - 1).
  const std::int64_t mu_num = static_cast<std::int64_t>(k_F) * (m_V_prime - 1);
  if (mu_num % (m_V - 1) != 0) {
    return not_quantized("k_F m_V' = m_V ell_mu^k + ell_id^k",
                         "k_F(m_V'-1)=" + std::to_string(mu_num) + " not divisible by m_V-1=" +
                             std::to_string(m_V - 1));
  }
  if (k_rho_prime % k_rho != 0) {
    return not_quantized("k_rho' = k_rho ell_mu^f", "k_rho'=" + std::to_string(k_rho_prime) +
                                                        " not divisible by k_rho=" +
                                                        std::to_string(k_rho));
  }
  MappingSignature s{k_F, m_V, m_V_prime, k_rho, k_rho_prime, 0, 0, 0, 0};
  s.ell_mu_k = mu_num / (m_V - 1);
  s.ell_id_k = k_F - s.ell_mu_k;
  s.ell_mu_f = k_rho_prime / k_rho;
  s.ell_id_f = k_F - s.ell_mu_f;
  if (m_V_prime > m_V) {
    return out_of_bounds("2 <= m_V' <= m_V", "m_V'=" + std::to_string(m_V_prime) +
                                                 " exceeds m_V=" + std::to_string(m_V));
  }
  if (s.ell_mu_k < 1 || s.ell_id_k < 0) {
    return out_of_bounds("1 <= ell_mu^k <= k_F", "ell_mu^k=" + std::to_string(s.ell_mu_k));
  }
  if (s.ell_id_f < 0) {
    return out_of_bounds("ell_mu^f <= k_F", "ell_mu^f=" + std::to_string(s.ell_mu_f) +
                                                " exceeds k_F=" + std::to_string(k_F));
  }
  return s;
}

ShapeResult<FunctionalShape> functional_shape(int m_K, int m_V, int n_K, int k_L, int k_rho) {
  if (auto e = check_arity("m_K", m_K)) return *e;
  if (auto e = check_arity("m_V", m_V)) return *e;
  if (auto e = check_arity("n_K", n_K)) return *e;
  if (auto e = check_places("k_L", k_L)) return *e;
  if (auto e = check_places("k_rho", k_rho)) return *e;

  const std::int64_t nu_num = static_cast<std::int64_t>(k_L) * (m_K - 1);
  if (nu_num % (m_V - 1) != 0) {
    return not_quantized("k_L m_K = m_V ell_nu^k + ell_id^nu",
                         "k_L(m_K-1)=" + std::to_string(nu_num) + " not divisible by m_V-1=" +
                             std::to_string(m_V - 1));
  }
  if ((n_K - 1) % k_rho != 0) {
    return not_quantized("n_K - 1 = k_rho ell_mu^h", "n_K-1=" + std::to_string(n_K - 1) +
                                                         " not divisible by k_rho=" +
                                                         std::to_string(k_rho));
  }
  FunctionalShape s;
  s.ell_nu_k = nu_num / (m_V - 1);
  s.ell_id_nu = k_L - s.ell_nu_k;
  s.ell_mu_h = (n_K - 1) / k_rho;
  s.ell_id_h = k_L - s.ell_mu_h;
  if (m_K > m_V) {
    return out_of_bounds("2 <= m_K <= m_V", "m_K=" + std::to_string(m_K) + " exceeds m_V=" +
                                                std::to_string(m_V));
  }
  if (s.ell_nu_k < 1 || s.ell_id_nu < 0) {
    return out_of_bounds("1 <= ell_nu^k <= k_L", "ell_nu^k=" + std::to_string(s.ell_nu_k));
  }
  if (s.ell_id_h < 0) {
    return out_of_bounds("ell_mu^h <= k_L", "ell_mu^h=" + std::to_string(s.ell_mu_h) +
                                                " exceeds k_L=" + std::to_string(k_L));
  }
  return s;
}

ShapeResult<DualSpaceShape> dual_space_shape(int n_K, int n_L) {
  if (auto e = check_arity("n_K", n_K)) return *e;
  if (auto e = check_arity("n_L", n_L)) return *e;
  if (n_L > n_K) {
    return out_of_bounds("n_L <= n_K", "n_L=" + std::to_string(n_L) + " exceeds n_K=" +
                                           std::to_string(n_K));
  }
  return DualSpaceShape{n_K - 1, n_L - 1, n_K - n_L, true};
}

namespace {

std::optional<ShapeError> check_components(const std::vector<SpaceComponent>& components,
                                           int m_V, AdditionMode& mode) {
  if (components.empty()) return invalid("at least one component", "empty component list");
  if (auto e = check_arity("m_V", m_V)) return *e;
  mode = AdditionMode::kUniform;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& c = components[i];
    if (auto e = check_arity("m_V_i", c.m_V)) return *e;
    if (auto e = check_places("k_rho_i", c.k_rho)) return *e;
    if (c.m_V > m_V) {
      return out_of_bounds("m_V^(i) <= m_V", "component " + std::to_string(i) + " has m_V=" +
                                                 std::to_string(c.m_V) + " > " +
                                                 std::to_string(m_V));
    }
    if (c.m_V != m_V) mode = AdditionMode::kMixed;
  }
  return std::nullopt;
}

}  // namespace

ShapeResult<DirectSumReport> direct_sum_compatible(const std::vector<SpaceComponent>& components,
                                                   int m_V) {
  DirectSumReport r;
  if (auto e = check_components(components, m_V, r.mode)) return *e;
  for (const auto& c : components) r.k_rho_total += c.k_rho;
  return r;
}

ShapeResult<TensorProductReport> tensor_product_compatible(
    const std::vector<SpaceComponent>& components, int m_V) {
  TensorProductReport r;
  if (auto e = check_components(components, m_V, r.mode)) return *e;
  r.k_rho_common = components.front().k_rho;
  for (std::size_t i = 1; i < components.size(); ++i) {
    if (components[i].k_rho != r.k_rho_common) {
      return out_of_bounds("k_rho^(1) = ... = k_rho^(D)",
                           "component " + std::to_string(i) + " has k_rho=" +
                               std::to_string(components[i].k_rho) + " != " +
                               std::to_string(r.k_rho_common));
    }
  }
  return r;
}

InnerPairingReport inner_pairing_constraints(int m_K, int n_K, int m_V, int k_rho, int N) {
  InnerPairingReport r;
  r.places_one_below_multiplication = n_K - k_rho == 1;
  r.additions_coincide = m_V == m_K;
  r.multiplication_matches_pairing = n_K == N;
  r.norm_admissible = m_K == m_V && m_V == N;
  if (!r.places_one_below_multiplication) {
    r.violations.push_back("n_K - k_rho != 1 (" + std::to_string(n_K) + " - " +
                           std::to_string(k_rho) + ")");
  }
  if (!r.additions_coincide) {
    r.violations.push_back("m_V != m_K (" + std::to_string(m_V) + " vs " + std::to_string(m_K) +
                           ")");
  }
  if (!r.multiplication_matches_pairing) {
    r.violations.push_back("n_K != N (" + std::to_string(n_K) + " vs " + std::to_string(N) + ")");
  }
  r.valid = r.violations.empty();
  return r;
}

}  // namespace polyadica::shape
