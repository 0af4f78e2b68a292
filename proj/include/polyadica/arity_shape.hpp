#pragma once

// Integer arity-shape calculus for two-set polyadic structures: vector
// spaces, algebras, multiplace mappings, functionals, dual spaces, direct
// sums, tensor products and inner pairings.
//
// Every operation is total: it returns either the solved shape or a
// ShapeError naming the relation that failed.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "polyadica/error.hpp"

namespace polyadica::shape {

inline constexpr int kMinArity = 2;
inline constexpr int kMaxArity = 64;
inline constexpr int kMaxPlaces = 4096;

enum class ShapeFailure { kNotQuantized, kOutOfBounds, kInvalidArgument };

std::string_view to_string(ShapeFailure failure);

struct ShapeError {
  ShapeFailure kind;
  std::string relation;  // the relation that could not be satisfied
  std::string detail;
};

template <class T>
class ShapeResult {
 public:
  ShapeResult(T value) : state_(std::move(value)) {}
  ShapeResult(ShapeError error) : state_(std::move(error)) {}

  bool ok() const noexcept { return std::holds_alternative<T>(state_); }
  explicit operator bool() const noexcept { return ok(); }

  const T& value() const {
    if (!ok()) {
      const auto& e = std::get<ShapeError>(state_);
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(to_string(e.kind)) + ": " + e.relation + " (" + e.detail + ")");
    }
    return std::get<T>(state_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  const ShapeError& error() const { return std::get<ShapeError>(state_); }

 private:
  std::variant<T, ShapeError> state_;
};

// Counts of inner multiplications and intact elements of a composed
// multiaction or mapping. ell_mu + ell_id equals the number of places.
struct LShape {
  std::int64_t ell_mu = 0;
  std::int64_t ell_id = 0;

  bool operator==(const LShape&) const = default;
};

struct VectorSpaceSignature {
  int m_K = 2;
  int n_K = 2;
  int m_V = 2;
  int k_rho = 1;
  int n_rho = 2;
};

// k_rho * n_rho = n_K * ell_mu + ell_id, k_rho = ell_mu + ell_id.
ShapeResult<LShape> composition_shape(int n_K, int k_rho, int n_rho);

// Same quantization against the field addition arity m_K.
ShapeResult<LShape> distributivity_shape(int m_K, int k_rho, int n_rho);

// Same quantization with the algebra multiplication arity n_A as output.
ShapeResult<LShape> algebra_compat_shape(int n_K, int k_rho, int n_A);

struct EqualShapeReport {
  bool satisfied = false;
  bool field_arities_equal = false;  // n_K == m_K
  bool semigroup_matches_algebra = false;  // n_rho == n_A
  std::vector<std::string> violations;
  std::vector<std::string> unconstrained{"m_A", "k_rho"};
};

// Conditions under which the composition, distributivity and algebra
// compatibility shapes can coincide.
EqualShapeReport equal_lshape_arity_conditions(const VectorSpaceSignature& sig, int n_A, int m_A);

struct QuantizedRow {
  std::int64_t ell_mu = 0;
  std::int64_t ell_id = 0;
  int n_K = 2;
  int n_rho = 2;

  bool operator==(const QuantizedRow&) const = default;
};

// All admissible (ell_mu, ell_id, n_K, n_rho) with 2 <= n_rho <= n_K <= max_arity,
// sorted by (ell_mu, n_K). Solved by the n_rho = (n_K-1) ell_mu / k_rho + 1 route.
ShapeResult<std::vector<QuantizedRow>> enumerate_quantized(int k_rho, int max_arity);

// Places of the regular multiaction built from ell_kappa field multiplications.
ShapeResult<std::int64_t> regular_multiaction_places(int n_K, std::int64_t ell_kappa);

// Number of arguments of a long operation made of `ell` arity-ary steps.
// Shared by long sums, long products, polyadic powers and spans.
ShapeResult<std::int64_t> long_product_length(int arity, std::int64_t ell);

struct MappingSignature {
  int k_F = 1;
  int m_V = 2;
  int m_V_prime = 2;
  int k_rho = 1;
  int k_rho_prime = 1;
  std::int64_t ell_mu_k = 0;
  std::int64_t ell_id_k = 0;
  std::int64_t ell_mu_f = 0;
  std::int64_t ell_id_f = 0;
};

// Solves k_F m_V' = m_V ell_mu^k + ell_id^k, k_F = ell_mu^k + ell_id^k,
// k_F = ell_mu^f + ell_id^f, k_rho' = k_rho ell_mu^f.
ShapeResult<MappingSignature> mapping_shape(int m_V, int m_V_prime, int k_F, int k_rho,
                                            int k_rho_prime);

// ell_mu_h is also written ell_mu^L for functionals; both names denote the
// multiaction-side shape component.
struct FunctionalShape {
  std::int64_t ell_nu_k = 0;
  std::int64_t ell_id_nu = 0;
  std::int64_t ell_mu_h = 0;
  std::int64_t ell_id_h = 0;

  bool operator==(const FunctionalShape&) const = default;
};

// Solves k_L m_K = m_V ell_nu^k + ell_id^nu, k_L = ell_nu^k + ell_id^nu,
// k_L = ell_mu^h + ell_id^h, n_K - 1 = k_rho ell_mu^h.
ShapeResult<FunctionalShape> functional_shape(int m_K, int m_V, int n_K, int k_L, int k_rho);

struct DualSpaceShape {
  int k_L = 1;
  std::int64_t ell_mu_L = 0;
  std::int64_t ell_id_L = 0;
  bool m_L_equals_m_K = true;  // dual vector addition arity is forced to m_K
};

ShapeResult<DualSpaceShape> dual_space_shape(int n_K, int n_L);

struct SpaceComponent {
  int m_V = 2;
  int k_rho = 1;
};

enum class AdditionMode { kUniform, kMixed };

std::string_view to_string(AdditionMode mode);

struct DirectSumReport {
  std::int64_t k_rho_total = 0;
  AdditionMode mode = AdditionMode::kUniform;
};

// Mixed arities are accepted when every component arity is <= m_V; the
// shorter components consume the first m_V^(i) summands.
ShapeResult<DirectSumReport> direct_sum_compatible(const std::vector<SpaceComponent>& components,
                                                   int m_V);

struct TensorProductReport {
  int k_rho_common = 1;
  AdditionMode mode = AdditionMode::kUniform;
};

ShapeResult<TensorProductReport> tensor_product_compatible(
    const std::vector<SpaceComponent>& components, int m_V);

struct InnerPairingReport {
  bool valid = false;
  bool places_one_below_multiplication = false;  // n_K - k_rho = 1
  bool additions_coincide = false;               // m_V = m_K
  bool multiplication_matches_pairing = false;   // n_K = N
  bool norm_admissible = false;                  // m_K = m_V = N
  std::vector<std::string> violations;
};

InnerPairingReport inner_pairing_constraints(int m_K, int n_K, int m_V, int k_rho, int N);

}  // namespace polyadica::shape
