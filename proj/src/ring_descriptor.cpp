#include "polyadica/congruence.hpp"
#include "polyadica/error.hpp"
#include "polyadica/ring.hpp"

namespace polyadica {

Ring make_ring(const RingDescriptor& d) {
  switch (d.kind) {
    case RingKind::kExotic32: return builtin_exotic_32();
    case RingKind::kFinite34: return builtin_finite_34();
    case RingKind::kBinaryZ: return builtin_binary_Z();
    case RingKind::kCongruence: return congruence::make_congruence_ring({d.a, d.b});
    case RingKind::kCustom: break;
  }
  throw Error(ErrorCode::kInvalidArgument, "custom rings cannot be rebuilt from a descriptor");
}

}  // namespace polyadica
