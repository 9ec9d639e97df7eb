#pragma once

#include "support/support.hpp"

namespace fixtures {

using namespace support;

/// Three factors on the 2-torus: two share diag(1/2,-1) and swap under the
/// first generator, the third is -I offset by (0,1/2).
inline LiftSystem torus3() {
  const RationalMatrix half_flip = rm({{q(1, 2), q(0)}, {q(0), q(-1)}});
  const RationalMatrix minus = rm({{q(-1), q(0)}, {q(0), q(-1)}});
  return LiftSystem(2, {{half_flip, rv({q(0), q(0)})},
                        {half_flip, rv({q(1, 2), q(0)})},
                        {minus, rv({q(0), q(1, 2)})}});
}

/// n = 1, M = 0, c = 0.
inline LiftSystem constant_map(std::size_t qd = 1) {
  return LiftSystem(qd, {{RationalMatrix(qd, qd), RatVector(qd, q(0))}});
}

}  // namespace fixtures
