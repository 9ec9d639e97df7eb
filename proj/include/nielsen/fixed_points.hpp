#pragma once

#include <optional>
#include <vector>

#include "nielsen/exact_linalg.hpp"
#include "nielsen/map_model.hpp"
#include "nielsen/reidemeister.hpp"

namespace nielsen {

enum class PointStatus {
  Isolated,    // (E - M) nonsingular: exactly one fixed point
  Empty,       // (E - M) singular, no solution: empty class, index 0
  Degenerate,  // (E - M) singular with solutions: a continuum, index undefined
};

struct FixedPointClass {
  ClassLabel label;
  PointStatus status = PointStatus::Isolated;
  RatVector point;           // in [0,1)^q, set when Isolated
  std::optional<int> index;  // +1/-1 when Isolated, 0 when Empty
};

struct NielsenReport {
  std::vector<FixedPointClass> classes;
  Count reidemeister;
  Integer nielsen;
  bool uniform = false;
};

/// Fixed point class of alpha * f_i for a single affine factor.
FixedPointClass fixed_point_class_of(const AffineLiftFactor& factor, const ClassLabel& label);

/// One class per engine representative. Throws InfiniteClasses when R is
/// infinite.
std::vector<FixedPointClass> fixed_point_classes(const LiftSystem& sys,
                                                 const ReidemeisterReport& report);
std::vector<FixedPointClass> fixed_point_classes(const LiftSystem& sys);

/// Throws InfiniteClasses, SingularLinearPart or IndexNotUniform.
NielsenReport nielsen_number(const LiftSystem& sys);

/// n |det(E - A/n)| for a linear n-valued map.
Integer nielsen_linear_formula(std::size_t n, const IntegerMatrix& a);

/// True iff fixed point classes sharing a sigma-class share an index.
/// Throws UndefinedIndex.
bool index_uniformity(const NielsenReport& report, const SigmaClassReport& sigma);

/// sign det(E - M), 0 when singular.
int affine_index(const AffineLiftFactor& factor);

}  // namespace nielsen
