#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nielsen/exact_linalg.hpp"
#include "nielsen/map_model.hpp"
#include "nielsen/reidemeister.hpp"

namespace nielsen {

struct OracleConfig {
  std::int64_t box_bound = 10;   // alpha ranges over [-B, B]^q
  std::int64_t word_bound = 10;  // gamma ranges over [-G, G]^q
  double budget = 2.0e9;         // cap on (2B+1)^q * n * (2G+1)^q
};

/// Union-find partition of the lift-factor labels (alpha, i) with alpha in
/// the box.
class OraclePartition {
 public:
  OraclePartition(std::size_t n, std::size_t q, std::int64_t box_bound,
                  std::vector<std::uint32_t> class_ids, std::size_t class_count);

  std::size_t n() const noexcept { return n_; }
  std::size_t q() const noexcept { return q_; }
  std::int64_t box_bound() const noexcept { return box_bound_; }
  std::size_t size() const noexcept { return class_ids_.size(); }
  std::size_t class_count() const noexcept { return class_count_; }

  /// Element number <-> label.
  std::size_t index_of(const ClassLabel& label) const;
  ClassLabel label_of(std::size_t element) const;
  bool contains(const IntVector& alpha) const;

  /// Dense class id, numbered by first appearance in element order.
  std::uint32_t class_id(std::size_t element) const { return class_ids_[element]; }
  bool merged(const ClassLabel& a, const ClassLabel& b) const {
    return class_id(index_of(a)) == class_id(index_of(b));
  }

 private:
  std::size_t n_, q_;
  std::int64_t box_bound_;
  std::size_t side_;
  std::vector<std::uint32_t> class_ids_;
  std::size_t class_count_;
};

/// Merges (beta, j) with (gamma + beta + phi_j(-gamma), sigma_gamma(j)) for
/// every gamma in the word box whose target stays in the box.
/// Throws BudgetExceeded.
OraclePartition brute_classes(const PsiData& data, const OracleConfig& cfg);

struct OracleVerdict {
  bool sound = false;          // every oracle merge is engine-equivalent
  bool complete = false;       // every engine-equivalent pair in the box is merged
  bool count_matches = false;  // oracle class count equals engine count over the box
  std::size_t oracle_classes = 0;
  std::size_t engine_classes_in_box = 0;
  Count engine_total;
  std::int64_t coverage_threshold = 0;  // B beyond which the box meets every class
  bool ok() const { return sound && complete && count_matches; }
};

/// Compares an oracle partition against engine labels.
OracleVerdict compare_with_engine(const PsiData& data, const ReidemeisterReport& report,
                                  const OraclePartition& partition);

/// Runs engine and oracle on sys. Throws InfiniteClasses when R is infinite.
OracleVerdict oracle_check(const LiftSystem& sys, const OracleConfig& cfg);

/// Every fixed point of alpha * f_i, alpha in [-B,B]^q, reduced to [0,1)^q,
/// deduplicated and sorted. Throws SingularLinearPart.
std::vector<RatVector> brute_fixed_points(const LiftSystem& sys, std::int64_t box_bound);

}  // namespace nielsen
