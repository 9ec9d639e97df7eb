#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "nielsen/exact_linalg.hpp"
#include "nielsen/map_model.hpp"

namespace nielsen {

/// One orbit of {1..n} under the permutations sigma_gamma.
struct SigmaClass {
  std::vector<std::size_t> members;  // sorted
  std::size_t representative = 0;    // smallest member
  /// For each member j, a vector t_j with sigma_{t_j}(representative) = j.
  std::map<std::size_t, IntVector> transversal;
  /// S_r = { gamma : sigma_gamma(r) = r }
  Sublattice stabilizer;
};

struct SigmaClassReport {
  std::vector<SigmaClass> classes;

  /// Position in `classes` of the block containing factor i.
  std::size_t class_of(std::size_t i) const;
};

SigmaClassReport sigma_classes(const PsiData& data);

/// Stabilizer of factor i computed from Schreier generators over its orbit.
/// Also fills the transversal from i.
SigmaClass sigma_class_from(const PsiData& data, std::size_t i);

/// phi_i on each basis row of s. Throws NotInStabilizer when a row moves i.
std::vector<IntVector> phi_restricted(const PsiData& data, std::size_t i, const Sublattice& s);

/// L_i = (id - phi_i)(S_i); alpha ~_i beta iff alpha - beta in L_i.
Sublattice image_lattice(const PsiData& data, std::size_t i, const Sublattice& stabilizer);

/// R(phi_i) = [Z^q : L_i]; valid for any factor, not only representatives.
Count class_count(const PsiData& data, std::size_t i);

struct ClassBlock {
  SigmaClass sigma;
  std::vector<IntVector> phi_images;  // phi_r on the stabilizer basis rows
  Sublattice image_lattice;
  Count count;
  std::vector<IntVector> representatives;  // empty when count is infinite
};

struct ReidemeisterReport {
  std::vector<ClassBlock> blocks;
  Count total;

  const ClassBlock& block_of(std::size_t factor) const;
};

/// Lift-factor class label: the pair (alpha, i) standing for alpha * f_i.
struct ClassLabel {
  IntVector alpha;
  std::size_t factor = 0;

  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend bool operator<(const ClassLabel& a, const ClassLabel& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.alpha < b.alpha;
  }
};

ReidemeisterReport reidemeister_from_psi(const PsiData& data);
/// validate + reidemeister_from_psi.
ReidemeisterReport reidemeister_number(const LiftSystem& sys);

/// Normalized label of the class of alpha * f_i: transported to the class
/// representative and reduced modulo its image lattice.
ClassLabel classify(const PsiData& data, const ReidemeisterReport& report,
                    const IntVector& alpha, std::size_t i);

}  // namespace nielsen
