#pragma once

#include <cstddef>
#include <vector>

#include "nielsen/exact_linalg.hpp"
#include "nielsen/perm_wreath.hpp"

namespace nielsen {

/// Lift-factor t -> linear * t + offset on R^q.
struct AffineLiftFactor {
  RationalMatrix linear;
  RatVector offset;

  RatVector operator()(const RatVector& t) const { return linear * t + offset; }
  friend bool operator==(const AffineLiftFactor&, const AffineLiftFactor&) = default;
};

/// The basic lifting of an n-valued map of T^q, one affine factor per value.
class LiftSystem {
 public:
  LiftSystem(std::size_t q, std::vector<AffineLiftFactor> factors);

  std::size_t n() const noexcept { return factors_.size(); }
  std::size_t q() const noexcept { return q_; }
  /// 1-based.
  const AffineLiftFactor& factor(std::size_t i) const { return factors_.at(i - 1); }
  const std::vector<AffineLiftFactor>& factors() const noexcept { return factors_; }

 private:
  std::size_t q_;
  std::vector<AffineLiftFactor> factors_;
};

/// psi_f recorded on the standard generators e_1..e_q of Z^q.
class PsiData {
 public:
  PsiData(std::size_t n, std::size_t q, std::vector<SemidirectElement> generator_images);

  std::size_t n() const noexcept { return n_; }
  std::size_t q() const noexcept { return q_; }
  /// psi(e_k), k 1-based.
  const SemidirectElement& generator_image(std::size_t k) const { return images_.at(k - 1); }
  const std::vector<SemidirectElement>& generator_images() const noexcept { return images_; }
  /// phi_i(e_k)
  const IntVector& phi(std::size_t i, std::size_t k) const { return generator_image(k).translation(i); }
  /// sigma_{e_k}
  const Permutation& sigma(std::size_t k) const { return generator_image(k).perm(); }

  friend bool operator==(const PsiData&, const PsiData&) = default;

 private:
  std::size_t n_;
  std::size_t q_;
  std::vector<SemidirectElement> images_;
};

/// Checks that the factors define an n-valued map into the configuration
/// space and derives psi on generators.
/// Throws Collision, NotEquivariant, Ambiguous or NotCommuting.
PsiData validate(const LiftSystem& sys);

/// True when (M_i - M_j) t + (c_i - c_j) lies in Z^q for some real t.
bool factors_collide(const AffineLiftFactor& a, const AffineLiftFactor& b);

/// psi(z) = psi(e_1)^{z_1} ... psi(e_q)^{z_q}
SemidirectElement psi_of(const PsiData& data, const IntVector& z);

/// Linear n-valued map: M_i = A/n, c_i = (i/n, ..., i/n), i = 1..n.
/// Throws RowsNotCongruent unless all rows of A agree mod n.
LiftSystem make_linear(std::size_t n, const IntegerMatrix& a);
/// Circle map z -> n-th roots of z^d: M_j = d/n, c_j = (j-1)/n.
LiftSystem make_circle(std::size_t n, const Integer& d);

struct SplitPart {
  IntegerMatrix a;
  RatVector b;
};
/// Split map {f_1,...,f_n} with f_i lifting to t -> A_i t + b_i. The result
/// is validated and must have trivial permutations.
LiftSystem make_split(const std::vector<SplitPart>& parts);

bool rows_congruent(std::size_t n, const IntegerMatrix& a);

}  // namespace nielsen
