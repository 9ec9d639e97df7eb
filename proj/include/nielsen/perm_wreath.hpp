#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nielsen/exact_linalg.hpp"

namespace nielsen {

/// Permutation of {1..n}. Indices are 1-based throughout the public API.
class Permutation {
 public:
  Permutation() = default;
  /// images[i-1] = sigma(i); must be a bijection of {1..n}.
  explicit Permutation(std::vector<std::size_t> images);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_.at(i - 1); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// One-line notation "[s(1),...,s(n)]".
  std::string to_string() const;

  /// (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

/// Element (a_1,...,a_n; sigma) of (Z^q)^n x| S_n, written additively.
class SemidirectElement {
 public:
  SemidirectElement() = default;
  SemidirectElement(std::vector<IntVector> translations, Permutation perm);
  static SemidirectElement identity(std::size_t n, std::size_t q);

  std::size_t n() const noexcept { return perm_.size(); }
  std::size_t q() const noexcept { return q_; }
  const IntVector& translation(std::size_t i) const { return translations_.at(i - 1); }
  const std::vector<IntVector>& translations() const noexcept { return translations_; }
  const Permutation& perm() const noexcept { return perm_; }

  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;

 private:
  std::vector<IntVector> translations_;
  Permutation perm_;
  std::size_t q_ = 0;
};

/// (a; s)(b; r) = (a_i + b_{s^-1(i)}; s r)
SemidirectElement compose(const SemidirectElement& g, const SemidirectElement& h);
/// (a; s)^-1 = (-a_{s(i)}; s^-1)
SemidirectElement inverse(const SemidirectElement& g);
/// g^k for any integer k.
SemidirectElement power(const SemidirectElement& g, const Integer& k);

/// Subgroup of S_n generated by gens, sorted.
std::vector<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens);
/// Orbits of {1..n} under the group; each block sorted, blocks ordered by
/// their smallest element.
std::vector<std::vector<std::size_t>> orbits(std::size_t n,
                                             const std::vector<Permutation>& group);

}  // namespace nielsen
