#include "nielsen/perm_wreath.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace nielsen {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (std::size_t v : images_) {
    if (v < 1 || v > images_.size() || seen[v])
      throw Error(ErrorCode::InvalidArgument, "image array is not a bijection of {1..n}");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), std::size_t{1});
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = i + 1;
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
  os << ']';
  return os.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "permutation degrees differ");
  Permutation out;
  out.images_.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.images_[i] = a.images_[b.images_[i] - 1];
  return out;
}

SemidirectElement::SemidirectElement(std::vector<IntVector> translations, Permutation perm)
    : translations_(std::move(translations)), perm_(std::move(perm)) {
  if (translations_.size() != perm_.size())
    throw Error(ErrorCode::DimensionMismatch, "translation count differs from permutation degree");
  q_ = translations_.empty() ? 0 : translations_.front().size();
  for (const IntVector& t : translations_)
    if (t.size() != q_) throw Error(ErrorCode::DimensionMismatch, "translation lengths differ");
}

SemidirectElement SemidirectElement::identity(std::size_t n, std::size_t q) {
  SemidirectElement e(std::vector<IntVector>(n, IntVector(q, Integer(0))), Permutation::identity(n));
  e.q_ = q;
  return e;
}

SemidirectElement compose(const SemidirectElement& g, const SemidirectElement& h) {
  if (g.n() != h.n() || g.q() != h.q())
    throw Error(ErrorCode::DimensionMismatch, "compose: elements from different groups");
  const Permutation sigma_inv = g.perm().inverse();
  std::vector<IntVector> t(g.n());
  for (std::size_t i = 1; i <= g.n(); ++i)
    t[i - 1] = g.translation(i) + h.translation(sigma_inv(i));
  SemidirectElement out(std::move(t), g.perm() * h.perm());
  return g.n() == 0 ? SemidirectElement::identity(0, g.q()) : out;
}

SemidirectElement inverse(const SemidirectElement& g) {
  std::vector<IntVector> t(g.n());
  for (std::size_t i = 1; i <= g.n(); ++i) t[i - 1] = -g.translation(g.perm()(i));
  if (g.n() == 0) return g;
  return SemidirectElement(std::move(t), g.perm().inverse());
}

SemidirectElement power(const SemidirectElement& g, const Integer& k) {
  SemidirectElement base = k < 0 ? inverse(g) : g;
  Integer e = k < 0 ? Integer(-k) : k;
  SemidirectElement acc = SemidirectElement::identity(g.n(), g.q());
  while (e > 0) {
    if (e % 2 != 0) acc = compose(acc, base);
    e /= 2;
    if (e > 0) base = compose(base, base);
  }
  return acc;
}

std::vector<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens) {
  for (const Permutation& g : gens)
    if (g.size() != n) throw Error(ErrorCode::DimensionMismatch, "generator degree differs from n");
  std::set<Permutation> found{Permutation::identity(n)};
  std::deque<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    Permutation cur = frontier.front();
    frontier.pop_front();
    for (const Permutation& g : gens) {
      Permutation next = g * cur;
      if (found.insert(next).second) frontier.push_back(next);
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<std::size_t>> orbits(std::size_t n, const std::vector<Permutation>& group) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> placed(n + 1, false);
  for (std::size_t i = 1; i <= n; ++i) {
    if (placed[i]) continue;
    std::set<std::size_t> block;
    for (const Permutation& s : group) block.insert(s(i));
    block.insert(i);
    for (std::size_t j : block) placed[j] = true;
    out.emplace_back(block.begin(), block.end());
  }
  return out;
}

}  // namespace nielsen
