#pragma once

// Independent reference computations and random generators shared by the
// unit, property and acceptance tests. Nothing here calls the normal-form
// code it is meant to check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "nielsen/exact_linalg.hpp"
#include "nielsen/map_model.hpp"
#include "nielsen/perm_wreath.hpp"
#include "nielsen/planner.hpp"

namespace support {

using namespace nielsen;

inline Rational q(long num, long den = 1) { return ratio(Integer(num), Integer(den)); }

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline RatVector rv(std::initializer_list<Rational> xs) { return RatVector(xs); }

inline IntegerMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Integer>> out;
  for (auto r : rows) {
    std::vector<Integer> row;
    for (long x : r) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return IntegerMatrix::from_rows(out);
}

inline RationalMatrix rm(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<std::vector<Rational>> out;
  for (auto r : rows) out.emplace_back(r);
  return RationalMatrix::from_rows(out);
}

/// Code of the Error thrown by f, or nothing when f returns normally.
inline std::optional<ErrorCode> error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

/// Sum over permutations.
inline Rational leibniz_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total(0);
  do {
    Rational term(1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    total += (inversions % 2 ? -term : term);
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// |det| of a square generator matrix: the index of the lattice it spans.
inline Integer leibniz_index(const std::vector<IntVector>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const IntVector& v : rows) r.emplace_back(v.begin(), v.end());
  Rational d = leibniz_det(RationalMatrix::from_rows(r));
  return Rational(abs(d)).get_num();
}

/// Membership in the span of generators decided by a bounded coefficient
/// search. Only used where the answer is known to need small coefficients.
inline bool in_span_search(const std::vector<IntVector>& gens, const IntVector& v, long bound) {
  const std::size_t k = gens.size();
  std::vector<long> c(k, -bound);
  while (true) {
    IntVector s(v.size(), Integer(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < v.size(); ++j) s[j] += gens[i][j] * c[i];
    if (s == v) return true;
    std::size_t i = 0;
    while (i < k && c[i] == bound) c[i++] = -bound;
    if (i == k) return false;
    ++c[i];
  }
}

/// Is the matrix in row Hermite normal form (positive pivots, entries above
/// pivots in [0, pivot), zero rows last)?
inline bool is_row_hermite(const IntegerMatrix& h) {
  std::size_t last_pivot = 0;
  bool seen_zero = false;
  bool first = true;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    if (c == h.cols()) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (!first && c <= last_pivot) return false;
    if (h(r, c) <= 0) return false;
    for (std::size_t above = 0; above < r; ++above)
      if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
    last_pivot = c;
    first = false;
  }
  return true;
}

inline bool is_unimodular(const IntegerMatrix& u) {
  const Integer d = determinant(u);
  return d == 1 || d == -1;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1)); }
  IntVector vec(std::size_t q, long lo, long hi) {
    IntVector v;
    for (std::size_t k = 0; k < q; ++k) v.emplace_back(uniform(lo, hi));
    return v;
  }
  IntegerMatrix matrix(std::size_t r, std::size_t c, long lo, long hi) {
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }
  Permutation permutation(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), gen_);
    return Permutation(images);
  }
  SemidirectElement element(std::size_t n, std::size_t q, long bound) {
    std::vector<IntVector> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back(vec(q, -bound, bound));
    return SemidirectElement(std::move(t), permutation(n));
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// A random (n, A) with rows congruent mod n and det(E - A/n) != 0, entries
/// in [-5, 5].
struct LinearInstance {
  std::size_t n;
  IntegerMatrix a;
};

inline Rational det_e_minus(const IntegerMatrix& a, std::size_t n) {
  RationalMatrix m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = (r == c ? q(1) : q(0)) - ratio(a(r, c), Integer(n));
  return leibniz_det(m);
}

inline LinearInstance random_linear(Rng& rng, std::size_t max_n = 4, std::size_t max_q = 3) {
  while (true) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_n)));
    const std::size_t qd = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_q)));
    // First row free; later rows are the first row plus multiples of n,
    // kept inside [-5, 5].
    IntegerMatrix a(qd, qd);
    for (std::size_t c = 0; c < qd; ++c) a(0, c) = rng.uniform(-5, 5);
    for (std::size_t r = 1; r < qd; ++r)
      for (std::size_t c = 0; c < qd; ++c) {
        std::vector<long> options;
        const long base = a(0, c).get_si();
        for (long x = -5; x <= 5; ++x)
          if ((x - base) % static_cast<long>(n) == 0) options.push_back(x);
        a(r, c) = options[rng.index(options.size())];
      }
    if (det_e_minus(a, n) != 0) return {n, a};
  }
}

/// Random split parts with nonsingular E - A_i. All parts share their first
/// row and differ by i/n in the first offset coordinate, so no two branches
/// can meet; make_split still checks this independently.
inline std::vector<SplitPart> random_split(Rng& rng, std::size_t n, std::size_t qd) {
  // Row 0 of E - A_i is e_1 - shared, which must not vanish.
  IntVector e1(qd, Integer(0));
  e1[0] = 1;
  IntVector shared;
  do {
    shared = rng.vec(qd, -3, 3);
  } while (shared == e1);
  std::vector<SplitPart> parts;
  for (std::size_t i = 0; i < n; ++i) {
    SplitPart p;
    do {
      p.a = rng.matrix(qd, qd, -3, 3);
      for (std::size_t c = 0; c < qd; ++c) p.a(0, c) = shared[c];
    } while (det_e_minus(p.a, 1) == 0);
    p.b.push_back(q(static_cast<long>(i), static_cast<long>(n)));
    for (std::size_t k = 1; k < qd; ++k) p.b.push_back(q(rng.uniform(0, 5), 6));
    parts.push_back(std::move(p));
  }
  make_split(parts);
  return parts;
}

/// Random tree on v vertices (Pruefer-free: attach each new vertex to an
/// earlier one) that has a vertex of degree at least 3.
inline TokenGraph random_tree_with_junction(Rng& rng, std::size_t v) {
  while (true) {
    TokenGraph g;
    g.vertex_count = v;
    std::vector<std::size_t> degree(v, 0);
    for (std::size_t u = 1; u < v; ++u) {
      const std::size_t p = rng.index(u);
      g.edges.emplace_back(p, u);
      ++degree[p];
      ++degree[u];
    }
    if (*std::max_element(degree.begin(), degree.end()) >= 3) return g;
  }
}

inline std::vector<std::size_t> random_placement(Rng& rng, std::size_t vertices, std::size_t tokens) {
  std::vector<std::size_t> all(vertices);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng.engine());
  all.resize(tokens);
  return all;
}

/// Fixed points of the circle map by scanning a rational grid: x = k/N is a
/// fixed point when some value (d x + j - 1)/n differs from x by an integer,
/// that is when n N divides (d - n) k + (j - 1) N.
inline std::vector<Rational> circle_fixed_points_scan(std::size_t n, long d, long grid) {
  std::vector<Rational> out;
  const long nl = static_cast<long>(n);
  for (long k = 0; k < grid; ++k)
    for (long j = 1; j <= nl; ++j)
      if (((d - nl) * k + (j - 1) * grid) % (nl * grid) == 0) {
        out.push_back(q(k, grid));
        break;
      }
  return out;
}

}  // namespace support
