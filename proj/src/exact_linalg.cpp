#include "nielsen/exact_linalg.hpp"

#include <algorithm>

namespace nielsen {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorCode::DimensionMismatch, what);
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  require_same_size(a.cols(), b.rows(), "matrix product");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <class T>
std::vector<T> apply(const Matrix<T>& a, const std::vector<T>& v) {
  require_same_size(a.cols(), v.size(), "matrix-vector product");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

template <class T>
std::vector<T> add(const std::vector<T>& a, const std::vector<T>& b, int sign) {
  require_same_size(a.size(), b.size(), "vector sum");
  std::vector<T> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = sign > 0 ? T(a[i] + b[i]) : T(a[i] - b[i]);
  return out;
}

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

}  // namespace

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) { return multiply(a, b); }
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return multiply(a, b); }
IntVector operator*(const IntegerMatrix& a, const IntVector& v) { return apply(a, v); }
RatVector operator*(const RationalMatrix& a, const RatVector& v) { return apply(a, v); }

IntVector operator+(const IntVector& a, const IntVector& b) { return add(a, b, +1); }
IntVector operator-(const IntVector& a, const IntVector& b) { return add(a, b, -1); }
RatVector operator+(const RatVector& a, const RatVector& b) { return add(a, b, +1); }
RatVector operator-(const RatVector& a, const RatVector& b) { return add(a, b, -1); }
IntVector operator-(const IntVector& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

RatVector to_rational(const IntVector& v) {
  return RatVector(v.begin(), v.end());
}

std::optional<IntVector> as_integer(const RatVector& v) {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].get_den() != 1) return std::nullopt;
    out[i] = v[i].get_num();
  }
  return out;
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational frac(const Rational& x) {
  Rational f = x - Rational(floor_div(x.get_num(), x.get_den()));
  f.canonicalize();
  return f;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  Integer num, den(1);
  try {
    if (slash == std::string::npos) {
      num = Integer(text, 10);
    } else {
      num = Integer(text.substr(0, slash), 10);
      den = Integer(text.substr(slash + 1), 10);
    }
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + text + "'");
  return ratio(num, den);
}

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

std::string to_string(const Integer& x) { return x.get_str(); }

const Integer& Count::value() const {
  if (!value_) throw Error(ErrorCode::InfiniteIndex, "count is infinite");
  return *value_;
}

std::string Count::to_string() const {
  return value_ ? value_->get_str() : std::string("infinite");
}

Count operator+(const Count& a, const Count& b) {
  if (!a.is_finite() || !b.is_finite()) return Count::infinite();
  return Count(Integer(*a.value_ + *b.value_));
}

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  HermiteForm out{m, IntegerMatrix::identity(m.rows()), 0};
  IntegerMatrix& h = out.h;
  IntegerMatrix& u = out.u;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < h.cols() && pivot_row < h.rows(); ++c) {
    // Euclid on the column below pivot_row, always pivoting on the smallest
    // nonzero magnitude.
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t r = pivot_row; r < h.rows(); ++r) {
        if (h(r, c) == 0) continue;
        if (!best || abs_of(h(r, c)) < abs_of(h(*best, c))) best = r;
      }
      if (!best) break;
      h.swap_rows(pivot_row, *best);
      u.swap_rows(pivot_row, *best);
      bool done = true;
      for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
        if (h(r, c) == 0) continue;
        Integer q = h(r, c) / h(pivot_row, c);  // truncating
        h.add_row_multiple(r, pivot_row, -q);
        u.add_row_multiple(r, pivot_row, -q);
        if (h(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(pivot_row, c) == 0) continue;
    if (h(pivot_row, c) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (std::size_t r = 0; r < pivot_row; ++r) {
      Integer q = floor_div(h(r, c), h(pivot_row, c));
      if (q == 0) continue;
      h.add_row_multiple(r, pivot_row, -q);
      u.add_row_multiple(r, pivot_row, -q);
    }
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  IntegerMatrix p = IntegerMatrix::identity(m.rows());
  IntegerMatrix q = IntegerMatrix::identity(m.cols());
  const std::size_t diag = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < diag; ++t) {
    while (true) {
      // pivot: smallest nonzero magnitude in the trailing block
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t r = t; r < a.rows(); ++r)
        for (std::size_t c = t; c < a.cols(); ++c) {
          if (a(r, c) == 0) continue;
          if (!best || abs_of(a(r, c)) < abs_of(a(best->first, best->second)))
            best = {r, c};
        }
      if (!best) break;
      a.swap_rows(t, best->first);
      p.swap_rows(t, best->first);
      a.swap_cols(t, best->second);
      q.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        Integer k = a(r, t) / a(t, t);
        a.add_row_multiple(r, t, -k);
        p.add_row_multiple(r, t, -k);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) == 0) continue;
        Integer k = a(t, c) / a(t, t);
        a.add_col_multiple(c, t, -k);
        q.add_col_multiple(c, t, -k);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row t and go again
      std::optional<std::size_t> offending;
      for (std::size_t r = t + 1; r < a.rows() && !offending; ++r)
        for (std::size_t c = t + 1; c < a.cols(); ++c)
          if (a(r, c) % a(t, t) != 0) {
            offending = r;
            break;
          }
      if (!offending) break;
      a.add_row_multiple(t, *offending, Integer(1));
      p.add_row_multiple(t, *offending, Integer(1));
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      p.negate_row(t);
    }
  }

  SmithForm out{IntVector(diag), std::move(p), std::move(q)};
  for (std::size_t i = 0; i < diag; ++i) out.factors[i] = a(i, i);
  return out;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  RationalMatrix a = m;
  Rational det(1);
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != c) {
      a.swap_rows(pivot, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      Rational k = a(r, c) / a(c, c);
      a.add_row_multiple(r, c, Rational(-k));
    }
  }
  return det;
}

Integer determinant(const IntegerMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
    a.swap_rows(pivot, c);
    inv.swap_rows(pivot, c);
    Rational scale = 1 / a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) *= scale;
      inv(c, k) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational k = -a(r, c);
      a.add_row_multiple(r, c, k);
      inv.add_row_multiple(r, c, k);
    }
  }
  return inv;
}

RatVector solve_rational(const RationalMatrix& a, const RatVector& b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "solve_rational dimensions");
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && aug(pivot, c) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "linear system is singular");
    aug.swap_rows(pivot, c);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || aug(r, c) == 0) continue;
      aug.add_row_multiple(r, c, Rational(-aug(r, c) / aug(c, c)));
    }
  }
  RatVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = aug(r, n) / aug(r, r);
  return x;
}

std::size_t Sublattice::pivot_col(std::size_t k) const {
  for (std::size_t c = 0; c < basis_.cols(); ++c)
    if (basis_(k, c) != 0) return c;
  throw Error(ErrorCode::InvalidArgument, "zero basis row");
}

Sublattice lattice_from_generators(std::size_t ambient_dim,
                                   const std::vector<IntVector>& vectors) {
  IntegerMatrix gens(vectors.size(), ambient_dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient_dim)
      throw Error(ErrorCode::DimensionMismatch, "generator length differs from ambient dimension");
    for (std::size_t c = 0; c < ambient_dim; ++c) gens(r, c) = vectors[r][c];
  }
  HermiteForm hf = hermite_normal_form(gens);
  Sublattice out(ambient_dim);
  out.basis_ = IntegerMatrix(hf.rank, ambient_dim);
  for (std::size_t r = 0; r < hf.rank; ++r)
    for (std::size_t c = 0; c < ambient_dim; ++c) out.basis_(r, c) = hf.h(r, c);
  return out;
}

Count lattice_index(const Sublattice& lattice) {
  if (lattice.rank() < lattice.ambient_dim()) return Count::infinite();
  Integer index(1);
  for (const Integer& d : smith_normal_form(lattice.basis()).factors) index *= d;
  return Count(index);
}

bool lattice_contains(const Sublattice& lattice, const IntVector& v) {
  if (v.size() != lattice.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  IntVector rest = v;
  const IntegerMatrix& b = lattice.basis();
  std::size_t next_col = 0;
  for (std::size_t k = 0; k < lattice.rank(); ++k) {
    std::size_t p = lattice.pivot_col(k);
    for (std::size_t c = next_col; c < p; ++c)
      if (rest[c] != 0) return false;
    if (rest[p] % b(k, p) != 0) return false;
    Integer coeff = rest[p] / b(k, p);
    for (std::size_t c = p; c < rest.size(); ++c) rest[c] -= coeff * b(k, c);
    next_col = p + 1;
  }
  for (std::size_t c = next_col; c < rest.size(); ++c)
    if (rest[c] != 0) return false;
  return true;
}

IntVector reduce_modulo(const Sublattice& lattice, IntVector v) {
  if (v.size() != lattice.ambient_dim())
    throw Error(ErrorCode::DimensionMismatch, "vector length differs from ambient dimension");
  const IntegerMatrix& b = lattice.basis();
  for (std::size_t k = 0; k < lattice.rank(); ++k) {
    std::size_t p = lattice.pivot_col(k);
    Integer t = floor_div(v[p], b(k, p));
    if (t == 0) continue;
    for (std::size_t c = p; c < v.size(); ++c) v[c] -= t * b(k, c);
  }
  return v;
}

std::vector<IntVector> coset_representatives(const Sublattice& lattice) {
  const std::size_t q = lattice.ambient_dim();
  if (lattice.rank() < q)
    throw Error(ErrorCode::InfiniteIndex, "lattice has rank below ambient dimension");
  IntVector bounds(q);
  for (std::size_t k = 0; k < q; ++k) bounds[k] = lattice.basis()(k, k);

  std::vector<IntVector> out;
  IntVector cur(q, Integer(0));
  while (true) {
    out.push_back(cur);
    std::size_t k = q;
    while (k > 0) {
      --k;
      if (++cur[k] < bounds[k]) break;
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (q == 0) return out;
  }
}

}  // namespace nielsen
