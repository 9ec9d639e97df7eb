#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nielsen/error.hpp"

namespace nielsen {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Dense row-major matrix over an exact ring. A matrix with zero rows is
/// allowed; it is the basis of the trivial lattice.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Builds from nested rows; every row must have the same length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols_if_empty = 0) {
    std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols)
        throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_,
                          data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
  }
  void add_col_multiple(std::size_t dst, std::size_t src, const T& factor) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
IntVector operator*(const IntegerMatrix& a, const IntVector& v);
RatVector operator*(const RationalMatrix& a, const RatVector& v);

RationalMatrix to_rational(const IntegerMatrix& m);
RatVector to_rational(const IntVector& v);
/// Returns the integer vector when every entry has denominator one.
std::optional<IntVector> as_integer(const RatVector& v);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);

/// Floor quotient, rounding toward negative infinity.
Integer floor_div(const Integer& a, const Integer& b);
/// Canonical representative of x modulo 1, in [0,1).
Rational frac(const Rational& x);

/// Canonical num/den; throws InvalidArgument when den is zero.
Rational ratio(const Integer& num, const Integer& den);
/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// A natural number or the symbolic value "infinite".
class Count {
 public:
  Count() : value_(Integer(0)) {}
  Count(Integer value) : value_(std::move(value)) {}
  Count(long value) : value_(Integer(value)) {}
  static Count infinite() {
    Count c;
    c.value_.reset();
    return c;
  }

  bool is_finite() const noexcept { return value_.has_value(); }
  const Integer& value() const;
  std::string to_string() const;

  friend Count operator+(const Count& a, const Count& b);
  friend bool operator==(const Count& a, const Count& b) {
    return a.value_ == b.value_;
  }

 private:
  std::optional<Integer> value_;
};

struct HermiteForm {
  IntegerMatrix h;  // U * M, row Hermite normal form, zero rows at the bottom
  IntegerMatrix u;  // unimodular transform
  std::size_t rank = 0;
};

/// Row-style Hermite normal form: pivots positive, entries above each pivot
/// reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntegerMatrix& m);

struct SmithForm {
  IntVector factors;  // min(rows, cols) entries, d_i | d_{i+1}, zeros last
  IntegerMatrix p;    // unimodular, rows x rows
  IntegerMatrix q;    // unimodular, cols x cols; p * m * q is diagonal
};

SmithForm smith_normal_form(const IntegerMatrix& m);

Rational determinant(const RationalMatrix& m);
Integer determinant(const IntegerMatrix& m);

/// Unique x with a*x = b. Throws Singular when det(a) = 0.
RatVector solve_rational(const RationalMatrix& a, const RatVector& b);
RationalMatrix inverse(const RationalMatrix& a);

/// Subgroup of Z^q held by its row Hermite basis, so equal lattices compare
/// equal.
class Sublattice {
 public:
  explicit Sublattice(std::size_t ambient_dim = 0)
      : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntegerMatrix& basis() const noexcept { return basis_; }
  /// Column index of the leading entry of basis row k.
  std::size_t pivot_col(std::size_t k) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
  }

 private:
  friend Sublattice lattice_from_generators(std::size_t, const std::vector<IntVector>&);
  std::size_t ambient_dim_;
  IntegerMatrix basis_;
};

Sublattice lattice_from_generators(std::size_t ambient_dim,
                                   const std::vector<IntVector>& vectors);
/// [Z^q : L], or infinite when rank < q.
Count lattice_index(const Sublattice& lattice);
bool lattice_contains(const Sublattice& lattice, const IntVector& v);
/// Canonical coset representative: each pivot coordinate reduced into
/// [0, pivot). For full-rank lattices this is the point of the fundamental box.
IntVector reduce_modulo(const Sublattice& lattice, IntVector v);
/// All points of the fundamental box, lexicographic. Throws InfiniteIndex.
std::vector<IntVector> coset_representatives(const Sublattice& lattice);

}  // namespace nielsen
