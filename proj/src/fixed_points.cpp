#include "nielsen/fixed_points.hpp"

#include <map>

namespace nielsen {

namespace {

RationalMatrix identity_minus(const RationalMatrix& m) {
  RationalMatrix out = RationalMatrix::identity(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) -= m(r, c);
  return out;
}

// Consistency of a singular system a x = b, by row reduction.
bool consistent(const RationalMatrix& a, const RatVector& b) {
  const std::size_t n = a.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < n; ++c) {
    std::size_t p = row;
    while (p < n && aug(p, c) == 0) ++p;
    if (p == n) continue;
    aug.swap_rows(p, row);
    for (std::size_t r = 0; r < n; ++r)
      if (r != row && aug(r, c) != 0) aug.add_row_multiple(r, row, Rational(-aug(r, c) / aug(row, c)));
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (aug(r, n) != 0) return false;
  return true;
}

}  // namespace

int affine_index(const AffineLiftFactor& factor) {
  return sgn(determinant(identity_minus(factor.linear)));
}

FixedPointClass fixed_point_class_of(const AffineLiftFactor& factor, const ClassLabel& label) {
  FixedPointClass out;
  out.label = label;
  // alpha + M t + c = t  <=>  (E - M) t = c + alpha
  const RationalMatrix lhs = identity_minus(factor.linear);
  const RatVector rhs = factor.offset + to_rational(label.alpha);
  const int sign = sgn(determinant(lhs));
  if (sign == 0) {
    if (consistent(lhs, rhs)) {
      out.status = PointStatus::Degenerate;
    } else {
      out.status = PointStatus::Empty;
      out.index = 0;
    }
    return out;
  }
  RatVector t = solve_rational(lhs, rhs);
  for (Rational& x : t) x = frac(x);
  out.point = std::move(t);
  out.index = sign;
  return out;
}

std::vector<FixedPointClass> fixed_point_classes(const LiftSystem& sys,
                                                 const ReidemeisterReport& report) {
  if (!report.total.is_finite())
    throw Error(ErrorCode::InfiniteClasses, "Reidemeister number is infinite");
  std::vector<FixedPointClass> out;
  for (const ClassBlock& block : report.blocks) {
    const std::size_t r = block.sigma.representative;
    for (const IntVector& alpha : block.representatives)
      out.push_back(fixed_point_class_of(sys.factor(r), ClassLabel{alpha, r}));
  }
  return out;
}

std::vector<FixedPointClass> fixed_point_classes(const LiftSystem& sys) {
  return fixed_point_classes(sys, reidemeister_number(sys));
}

NielsenReport nielsen_number(const LiftSystem& sys) {
  const PsiData psi = validate(sys);
  const ReidemeisterReport reid = reidemeister_from_psi(psi);
  NielsenReport out;
  out.reidemeister = reid.total;
  out.classes = fixed_point_classes(sys, reid);
  for (const FixedPointClass& c : out.classes) {
    if (!c.index)
      throw Error(ErrorCode::SingularLinearPart,
                  "factor " + std::to_string(c.label.factor) + " has a degenerate fixed point set");
    if (*c.index != 0) ++out.nielsen;
  }
  out.uniform = index_uniformity(out, sigma_classes(psi));
  if (!out.uniform)
    throw Error(ErrorCode::IndexNotUniform, "fixed point indices differ within a sigma-class");
  return out;
}

Integer nielsen_linear_formula(std::size_t n, const IntegerMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "A must be square");
  if (!rows_congruent(n, a))
    throw Error(ErrorCode::RowsNotCongruent, "rows of A are not congruent mod " + std::to_string(n));
  RationalMatrix m = RationalMatrix::identity(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) -= ratio(a(r, c), Integer(n));
  Rational value = abs(determinant(m)) * Rational(n);
  if (value.get_den() != 1)
    throw Error(ErrorCode::NonIntegralResult, "n|det(E - A/n)| = " + to_string(value));
  return value.get_num();
}

bool index_uniformity(const NielsenReport& report, const SigmaClassReport& sigma) {
  std::map<std::size_t, int> seen;  // sigma-class position -> index
  for (const FixedPointClass& c : report.classes) {
    if (!c.index) throw Error(ErrorCode::UndefinedIndex, "class index undefined");
    const std::size_t block = sigma.class_of(c.label.factor);
    auto [it, inserted] = seen.emplace(block, *c.index);
    if (!inserted && it->second != *c.index) return false;
  }
  return true;
}

}  // namespace nielsen
