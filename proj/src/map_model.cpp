#include "nielsen/map_model.hpp"

#include <optional>
#include <string>

namespace nielsen {

namespace {

Integer lcm_of_denominators(const RationalMatrix& m) {
  Integer l(1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) l = lcm(l, m(r, c).get_den());
  return l;
}

std::string factor_pair(std::size_t i, std::size_t j) {
  return "factors " + std::to_string(i) + " and " + std::to_string(j);
}

}  // namespace

LiftSystem::LiftSystem(std::size_t q, std::vector<AffineLiftFactor> factors)
    : q_(q), factors_(std::move(factors)) {
  if (q_ == 0) throw Error(ErrorCode::DimensionMismatch, "torus dimension must be positive");
  if (factors_.empty()) throw Error(ErrorCode::DimensionMismatch, "a lift system needs at least one factor");
  for (const AffineLiftFactor& f : factors_)
    if (f.linear.rows() != q_ || f.linear.cols() != q_ || f.offset.size() != q_)
      throw Error(ErrorCode::DimensionMismatch, "factor dimensions differ from q");
}

PsiData::PsiData(std::size_t n, std::size_t q, std::vector<SemidirectElement> generator_images)
    : n_(n), q_(q), images_(std::move(generator_images)) {
  if (images_.size() != q_) throw Error(ErrorCode::DimensionMismatch, "need one image per generator");
  for (const SemidirectElement& g : images_)
    if (g.n() != n_ || g.q() != q_) throw Error(ErrorCode::DimensionMismatch, "generator image shape");
}

bool factors_collide(const AffineLiftFactor& a, const AffineLiftFactor& b) {
  const std::size_t q = a.offset.size();
  RationalMatrix diff(q, q);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < q; ++c) diff(r, c) = a.linear(r, c) - b.linear(r, c);
  const RatVector shift = a.offset - b.offset;

  // Integer matrix with the same column space as diff.
  const Integer scale = lcm_of_denominators(diff);
  IntegerMatrix scaled(q, q);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < q; ++c) {
      Rational v = diff(r, c) * scale;
      scaled(r, c) = v.get_num();
    }

  // Rows of U past the rank span the left kernel: a projection whose kernel
  // is exactly the column space. shift is in colspace + Z^q iff its image
  // lies in the image of Z^q.
  HermiteForm hf = hermite_normal_form(scaled);
  const std::size_t k = q - hf.rank;
  if (k == 0) return true;
  RationalMatrix proj(k, q);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < q; ++c) proj(r, c) = Rational(hf.u(hf.rank + r, c));
  std::optional<IntVector> image = as_integer(proj * shift);
  if (!image) return false;
  std::vector<IntVector> cols;
  for (std::size_t c = 0; c < q; ++c) {
    IntVector col(k);
    for (std::size_t r = 0; r < k; ++r) col[r] = hf.u(hf.rank + r, c);
    cols.push_back(std::move(col));
  }
  return lattice_contains(lattice_from_generators(k, cols), *image);
}

PsiData validate(const LiftSystem& sys) {
  const std::size_t n = sys.n();
  const std::size_t q = sys.q();

  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (factors_collide(sys.factor(i), sys.factor(j)))
        throw Error(ErrorCode::Collision,
                    factor_pair(i, j) + " meet modulo Z^" + std::to_string(q));

  std::vector<SemidirectElement> images;
  for (std::size_t k = 1; k <= q; ++k) {
    std::vector<IntVector> phi(n);
    std::vector<std::size_t> inv_images(n, 0);  // sigma^-1(i)
    for (std::size_t i = 1; i <= n; ++i) {
      const AffineLiftFactor& fi = sys.factor(i);
      RatVector moved = fi.linear.col(k - 1) + fi.offset;
      std::optional<std::size_t> found;
      for (std::size_t j = 1; j <= n; ++j) {
        const AffineLiftFactor& fj = sys.factor(j);
        if (!(fj.linear == fi.linear)) continue;
        std::optional<IntVector> t = as_integer(moved - fj.offset);
        if (!t) continue;
        if (found)
          throw Error(ErrorCode::Ambiguous, "generator " + std::to_string(k) + " sends factor " +
                                                std::to_string(i) + " to two factors");
        found = j;
        phi[i - 1] = std::move(*t);
      }
      if (!found)
        throw Error(ErrorCode::NotEquivariant, "no factor matches factor " + std::to_string(i) +
                                                   " translated by generator " + std::to_string(k));
      inv_images[i - 1] = *found;
    }
    Permutation inv;
    try {
      inv = Permutation(inv_images);
    } catch (const Error&) {
      throw Error(ErrorCode::NotEquivariant,
                  "generator " + std::to_string(k) + " does not permute the factors");
    }
    images.emplace_back(std::move(phi), inv.inverse());
  }

  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b)
      if (!(compose(images[a], images[b]) == compose(images[b], images[a])))
        throw Error(ErrorCode::NotCommuting, "images of generators " + std::to_string(a + 1) +
                                                 " and " + std::to_string(b + 1) + " do not commute");
  return PsiData(n, q, std::move(images));
}

SemidirectElement psi_of(const PsiData& data, const IntVector& z) {
  if (z.size() != data.q()) throw Error(ErrorCode::DimensionMismatch, "psi_of: vector length differs from q");
  SemidirectElement acc = SemidirectElement::identity(data.n(), data.q());
  for (std::size_t k = 1; k <= data.q(); ++k)
    if (z[k - 1] != 0) acc = compose(acc, power(data.generator_image(k), z[k - 1]));
  return acc;
}

bool rows_congruent(std::size_t n, const IntegerMatrix& a) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  for (std::size_t r = 1; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if ((a(r, c) - a(0, c)) % Integer(n) != 0) return false;
  return true;
}

LiftSystem make_linear(std::size_t n, const IntegerMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "linear map needs a square matrix");
  if (!rows_congruent(n, a))
    throw Error(ErrorCode::RowsNotCongruent, "rows of A are not congruent mod " + std::to_string(n));
  const std::size_t q = a.rows();
  RationalMatrix m(q, q);
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t c = 0; c < q; ++c) m(r, c) = ratio(a(r, c), Integer(n));
  std::vector<AffineLiftFactor> factors;
  for (std::size_t i = 1; i <= n; ++i) {
    factors.push_back({m, RatVector(q, ratio(Integer(i), Integer(n)))});
  }
  return LiftSystem(q, std::move(factors));
}

LiftSystem make_circle(std::size_t n, const Integer& d) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const Rational slope = ratio(d, Integer(n));
  std::vector<AffineLiftFactor> factors;
  for (std::size_t j = 1; j <= n; ++j) {
    RationalMatrix m(1, 1);
    m(0, 0) = slope;
    factors.push_back({m, RatVector{ratio(Integer(j - 1), Integer(n))}});
  }
  return LiftSystem(1, std::move(factors));
}

LiftSystem make_split(const std::vector<SplitPart>& parts) {
  if (parts.empty()) throw Error(ErrorCode::DimensionMismatch, "split map needs at least one part");
  const std::size_t q = parts.front().a.rows();
  std::vector<AffineLiftFactor> factors;
  for (const SplitPart& p : parts) {
    if (p.a.rows() != q || p.a.cols() != q || p.b.size() != q)
      throw Error(ErrorCode::DimensionMismatch, "split part dimensions differ");
    factors.push_back({to_rational(p.a), p.b});
  }
  LiftSystem sys(q, std::move(factors));
  PsiData psi = validate(sys);
  for (std::size_t k = 1; k <= q; ++k)
    if (!psi.sigma(k).is_identity())
      throw Error(ErrorCode::NotEquivariant, "split map produced a nontrivial permutation");
  return sys;
}

}  // namespace nielsen
