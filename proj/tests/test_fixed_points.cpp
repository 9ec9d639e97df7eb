#include "doctest.h"
#include "fixtures.hpp"
#include "nielsen/fixed_points.hpp"

using namespace fixtures;

TEST_CASE("six fixed points of the three-factor torus system") {
  const NielsenReport r = nielsen_number(torus3());
  CHECK(r.reidemeister == Count(6L));
  CHECK(r.nielsen == 6);
  CHECK(r.uniform);
  std::vector<RatVector> points;
  for (const FixedPointClass& c : r.classes) {
    CHECK(c.status == PointStatus::Isolated);
    CHECK(c.index == 1);
    points.push_back(c.point);
  }
  CHECK(points == std::vector<RatVector>{rv({q(0), q(0)}), rv({q(0), q(1, 2)}), rv({q(0), q(1, 4)}),
                                         rv({q(0), q(3, 4)}), rv({q(1, 2), q(1, 4)}), rv({q(1, 2), q(3, 4)})});
}

TEST_CASE("circle (2,0): classes at 0 and 1/2") {
  const auto classes = fixed_point_classes(make_circle(2, Integer(0)));
  REQUIRE(classes.size() == 2);
  std::vector<Rational> engine;
  for (const auto& c : classes) {
    CHECK(c.index == 1);
    engine.push_back(c.point[0]);
  }
  std::sort(engine.begin(), engine.end());
  CHECK(engine == circle_fixed_points_scan(2, 0, 360));
  CHECK(engine == std::vector<Rational>{q(0), q(1, 2)});
}

TEST_CASE("constant map has one class at the origin") {
  const NielsenReport r = nielsen_number(constant_map());
  REQUIRE(r.classes.size() == 1);
  CHECK(r.classes[0].point == rv({q(0)}));
  CHECK(r.classes[0].index == 1);
  CHECK(r.nielsen == 1);
}

TEST_CASE("circle (3,1): N = R = 2") {
  const NielsenReport r = nielsen_number(make_circle(3, Integer(1)));
  CHECK(r.nielsen == 2);
  CHECK(r.reidemeister == Count(2L));
  std::vector<Rational> engine;
  for (const auto& c : r.classes) engine.push_back(c.point[0]);
  std::sort(engine.begin(), engine.end());
  CHECK(engine == circle_fixed_points_scan(3, 1, 360));
}

TEST_CASE("circle maps match a grid scan") {
  // All fixed points have denominator dividing |n - d|, so a grid of lcm(1..12)
  // catches them for |n - d| <= 12.
  for (long n = 1; n <= 6; ++n)
    for (long d = -6; d <= 6; ++d) {
      if (d == n) continue;
      const NielsenReport r = nielsen_number(make_circle(static_cast<std::size_t>(n), Integer(d)));
      std::vector<Rational> engine;
      for (const auto& c : r.classes) {
        CHECK(c.index == (n - d > 0 ? 1 : -1));
        engine.push_back(c.point[0]);
      }
      std::sort(engine.begin(), engine.end());
      CHECK(engine == circle_fixed_points_scan(static_cast<std::size_t>(n), d, 27720));
    }
}

TEST_CASE("infinite classes are refused") {
  CHECK_THROWS_AS(fixed_point_classes(make_circle(3, Integer(3))), Error);
  CHECK(error_code([] { nielsen_number(make_circle(2, Integer(2))); }) == ErrorCode::InfiniteClasses);
}

TEST_CASE("singular linear parts") {
  // M = diag(1, 1/2) does not move the first coordinate.
  const AffineLiftFactor f{rm({{q(1), q(0)}, {q(0), q(1, 2)}}), rv({q(0), q(0)})};
  const FixedPointClass deg = fixed_point_class_of(f, ClassLabel{iv({0, 0}), 1});
  CHECK(deg.status == PointStatus::Degenerate);
  CHECK(!deg.index.has_value());
  const FixedPointClass empty = fixed_point_class_of(f, ClassLabel{iv({1, 0}), 1});
  CHECK(empty.status == PointStatus::Empty);
  CHECK(empty.index == 0);
  CHECK(affine_index(f) == 0);

  NielsenReport r;
  r.classes = {deg};
  CHECK_THROWS_AS(index_uniformity(r, SigmaClassReport{}), Error);
}

TEST_CASE("closed formula for linear maps") {
  for (long n = 1; n <= 6; ++n)
    for (long d = -6; d <= 6; ++d)
      CHECK(nielsen_linear_formula(static_cast<std::size_t>(n), im({{d}})) == std::abs(n - d));
  CHECK(nielsen_linear_formula(4, im({{0, 0}, {0, 0}})) == 4);
  CHECK(nielsen_linear_formula(3, im({{1, 1}, {1, 1}})) == 1);
  CHECK(nielsen_number(make_linear(3, im({{1, 1}, {1, 1}}))).nielsen == 1);
  CHECK_THROWS_AS(nielsen_linear_formula(2, im({{1, 0}, {0, 1}})), Error);
}

TEST_CASE("index uniformity") {
  const PsiData psi = validate(torus3());
  NielsenReport r = nielsen_number(torus3());
  CHECK(index_uniformity(r, sigma_classes(psi)));
  r.classes[1].index = -1;  // break the first sigma-class by hand
  CHECK(!index_uniformity(r, sigma_classes(psi)));
}

TEST_CASE("split with indices of both signs") {
  // q = 2, both parts share the first row so they never meet.
  const LiftSystem sys = make_split({{im({{0, 0}, {0, 2}}), rv({q(0), q(0)})},
                                     {im({{0, 0}, {0, 0}}), rv({q(1, 2), q(0)})}});
  const NielsenReport r = nielsen_number(sys);
  CHECK(r.uniform);
  std::set<int> indices;
  for (const auto& c : r.classes) indices.insert(*c.index);
  CHECK(indices == std::set<int>{-1, 1});
  CHECK(r.reidemeister == Count(2L));
}

TEST_CASE("index does not depend on the representative") {
  const LiftSystem sys = make_linear(2, im({{3, 1}, {1, -1}}));
  const PsiData psi = validate(sys);
  const ReidemeisterReport rep = reidemeister_from_psi(psi);
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      for (std::size_t i = 1; i <= 2; ++i) {
        const ClassLabel raw{iv({a, b}), i};
        const ClassLabel norm = classify(psi, rep, raw.alpha, i);
        const FixedPointClass x = fixed_point_class_of(sys.factor(i), raw);
        const FixedPointClass y = fixed_point_class_of(sys.factor(norm.factor), norm);
        CHECK(x.index == y.index);
        CHECK(x.point == y.point);
      }
}
