#include "doctest.h"
#include "fixtures.hpp"
#include "nielsen/documents.hpp"
#include "support/properties.hpp"

using namespace fixtures;

TEST_CASE("semidirect group laws") {
  const Tally t = group_laws(101, 300);
  CHECK_MESSAGE(t.ok(), t.summary());
}

TEST_CASE("psi is a homomorphism") {
  const Tally t = psi_homomorphism(202, 60);
  CHECK_MESSAGE(t.ok(), t.summary());
}

TEST_CASE("hermite form and lattice index") {
  const Tally t = hnf_and_index(303, 300);
  CHECK_MESSAGE(t.ok(), t.summary());
}

TEST_CASE("reports do not depend on the order of factors") {
  Rng rng(404);
  for (int trial = 0; trial < 30; ++trial) {
    const LiftSystem sys = random_system(rng);
    std::vector<AffineLiftFactor> factors = sys.factors();
    std::shuffle(factors.begin(), factors.end(), rng.engine());
    const LiftSystem shuffled(sys.q(), factors);
    const ReidemeisterReport a = reidemeister_number(sys);
    const ReidemeisterReport b = reidemeister_number(shuffled);
    CHECK(a.total == b.total);
    std::multiset<std::string> ca, cb;
    for (const auto& blk : a.blocks) ca.insert(blk.count.to_string());
    for (const auto& blk : b.blocks) cb.insert(blk.count.to_string());
    CHECK(ca == cb);
    if (a.total.is_finite()) {
      const AnalysisReport ra = analyze(sys), rb = analyze(shuffled);
      CHECK(ra.nielsen == rb.nielsen);
      std::set<RatVector> pa, pb;
      for (const auto& p : ra.fixed_point_classes) pa.insert(p.point);
      for (const auto& p : rb.fixed_point_classes) pb.insert(p.point);
      CHECK(pa == pb);
    }
  }
}

TEST_CASE("fixed point classes are disjoint, cover every fixed point, and N <= R") {
  Rng rng(505);
  for (int trial = 0; trial < 40; ++trial) {
    const LiftSystem sys = random_system(rng);
    const ReidemeisterReport rep = reidemeister_number(sys);
    if (!rep.total.is_finite()) continue;
    bool singular = false;
    for (const auto& f : sys.factors()) singular = singular || affine_index(f) == 0;
    if (singular) continue;
    const NielsenReport nr = nielsen_number(sys);
    CHECK(Count(nr.nielsen) == nr.reidemeister);
    CHECK(Integer(static_cast<unsigned long>(nr.classes.size())) == rep.total.value());
    std::set<RatVector> points;
    for (const auto& c : nr.classes) points.insert(c.point);
    CHECK(points.size() == nr.classes.size());
    if (rep.total.value() <= 30 && sys.q() <= 2) {
      const auto scanned = brute_fixed_points(sys, 8);
      for (const RatVector& p : scanned) CHECK(points.count(p) == 1);
    }
  }
}

TEST_CASE("systems with equal psi have equal reports") {
  Rng rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    const LiftSystem sys = random_system(rng);
    std::vector<AffineLiftFactor> moved = sys.factors();
    RatVector shift;
    for (std::size_t k = 0; k < sys.q(); ++k) shift.push_back(q(rng.uniform(0, 10), 11));
    for (auto& f : moved) f.offset = f.offset + shift;
    const PsiData a = validate(sys);
    const PsiData b = validate(LiftSystem(sys.q(), moved));
    REQUIRE(a == b);
    const ReidemeisterReport ra = reidemeister_from_psi(a), rb = reidemeister_from_psi(b);
    CHECK(ra.total == rb.total);
    for (std::size_t k = 0; k < ra.blocks.size(); ++k)
      CHECK(ra.blocks[k].representatives == rb.blocks[k].representatives);
  }
}
