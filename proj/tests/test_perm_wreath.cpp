#include "doctest.h"
#include "support/support.hpp"

using namespace support;

namespace {

Permutation perm(std::initializer_list<std::size_t> images) { return Permutation(std::vector<std::size_t>(images)); }

SemidirectElement el(std::initializer_list<IntVector> t, const Permutation& p) {
  return SemidirectElement(std::vector<IntVector>(t), p);
}

}  // namespace

TEST_CASE("permutations") {
  CHECK_THROWS_AS(perm({1, 1}), Error);
  CHECK_THROWS_AS(perm({0, 1}), Error);
  const Permutation c = perm({2, 3, 1});
  CHECK(c(1) == 2);
  CHECK((c * c)(1) == 3);
  CHECK((c * c.inverse()).is_identity());
  CHECK(c.to_string() == "[2,3,1]");
  // (a * b)(i) = a(b(i))
  const Permutation t = perm({2, 1, 3});
  CHECK((c * t)(1) == c(t(1)));
}

TEST_CASE("composition with two swapped factors") {
  const Permutation swap = perm({2, 1});
  const auto g = el({iv({3}), iv({5})}, swap);
  const auto h = el({iv({7}), iv({11})}, swap);
  CHECK(compose(g, h) == el({iv({3 + 11}), iv({5 + 7})}, Permutation::identity(2)));
}

TEST_CASE("composition with trivial permutations adds translations") {
  const auto g = el({iv({1, 2}), iv({3, 4})}, Permutation::identity(2));
  const auto h = el({iv({0, 0}), iv({1, 1})}, Permutation::identity(2));
  CHECK(compose(g, h) == el({iv({1, 2}), iv({4, 5})}, Permutation::identity(2)));
  CHECK(compose(g, SemidirectElement::identity(2, 2)) == g);
  CHECK_THROWS_AS(compose(g, SemidirectElement::identity(3, 2)), Error);
}

TEST_CASE("inverse") {
  const auto g = el({iv({3}), iv({5})}, perm({2, 1}));
  CHECK(inverse(g) == el({iv({-5}), iv({-3})}, perm({2, 1})));
  CHECK(inverse(SemidirectElement::identity(3, 2)) == SemidirectElement::identity(3, 2));
  const auto h = el({iv({1, 0}), iv({0, 2}), iv({-1, 4})}, perm({3, 1, 2}));
  CHECK(compose(h, inverse(h)) == SemidirectElement::identity(3, 2));
  CHECK(compose(inverse(h), h) == SemidirectElement::identity(3, 2));
}

TEST_CASE("powers") {
  const auto h = el({iv({1, 0}), iv({0, 2}), iv({-1, 4})}, perm({3, 1, 2}));
  auto acc = SemidirectElement::identity(3, 2);
  for (int k = 0; k < 7; ++k) acc = compose(acc, h);
  CHECK(power(h, Integer(7)) == acc);
  CHECK(power(h, Integer(-7)) == inverse(acc));
  CHECK(power(h, Integer(0)) == SemidirectElement::identity(3, 2));
}

TEST_CASE("closure and orbits") {
  const Permutation nu = perm({2, 1, 3});
  auto group = closure(3, {nu});
  CHECK(group.size() == 2);
  CHECK(std::find(group.begin(), group.end(), Permutation::identity(3)) != group.end());
  CHECK(std::find(group.begin(), group.end(), nu) != group.end());
  CHECK(orbits(3, group) == std::vector<std::vector<std::size_t>>{{1, 2}, {3}});

  CHECK(closure(3, {}) == std::vector<Permutation>{Permutation::identity(3)});
  CHECK(orbits(3, closure(3, {})) == std::vector<std::vector<std::size_t>>{{1}, {2}, {3}});

  auto s3 = closure(3, {perm({2, 3, 1}), perm({2, 1, 3})});
  // Every permutation of three letters, enumerated directly.
  std::vector<std::size_t> p{1, 2, 3};
  std::vector<Permutation> all;
  do all.push_back(Permutation(p));
  while (std::next_permutation(p.begin(), p.end()));
  std::sort(all.begin(), all.end());
  CHECK(s3 == all);
  CHECK(orbits(3, s3) == std::vector<std::vector<std::size_t>>{{1, 2, 3}});
}

TEST_CASE("closure is closed and contains generators") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    std::vector<Permutation> gens;
    for (long k = rng.uniform(0, 2); k > 0; --k) gens.push_back(rng.permutation(n));
    auto group = closure(n, gens);
    std::set<Permutation> members(group.begin(), group.end());
    for (const auto& g : gens) CHECK(members.count(g));
    for (const auto& a : group) {
      CHECK(members.count(a.inverse()));
      for (const auto& b : group) CHECK(members.count(a * b));
    }
    std::size_t factorial = 1;
    for (std::size_t k = 2; k <= n; ++k) factorial *= k;
    CHECK(factorial % group.size() == 0);
  }
}
