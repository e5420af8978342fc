#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "kumfib/weierstrass/iso.hpp"

using namespace kumfib;
using kumfib::test::R;

namespace {

FieldElement small(std::mt19937& rng) {
  std::uniform_int_distribution<int> n(-6, 6), d(1, 4);
  return FieldElement(Rational(n(rng), d(rng)));
}

BaseMap random_mobius(std::mt19937& rng) {
  for (;;) {
    FieldElement a = small(rng), b = small(rng), c = small(rng), d = small(rng);
    if (!(a * d - b * c).is_zero()) return BaseMap::mobius(a, b, c, d);
  }
}

}  // namespace

TEST_CASE("base change composes J") {
  std::mt19937 rng(314159);
  auto w = WeierstrassModel(0, R("u^2+1"), 0, R("u-3"), R("2*u^3+u"));
  for (int trial = 0; trial < 25; ++trial) {
    BaseMap phi = random_mobius(rng);
    CAPTURE(phi.to_string());
    CHECK(base_change(w, phi).j_invariant() == compose(w.j_invariant(), phi));
  }
  CHECK(base_change(w, BaseMap::power_map(2)).j_invariant() == compose(w.j_invariant(), BaseMap::power_map(2)));
  CHECK(base_change(w, BaseMap::identity()) == w);
}

TEST_CASE("admissible transforms keep J") {
  auto w = WeierstrassModel(0, R("u"), 0, R("u^3-1"), R("u^2"));
  auto v = admissible_transform(w, R("u+1"), R("u^2"), R("3"), R("u"));
  CHECK(v.j_invariant() == w.j_invariant());
}

TEST_CASE("scaled models are recognized") {
  std::mt19937 rng(2718);
  auto w = WeierstrassModel(0, R("u^2+u+2"), 0, R("u^3-1"), R("u^4+5*u"));
  for (int trial = 0; trial < 8; ++trial) {
    FieldElement c = small(rng);
    if (c.is_zero()) continue;
    auto v = base_change(w, BaseMap::scaling(c)).transform(R("u"), 0, 0, R("1"));
    auto r = iso_test(w, v);
    CAPTURE(c.to_string());
    CHECK(r.isomorphic);
    CHECK(r.j_match);
  }
}

TEST_CASE("matching J alone is not enough") {
  // quadratic twist by u - 2 moves fibers but not J
  auto w = WeierstrassModel(0, R("u"), 0, R("u^2+1"), R("u^3"));
  auto t = WeierstrassModel(0, R("u*(u-2)"), 0, R("(u^2+1)*(u-2)^2"), R("u^3*(u-2)^3"));
  auto r = iso_test(w, t, IsoFamily::Scaling);
  CHECK(r.j_match);
  CHECK_FALSE(r.isomorphic);
}

TEST_CASE("affine family finds shifted models") {
  auto w = WeierstrassModel(0, 0, 0, R("-(u^3-1)^2"), 0);
  auto v = base_change(w, BaseMap::mobius(2, 5, 0, 1));
  auto r = iso_test(w, v, IsoFamily::Affine);
  CHECK(r.isomorphic);
}

TEST_CASE("inversion family") {
  auto w = WeierstrassModel(0, R("u"), 0, R("u^3+2*u+5"), 0);
  auto v = base_change(w, BaseMap::mobius(0, 3, 1, 0));
  CHECK_FALSE(iso_test(w, v, IsoFamily::Scaling).isomorphic);
  CHECK(iso_test(w, v, IsoFamily::ZeroInfinity).isomorphic);
}
