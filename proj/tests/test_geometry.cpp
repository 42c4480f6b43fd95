#include "doctest.h"
#include "error.hpp"
#include "geometry.hpp"

using namespace pmg;

TEST_CASE("vector basics") {
  CHECK(dot({1, 2}, {3, 4}) == doctest::Approx(11));
  CHECK(cross({1, 0}, {0, 1}) == doctest::Approx(1));
  CHECK(perp_left(Vec2{0, -1}).x == doctest::Approx(1));
  CHECK(perp_left(Vec2{0, -1}).y == doctest::Approx(0));
  CHECK(perp_right(Vec2{1, 0}).y == doctest::Approx(-1));
  const Vec2 r = rotated({1, 0}, kPi / 2);
  CHECK(r.x == doctest::Approx(0).epsilon(1e-12));
  CHECK(r.y == doctest::Approx(1));
  CHECK_THROWS_AS(normalized({0, 0}), Error);
}

TEST_CASE("ray box exit") {
  const BBox box{0, 0, 10, 4};
  auto t = ray_box_exit({1, 1}, {1, 0}, box);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(9));
  CHECK(!ray_box_exit({20, 1}, {1, 0}, box).has_value());
  auto entering = ray_box_exit({-5, 2}, {1, 0}, box);
  REQUIRE(entering.has_value());
  CHECK(*entering == doctest::Approx(15));
}

TEST_CASE("ray segment hit") {
  auto hit = ray_segment_hit({0, 0}, {1, 0}, {2, -1}, {2, 1}, 1e-12);
  REQUIRE(hit.has_value());
  CHECK(hit->t == doctest::Approx(2));
  CHECK(hit->s == doctest::Approx(0.5));
  CHECK(!ray_segment_hit({0, 0}, {1, 0}, {2, 1}, {4, 1}, 1e-12).has_value());
  CHECK(!ray_segment_hit({0, 0}, {1, 0}, {2, 1}, {2, 3}, 1e-12).has_value());
}

TEST_CASE("segment predicates") {
  CHECK(segments_properly_intersect({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK(!segments_properly_intersect({0, 0}, {1, 1}, {2, 2}, {3, 3}));
  CHECK(segment_segment_distance({0, 0}, {1, 0}, {0, 1}, {1, 1}) ==
        doctest::Approx(1));
  CHECK(segment_segment_distance({0, 0}, {2, 2}, {0, 2}, {2, 0}) ==
        doctest::Approx(0));
}
