#include <cmath>

#include "angle.hpp"
#include "doctest.h"
#include "error.hpp"
#include "support.hpp"

using namespace pmg;

namespace {

// Two hubs of prescribed degree joined by one edge; leaves fan out on
// opposite sides so the drawing stays planar.
MapGeometry two_hub_map(unsigned rho_u, double mu_u, unsigned rho_v,
                        double mu_v, double d) {
  MapGeometry map;
  map.add_vertex("u", {0, 0}, mu_u);
  map.add_vertex("v", {d, 0}, mu_v);
  map.add_edge("uv", "u", "v");
  for (unsigned i = 0; i + 1 < rho_u; ++i) {
    const double a = kPi / 2 + (i + 1) * 0.4;
    map.add_vertex("ul" + std::to_string(i),
                   {std::cos(a) - 0.0, std::sin(a)}, 1.0);
    map.add_edge("ue" + std::to_string(i), "u", "ul" + std::to_string(i));
  }
  for (unsigned i = 0; i + 1 < rho_v; ++i) {
    const double a = -kPi / 2 - (i + 1) * 0.4;
    map.add_vertex("vl" + std::to_string(i),
                   {d + std::cos(a), std::sin(a)}, 1.0);
    map.add_edge("ve" + std::to_string(i), "v", "vl" + std::to_string(i));
  }
  return map;
}

}  // namespace

TEST_CASE("point kind trichotomy") {
  const MapGeometry square_center = two_hub_map(4, kPi / 2, 1, 1.0, 1.0);
  CHECK(point_kind(square_center, "u") == PointKind::Euclidean);

  // rho = 5: 1.5*pi is elliptic, 2.5*pi hyperbolic
  const MapGeometry elliptic = two_hub_map(5, 0.3 * kPi, 1, 1.0, 1.0);
  CHECK(point_kind(elliptic, "u") == PointKind::Elliptic);
  const MapGeometry hyperbolic = two_hub_map(5, 0.5 * kPi, 1, 1.0, 1.0);
  CHECK(point_kind(hyperbolic, "u") == PointKind::Hyperbolic);

  CHECK_THROWS_AS(point_kind(elliptic, "missing"), Error);
  CHECK_THROWS_AS(point_kind(elliptic, "u", -1.0), Error);
}

TEST_CASE("point kind partitions with the eps band") {
  pmgtest::Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const double rho = pmgtest::uniform_int(rng, 1, 8);
    const double mu = pmgtest::uniform(rng, 0.05 * kPi, 0.95 * kPi);
    const double eps = pmgtest::uniform(rng, 0.0, 1e-3);
    int matched = 0;
    const PointKind kind = point_kind_value(rho * mu, eps);
    if (kind == PointKind::Euclidean) ++matched;
    if (kind == PointKind::Elliptic) ++matched;
    if (kind == PointKind::Hyperbolic) ++matched;
    CHECK(matched == 1);
    if (std::abs(rho * mu - kTwoPi) <= eps)
      CHECK(kind == PointKind::Euclidean);
  }
}

TEST_CASE("edge profile halves the endpoint angle sums") {
  const MapGeometry map = two_hub_map(5, 0.3 * kPi, 5, 0.5 * kPi, 2.0);
  const EdgeAngleProfile p = edge_profile(map, "uv");
  CHECK(p.a == doctest::Approx(0.75 * kPi));
  CHECK(p.b == doctest::Approx(1.25 * kPi));
  CHECK(p.d == doctest::Approx(2.0));

  const EdgeAngleProfile r = edge_profile(map, "uv", Direction::Reverse);
  CHECK(r.a == doctest::Approx(1.25 * kPi));
  CHECK(r.b == doctest::Approx(0.75 * kPi));
  CHECK(r.d == doctest::Approx(2.0));

  CHECK_THROWS_AS(edge_profile(map, "nope"), Error);
}

TEST_CASE("euclidean endpoints yield the constant-pi profile") {
  pmgtest::Rng rng(3);
  const MapGeometry prism = pmgtest::make_prism(rng, 4);
  const EdgeAngleProfile p = edge_profile(prism, "es0");
  CHECK(p.a == doctest::Approx(kPi));
  CHECK(p.b == doctest::Approx(kPi));
}

TEST_CASE("angle function evaluation") {
  const EdgeAngleProfile p{0.75 * kPi, 1.25 * kPi, 2.0};
  CHECK(p.angle_at(1.0) == doctest::Approx(kPi));
  CHECK(p.angle_at(0.0) == 0.75 * kPi);  // exact boundary value
  CHECK(p.angle_at(2.0) == 1.25 * kPi);
  CHECK(p.angle_at(0.5) == doctest::Approx(0.875 * kPi));
  CHECK_THROWS_AS(p.angle_at(-0.1), Error);
  CHECK_THROWS_AS(p.angle_at(2.1), Error);
}

TEST_CASE("slope and reversal antisymmetry") {
  const EdgeAngleProfile p{0.75 * kPi, 1.25 * kPi, 2.0};
  CHECK(p.slope() == doctest::Approx(0.25 * kPi));
  CHECK(EdgeAngleProfile{1.1, 1.1, 3.0}.slope() == 0.0);
  CHECK(p.reversed().slope() == -p.slope());  // exact in IEEE arithmetic
}

TEST_CASE("linearity over the whole parameter range") {
  pmgtest::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = pmgtest::uniform(rng, 0.1, 3.0);
    const double b = pmgtest::uniform(rng, 0.1, 3.0);
    const double d = pmgtest::uniform(rng, 0.1, 10.0);
    const EdgeAngleProfile p{a, b, d};
    const double lambda = pmgtest::uniform(rng, 0.0, 1.0);
    CHECK(p.angle_at(lambda * d) ==
          doctest::Approx((1 - lambda) * a + lambda * b).epsilon(1e-12));
  }
}

TEST_CASE("finite differences recover the slope") {
  pmgtest::Rng rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const double a = pmgtest::uniform(rng, 0.1, 3.0);
    const double b = pmgtest::uniform(rng, 0.1, 3.0);
    const double d = pmgtest::uniform(rng, 0.1, 10.0);
    const EdgeAngleProfile p{a, b, d};
    const double h = 1e-6 * d;
    const double x = pmgtest::uniform(rng, 0.0, d - h);
    const double quotient = (p.angle_at(x + h) - p.angle_at(x)) / h;
    CHECK(std::abs(quotient - p.slope()) <= 1e-6);
  }
}

TEST_CASE("linear angle function adapter") {
  const MapGeometry map = two_hub_map(5, 0.3 * kPi, 5, 0.5 * kPi, 2.0);
  const auto fn = make_linear_angle_function(
      map, OrientedEdge{map.find_edge("uv"), Direction::Forward});
  CHECK(fn->domain_length() == doctest::Approx(2.0));
  CHECK(fn->value(1.0) == doctest::Approx(kPi));
  CHECK(fn->right_derivative(0.3) == doctest::Approx(0.25 * kPi));
}
