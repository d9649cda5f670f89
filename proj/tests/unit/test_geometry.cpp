#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "json.hpp"

#include "clifford/error.hpp"
#include "clifford/geometry.hpp"

using namespace clifford;
using namespace clifford::geometry;

namespace {

constexpr double sqrt2 = std::numbers::sqrt2;

Rational q(const char* s) { return parse_rational(s); }

// circle through three points, the classical circumcenter formula
Circle<Rational> circumcircle(Point2<Rational> a, Point2<Rational> b, Point2<Rational> c) {
  const Rational d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
  const Rational na = a.x * a.x + a.y * a.y, nb = b.x * b.x + b.y * b.y, nc = c.x * c.x + c.y * c.y;
  const Point2<Rational> o{(na * (b.y - c.y) + nb * (c.y - a.y) + nc * (a.y - b.y)) / d,
                           (na * (c.x - b.x) + nb * (a.x - c.x) + nc * (b.x - a.x)) / d};
  const Rational r2 = (a.x - o.x) * (a.x - o.x) + (a.y - o.y) * (a.y - o.y);
  return {o, r2};  // radius slot holds the squared radius
}

double bisect(auto f, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((f(lo) > 0) == (f(mid) > 0)) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b)); }

}  // namespace

TEST_CASE("torus cross-section") {
  const auto c = torus_cross_section(2.0);
  CHECK(c.c1 == 2.0);
  CHECK(c.c2 == -2.0);
  CHECK(c.r1 == 1.0);
  CHECK(c.exterior());
  CHECK_THROWS_AS(torus_cross_section(1.0), Error);
  CHECK_THROWS_AS(torus_cross_section(Rational(1, 2)), Error);
}

TEST_CASE("point inversion") {
  CHECK(invert_point_2d(Point2<double>{0, 0}, Point2<double>{2, 0}) == Point2<double>{0.5, 0});
  CHECK(invert_point_2d(Point2<double>{1, 0}, Point2<double>{3, 0}) == Point2<double>{1.5, 0});
  const Point2<Rational> o{q("1/3"), q("-2/7")};
  const Point2<Rational> x{q("5/2"), q("4/9")};
  CHECK(invert_point_2d(o, invert_point_2d(o, x)) == x);
  CHECK_THROWS_AS(invert_point_2d(o, o), Error);
  CHECK(std::holds_alternative<Infinity>(invert_extended(o, ExtendedPoint<Rational>{o})));
  CHECK(std::get<Point2<Rational>>(invert_extended(o, ExtendedPoint<Rational>{Infinity{}})) == o);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int i = 0; i < 100; ++i) {
    const Point2<double> c{u(rng), u(rng)}, p{u(rng), u(rng)};
    const auto back = invert_point_2d(c, invert_point_2d(c, p));
    CHECK(back.x == doctest::Approx(p.x).epsilon(1e-9));
    CHECK(back.y == doctest::Approx(p.y).epsilon(1e-9));
  }
}

TEST_CASE("inverted cross-sections") {
  const auto p = inverted_cross_section(Rational(0), Rational(2));
  CHECK(p.r1 == q("1/3"));
  CHECK(p.r2 == q("1/3"));
  CHECK(p.c1 == q("2/3"));
  CHECK(p.c2 == q("-2/3"));
  const auto s = inverted_cross_section(0.0, sqrt2);
  CHECK(s.r1 == doctest::Approx(1.0));
  CHECK(s.c1 == doctest::Approx(sqrt2));
  CHECK_THROWS_AS(inverted_cross_section(Rational(1), Rational(2)), Error);
  CHECK_THROWS_AS(inverted_cross_section(Rational(3), Rational(2)), Error);
}

TEST_CASE("circle images against three-point construction") {
  for (const auto& [rho, R] : {std::pair{q("1/2"), Rational(2)}, {q("3/2"), q("5/4")}, {q("7/3"), Rational(3)}}) {
    const Point2<Rational> center{rho, 0};
    const auto pair = inverted_cross_section(rho, R);
    for (int side : {1, -1}) {
      const Circle<Rational> c{{Rational(side) * R, 0}, 1};
      const Point2<Rational> a{c.center.x + 1, 0}, b{c.center.x - 1, 0}, top{c.center.x, 1};
      if (a == center || b == center) continue;
      const auto oracle =
          circumcircle(invert_point_2d(center, a), invert_point_2d(center, b), invert_point_2d(center, top));
      const auto image = invert_circle(center, c);
      CHECK(image.center == oracle.center);
      CHECK(image.radius * image.radius == oracle.radius);
      CHECK(image.center.x == (side == 1 ? pair.c1 : pair.c2));
      CHECK(image.radius == (side == 1 ? pair.r1 : pair.r2));
    }
  }
}

TEST_CASE("radical axis") {
  CHECK(radical_axis(CirclePair<double>{2, -2, 1, 1}) == 0.0);
  const CirclePair<double> p{0, 3, 1, 2};
  const double oracle = bisect([&](double x) { return (x * x - 1) - ((x - 3) * (x - 3) - 4); }, -10, 10);
  CHECK(radical_axis(p) == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(radical_axis(p) == doctest::Approx(1.0));
  for (const auto& [rho, R] : {std::pair{q("1/2"), Rational(2)}, {q("2/5"), q("3/2")}})
    CHECK(radical_axis(inverted_cross_section(rho, R)) == rho - rho / (rho * rho + 1 - R * R));
  CHECK_THROWS_AS(radical_axis(CirclePair<double>{1, 1, 1, 2}), Error);
}

TEST_CASE("cyclide measurements") {
  const auto m = cyclide_measurements(0.0, sqrt2);
  CHECK(m.r1 == doctest::Approx(1.0));
  CHECK(m.r2 == doctest::Approx(1.0));
  CHECK(m.d == doctest::Approx(2 * sqrt2));
  CHECK(m.plane == SymmetryPlane::P1);
  for (double R : {1.2, sqrt2, 2.5}) {
    for (int i = 1; i < 10; ++i) {
      const double rho = (R - 1) * i / 10.0;
      const auto c = cyclide_measurements(rho, R);
      const double lambda = ((rho + R) * (rho + R) - 1) / ((rho - R) * (rho - R) - 1);
      CHECK(c.r1 / c.r2 == doctest::Approx(lambda).epsilon(1e-12));
      CHECK(c.d / c.r2 ==
            doctest::Approx(std::sqrt((lambda - 1) * (lambda - 1) + 4 * lambda * R * R)).epsilon(1e-12));
      CHECK(p1_coordinate_plane(rho, R) == CoordinatePlane::xz);
    }
    CHECK(p1_coordinate_plane(0.5 * (R - 1 + std::sqrt(R * R - 1)), R) == CoordinatePlane::xy);
  }
  CHECK_THROWS_AS(cyclide_measurements(sqrt2 - 1, sqrt2), Error);
  CHECK_THROWS_AS(cyclide_measurements(1.5, sqrt2), Error);
  const auto exact = cyclide_measurements(q("1/3"), Rational(2));
  CHECK(exact.r1 / exact.r2 == q("5/2"));
  CHECK(lambda1(q("1/3"), Rational(2)) == q("5/2"));
}

TEST_CASE("Maxwell data and the P1/P2 map") {
  const CyclideMeasurements<double> m{1, 1, 2 * sqrt2, SymmetryPlane::P1};
  const auto w = maxwell_data(m);
  CHECK(w.a == doctest::Approx(sqrt2));
  CHECK(w.f == 0.0);
  CHECK(w.L == doctest::Approx(sqrt2 + 1));
  CHECK(w.toroidal);
  CHECK_FALSE(maxwell_data(CyclideMeasurements<double>{1, 1, 2, SymmetryPlane::P1}).toroidal);
  const auto p2 = p1_to_p2(m);
  CHECK(p2.r1 == doctest::Approx(sqrt2 + 1));
  CHECK(p2.r2 == doctest::Approx(sqrt2 - 1));
  CHECK(p2.d == doctest::Approx(0.0));
  CHECK(p2.plane == SymmetryPlane::P2);
  CHECK_THROWS_AS(maxwell_data(p2), Error);

  const CyclideMeasurements<Rational> e{q("7/2"), q("1/3"), q("11/2"), SymmetryPlane::P1};
  const auto t = p1_to_p2(e);
  CHECK(t.r1 + t.r2 == e.d);
  const auto back = p2_to_p1(t);
  CHECK(back.r1 == e.r1);
  CHECK(back.r2 == e.r2);
  CHECK(back.d == e.d);
}

TEST_CASE("lambda branches") {
  for (double R : {1.1, 1.2, sqrt2, 3.0}) {
    CHECK(lambda1(0.0, R) == doctest::Approx(1.0));
    CHECK(lambda2(std::sqrt(R * R - 1), R) == doctest::Approx(1.0));
    double prev1 = 0, prev2 = 1e300;
    for (int i = 0; i < 1000; ++i) {
      const double r1 = (R - 1) * i / 1000.0;
      const double l1 = lambda1(r1, R);
      CHECK(l1 > prev1);
      prev1 = l1;
      const double s = std::sqrt(R * R - 1);
      const double r2 = (R - 1) + (s - (R - 1)) * (i + 1) / 1000.0;
      const double l2 = lambda2(r2, R);
      CHECK(l2 < prev2);
      prev2 = l2;
    }
  }
  CHECK_THROWS_AS(lambda1(0.5, sqrt2), Error);
  CHECK_THROWS_AS(lambda2(0.2, sqrt2), Error);
}

TEST_CASE("lambda2 inverse against bisection") {
  for (double R : {1.2, sqrt2, 2.0})
    for (double lambda : {1.0, 1.5, 4.0, 30.0}) {
      const double s = std::sqrt(R * R - 1);
      const double oracle = bisect([&](double r) { return lambda2(r, R) - lambda; }, R - 1 + 1e-12, s);
      CHECK(lambda2_inverse(lambda, R) == doctest::Approx(oracle).epsilon(1e-10));
    }
}

TEST_CASE("inversion center classification") {
  CHECK(classify_inversion_center(0.0, sqrt2) == CenterLocation::outside);
  CHECK(classify_inversion_center(Rational(1), Rational(2)) == CenterLocation::on);
  CHECK(classify_inversion_center(Rational(3), Rational(2)) == CenterLocation::on);
  CHECK(classify_inversion_center(sqrt2, sqrt2) == CenterLocation::inside);
  CHECK(classify_inversion_center(Rational(4), Rational(2)) == CenterLocation::outside);
  CHECK(to_string(CenterLocation::inside) == "inside");
}

TEST_CASE("family circles") {
  for (double R : {1.2, sqrt2, 2.0}) {
    const auto [p, m] = rho_pair_through_point(R - 1, 0, R);
    CHECK(std::min(p, m) == doctest::Approx(R - 1));
    CHECK(std::max(p, m) == doctest::Approx(R + 1));
    const double s = std::sqrt(R * R - 1);
    const auto [dp, dm] = rho_pair_through_point(s, 0, R);
    CHECK(dp == doctest::Approx(s).epsilon(1e-6));
    CHECK(dm == doctest::Approx(s).epsilon(1e-6));
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(0.05, 3);
    for (int i = 0; i < 50; ++i) {
      const auto [a, b] = rho_pair_through_point(u(rng), u(rng) - 1.5, R);
      CHECK(a * b == doctest::Approx(R * R - 1).epsilon(1e-12));
    }
    CHECK(fold_to_canonical(R * R, R) == doctest::Approx((R * R - 1) / (R * R)));
  }
}

TEST_CASE("homothety along family circles") {
  for (double R : {1.2, sqrt2, 2.0})
    for (double rho : {0.1, 0.3}) {
      if (rho >= R - 1) continue;
      const auto [ref_l, ref_d] = shape_ratio(cyclide_measurements(rho, R));
      for (int k = 0; k < 10; ++k) {
        const auto p = point_on_family_circle(rho, R, 0.3 + 0.6 * k);
        const auto [l, d] = shape_ratio(section_through(p, R, SymmetryPlane::P1));
        CHECK(close(l, ref_l, 1e-12));
        CHECK(close(d, ref_d, 1e-12));
      }
    }
}

TEST_CASE("duality") {
  const auto [R, rho] = duality_map(sqrt2, 0.0);
  CHECK(R == doctest::Approx(sqrt2));
  CHECK(rho == doctest::Approx(1.0));
  for (double Rv : {1.2, sqrt2, 2.0}) {
    const double s = std::sqrt(Rv * Rv - 1);
    for (int i = 0; i <= 10; ++i) {
      const double r = s * i / 10.0;
      if (std::abs(r - (Rv - 1)) < 1e-3) continue;
      const auto [R2, r2] = duality_map(Rv, r);
      if (std::abs(r2 - (R2 - 1)) < 1e-3) continue;
      const auto [l1, d1] = shape_ratio(cyclide_measurements(r, Rv));
      const auto [l2, d2] = shape_ratio(cyclide_measurements(r2, R2));
      CHECK(close(l1, l2, 1e-12));
      CHECK(close(d1, d2, 1e-12));
    }
  }
  CHECK_THROWS_AS(duality_map(sqrt2, 1.5), Error);
}

TEST_CASE("branch coincidence only for the Clifford torus") {
  auto gap = [](double R, double rho1) {
    const double rho2 = lambda2_inverse(lambda1(rho1, R), R);
    const auto [la, da] = shape_ratio(cyclide_measurements(rho1, R));
    const auto [lb, db] = shape_ratio(cyclide_measurements(rho2, R));
    CHECK(close(la, lb, 1e-12));
    return std::abs(da - db) / da;
  };
  for (double rho1 : {0.05, 0.2, 0.35}) {
    CHECK(gap(sqrt2, rho1) < 1e-12);
    CHECK(gap(1.2, rho1 * 0.5) > 1e-3);
  }
}

TEST_CASE("measurement json") {
  const auto j = nlohmann::json::parse(to_json(cyclide_measurements(0.2, 1.41421356), 0.2, 1.41421356));
  CHECK(j["plane"] == "P1");
  CHECK(j["rho"] == 0.2);
  CHECK(j.size() == 6);
}
