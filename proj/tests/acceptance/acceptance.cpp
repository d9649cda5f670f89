// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "clifford/error.hpp"
#include "clifford/geometry.hpp"
#include "clifford/quadrature.hpp"
#include "clifford/recurrence.hpp"
#include "clifford/series.hpp"

using namespace clifford;
namespace rec = clifford::recurrence;
namespace geo = clifford::geometry;
namespace quad = clifford::quadrature;

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;
const double rho = 3 + 2 * sqrt2;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }

// Shared exact data, computed once.
std::vector<Rational> area_direct, volume_direct, dseq_direct;
SeriesTable dseq_long;

Outcome coefficient_goldens() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto a = series::area_coeffs(6);
  const auto v = series::volume_coeffs(6);
  const auto d = series::d_coeffs(5, a, v);
  const double t = seconds_since(t0);
  auto q = [](const char* s) { return parse_rational(s); };
  const bool ok = std::vector<Rational>(a.begin(), a.begin() + 5) ==
                      std::vector<Rational>{4, 52, 477, 3809, q("451625/16")} &&
                  std::vector<Rational>(v.begin(), v.begin() + 5) ==
                      std::vector<Rational>{2, 48, q("1269/2"), 6600, q("1928025/32")} &&
                  d == std::vector<Rational>{72, 1932, 31248, q("790101/2"), q("17208645/4")};
  return {ok && t < 10.0, fmt("exact match %s, %.3f s", ok ? "yes" : "no", t)};
}

Outcome recurrence_verification() {
  const bool spot = -84 * 4 + 399 * 52 - 474 * 477 + 54 * 3809 == 0;
  const auto va = rec::check_satisfies(rec::known::area(), area_direct, 200);
  const auto vv = rec::check_satisfies(rec::known::volume(), volume_direct, 200);
  const auto vd = rec::check_satisfies(rec::known::dseq(), dseq_direct, 100);
  return {spot && !va && !vv && !vd,
          fmt("area n<=200 %s, volume n<=200 %s, dseq n<=100 %s, spot identity %s", va ? "FAIL" : "ok",
              vv ? "FAIL" : "ok", vd ? "FAIL" : "ok", spot ? "ok" : "FAIL")};
}

Outcome guessing() {
  auto one = [](std::span<const Rational> seq, std::size_t r, std::size_t d, const rec::PRecurrence& known) {
    const auto g = rec::guess(seq, r, d);
    return g.basis.size() == 1 && rec::equivalent(g.basis.front(), known);
  };
  const bool a = one(area_direct, 3, 4, rec::known::area());
  const bool v = one(volume_direct, 3, 4, rec::known::volume());
  const auto t0 = std::chrono::steady_clock::now();
  const bool d = one(dseq_direct, 7, 7, rec::known::dseq());
  const double t = seconds_since(t0);
  return {a && v && d && t < 120.0,
          fmt("area(3,4) %s, volume(3,4) %s, dseq(7,7) %s in %.2f s", a ? "unique" : "FAIL", v ? "unique" : "FAIL",
              d ? "unique" : "FAIL", t)};
}

Outcome characteristic_polynomials() {
  const std::vector<Integer> cubic{-1, 7, -7, 1};
  const bool a = rec::characteristic_poly(rec::known::area()) == cubic;
  const bool v = rec::characteristic_poly(rec::known::volume()) == cubic;
  const auto p = rec::characteristic_poly(rec::known::dseq());
  bool palin = p.size() == 8;
  for (std::size_t i = 0; palin && i < p.size(); ++i) palin = p[i] == -p[p.size() - 1 - i];
  const auto roots = rec::char_roots(p);
  const std::vector<std::pair<double, unsigned>> expected{{rho, 2}, {1.0, 3}, {1.0 / rho, 2}};
  bool match = roots.size() == expected.size();
  double worst = 0;
  for (std::size_t i = 0; match && i < roots.size(); ++i) {
    worst = std::max(worst, std::abs(roots[i].value - expected[i].first));
    match = roots[i].multiplicity == expected[i].second;
  }
  match = match && worst < 1e-10;
  return {a && v && palin && match,
          fmt("cubic %s/%s, degree-7 palindrome %s, roots %s (max error %.1e)", a ? "ok" : "FAIL", v ? "ok" : "FAIL",
              palin ? "ok" : "FAIL", match ? "ok" : "FAIL", worst)};
}

Outcome positivity() {
  const auto t0 = std::chrono::steady_clock::now();
  dseq_long = series::build_table(SeriesKind::dseq, 10001);
  const auto report = rec::positivity_scan(dseq_long.terms, 10000);
  const double t = seconds_since(t0);
  std::string detail = report.all_positive
                           ? fmt("d_n > 0 for n <= 10000, %.1f s", t)
                           : fmt("first non-positive d_n at n = %zu, %.1f s", *report.first_nonpositive, t);
  return {report.all_positive && t < 300.0, detail};
}

Outcome asymptotics() {
  if (dseq_long.size() < 5001) return {false, "no extended dseq table"};
  const rec::AsymptoticModel model;
  const double c1 = rec::asymptotic_constant(dseq_long.terms, 1250, model, 256);
  const double c2 = rec::asymptotic_constant(dseq_long.terms, 2500, model, 256);
  const double c3 = rec::asymptotic_constant(dseq_long.terms, 5000, model, 256);
  const bool within = rel_close(c3, 8.071956, 0.05);
  const bool shrinking = std::abs(c3 - c2) < std::abs(c2 - c1);
  return {within && shrinking, fmt("c_1250 = %.6f, c_2500 = %.6f, c_5000 = %.6f (%.2f%% from 8.071956)", c1, c2, c3,
                                   100 * std::abs(c3 / 8.071956 - 1))};
}

Outcome cross_validation() {
  const auto area = series::build_table(SeriesKind::area, 200);
  const auto volume = series::build_table(SeriesKind::volume, 200);
  double worst = 0;
  for (double a : {0.0, 0.1, 0.2, 0.3}) {
    const double sa = series::series_eval(area, a, series::truncation_for(area, a, 1e-15), false).value;
    const double sv = series::series_eval(volume, a, series::truncation_for(volume, a, 1e-15), false).value;
    worst = std::max(worst, std::abs(quad::area_numeric(a).value / sa - 1));
    worst = std::max(worst, std::abs(quad::volume_numeric(a).value / sv - 1));
  }
  const double iso0 = quad::iso_ratio(0.0);
  const double iso0_exact = 1.5 * std::pow(2 * pi * pi, -0.25);
  const auto curve = quad::iso_curve(41, 0.40);
  bool increasing = true;
  for (std::size_t i = 1; i < curve.size(); ++i) increasing = increasing && curve[i].iso > curve[i - 1].iso;
  const double iso41 = quad::iso_ratio(0.41);
  const bool ok = worst <= 1e-8 && std::abs(iso0 - iso0_exact) <= 1e-8 && increasing && iso41 >= 0.98;
  return {ok, fmt("max rel. disagreement %.1e, Iso(0) error %.1e, increasing %s, Iso(0.41) = %.6f", worst,
                  std::abs(iso0 - iso0_exact), increasing ? "yes" : "no", iso41)};
}

Outcome rounding() {
  const double sphere = quad::sphere_rounding_exact(1e-2).scaled_area / pi;
  const auto torus = quad::rounding_row(quad::Surface::torus, 1e-3);
  const double ta = torus.scaled_area / pi;
  const double tv = 6 * torus.scaled_volume / pi;
  const bool ok = sphere >= 0.99 && sphere <= 1.01 && std::abs(ta - 1) <= 0.02 && std::abs(tv - 1) <= 0.02;
  return {ok, fmt("sphere eps^2 A/pi = %.6f at 1e-2; torus eps^2 A/pi = %.6f, 6 eps^3 V/pi = %.6f at 1e-3", sphere,
                  ta, tv)};
}

Outcome geometry_invariants() {
  double homothety = 0, duality = 0;
  for (double R : {1.2, sqrt2, 2.0}) {
    const double varrho = 0.15;
    const auto [l0, d0] = geo::shape_ratio(geo::cyclide_measurements(varrho, R));
    for (int k = 0; k < 10; ++k) {
      const auto p = geo::point_on_family_circle(varrho, R, 0.2 + 0.6 * k);
      const auto [l, d] = geo::shape_ratio(geo::section_through(p, R, geo::SymmetryPlane::P1));
      homothety = std::max({homothety, std::abs(l / l0 - 1), std::abs(d / d0 - 1)});
    }
    const double s = std::sqrt(R * R - 1);
    for (double t : {0.0, 0.05, 0.1, 0.9, 1.0}) {
      const double r = t * s;
      const auto [R2, r2] = geo::duality_map(R, r);
      const auto [l1, d1] = geo::shape_ratio(geo::cyclide_measurements(r, R));
      const auto [l2, d2] = geo::shape_ratio(geo::cyclide_measurements(r2, R2));
      duality = std::max({duality, std::abs(l2 / l1 - 1), std::abs(d2 / d1 - 1)});
    }
  }
  auto branch_gap = [](double R) {
    double gap = 0;
    for (double frac : {0.2, 0.5, 0.8}) {
      const double r1 = frac * (R - 1);
      const double r2 = geo::lambda2_inverse(geo::lambda1(r1, R), R);
      const auto [la, da] = geo::shape_ratio(geo::cyclide_measurements(r1, R));
      const auto [lb, db] = geo::shape_ratio(geo::cyclide_measurements(r2, R));
      gap = std::max({gap, std::abs(lb / la - 1), std::abs(db / da - 1)});
    }
    return gap;
  };
  const double clifford_gap = branch_gap(sqrt2);
  const double other_gap = branch_gap(1.2);
  const bool ok = homothety <= 1e-12 && duality <= 1e-12 && clifford_gap <= 1e-12 && other_gap > 1e-6;
  return {ok, fmt("homothety %.1e, duality %.1e, branch gap R=sqrt2 %.1e, R=1.2 %.3f", homothety, duality,
                  clifford_gap, other_gap)};
}

}  // namespace

int main() {
  std::printf("preparing direct coefficient tables...\n");
  std::fflush(stdout);
  area_direct = series::area_coeffs(205);
  volume_direct = series::volume_coeffs(205);
  dseq_direct = series::d_coeffs(204, area_direct, volume_direct);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"coefficient goldens", coefficient_goldens},
      {"recurrence verification", recurrence_verification},
      {"guessing reproduction", guessing},
      {"characteristic polynomials", characteristic_polynomials},
      {"positivity scan", positivity},
      {"asymptotics", asymptotics},
      {"series/quadrature cross-validation", cross_validation},
      {"rounding limits", rounding},
      {"geometry invariants", geometry_invariants},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("criterion %zu %s: %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
