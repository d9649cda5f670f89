#include "clifford/geometry.hpp"

#include <cmath>
#include <limits>
#include <type_traits>

#include "json.hpp"

#include "clifford/error.hpp"
#include "clifford/format.hpp"

namespace clifford::geometry {

namespace {

template <class T>
T absval(const T& x) {
  return x < T(0) ? T(-x) : x;
}

template <class T>
T sq(const T& x) {
  return x * x;
}

// Upper end of the canonical range sqrt(R^2-1), squared. Doubles get a few
// ulps of slack so that computed endpoints such as sqrt(R*R-1) are accepted.
template <class T>
T canonical_bound2(const T& R) {
  const T s2 = sq(R) - T(1);
  if constexpr (std::is_floating_point_v<T>)
    return s2 * (1.0 + 8.0 * std::numeric_limits<double>::epsilon());
  else
    return s2;
}

template <class T>
void require_torus(const T& R) {
  if (!(R > T(1))) throw Error(Errc::invalid_torus, "major radius must exceed the unit minor radius");
}

}  // namespace

template <class T>
bool CirclePair<T>::exterior() const {
  return absval(T(c1 - c2)) > r1 + r2;
}

template <class T>
bool CirclePair<T>::nested() const {
  return absval(T(c1 - c2)) < absval(T(r1 - r2));
}

template <class T>
CirclePair<T> torus_cross_section(const T& R) {
  require_torus(R);
  return CirclePair<T>{R, T(-R), T(1), T(1)};
}

template <class T>
Point2<T> invert_point_2d(const Point2<T>& center, const Point2<T>& x) {
  const T dx = x.x - center.x;
  const T dy = x.y - center.y;
  const T norm2 = dx * dx + dy * dy;
  if (norm2 == T(0)) throw Error(Errc::pole_at_center, "the inversion center maps to infinity");
  return Point2<T>{T(center.x + dx / norm2), T(center.y + dy / norm2)};
}

template <class T>
ExtendedPoint<T> invert_extended(const Point2<T>& center, const ExtendedPoint<T>& x) {
  if (std::holds_alternative<Infinity>(x)) return center;
  const auto& p = std::get<Point2<T>>(x);
  if (p == center) return Infinity{};
  return invert_point_2d(center, p);
}

template <class T>
Circle<T> invert_circle(const Point2<T>& center, const Circle<T>& c) {
  const T dx = c.center.x - center.x;
  const T dy = c.center.y - center.y;
  const T power = dx * dx + dy * dy - c.radius * c.radius;
  if (power == T(0)) throw Error(Errc::inversion_center_on_surface, "inversion center lies on the circle");
  return Circle<T>{Point2<T>{T(center.x + dx / power), T(center.y + dy / power)}, T(c.radius / absval(power))};
}

template <class T>
CirclePair<T> inverted_cross_section(const T& varrho, const T& R) {
  require_torus(R);
  if (varrho < T(0)) throw Error(Errc::domain, "varrho must be nonnegative");
  const T minus = varrho - R;
  const T plus = varrho + R;
  const T k1 = sq(minus) - T(1);
  const T k2 = sq(plus) - T(1);
  if (k1 == T(0)) throw Error(Errc::inversion_center_on_surface, "varrho = R -+ 1 lies on the torus");
  CirclePair<T> out;
  out.r1 = T(1) / absval(k1);
  out.r2 = T(1) / k2;
  out.c1 = varrho - minus / k1;
  out.c2 = varrho - plus / k2;
  return out;
}

template <class T>
T radical_axis(const CirclePair<T>& p) {
  if (p.c1 == p.c2) throw Error(Errc::no_radical_axis, "concentric circles have no radical axis");
  return (sq(p.c2) - sq(p.c1) + sq(p.r1) - sq(p.r2)) / (T(2) * (p.c2 - p.c1));
}

template <class T>
CyclideMeasurements<T> cyclide_measurements(const T& varrho, const T& R) {
  require_torus(R);
  const T inner = R - T(1);
  if (varrho == inner) throw Error(Errc::inversion_center_on_surface, "varrho = R - 1 lies on the torus");
  if (varrho < T(0) || sq(varrho) > canonical_bound2(R))
    throw Error(Errc::out_of_canonical_range, "varrho outside [0, sqrt(R^2-1)]; fold or dualize first");

  CyclideMeasurements<T> m;
  m.plane = SymmetryPlane::P1;
  if (varrho < inner) {
    const T k1 = sq(T(varrho - R)) - T(1);
    const T k2 = sq(T(varrho + R)) - T(1);
    m.r1 = T(1) / k1;
    m.r2 = T(1) / k2;
    m.d = (varrho + R) / k2 - (varrho - R) / k1;
  } else {
    m.r1 = (R - T(1)) / (sq(varrho) - sq(inner));
    m.r2 = (R + T(1)) / (sq(T(R + T(1))) - sq(varrho));
    m.d = T(1) / (sq(T(R + varrho)) - T(1)) - T(1) / (sq(T(R - varrho)) - T(1));
  }
  if (m.r1 < m.r2) std::swap(m.r1, m.r2);
  return m;
}

template <class T>
CoordinatePlane p1_coordinate_plane(const T& varrho, const T& R) {
  cyclide_measurements(varrho, R);  // domain checks
  return varrho < R - T(1) ? CoordinatePlane::xz : CoordinatePlane::xy;
}

template <class T>
MaxwellData<T> maxwell_data(const CyclideMeasurements<T>& m) {
  if (m.plane != SymmetryPlane::P1) throw Error(Errc::domain, "Maxwell data needs P1 measurements");
  MaxwellData<T> out;
  out.a = m.d / T(2);
  out.f = (m.r1 - m.r2) / T(2);
  out.L = (m.d + m.r1 + m.r2) / T(2);
  const T gap = out.L - out.a;
  out.toroidal = out.a > gap && gap > out.f;
  return out;
}

template <class T>
CyclideMeasurements<T> p1_to_p2(const CyclideMeasurements<T>& m) {
  if (m.plane != SymmetryPlane::P1) throw Error(Errc::domain, "expected P1 measurements");
  CyclideMeasurements<T> out;
  out.r1 = (m.d + (m.r1 + m.r2)) / T(2);
  out.r2 = (m.d - (m.r1 + m.r2)) / T(2);
  out.d = m.r1 - m.r2;
  out.plane = SymmetryPlane::P2;
  return out;
}

template <class T>
CyclideMeasurements<T> p2_to_p1(const CyclideMeasurements<T>& m) {
  if (m.plane != SymmetryPlane::P2) throw Error(Errc::domain, "expected P2 measurements");
  CyclideMeasurements<T> out;
  out.r1 = (m.r1 - m.r2 + m.d) / T(2);
  out.r2 = (m.r1 - m.r2 - m.d) / T(2);
  out.d = m.r1 + m.r2;
  out.plane = SymmetryPlane::P1;
  return out;
}

template <class T>
T lambda1(const T& varrho, const T& R) {
  require_torus(R);
  if (varrho < T(0) || !(varrho < R - T(1))) throw Error(Errc::domain, "lambda1 needs varrho in [0, R-1)");
  return (sq(T(varrho + R)) - T(1)) / (sq(T(varrho - R)) - T(1));
}

template <class T>
T lambda2(const T& varrho, const T& R) {
  require_torus(R);
  if (!(varrho > R - T(1)) || sq(varrho) > canonical_bound2(R))
    throw Error(Errc::domain, "lambda2 needs varrho in (R-1, sqrt(R^2-1)]");
  return (R - T(1)) * (sq(T(R + T(1))) - sq(varrho)) / ((R + T(1)) * (sq(varrho) - sq(T(R - T(1)))));
}

template <class T>
CenterLocation classify_inversion_center(const T& varrho, const T& R) {
  require_torus(R);
  if (varrho < T(0)) throw Error(Errc::domain, "varrho must be nonnegative");
  if (varrho == R - T(1) || varrho == R + T(1)) return CenterLocation::on;
  if (varrho < R - T(1) || varrho > R + T(1)) return CenterLocation::outside;
  return CenterLocation::inside;
}

template <class T>
std::pair<T, T> shape_ratio(const CyclideMeasurements<T>& m) {
  return {T(m.r1 / m.r2), T(m.d / m.r2)};
}

template <class T>
CyclideMeasurements<T> pair_measurements(const Circle<T>& a, const Circle<T>& b, SymmetryPlane plane) {
  CyclideMeasurements<T> m;
  m.r1 = a.radius;
  m.r2 = b.radius;
  if (m.r1 < m.r2) std::swap(m.r1, m.r2);
  const T dx = a.center.x - b.center.x;
  const T dy = a.center.y - b.center.y;
  if constexpr (std::is_same_v<T, double>) {
    m.d = std::hypot(dx, dy);
  } else {
    if (dy != T(0)) throw Error(Errc::domain, "exact distance needs centers on a common axis");
    m.d = absval(dx);
  }
  m.plane = plane;
  return m;
}

double lambda2_inverse(double lambda, double R) {
  require_torus(R);
  if (!(lambda >= 1.0)) throw Error(Errc::domain, "lambda2 takes values in [1, inf)");
  const double num = (R - 1.0) * (R + 1.0) * ((R + 1.0) + lambda * (R - 1.0));
  const double den = lambda * (R + 1.0) + (R - 1.0);
  return std::sqrt(num / den);
}

std::pair<double, double> duality_map(double R, double varrho) {
  require_torus(R);
  const double s = std::sqrt(R * R - 1.0);
  if (varrho < 0.0 || varrho * varrho > canonical_bound2(R)) throw Error(Errc::domain, "duality needs varrho in [0, sqrt(R^2-1)]");
  return {R / s, (s - varrho) / ((s + varrho) * s)};
}

double fold_to_canonical(double varrho, double R) {
  require_torus(R);
  if (varrho < 0.0) throw Error(Errc::domain, "varrho must be nonnegative");
  const double s2 = R * R - 1.0;
  return varrho * varrho > s2 ? s2 / varrho : varrho;
}

std::pair<double, double> rho_pair_through_point(double rho, double z, double R) {
  require_torus(R);
  if (!(rho > 0.0)) throw Error(Errc::domain, "rho must be positive");
  const double s = rho * rho + z * z + R * R - 1.0;
  double disc = s * s - 4.0 * rho * rho * (R * R - 1.0);
  // (rho^2 + z^2 - (R^2-1))^2 + 4 z^2 (R^2-1) >= 0; only rounding can make it negative
  if (disc < 0.0) {
    if (disc < -1e-12 * s * s) throw Error(Errc::degenerate, "negative discriminant");
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  const double plus = (s + root) / (2.0 * rho);
  // product is R^2 - 1; dividing avoids cancellation in s - root
  const double minus = (R * R - 1.0) / plus;
  return {plus, minus};
}

Point2<double> point_on_family_circle(double varrho, double R, double t) {
  require_torus(R);
  if (!(varrho > 0.0)) throw Error(Errc::domain, "C(0) is the axis, not a circle");
  const double other = (R * R - 1.0) / varrho;
  const double mid = 0.5 * (varrho + other);
  const double radius = 0.5 * std::abs(other - varrho);
  return Point2<double>{mid + radius * std::cos(t), radius * std::sin(t)};
}

CyclideMeasurements<double> section_through(const Point2<double>& center, double R, SymmetryPlane plane) {
  require_torus(R);
  const Circle<double> right{{R, 0.0}, 1.0};
  const Circle<double> left{{-R, 0.0}, 1.0};
  return pair_measurements(invert_circle(center, right), invert_circle(center, left), plane);
}

std::string to_string(SymmetryPlane plane) { return plane == SymmetryPlane::P1 ? "P1" : "P2"; }

std::string to_string(CenterLocation location) {
  switch (location) {
    case CenterLocation::outside: return "outside";
    case CenterLocation::on: return "on";
    case CenterLocation::inside: return "inside";
  }
  return "outside";
}

std::string to_json(const CyclideMeasurements<double>& m, double varrho, double R) {
  nlohmann::ordered_json j;
  j["rho"] = round_to_15(varrho);
  j["R"] = round_to_15(R);
  j["r1"] = round_to_15(m.r1);
  j["r2"] = round_to_15(m.r2);
  j["d"] = round_to_15(m.d);
  j["plane"] = to_string(m.plane);
  return j.dump();
}

#define CLIFFORD_GEOMETRY_INSTANTIATE(T)                                                           \
  template struct CirclePair<T>;                                                                   \
  template CirclePair<T> torus_cross_section(const T&);                                            \
  template Point2<T> invert_point_2d(const Point2<T>&, const Point2<T>&);                          \
  template ExtendedPoint<T> invert_extended(const Point2<T>&, const ExtendedPoint<T>&);            \
  template Circle<T> invert_circle(const Point2<T>&, const Circle<T>&);                            \
  template CirclePair<T> inverted_cross_section(const T&, const T&);                               \
  template T radical_axis(const CirclePair<T>&);                                                   \
  template CyclideMeasurements<T> cyclide_measurements(const T&, const T&);                        \
  template CoordinatePlane p1_coordinate_plane(const T&, const T&);                                \
  template MaxwellData<T> maxwell_data(const CyclideMeasurements<T>&);                             \
  template CyclideMeasurements<T> p1_to_p2(const CyclideMeasurements<T>&);                         \
  template CyclideMeasurements<T> p2_to_p1(const CyclideMeasurements<T>&);                         \
  template T lambda1(const T&, const T&);                                                          \
  template T lambda2(const T&, const T&);                                                          \
  template CenterLocation classify_inversion_center(const T&, const T&);                           \
  template std::pair<T, T> shape_ratio(const CyclideMeasurements<T>&);                             \
  template CyclideMeasurements<T> pair_measurements(const Circle<T>&, const Circle<T>&, SymmetryPlane);

CLIFFORD_GEOMETRY_INSTANTIATE(double)
CLIFFORD_GEOMETRY_INSTANTIATE(Rational)

#undef CLIFFORD_GEOMETRY_INSTANTIATE

}  // namespace clifford::geometry
