#pragma once

// Plane geometry of circle inversions of the torus T_R (major radius R,
// minor radius 1) and the shape measurements of the resulting cyclides.
//
// The rational-function operations are templates instantiated for
// `double` and for exact `Rational`; with rational rho and R they are
// exact. Operations involving square roots are double only.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "clifford/rational.hpp"

namespace clifford::geometry {

template <class T>
struct Point2 {
  T x{};
  T y{};
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/// A point of the extended plane.
template <class T>
using ExtendedPoint = std::variant<Point2<T>, Infinity>;

/// Two circles centered on the symmetry axis.
template <class T>
struct CirclePair {
  T c1{}, c2{};  // center abscissas
  T r1{}, r2{};  // radii

  /// Neither circle contains the other.
  bool exterior() const;
  /// One circle lies inside the other.
  bool nested() const;
};

template <class T>
struct Circle {
  Point2<T> center;
  T radius{};
};

enum class SymmetryPlane { P1, P2 };
enum class CoordinatePlane { xz, xy };

template <class T>
struct CyclideMeasurements {
  T r1{}, r2{}, d{};  // r1 >= r2 > 0, d > 0
  SymmetryPlane plane = SymmetryPlane::P1;
};

/// Maxwell's string construction: ellipse semi-major axis a, focal length f,
/// string length L. Toroidal iff a > L - a > f.
template <class T>
struct MaxwellData {
  T a{}, f{}, L{};
  bool toroidal = false;
};

enum class CenterLocation { outside, on, inside };

/// Cross-section of T_R with a plane through its axis: unit circles at +-R.
/// Throws Error{invalid_torus} for R <= 1.
template <class T>
CirclePair<T> torus_cross_section(const T& R);

/// Inversion in the unit circle about `center`. Throws Error{pole_at_center}
/// for x == center; use invert_extended to map it to infinity instead.
template <class T>
Point2<T> invert_point_2d(const Point2<T>& center, const Point2<T>& x);

template <class T>
ExtendedPoint<T> invert_extended(const Point2<T>& center, const ExtendedPoint<T>& x);

/// Image circle of `c` under unit inversion about `center`.
/// Throws Error{inversion_center_on_surface} when center lies on c.
template <class T>
Circle<T> invert_circle(const Point2<T>& center, const Circle<T>& c);

/// Image of the torus cross-section under inversion about (varrho, 0).
/// Throws Error{inversion_center_on_surface} for varrho = R -+ 1.
template <class T>
CirclePair<T> inverted_cross_section(const T& varrho, const T& R);

/// Abscissa of the radical axis. Throws Error{no_radical_axis} when c1 == c2.
template <class T>
T radical_axis(const CirclePair<T>& pair);

/// P1 measurements (r1, r2, d) of the cyclide i_(varrho,0,0)(T_R) for
/// varrho in [0, sqrt(R^2 - 1)] \ {R - 1}.
template <class T>
CyclideMeasurements<T> cyclide_measurements(const T& varrho, const T& R);

/// Which coordinate plane is the P1 symmetry plane of i_(varrho,0,0)(T_R).
template <class T>
CoordinatePlane p1_coordinate_plane(const T& varrho, const T& R);

/// Throws Error{domain} unless m.plane == P1.
template <class T>
MaxwellData<T> maxwell_data(const CyclideMeasurements<T>& m);

template <class T>
CyclideMeasurements<T> p1_to_p2(const CyclideMeasurements<T>& m);

template <class T>
CyclideMeasurements<T> p2_to_p1(const CyclideMeasurements<T>& m);

/// r1/r2 on the outer branch varrho in [0, R-1).
template <class T>
T lambda1(const T& varrho, const T& R);

/// r1/r2 on the inner branch varrho in (R-1, sqrt(R^2-1)].
template <class T>
T lambda2(const T& varrho, const T& R);

template <class T>
CenterLocation classify_inversion_center(const T& varrho, const T& R);

/// Shape of a measurement triple as (r1/r2, d/r2).
template <class T>
std::pair<T, T> shape_ratio(const CyclideMeasurements<T>& m);

/// Measurements of an arbitrary pair of circles: radii ordered, d = center distance.
template <class T>
CyclideMeasurements<T> pair_measurements(const Circle<T>& a, const Circle<T>& b, SymmetryPlane plane);

/// Inverse of lambda2: the varrho in (R-1, sqrt(R^2-1)] with lambda2 = lambda.
double lambda2_inverse(double lambda, double R);

/// (R', varrho') with i_varrho(T_R) homothetic to i_varrho'(T_R').
std::pair<double, double> duality_map(double R, double varrho);

/// Folds varrho > sqrt(R^2-1) onto (R^2-1)/varrho; C(varrho) is the same circle.
double fold_to_canonical(double varrho, double R);

/// The two varrho with (rho, z) on C(varrho); their product is R^2 - 1.
std::pair<double, double> rho_pair_through_point(double rho, double z, double R);

/// Point of C(varrho; R) at angle t, measured from the circle's center.
Point2<double> point_on_family_circle(double varrho, double R, double t);

/// Measurements of i_(rho,z)(pi(T_R cap P)) taken in the x-z plane.
CyclideMeasurements<double> section_through(const Point2<double>& center, double R, SymmetryPlane plane);

/// {"rho":..., "R":..., "r1":..., "r2":..., "d":..., "plane":"P1"}
std::string to_json(const CyclideMeasurements<double>& m, double varrho, double R);

std::string to_string(SymmetryPlane plane);
std::string to_string(CenterLocation location);

}  // namespace clifford::geometry
