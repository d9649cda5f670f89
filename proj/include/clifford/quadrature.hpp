#pragma once

// Numerical evaluation of the area and enclosed volume of SCT_[a,0,0](T_sqrt2)
// straight from the conformal-factor integrals, independent of the series
// route, plus the rounding behaviour of surfaces under inversions centered
// close to them.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "clifford/series_table.hpp"

namespace clifford::quadrature {

using Vec3 = std::array<double, 3>;

/// Node counts: n_u, n_v periodic trapezoid nodes; n_r Gauss-Legendre nodes.
/// A zero entry means "choose from a".
struct Grid {
  std::size_t n_u = 0;
  std::size_t n_v = 0;
  std::size_t n_r = 0;
};

struct QuadratureResult {
  double value = 0.0;
  Grid grid;
  double error_estimate = 0.0;  // |value - value on the grid refined by 2 in each direction|
};

/// Q(a; x) = 1 + 2 x_1 a + |x|^2 a^2.
double conformal_Q(double a, const Vec3& x);

/// Point of the solid Clifford torus: ((sqrt2 + r sin v) cos u, (sqrt2 + r sin v) sin u, r cos v).
Vec3 torus_point(double u, double v, double r);

/// Node counts that scale like 1/(sqrt2 - 1 - |a|) in u, v and like
/// 1/sqrt(sqrt2 - 1 - |a|) in r; unspecified entries of `requested` are filled.
Grid default_grid(double a, Grid requested = {});

/// Plain tensor-rule sums on one grid (no refinement estimate).
double area_sum(double a, const Grid& grid);
double volume_sum(double a, const Grid& grid);

/// Throw Error{outside_disk} for |a| >= sqrt2 - 1.
QuadratureResult area_numeric(double a, Grid grid = {});
QuadratureResult volume_numeric(double a, Grid grid = {});

/// V / ((4 pi / 3) (A / 4 pi)^(3/2)).
double isoperimetric_ratio(double area, double volume);
double iso_ratio(double a, Grid grid = {});

struct CentersGap {
  double direct = 0.0;         // 2 V'/V - 3 A'/A from the exact series
  double centers = 0.0;        // 12 (x^A - x^V) by quadrature
  double area_center = 0.0;    // x^A
  double volume_center = 0.0;  // x^V
};

/// The two routes to d/da ln(V^2/A^3). Series tables must hold normalized
/// area and volume coefficients; enough terms are used to push the
/// geometric tail bound below 1e-15.
CentersGap centers_gap(double a, const SeriesTable& area, const SeriesTable& volume, Grid grid = {});

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(std::size_t n);

enum class Surface { sphere, torus };

struct RoundingRow {
  double eps = 0.0;
  double scaled_area = 0.0;    // eps^2 Area(i_q(S)),  tends to pi
  double scaled_volume = 0.0;  // eps^3 Vol(i_q(S)),   tends to pi/6
  double iso = 0.0;            // isoperimetric ratio of i_q(S), tends to 1
};

struct RoundingOptions {
  double torus_R = 1.4142135623730951;  // sqrt2
  std::size_t gauss_order = 16;         // nodes per panel
  double grading = 0.5;                 // panel-width ratio toward the base point
  bool exact_sphere = true;             // closed form instead of quadrature for the sphere
};

/// q = p + eps n(p) with p the outermost point (unit sphere: (1,0,0);
/// torus T_R: (R+1,0,0)) and n the outward normal. Throws Error{domain}
/// for eps <= 0.
RoundingRow rounding_row(Surface surface, double eps, const RoundingOptions& options = {});

/// Closed form for the unit sphere: the image is a sphere of radius 1/((1+eps)^2 - 1).
RoundingRow sphere_rounding_exact(double eps);

std::vector<RoundingRow> rounding_scan(Surface surface, std::span<const double> eps_list,
                                       const RoundingOptions& options = {});

struct IsoSample {
  double a = 0.0;
  double area = 0.0;
  double volume = 0.0;
  double iso = 0.0;
};

/// `samples` equispaced points on [0, max_a].
std::vector<IsoSample> iso_curve(std::size_t samples, double max_a);

void write_csv(std::ostream& out, std::span<const IsoSample> rows);
void write_csv(std::ostream& out, std::span<const RoundingRow> rows);

}  // namespace clifford::quadrature
