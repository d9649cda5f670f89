#include "clifford/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <ostream>

#include "clifford/error.hpp"
#include "clifford/format.hpp"
#include "clifford/series.hpp"

namespace clifford::quadrature {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;

void check_disk(double a) {
  if (!(std::abs(a) < sqrt2 - 1.0)) throw Error(Errc::outside_disk, "|a| must be below sqrt2 - 1");
}

std::size_t round_up_even(double x) {
  auto n = static_cast<std::size_t>(std::ceil(x));
  return n + (n % 2);
}

void check_grid(const Grid& g, bool radial) {
  if (g.n_u < 4 || g.n_v < 4 || g.n_u % 2 != 0) throw Error(Errc::domain, "n_u (even) and n_v must be >= 4");
  if (radial && g.n_r < 1) throw Error(Errc::domain, "n_r must be positive");
}

// Trapezoid weights over u in [0, 2pi) folded onto [0, pi] using the symmetry u -> -u
// of every integrand here (they depend on u only through cos u).
struct FoldedU {
  std::vector<double> cos_u;
  std::vector<double> weight;

  explicit FoldedU(std::size_t n_u) {
    const std::size_t half = n_u / 2;
    for (std::size_t k = 0; k <= half; ++k) {
      cos_u.push_back(std::cos(2.0 * pi * static_cast<double>(k) / static_cast<double>(n_u)));
      weight.push_back(k == 0 || k == half ? 1.0 : 2.0);
    }
  }
};

struct Sums {
  double mass = 0.0;    // sum of Q^-L * measure
  double moment = 0.0;  // sum of y_1 Q^-L * measure, y_1 = (x_1 + |x|^2 a)/Q
};

// Surface sums over r = 1 with weight Q^-2 (sqrt2 + sin v).
Sums surface_sums(double a, const Grid& g, bool with_moment) {
  const FoldedU fu(g.n_u);
  const double dv = 2.0 * pi / static_cast<double>(g.n_v);
  const double a2 = a * a;
  Sums total;
  for (std::size_t iv = 0; iv < g.n_v; ++iv) {
    const double sv = std::sin(dv * static_cast<double>(iv));
    const double radius = sqrt2 + sv;
    const double norm2 = 3.0 + 2.0 * sqrt2 * sv;
    Sums row;
    for (std::size_t k = 0; k < fu.cos_u.size(); ++k) {
      const double x1 = radius * fu.cos_u[k];
      const double q = 1.0 + 2.0 * a * x1 + norm2 * a2;
      const double w = fu.weight[k] * radius / (q * q);
      row.mass += w;
      if (with_moment) row.moment += w * (x1 + norm2 * a) / q;
    }
    total.mass += row.mass;
    total.moment += row.moment;
  }
  const double cell = (2.0 * pi / static_cast<double>(g.n_u)) * dv;
  total.mass *= cell;
  total.moment *= cell;
  return total;
}

// Solid sums with weight Q^-3 r (sqrt2 + r sin v).
Sums solid_sums(double a, const Grid& g, bool with_moment) {
  const FoldedU fu(g.n_u);
  const GaussRule rule = gauss_legendre(g.n_r);
  const double dv = 2.0 * pi / static_cast<double>(g.n_v);
  const double a2 = a * a;
  std::vector<double> sin_v(g.n_v);
  for (std::size_t iv = 0; iv < g.n_v; ++iv) sin_v[iv] = std::sin(dv * static_cast<double>(iv));

  Sums total;
  for (std::size_t ir = 0; ir < g.n_r; ++ir) {
    const double r = 0.5 * (1.0 + rule.nodes[ir]);
    const double wr = 0.5 * rule.weights[ir];
    Sums shell;
    for (std::size_t iv = 0; iv < g.n_v; ++iv) {
      const double radius = sqrt2 + r * sin_v[iv];
      const double norm2 = 2.0 + r * r + 2.0 * sqrt2 * r * sin_v[iv];
      const double measure = r * radius;
      for (std::size_t k = 0; k < fu.cos_u.size(); ++k) {
        const double x1 = radius * fu.cos_u[k];
        const double q = 1.0 + 2.0 * a * x1 + norm2 * a2;
        const double w = fu.weight[k] * measure / (q * q * q);
        shell.mass += w;
        if (with_moment) shell.moment += w * (x1 + norm2 * a) / q;
      }
    }
    total.mass += wr * shell.mass;
    total.moment += wr * shell.moment;
  }
  const double cell = (2.0 * pi / static_cast<double>(g.n_u)) * dv;
  total.mass *= cell;
  total.moment *= cell;
  return total;
}

Grid refined(const Grid& g) { return Grid{2 * g.n_u, 2 * g.n_v, 2 * g.n_r}; }

}  // namespace

double conformal_Q(double a, const Vec3& x) {
  const double norm2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
  return 1.0 + 2.0 * x[0] * a + norm2 * a * a;
}

Vec3 torus_point(double u, double v, double r) {
  const double radius = sqrt2 + r * std::sin(v);
  return Vec3{radius * std::cos(u), radius * std::sin(u), r * std::cos(v)};
}

Grid default_grid(double a, Grid requested) {
  check_disk(a);
  const double gap = sqrt2 - 1.0 - std::abs(a);
  // the nearest complex singularity of the u- and v-integrands sits about 3.4*gap off the real axis
  const std::size_t periodic = std::max<std::size_t>(48, round_up_even(12.0 / gap));
  const auto radial = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(4.0 / std::sqrt(gap))));
  if (requested.n_u == 0) requested.n_u = periodic;
  if (requested.n_v == 0) requested.n_v = periodic;
  if (requested.n_r == 0) requested.n_r = radial;
  return requested;
}

double area_sum(double a, const Grid& grid) {
  check_disk(a);
  check_grid(grid, false);
  return surface_sums(a, grid, false).mass;
}

double volume_sum(double a, const Grid& grid) {
  check_disk(a);
  check_grid(grid, true);
  return solid_sums(a, grid, false).mass;
}

QuadratureResult area_numeric(double a, Grid grid) {
  grid = default_grid(a, grid);
  QuadratureResult out;
  out.grid = grid;
  out.value = area_sum(a, grid);
  out.error_estimate = std::abs(out.value - area_sum(a, refined(grid)));
  return out;
}

QuadratureResult volume_numeric(double a, Grid grid) {
  grid = default_grid(a, grid);
  QuadratureResult out;
  out.grid = grid;
  out.value = volume_sum(a, grid);
  out.error_estimate = std::abs(out.value - volume_sum(a, refined(grid)));
  return out;
}

double isoperimetric_ratio(double area, double volume) {
  return volume / ((4.0 * pi / 3.0) * std::pow(area / (4.0 * pi), 1.5));
}

double iso_ratio(double a, Grid grid) {
  grid = default_grid(a, grid);
  return isoperimetric_ratio(area_sum(a, grid), volume_sum(a, grid));
}

CentersGap centers_gap(double a, const SeriesTable& area, const SeriesTable& volume, Grid grid) {
  check_disk(a);
  if (area.kind != SeriesKind::area || volume.kind != SeriesKind::volume)
    throw Error(Errc::domain, "centers_gap needs an area table and a volume table");
  grid = default_grid(a, grid);

  const std::size_t na = series::truncation_for(area, a, 1e-15);
  const std::size_t nv = series::truncation_for(volume, a, 1e-15);
  const double A = series::series_eval(area, a, na).value;
  const double dA = series::series_derivative(area, a, na).value;
  const double V = series::series_eval(volume, a, nv).value;
  const double dV = series::series_derivative(volume, a, nv).value;

  const Sums s = surface_sums(a, grid, true);
  const Sums b = solid_sums(a, grid, true);

  CentersGap out;
  out.direct = 2.0 * dV / V - 3.0 * dA / A;
  out.area_center = s.moment / s.mass;
  out.volume_center = b.moment / b.mass;
  out.centers = 12.0 * (out.area_center - out.volume_center);
  return out;
}

GaussRule gauss_legendre(std::size_t n) {
  if (n == 0) throw Error(Errc::domain, "Gauss-Legendre rule needs at least one node");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double z = std::cos(pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (std::size_t j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * static_cast<double>(j) - 1.0) * z * p1 - (static_cast<double>(j) - 1.0) * p2) /
             static_cast<double>(j);
      }
      dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / dp;
      z -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1.0, p1 = 0.0;
    for (std::size_t j = 1; j <= n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2.0 * static_cast<double>(j) - 1.0) * z * p1 - (static_cast<double>(j) - 1.0) * p2) /
           static_cast<double>(j);
    }
    dp = static_cast<double>(n) * (z * p0 - p1) / (z * z - 1.0);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = rule.weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * dp * dp);
  }
  return rule;
}

namespace {

// Composite rule on [-half, half] with panels shrinking geometrically toward 0.
struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
};

Rule1D graded_rule(double half, double smallest, double grading, const GaussRule& base) {
  std::vector<double> breaks{0.0};
  double width = std::min(smallest, half);
  double edge = width;
  breaks.push_back(edge);
  while (edge < half) {
    width /= grading;
    edge = std::min(half, edge + width);
    breaks.push_back(edge);
  }
  Rule1D out;
  auto add_panel = [&](double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    for (std::size_t k = 0; k < base.nodes.size(); ++k) {
      out.x.push_back(mid + h * base.nodes[k]);
      out.w.push_back(h * base.weights[k]);
    }
  };
  for (std::size_t k = breaks.size() - 1; k > 0; --k) add_panel(-breaks[k], -breaks[k - 1]);
  for (std::size_t k = 1; k < breaks.size(); ++k) add_panel(breaks[k - 1], breaks[k]);
  return out;
}

struct Chart {
  // position, outward unit normal and area density at (u, v)
  virtual void eval(double u, double v, Vec3& x, Vec3& n, double& density) const = 0;
  virtual ~Chart() = default;
};

struct SphereChart final : Chart {
  void eval(double u, double v, Vec3& x, Vec3& n, double& density) const override {
    const double cv = std::cos(v);
    n = Vec3{cv * std::cos(u), cv * std::sin(u), std::sin(v)};
    x = n;
    density = cv;
  }
};

struct TorusChart final : Chart {
  double R;
  explicit TorusChart(double major) : R(major) {}
  void eval(double u, double v, Vec3& x, Vec3& n, double& density) const override {
    const double cv = std::cos(v);
    const double radius = R + cv;
    n = Vec3{cv * std::cos(u), cv * std::sin(u), std::sin(v)};
    x = Vec3{radius * std::cos(u), radius * std::sin(u), std::sin(v)};
    density = radius;
  }
};

}  // namespace

RoundingRow sphere_rounding_exact(double eps) {
  if (!(eps > 0.0)) throw Error(Errc::domain, "eps must be positive");
  const double image_radius = 1.0 / (eps * (2.0 + eps));  // 1/((1+eps)^2 - 1)
  RoundingRow row;
  row.eps = eps;
  row.scaled_area = eps * eps * 4.0 * pi * image_radius * image_radius;
  row.scaled_volume = eps * eps * eps * (4.0 * pi / 3.0) * image_radius * image_radius * image_radius;
  row.iso = 1.0;
  return row;
}

RoundingRow rounding_row(Surface surface, double eps, const RoundingOptions& options) {
  if (!(eps > 0.0)) throw Error(Errc::domain, "eps must be positive");
  if (surface == Surface::sphere && options.exact_sphere) return sphere_rounding_exact(eps);
  if (!(options.grading > 0.0 && options.grading < 1.0)) throw Error(Errc::domain, "grading must lie in (0, 1)");

  const GaussRule base = gauss_legendre(options.gauss_order);
  std::unique_ptr<Chart> chart;
  Vec3 q;
  Rule1D ru, rv;
  if (surface == Surface::sphere) {
    chart = std::make_unique<SphereChart>();
    q = Vec3{1.0 + eps, 0.0, 0.0};
    ru = graded_rule(pi, 0.25 * eps, options.grading, base);
    rv = graded_rule(0.5 * pi, 0.25 * eps, options.grading, base);
  } else {
    if (!(options.torus_R > 1.0)) throw Error(Errc::invalid_torus, "major radius must exceed 1");
    const double R = options.torus_R;
    chart = std::make_unique<TorusChart>(R);
    q = Vec3{R + 1.0 + eps, 0.0, 0.0};
    ru = graded_rule(pi, 0.25 * eps / (R + 1.0), options.grading, base);
    rv = graded_rule(pi, 0.25 * eps, options.grading, base);
  }

  double area = 0.0;
  double flux = 0.0;  // integral of (x - q).n / |x - q|^6
  for (std::size_t i = 0; i < ru.x.size(); ++i) {
    double area_row = 0.0, flux_row = 0.0;
    for (std::size_t j = 0; j < rv.x.size(); ++j) {
      Vec3 x, n;
      double density = 0.0;
      chart->eval(ru.x[i], rv.x[j], x, n, density);
      const Vec3 d{x[0] - q[0], x[1] - q[1], x[2] - q[2]};
      const double dist2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
      const double w = rv.w[j] * density;
      area_row += w / (dist2 * dist2);
      flux_row += w * (d[0] * n[0] + d[1] * n[1] + d[2] * n[2]) / (dist2 * dist2 * dist2);
    }
    area += ru.w[i] * area_row;
    flux += ru.w[i] * flux_row;
  }
  // div_x[(x-q)/|x-q|^6] = -3/|x-q|^6, the Jacobian of the inversion
  const double volume = -flux / 3.0;

  RoundingRow row;
  row.eps = eps;
  row.scaled_area = eps * eps * area;
  row.scaled_volume = eps * eps * eps * volume;
  row.iso = isoperimetric_ratio(area, volume);
  return row;
}

std::vector<RoundingRow> rounding_scan(Surface surface, std::span<const double> eps_list,
                                       const RoundingOptions& options) {
  std::vector<RoundingRow> rows;
  rows.reserve(eps_list.size());
  for (double eps : eps_list) rows.push_back(rounding_row(surface, eps, options));
  return rows;
}

std::vector<IsoSample> iso_curve(std::size_t samples, double max_a) {
  if (samples < 2) throw Error(Errc::domain, "need at least two samples");
  check_disk(max_a);
  std::vector<IsoSample> rows;
  for (std::size_t i = 0; i < samples; ++i) {
    IsoSample s;
    s.a = max_a * static_cast<double>(i) / static_cast<double>(samples - 1);
    const Grid g = default_grid(s.a);
    s.area = area_sum(s.a, g);
    s.volume = volume_sum(s.a, g);
    s.iso = isoperimetric_ratio(s.area, s.volume);
    rows.push_back(s);
  }
  return rows;
}

void write_csv(std::ostream& out, std::span<const IsoSample> rows) {
  out << "a,area,volume,iso\n";
  for (const auto& r : rows) {
    out << format_real(r.a) << ',' << format_real(r.area) << ',' << format_real(r.volume) << ','
        << format_real(r.iso) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const RoundingRow> rows) {
  out << "eps,scaled_area,scaled_volume,iso\n";
  for (const auto& r : rows) {
    out << format_real(r.eps) << ',' << format_real(r.scaled_area) << ',' << format_real(r.scaled_volume) << ','
        << format_real(r.iso) << '\n';
  }
}

}  // namespace clifford::quadrature
