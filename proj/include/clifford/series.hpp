#pragma once

// Normalized Taylor coefficients of the area A(z) and enclosed volume V(z)
// of the Clifford torus T_sqrt2 under the special conformal transformation
// along the x-axis, and of the derived sequence d_k governing the sign of
// d/da ln(V^2 / A^3).
//
// Stored values are exact rationals:
//   A(z) = sqrt2*pi^2 * sum_j ahat_j z^(2j)
//   V(z) = sqrt2*pi^2 * sum_j vhat_j z^(2j)
//   (2 V' A - 3 V A') / (4 pi^4) = sum_k d_k a^(2k+1)

#include <cstddef>
#include <span>
#include <vector>

#include "clifford/rational.hpp"
#include "clifford/series_table.hpp"

namespace clifford::series {

/// Radius of the disk on which A and V are holomorphic: sqrt2 - 1.
double convergence_radius() noexcept;

/// Growth ratio of consecutive coefficients, (sqrt2 + 1)^2.
double growth_ratio() noexcept;

/// (1/2pi) * integral_0^{2pi} sin^n: binom(n, n/2)/2^n for even n, 0 for odd n.
Rational wallis(unsigned n);

/// integral_0^1 r^(p+q+1) (2+r^2)^(j-l-q) dr, as the binomial-expansion sum.
/// Throws Error{domain} when j - l - q < 0.
Rational eta(int p, int q, int l, int j);

Rational area_coeff(unsigned j);
Rational volume_coeff(unsigned j);

/// First `count` coefficients by direct summation; shares binomial and
/// eta tables across indices, so this is much cheaper than repeated
/// single-index calls.
std::vector<Rational> area_coeffs(std::size_t count);
std::vector<Rational> volume_coeffs(std::size_t count);

/// d_k = 2 sum_i (i+1) v_{i+1} a_{k-i} - 3 sum_i (i+1) a_{i+1} v_{k-i}.
/// Needs a and v through index k+1.
Rational d_coeff(std::size_t k, std::span<const Rational> a, std::span<const Rational> v);
std::vector<Rational> d_coeffs(std::size_t count, std::span<const Rational> a, std::span<const Rational> v);

struct SeriesValue {
  double value = 0.0;
  double tail_estimate = 0.0;
  std::size_t terms_used = 0;
  bool slow_convergence = false;
};

/// Truncated evaluation of the series in `table` at real a:
/// sum terms[j] a^(2j) for area/volume, sum terms[k] a^(2k+1) for dseq.
/// The tail estimate is the geometric bound |last term| * x/(1-x) with
/// x = (sqrt2+1)^2 a^2. With `normalized == false` the prefactor
/// (sqrt2*pi^2 or 4*pi^4) is multiplied back in.
/// Throws Error{outside_disk} for |a| >= sqrt2 - 1.
SeriesValue series_eval(const SeriesTable& table, double a, std::size_t truncation, bool normalized = true);

/// Termwise derivative d/da of the same truncated series.
SeriesValue series_derivative(const SeriesTable& table, double a, std::size_t truncation,
                              bool normalized = true);

/// Smallest truncation for which the geometric tail bound falls below
/// `tolerance` relative to the partial sum, capped at table.size().
std::size_t truncation_for(const SeriesTable& table, double a, double tolerance);

struct BuildOptions {
  /// Indices below this come from direct summation; the rest from the
  /// known recurrence.
  std::size_t crossover = 200;
  /// Leading terms recomputed through the recurrence and compared
  /// against direct summation.
  std::size_t cross_check = 30;
};

/// First `count` normalized coefficients of the requested sequence.
/// Throws Error{cross_check_mismatch} if the two routes disagree.
SeriesTable build_table(SeriesKind kind, std::size_t count, const BuildOptions& options = {});

}  // namespace clifford::series
