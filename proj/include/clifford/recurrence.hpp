#pragma once

// P-recursive sequences: sum_{i=0}^{r} p_i(n) s_{n+i} = 0 with polynomial
// coefficients p_i(n) = sum_k c[i][k] n^k.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clifford/rational.hpp"
#include "clifford/series_table.hpp"

namespace clifford::recurrence {

using CoefficientMatrix = std::vector<std::vector<Rational>>;

class PRecurrence {
 public:
  /// Rows are shifts i = 0..r, columns powers k = 0..d. Throws Error{degenerate}
  /// for ragged or empty input or an identically zero last row.
  explicit PRecurrence(CoefficientMatrix coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::size_t degree() const noexcept { return coeffs_.front().size() - 1; }
  const Rational& coeff(std::size_t i, std::size_t k) const { return coeffs_[i][k]; }
  const CoefficientMatrix& matrix() const noexcept { return coeffs_; }

  /// Integer entries with content 1; the sign makes the leading
  /// polynomial's highest nonzero coefficient positive.
  PRecurrence normalized() const;

  friend bool operator==(const PRecurrence&, const PRecurrence&) = default;

 private:
  CoefficientMatrix coeffs_;
};

/// True iff a and b agree up to a nonzero rational factor.
bool equivalent(const PRecurrence& a, const PRecurrence& b);

/// p_i(n) by Horner's rule.
Rational poly_eval(const PRecurrence& rec, std::size_t row, long n);

struct Violation {
  std::size_t index = 0;
  Rational residue;
};

/// Checks sum_i p_i(n) s_{n+i} == 0 exactly for n = 0..n_max; returns the
/// first violation. Throws Error{insufficient_terms} if seq is too short.
std::optional<Violation> check_satisfies(const PRecurrence& rec, std::span<const Rational> seq, std::size_t n_max);

struct GuessResult {
  std::vector<PRecurrence> basis;  // normalized candidates
  std::size_t equations_used = 0;
  bool unique = false;
};

/// Default system height 2 (r+1)(d+1).
std::size_t default_equations(std::size_t order, std::size_t degree) noexcept;

/// Finds every recurrence of order r and degree d satisfied by the first
/// n_equations + r terms, as the exact nullspace of the system whose row n
/// holds n^k s_{n+i}. n_equations == 0 selects the default.
/// Throws Error{insufficient_terms} when the prefix is too short or
/// n_equations < (r+1)(d+1), and Error{no_recurrence} for an empty nullspace.
GuessResult guess(std::span<const Rational> seq, std::size_t order, std::size_t degree, std::size_t n_equations = 0);

/// Continues `initial` (at least r terms) up to `count` terms with
/// s_{n+r} = -(sum_{i<r} p_i(n) s_{n+i}) / p_r(n).
/// Throws Error{singular_extension} naming n when p_r(n) == 0.
SeriesTable extend(const PRecurrence& rec, SeriesKind kind, std::span<const Rational> initial, std::size_t count);

/// Characteristic polynomial sum_i c[i][d] z^i with integer coefficients,
/// content 1 and positive leading coefficient; coefficients low to high.
std::vector<Integer> characteristic_poly(const PRecurrence& rec);

struct Root {
  double value = 0.0;
  unsigned multiplicity = 1;
};

/// Real roots with multiplicities. Multiplicities come from an exact
/// square-free decomposition; each factor's roots are then refined
/// numerically. Throws Error{degenerate} for non-real roots or roots of
/// different factors closer than 1e-8.
std::vector<Root> char_roots(std::span<const Integer> poly);

/// Pretty form, e.g. "z^3 - 7*z^2 + 7*z - 1".
std::string poly_to_string(std::span<const Integer> poly);

struct PositivityReport {
  bool all_positive = true;
  std::size_t checked = 0;  // indices 0..checked-1 were examined
  std::optional<std::size_t> first_nonpositive;
};

PositivityReport positivity_scan(std::span<const Rational> seq, std::size_t n_max);

enum class GrowthBase { one, rho };  // rho = (sqrt2 + 1)^2

/// s_n ~ c * base^n * n^power * (ln n)^log_power
struct AsymptoticModel {
  GrowthBase base = GrowthBase::rho;
  int power = 3;
  int log_power = 1;
};

struct AsymptoticFit {
  std::vector<std::size_t> indices;
  std::vector<double> estimates;  // c_n for each index
  double last = 0.0;
  double drift = 0.0;  // max |c_n - last| over the window
};

/// c_n = s_n / (base^n n^power (ln n)^log_power) in `precision_bits`
/// binary digits. Throws Error{domain} for n < 2 when log_power != 0.
double asymptotic_constant(std::span<const Rational> seq, std::size_t n, const AsymptoticModel& model,
                           unsigned precision_bits = 256);

/// c_n sampled over [first, last] with the given stride.
/// Throws Error{insufficient_terms} if the window has fewer than two samples.
AsymptoticFit asymptotic_fit(std::span<const Rational> seq, std::size_t first, std::size_t last,
                             const AsymptoticModel& model, std::size_t stride = 1, unsigned precision_bits = 256);

/// Local power-law exponent theta_n = ln(s_{n+1} / (base s_n)) / ln((n+1)/n)
/// for s_n ~ c base^n n^theta.
double local_exponent(std::span<const Rational> seq, std::size_t n, GrowthBase base, unsigned precision_bits = 256);

/// {"order":r,"degree":d,"matrix":[["-84",...],...]}
std::string to_json(const PRecurrence& rec);
PRecurrence recurrence_from_json(std::string_view json);

namespace known {
/// Recurrence of the normalized area coefficients, order 3, degree 4.
PRecurrence area();
/// Recurrence of the normalized volume coefficients, order 3, degree 4.
PRecurrence volume();
/// Recurrence of d_k, order 7, degree 7.
PRecurrence dseq();
PRecurrence for_kind(SeriesKind kind);
}  // namespace known

}  // namespace clifford::recurrence
