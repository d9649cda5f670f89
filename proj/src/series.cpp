#include "clifford/series.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "clifford/error.hpp"
#include "clifford/recurrence.hpp"

namespace clifford::series {

double convergence_radius() noexcept { return std::numbers::sqrt2 - 1.0; }

double growth_ratio() noexcept {
  constexpr double s = std::numbers::sqrt2 + 1.0;
  return s * s;
}

Rational wallis(unsigned n) {
  if (n % 2 != 0) return Rational(0);
  return Rational(binomial(n, n / 2)) * pow2(-static_cast<long>(n));
}

Rational eta(int p, int q, int l, int j) {
  const int m = j - l - q;
  if (m < 0 || p < 0 || q < 0) throw Error(Errc::domain, "eta needs j - l - q >= 0 and p, q >= 0");
  Rational sum;
  for (int k = 0; k <= m; ++k) {
    sum += Rational(binomial(m, k)) * pow2(m - k) / Rational(2 * k + p + q + 2);
  }
  return sum;
}

namespace {

Integer shl(const Integer& x, unsigned long bits) {
  Integer out;
  mpz_mul_2exp(out.get_mpz_t(), x.get_mpz_t(), bits);
  return out;
}

// Shared tables for direct summation of coefficients 0..max_j.
//
// Both sums are evaluated over the integers. The power 2^((q-3p)/2) is
// shifted by 2^(3l+2), which makes the exponent nonnegative for every
// admissible p <= 2l+1, and the eta values are scaled by
// L = lcm(1..2*max_j+3), which clears all of their denominators.
class DirectSummation {
 public:
  explicit DirectSummation(std::size_t max_j, bool with_eta)
      : max_j_(max_j), binom_(2 * max_j + 2), pow3_(max_j + 1) {
    pow3_[0] = 1;
    for (std::size_t i = 1; i <= max_j_; ++i) pow3_[i] = pow3_[i - 1] * 3;
    central_.resize(2 * max_j_ + 2);
    for (std::size_t s = 0; s < central_.size(); s += 2) central_[s] = binom_(s, s / 2);
    if (with_eta) build_eta();
  }

  Rational area(std::size_t j) const {
    Integer total;
    for (std::size_t l = 0; l <= j; ++l) {
      const std::size_t m = j - l;
      const std::size_t K = 3 * l + 2;
      Integer s_l;
      for (std::size_t q = 0; q <= m; ++q) {
        Integer inner;
        for (std::size_t p = q % 2; p <= 2 * l + 1; p += 2) {
          // (q - 3p)/2 + K >= 1/2 for p <= 2l + 1, and it is an integer since p = q (mod 2).
          const long twice = static_cast<long>(q) - 3 * static_cast<long>(p) + 2 * static_cast<long>(K);
          Integer t = binom_(2 * l + 1, p) * central_[p + q];
          mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(twice / 2));
          inner += t;
        }
        s_l += inner * binom_(m, q) * pow3_[m - q];
      }
      // alpha_{l,j} = 2^(l+2) * 3^(j-l) * (sum with 3^-q) = s_l / 4^l
      Integer term = Integer(j + l + 1) * binom_(j + l, j - l) * binom_(2 * l, l) * s_l;
      term = shl(term, 2 * (j - l));
      if ((j - l) % 2 == 0) total += term; else total -= term;
    }
    Rational out(total, shl(Integer(1), 2 * j));
    out.canonicalize();
    return out;
  }

  Rational volume(std::size_t j) const {
    Integer total;
    for (std::size_t l = 0; l <= j; ++l) {
      const std::size_t m = j - l;
      const std::size_t K = 3 * l + 2;
      Integer s_l;
      for (std::size_t q = 0; q <= m; ++q) {
        Integer inner;
        for (std::size_t p = q % 2; p <= 2 * l + 1; p += 2) {
          const long twice = static_cast<long>(q) - 3 * static_cast<long>(p) + 2 * static_cast<long>(K);
          Integer t = binom_(2 * l + 1, p) * weighted_eta_[p + q][m - q];
          mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(twice / 2));
          inner += t;
        }
        s_l += inner * binom_(m, q);
      }
      // nu_{l,j} = 2^(l+1) * 2^-K * s_l / L = s_l / (L * 2^(2l+1))
      Integer term =
          Integer(j + l + 1) * Integer(j + l + 2) * binom_(j + l, j - l) * binom_(2 * l, l) * s_l;
      term = shl(term, 2 * (j - l));
      if ((j - l) % 2 == 0) total += term; else total -= term;
    }
    Rational out(total, eta_scale_ * shl(Integer(1), 2 * j + 1));
    out.canonicalize();
    return out;
  }

 private:
  void build_eta() {
    // eta(s, m) = int_0^1 r^(s+1) (2+r^2)^m dr satisfies
    // eta(s, m) = 2 eta(s, m-1) + eta(s+2, m-1), eta(s, 0) = 1/(s+2).
    const std::size_t max_s = 2 * max_j_ + 1;
    const std::size_t max_m = max_j_;
    std::vector<Rational> level(max_s + 2 * max_m + 1);
    for (std::size_t s = 0; s < level.size(); ++s) level[s] = Rational(1, s + 2);

    mpz_class L = 1;
    for (unsigned long k = 2; k <= 2 * max_j_ + 3; ++k) mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), k);
    eta_scale_ = L;

    weighted_eta_.assign(max_s + 1, std::vector<Integer>(max_m + 1));
    auto store = [&](std::size_t m) {
      for (std::size_t s = 0; s <= max_s; ++s) {
        // odd s is filtered out by the Wallis factor; the sums only reach s + 2m <= 2*max_j + 1
        if (s % 2 != 0 || s + 2 * m > 2 * max_j_ + 1) continue;
        const Rational scaled = level[s] * Rational(L);
        if (scaled.get_den() != 1) throw Error(Errc::degenerate, "eta scale does not clear denominators");
        weighted_eta_[s][m] = central_[s] * scaled.get_num();
      }
    };
    store(0);
    for (std::size_t m = 1; m <= max_m; ++m) {
      const std::size_t width = max_s + 2 * (max_m - m) + 1;
      for (std::size_t s = 0; s < width; ++s) level[s] = 2 * level[s] + level[s + 2];
      store(m);
    }
  }

  std::size_t max_j_;
  BinomialTable binom_;
  std::vector<Integer> pow3_;
  std::vector<Integer> central_;                   // binom(s, s/2) for even s, 0 for odd
  std::vector<std::vector<Integer>> weighted_eta_;  // binom(s, s/2) * L * eta(s, m)
  Integer eta_scale_ = 1;
};

}  // namespace

Rational area_coeff(unsigned j) { return DirectSummation(j, false).area(j); }

Rational volume_coeff(unsigned j) { return DirectSummation(j, true).volume(j); }

std::vector<Rational> area_coeffs(std::size_t count) {
  std::vector<Rational> out;
  if (count == 0) return out;
  const DirectSummation engine(count - 1, false);
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(engine.area(j));
  return out;
}

std::vector<Rational> volume_coeffs(std::size_t count) {
  std::vector<Rational> out;
  if (count == 0) return out;
  const DirectSummation engine(count - 1, true);
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) out.push_back(engine.volume(j));
  return out;
}

Rational d_coeff(std::size_t k, std::span<const Rational> a, std::span<const Rational> v) {
  if (a.size() < k + 2 || v.size() < k + 2)
    throw Error(Errc::insufficient_terms, "d_k needs area and volume coefficients through index k+1");
  Rational from_v, from_a;
  for (std::size_t i = 0; i <= k; ++i) {
    from_v += Rational(i + 1) * v[i + 1] * a[k - i];
    from_a += Rational(i + 1) * a[i + 1] * v[k - i];
  }
  return 2 * from_v - 3 * from_a;
}

std::vector<Rational> d_coeffs(std::size_t count, std::span<const Rational> a, std::span<const Rational> v) {
  std::vector<Rational> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(d_coeff(k, a, v));
  return out;
}

namespace {

void check_disk(double a) {
  if (!(std::abs(a) < convergence_radius()))
    throw Error(Errc::outside_disk, "|a| must be below sqrt2 - 1 = 0.41421356...");
}

int first_power(SeriesKind kind) { return kind == SeriesKind::dseq ? 1 : 0; }

}  // namespace

SeriesValue series_eval(const SeriesTable& table, double a, std::size_t truncation, bool normalized) {
  check_disk(a);
  if (truncation == 0 || truncation > table.size())
    throw Error(Errc::insufficient_terms, "truncation must be in [1, table size]");
  const double a2 = a * a;
  const double start = first_power(table.kind) == 1 ? a : 1.0;
  double power = start;
  double sum = 0.0;
  double last = 0.0;
  for (std::size_t j = 0; j < truncation; ++j) {
    last = to_double(table.terms[j]) * power;
    sum += last;
    power *= a2;
  }
  const double x = growth_ratio() * a2;
  SeriesValue out;
  out.terms_used = truncation;
  out.tail_estimate = std::abs(last) * x / (1.0 - x);
  out.slow_convergence = x > 0.9;
  out.value = sum;
  if (!normalized) {
    const double c = normalization_constant(table.kind);
    out.value *= c;
    out.tail_estimate *= c;
  }
  return out;
}

SeriesValue series_derivative(const SeriesTable& table, double a, std::size_t truncation, bool normalized) {
  check_disk(a);
  if (truncation == 0 || truncation > table.size())
    throw Error(Errc::insufficient_terms, "truncation must be in [1, table size]");
  const int offset = first_power(table.kind);
  const double a2 = a * a;
  double sum = 0.0;
  double last = 0.0;
  for (std::size_t j = 0; j < truncation; ++j) {
    const int exponent = 2 * static_cast<int>(j) + offset;
    if (exponent == 0) continue;
    last = exponent * to_double(table.terms[j]) * std::pow(a, exponent - 1);
    sum += last;
  }
  const double x = growth_ratio() * a2;
  SeriesValue out;
  out.terms_used = truncation;
  // the factor exponent grows slowly, so the geometric bound stays a fair guide
  out.tail_estimate = std::abs(last) * x / (1.0 - x);
  out.slow_convergence = x > 0.9;
  out.value = sum;
  if (!normalized) {
    const double c = normalization_constant(table.kind);
    out.value *= c;
    out.tail_estimate *= c;
  }
  return out;
}

std::size_t truncation_for(const SeriesTable& table, double a, double tolerance) {
  check_disk(a);
  for (std::size_t n = 1; n <= table.size(); ++n) {
    const SeriesValue v = series_eval(table, a, n);
    if (v.tail_estimate <= tolerance * std::abs(v.value)) return n;
  }
  return table.size();
}

namespace {

std::vector<Rational> direct_terms(SeriesKind kind, std::size_t count) {
  switch (kind) {
    case SeriesKind::area: return area_coeffs(count);
    case SeriesKind::volume: return volume_coeffs(count);
    case SeriesKind::dseq: {
      const auto a = area_coeffs(count + 1);
      const auto v = volume_coeffs(count + 1);
      return d_coeffs(count, a, v);
    }
  }
  return {};
}

}  // namespace

SeriesTable build_table(SeriesKind kind, std::size_t count, const BuildOptions& options) {
  const recurrence::PRecurrence rec = recurrence::known::for_kind(kind);
  const std::size_t order = rec.order();
  // at least `order` direct terms are needed to seed the recurrence
  const std::size_t direct = std::min(count, std::max(options.crossover, order));

  SeriesTable table{kind, direct_terms(kind, std::max(direct, std::min(options.cross_check, count)))};

  const std::size_t check = std::min(options.cross_check, table.size());
  if (check > order) {
    const std::vector<Rational> seed(table.terms.begin(), table.terms.begin() + static_cast<long>(order));
    const SeriesTable replay = recurrence::extend(rec, kind, seed, check);
    for (std::size_t i = order; i < check; ++i) {
      if (replay.terms[i] != table.terms[i]) {
        throw Error(Errc::cross_check_mismatch, std::string(to_string(kind)) + " term " + std::to_string(i) +
                                                    ": direct " + to_string(table.terms[i]) + " vs recurrence " +
                                                    to_string(replay.terms[i]));
      }
    }
  }
  table.terms.resize(std::min(table.terms.size(), count));
  if (count > table.size()) table = recurrence::extend(rec, kind, table.terms, count);
  return table;
}

}  // namespace clifford::series
