#include <mpfr.h>

#include <algorithm>
#include <cmath>

#include "clifford/error.hpp"
#include "clifford/recurrence.hpp"

namespace clifford::recurrence {

namespace {

class Real {
 public:
  explicit Real(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;

  mpfr_ptr get() { return v_; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

void set_base(Real& out, GrowthBase base) {
  if (base == GrowthBase::one) {
    mpfr_set_ui(out.get(), 1, MPFR_RNDN);
    return;
  }
  mpfr_sqrt_ui(out.get(), 2, MPFR_RNDN);
  mpfr_add_ui(out.get(), out.get(), 1, MPFR_RNDN);
  mpfr_sqr(out.get(), out.get(), MPFR_RNDN);
}

}  // namespace

double asymptotic_constant(std::span<const Rational> seq, std::size_t n, const AsymptoticModel& model,
                           unsigned precision_bits) {
  if (n >= seq.size()) throw Error(Errc::insufficient_terms, "index beyond the sequence");
  if (model.log_power != 0 && n < 2) throw Error(Errc::domain, "ln n must be positive");
  if (n == 0 && model.power < 0) throw Error(Errc::domain, "n^power undefined at n = 0");
  const auto bits = static_cast<mpfr_prec_t>(std::max(precision_bits, 64u));

  Real value(bits), scale(bits), tmp(bits);
  mpfr_set_q(value.get(), seq[n].get_mpq_t(), MPFR_RNDN);

  set_base(scale, model.base);
  mpfr_pow_ui(scale.get(), scale.get(), n, MPFR_RNDN);
  if (model.power != 0) {
    mpfr_set_ui(tmp.get(), n, MPFR_RNDN);
    mpfr_pow_si(tmp.get(), tmp.get(), model.power, MPFR_RNDN);
    mpfr_mul(scale.get(), scale.get(), tmp.get(), MPFR_RNDN);
  }
  if (model.log_power != 0) {
    mpfr_set_ui(tmp.get(), n, MPFR_RNDN);
    mpfr_log(tmp.get(), tmp.get(), MPFR_RNDN);
    mpfr_pow_si(tmp.get(), tmp.get(), model.log_power, MPFR_RNDN);
    mpfr_mul(scale.get(), scale.get(), tmp.get(), MPFR_RNDN);
  }
  mpfr_div(value.get(), value.get(), scale.get(), MPFR_RNDN);
  return value.to_double();
}

AsymptoticFit asymptotic_fit(std::span<const Rational> seq, std::size_t first, std::size_t last,
                             const AsymptoticModel& model, std::size_t stride, unsigned precision_bits) {
  if (stride == 0) throw Error(Errc::domain, "stride must be positive");
  if (last < first || (last - first) / stride < 1)
    throw Error(Errc::insufficient_terms, "window must contain at least two samples");
  AsymptoticFit fit;
  for (std::size_t n = first; n <= last; n += stride) {
    fit.indices.push_back(n);
    fit.estimates.push_back(asymptotic_constant(seq, n, model, precision_bits));
  }
  fit.last = fit.estimates.back();
  for (double c : fit.estimates) fit.drift = std::max(fit.drift, std::abs(c - fit.last));
  return fit;
}

double local_exponent(std::span<const Rational> seq, std::size_t n, GrowthBase base, unsigned precision_bits) {
  if (n == 0 || n + 1 >= seq.size()) throw Error(Errc::insufficient_terms, "need s_n and s_{n+1} with n >= 1");
  if (sgn(seq[n]) <= 0 || sgn(seq[n + 1]) <= 0) throw Error(Errc::domain, "terms must be positive");
  const auto bits = static_cast<mpfr_prec_t>(std::max(precision_bits, 64u));
  const Rational ratio = seq[n + 1] / seq[n];
  Real num(bits), den(bits), b(bits);
  mpfr_set_q(num.get(), ratio.get_mpq_t(), MPFR_RNDN);
  set_base(b, base);
  mpfr_div(num.get(), num.get(), b.get(), MPFR_RNDN);
  mpfr_log(num.get(), num.get(), MPFR_RNDN);
  mpfr_set_ui(den.get(), n + 1, MPFR_RNDN);
  mpfr_div_ui(den.get(), den.get(), n, MPFR_RNDN);
  mpfr_log(den.get(), den.get(), MPFR_RNDN);
  mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDN);
  return num.to_double();
}

}  // namespace clifford::recurrence
