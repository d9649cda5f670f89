#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "clifford/error.hpp"
#include "clifford/recurrence.hpp"

namespace clifford::recurrence {

namespace {

using Poly = std::vector<Rational>;  // low to high, no trailing zeros

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * Rational(k));
  trim(out);
  return out;
}

// Quotient and remainder of a / b over Q.
std::pair<Poly, Poly> divide(Poly a, const Poly& b) {
  if (b.empty()) throw Error(Errc::degenerate, "polynomial division by zero");
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= c * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

Poly monic(Poly p) {
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly subtract(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  trim(out);
  return out;
}

// Yun's algorithm: p = lead * prod_i factors[i]^(i+1), factors pairwise coprime and square-free.
std::vector<Poly> square_free(const Poly& p) {
  std::vector<Poly> factors;
  Poly dp = derivative(p);
  Poly a = gcd(p, dp);
  Poly b = divide(p, a).first;
  Poly c = divide(dp, a).first;
  Poly d = subtract(c, derivative(b));
  while (b.size() > 1) {
    a = gcd(b, d);
    factors.push_back(a);
    b = divide(b, a).first;
    c = divide(d, a).first;
    d = subtract(c, derivative(b));
  }
  return factors;
}

using Complex = std::complex<long double>;

Complex horner(const std::vector<long double>& p, Complex z) {
  Complex acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * z + p[k];
  return acc;
}

// Aberth-Ehrlich iteration for all roots of a square-free polynomial.
std::vector<Complex> aberth(const Poly& exact) {
  std::vector<long double> p, dp;
  for (const auto& c : exact) p.push_back(static_cast<long double>(c.get_d()));
  for (std::size_t k = 1; k < p.size(); ++k) dp.push_back(p[k] * static_cast<long double>(k));
  const std::size_t n = p.size() - 1;
  if (n == 0) return {};
  if (n == 1) return {Complex(-p[0] / p[1], 0)};

  long double bound = 0;  // Cauchy bound on root moduli
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(p[k] / p[n]));
  bound += 1;
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const long double angle = 2 * std::numbers::pi_v<long double> * (k + 0.25L) / n;
    z[k] = std::polar(bound * 0.5L, angle);
  }
  for (int iter = 0; iter < 500; ++iter) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex ratio = horner(p, z[k]) / horner(dp, z[k]);
      Complex sum = 0;
      for (std::size_t m = 0; m < n; ++m) {
        if (m != k) sum += 1.0L / (z[k] - z[m]);
      }
      const Complex step = ratio / (1.0L - ratio * sum);
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-18L) break;
  }
  // Newton polish
  for (auto& root : z) {
    for (int iter = 0; iter < 5; ++iter) {
      const Complex d = horner(dp, root);
      if (std::abs(d) == 0) break;
      root -= horner(p, root) / d;
    }
  }
  return z;
}

}  // namespace

std::vector<Root> char_roots(std::span<const Integer> poly) {
  Poly p;
  for (const auto& c : poly) p.push_back(Rational(c));
  trim(p);
  if (p.size() < 2) throw Error(Errc::degenerate, "constant polynomial has no roots");

  constexpr double cluster_tolerance = 1e-8;
  std::vector<Root> roots;
  const auto factors = square_free(p);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (const Complex& z : aberth(factors[i])) {
      if (std::abs(z.imag()) > cluster_tolerance * std::max(1.0L, std::abs(z.real())))
        throw Error(Errc::degenerate, "non-real root encountered");
      roots.push_back(Root{static_cast<double>(z.real()), static_cast<unsigned>(i + 1)});
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.value > b.value; });
  for (std::size_t k = 1; k < roots.size(); ++k) {
    if (std::abs(roots[k].value - roots[k - 1].value) < cluster_tolerance * std::max(1.0, std::abs(roots[k].value)))
      throw Error(Errc::degenerate, "unresolved root cluster near " + std::to_string(roots[k].value));
  }
  return roots;
}

std::string poly_to_string(std::span<const Integer> poly) {
  std::string out;
  for (std::size_t k = poly.size(); k-- > 0;) {
    const Integer& c = poly[k];
    if (sgn(c) == 0) continue;
    const Integer mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "z";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace clifford::recurrence
