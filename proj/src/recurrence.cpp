#include "clifford/recurrence.hpp"

#include "json.hpp"

#include "clifford/error.hpp"
#include "clifford/nullspace.hpp"

namespace clifford::recurrence {

PRecurrence::PRecurrence(CoefficientMatrix coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || coeffs_.front().empty()) throw Error(Errc::degenerate, "empty coefficient matrix");
  for (const auto& row : coeffs_) {
    if (row.size() != coeffs_.front().size()) throw Error(Errc::degenerate, "ragged coefficient matrix");
  }
  bool zero = true;
  for (const auto& c : coeffs_.back()) zero = zero && sgn(c) == 0;
  if (zero) throw Error(Errc::degenerate, "leading polynomial is identically zero");
}

PRecurrence PRecurrence::normalized() const {
  std::vector<Rational> flat;
  for (const auto& row : coeffs_) flat.insert(flat.end(), row.begin(), row.end());
  linalg::IntegerVector ints = linalg::primitive(flat);

  const std::size_t width = coeffs_.front().size();
  const std::size_t last_row = coeffs_.size() - 1;
  int sign = 0;
  for (std::size_t k = width; k-- > 0 && sign == 0;) sign = sgn(ints[last_row * width + k]);
  CoefficientMatrix out(coeffs_.size(), std::vector<Rational>(width));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t k = 0; k < width; ++k) {
      out[i][k] = Rational(sign < 0 ? Integer(-ints[i * width + k]) : ints[i * width + k]);
    }
  }
  return PRecurrence(std::move(out));
}

bool equivalent(const PRecurrence& a, const PRecurrence& b) {
  return a.order() == b.order() && a.degree() == b.degree() && a.normalized() == b.normalized();
}

Rational poly_eval(const PRecurrence& rec, std::size_t row, long n) {
  if (row > rec.order()) throw Error(Errc::domain, "row index exceeds recurrence order");
  Rational acc;
  const Rational x(n);
  for (std::size_t k = rec.degree() + 1; k-- > 0;) acc = acc * x + rec.coeff(row, k);
  return acc;
}

namespace {

// Integer rows of the normalized recurrence, for fast evaluation.
struct IntegerRecurrence {
  std::vector<std::vector<Integer>> rows;

  explicit IntegerRecurrence(const PRecurrence& rec) {
    const PRecurrence norm = rec.normalized();
    for (const auto& row : norm.matrix()) {
      std::vector<Integer> r;
      for (const auto& c : row) r.push_back(c.get_num());
      rows.push_back(std::move(r));
    }
  }

  Integer eval(std::size_t i, long n) const {
    Integer acc;
    const auto& row = rows[i];
    for (std::size_t k = row.size(); k-- > 0;) acc = acc * n + row[k];
    return acc;
  }
};

}  // namespace

std::optional<Violation> check_satisfies(const PRecurrence& rec, std::span<const Rational> seq, std::size_t n_max) {
  const std::size_t r = rec.order();
  if (seq.size() < n_max + r + 1)
    throw Error(Errc::insufficient_terms, "need " + std::to_string(n_max + r + 1) + " terms, have " +
                                              std::to_string(seq.size()));
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational residue;
    for (std::size_t i = 0; i <= r; ++i) residue += poly_eval(rec, i, static_cast<long>(n)) * seq[n + i];
    if (sgn(residue) != 0) return Violation{n, residue};
  }
  return std::nullopt;
}

std::size_t default_equations(std::size_t order, std::size_t degree) noexcept {
  return 2 * (order + 1) * (degree + 1);
}

GuessResult guess(std::span<const Rational> seq, std::size_t order, std::size_t degree, std::size_t n_equations) {
  const std::size_t unknowns = (order + 1) * (degree + 1);
  if (n_equations == 0) n_equations = default_equations(order, degree);
  if (n_equations < unknowns)
    throw Error(Errc::insufficient_terms, "need at least (r+1)(d+1) = " + std::to_string(unknowns) + " equations");
  if (seq.size() < n_equations + order)
    throw Error(Errc::insufficient_terms, "need " + std::to_string(n_equations + order) + " terms, have " +
                                              std::to_string(seq.size()));

  linalg::IntegerMatrix system;
  system.reserve(n_equations);
  for (std::size_t n = 0; n < n_equations; ++n) {
    std::vector<Rational> row(unknowns);
    for (std::size_t i = 0; i <= order; ++i) {
      Integer power = 1;
      for (std::size_t k = 0; k <= degree; ++k) {
        row[i * (degree + 1) + k] = seq[n + i] * Rational(power);
        power *= static_cast<unsigned long>(n);
      }
    }
    system.push_back(linalg::primitive(row));
  }

  GuessResult result;
  result.equations_used = n_equations;
  for (const auto& v : linalg::nullspace(system, unknowns)) {
    CoefficientMatrix m(order + 1, std::vector<Rational>(degree + 1));
    bool leading_zero = true;
    for (std::size_t i = 0; i <= order; ++i) {
      for (std::size_t k = 0; k <= degree; ++k) {
        m[i][k] = Rational(v[i * (degree + 1) + k]);
        if (i == order && sgn(m[i][k]) != 0) leading_zero = false;
      }
    }
    // a basis vector with p_r == 0 is a lower-order relation; it still
    // belongs to the solution space, so keep it with a shifted view
    if (leading_zero) {
      std::size_t top = order;
      while (top > 0) {
        bool zero = true;
        for (const auto& c : m[top]) zero = zero && sgn(c) == 0;
        if (!zero) break;
        --top;
      }
      m.resize(top + 1);
    }
    result.basis.push_back(PRecurrence(std::move(m)).normalized());
  }
  if (result.basis.empty())
    throw Error(Errc::no_recurrence, "no recurrence of order " + std::to_string(order) + " and degree " +
                                         std::to_string(degree) + " fits " + std::to_string(n_equations) +
                                         " equations");
  result.unique = result.basis.size() == 1;
  return result;
}

SeriesTable extend(const PRecurrence& rec, SeriesKind kind, std::span<const Rational> initial, std::size_t count) {
  const std::size_t r = rec.order();
  if (initial.size() < r) throw Error(Errc::insufficient_terms, "extension needs at least r initial terms");
  SeriesTable out{kind, std::vector<Rational>(initial.begin(), initial.end())};
  if (count <= out.terms.size()) {
    out.terms.resize(count);
    return out;
  }
  const IntegerRecurrence ints(rec);
  out.terms.reserve(count);
  for (std::size_t next = out.terms.size(); next < count; ++next) {
    const long n = static_cast<long>(next - r);
    const Integer lead = ints.eval(r, n);
    if (sgn(lead) == 0)
      throw Error(Errc::singular_extension, "leading polynomial vanishes at n = " + std::to_string(n));
    Rational acc;
    for (std::size_t i = 0; i < r; ++i) {
      const Integer c = ints.eval(i, n);
      if (sgn(c) != 0) acc += Rational(c) * out.terms[next - r + i];
    }
    Rational value = -acc / Rational(lead);
    out.terms.push_back(std::move(value));
  }
  return out;
}

std::vector<Integer> characteristic_poly(const PRecurrence& rec) {
  const std::size_t d = rec.degree();
  std::vector<Rational> column;
  bool zero = true;
  for (std::size_t i = 0; i <= rec.order(); ++i) {
    column.push_back(rec.coeff(i, d));
    zero = zero && sgn(rec.coeff(i, d)) == 0;
  }
  if (zero) throw Error(Errc::degenerate, "top-degree column is zero");
  linalg::IntegerVector ints = linalg::primitive(column);
  while (ints.size() > 1 && sgn(ints.back()) == 0) ints.pop_back();
  if (sgn(ints.back()) < 0) {
    for (auto& c : ints) c = -c;
  }
  return ints;
}

PositivityReport positivity_scan(std::span<const Rational> seq, std::size_t n_max) {
  if (seq.size() < n_max + 1)
    throw Error(Errc::insufficient_terms, "sequence shorter than n_max + 1");
  PositivityReport report;
  for (std::size_t n = 0; n <= n_max; ++n) {
    report.checked = n + 1;
    if (sgn(seq[n]) <= 0) {
      report.all_positive = false;
      report.first_nonpositive = n;
      break;
    }
  }
  return report;
}

std::string to_json(const PRecurrence& rec) {
  nlohmann::ordered_json j;
  j["order"] = rec.order();
  j["degree"] = rec.degree();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : rec.matrix()) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(to_string(c));
    rows.push_back(std::move(r));
  }
  j["matrix"] = std::move(rows);
  return j.dump();
}

PRecurrence recurrence_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, e.what());
  }
  if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array())
    throw Error(Errc::parse, "recurrence needs a 'matrix' array");
  CoefficientMatrix m;
  for (const auto& row : j["matrix"]) {
    if (!row.is_array()) throw Error(Errc::parse, "matrix rows must be arrays");
    std::vector<Rational> r;
    for (const auto& c : row) {
      if (!c.is_string()) throw Error(Errc::parse, "matrix entries must be strings");
      r.push_back(parse_rational(c.get<std::string>()));
    }
    m.push_back(std::move(r));
  }
  PRecurrence rec(std::move(m));
  if (j.contains("order") && j["order"].get<std::size_t>() != rec.order())
    throw Error(Errc::parse, "'order' does not match the matrix");
  if (j.contains("degree") && j["degree"].get<std::size_t>() != rec.degree())
    throw Error(Errc::parse, "'degree' does not match the matrix");
  return rec;
}

}  // namespace clifford::recurrence
