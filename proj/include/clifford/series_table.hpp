#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "clifford/rational.hpp"

namespace clifford {

enum class SeriesKind { area, volume, dseq };

std::string_view to_string(SeriesKind kind) noexcept;
SeriesKind parse_series_kind(std::string_view text);

/// Textual tag of the irrational prefactor stripped from the stored terms:
/// "sqrt2*pi^2" for area/volume, "4*pi^4" for dseq.
std::string_view normalization_tag(SeriesKind kind) noexcept;

/// Numerical value of that prefactor.
double normalization_constant(SeriesKind kind) noexcept;

/// Gap-free prefix terms[0..n) of an exact normalized coefficient sequence.
struct SeriesTable {
  SeriesKind kind = SeriesKind::area;
  std::vector<Rational> terms;

  std::size_t size() const noexcept { return terms.size(); }
  const Rational& operator[](std::size_t i) const { return terms[i]; }
};

/// {"kind":..., "normalization":..., "terms":["num/den", ...]}
std::string to_json(const SeriesTable& table);
SeriesTable series_table_from_json(std::string_view json);

/// CSV with header "index,numerator,denominator".
void write_csv(std::ostream& out, const SeriesTable& table);

}  // namespace clifford
