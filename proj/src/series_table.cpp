#include "clifford/series_table.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "json.hpp"

#include "clifford/error.hpp"

namespace clifford {

std::string_view to_string(SeriesKind kind) noexcept {
  switch (kind) {
    case SeriesKind::area: return "area";
    case SeriesKind::volume: return "volume";
    case SeriesKind::dseq: return "dseq";
  }
  return "area";
}

SeriesKind parse_series_kind(std::string_view text) {
  if (text == "area") return SeriesKind::area;
  if (text == "volume") return SeriesKind::volume;
  if (text == "dseq") return SeriesKind::dseq;
  throw Error(Errc::parse, "unknown series kind '" + std::string(text) + "'");
}

std::string_view normalization_tag(SeriesKind kind) noexcept {
  return kind == SeriesKind::dseq ? "4*pi^4" : "sqrt2*pi^2";
}

double normalization_constant(SeriesKind kind) noexcept {
  constexpr double pi = std::numbers::pi;
  return kind == SeriesKind::dseq ? 4.0 * pi * pi * pi * pi : std::numbers::sqrt2 * pi * pi;
}

std::string to_json(const SeriesTable& table) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(table.kind);
  j["normalization"] = normalization_tag(table.kind);
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : table.terms) terms.push_back(to_fraction_string(t));
  j["terms"] = std::move(terms);
  return j.dump();
}

SeriesTable series_table_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, e.what());
  }
  if (!j.is_object() || !j.contains("kind") || !j.contains("terms") || !j["terms"].is_array())
    throw Error(Errc::parse, "series table needs 'kind' and 'terms'");
  SeriesTable table;
  table.kind = parse_series_kind(j["kind"].get<std::string>());
  if (j.contains("normalization") && j["normalization"].get<std::string>() != normalization_tag(table.kind))
    throw Error(Errc::parse, "normalization tag does not match kind");
  for (const auto& t : j["terms"]) {
    if (!t.is_string()) throw Error(Errc::parse, "terms must be \"num/den\" strings");
    table.terms.push_back(parse_rational(t.get<std::string>()));
  }
  return table;
}

void write_csv(std::ostream& out, const SeriesTable& table) {
  out << "index,numerator,denominator\n";
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    out << i << ',' << table.terms[i].get_num().get_str() << ',' << table.terms[i].get_den().get_str()
        << '\n';
  }
}

}  // namespace clifford
