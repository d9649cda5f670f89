#include "clifford/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "clifford/error.hpp"
#include "clifford/format.hpp"
#include "clifford/geometry.hpp"
#include "clifford/quadrature.hpp"
#include "clifford/recurrence.hpp"
#include "clifford/series.hpp"

namespace clifford::cli {

namespace {

using nlohmann::ordered_json;

std::vector<Rational> direct_terms(SeriesKind kind, std::size_t count) {
  switch (kind) {
    case SeriesKind::area:
      return series::area_coeffs(count);
    case SeriesKind::volume:
      return series::volume_coeffs(count);
    case SeriesKind::dseq: {
      const auto a = series::area_coeffs(count + 1);
      const auto v = series::volume_coeffs(count + 1);
      return series::d_coeffs(count, a, v);
    }
  }
  return {};
}

void print_matrix(std::ostream& out, const recurrence::PRecurrence& rec) {
  for (std::size_t i = 0; i <= rec.order(); ++i) {
    for (std::size_t k = 0; k <= rec.degree(); ++k) out << (k ? " " : "  ") << to_string(rec.coeff(i, k));
    out << '\n';
  }
}

// symmetric or antisymmetric coefficient list
bool palindromic(const std::vector<Integer>& p) {
  bool sym = true, anti = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    sym = sym && p[i] == p[p.size() - 1 - i];
    anti = anti && p[i] == -p[p.size() - 1 - i];
  }
  return sym || anti;
}

ordered_json real(double x) { return round_to_15(x); }

}  // namespace

unsigned default_precision() {
  if (const char* env = std::getenv("CLIFFORD_PRECISION")) {
    char* end = nullptr;
    const unsigned long bits = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && bits >= 64 && bits <= 1u << 20) return static_cast<unsigned>(bits);
  }
  return 256;
}

int cmd_coeffs(const RunConfig& config, std::ostream& out) {
  series::BuildOptions options;
  options.crossover = config.crossover;
  const SeriesTable table = series::build_table(config.kind, config.count, options);
  switch (config.format) {
    case Format::json:
      out << to_json(table) << '\n';
      break;
    case Format::csv:
      write_csv(out, table);
      break;
    case Format::text:
      for (const auto& t : table.terms) out << to_string(t) << '\n';
      break;
  }
  return ok;
}

int cmd_guess(const RunConfig& config, std::ostream& out) {
  const std::size_t rows =
      config.equations ? config.equations : recurrence::default_equations(config.order, config.degree);
  const SeriesTable table = series::build_table(config.kind, rows + config.order);
  recurrence::GuessResult result;
  try {
    result = recurrence::guess(table.terms, config.order, config.degree, config.equations);
  } catch (const Error& e) {
    if (e.code() != Errc::no_recurrence) throw;
    if (config.format == Format::json) {
      out << ordered_json{{"kind", to_string(config.kind)}, {"order", config.order}, {"degree", config.degree},
                          {"dimension", 0}, {"unique", false}}
                 .dump()
          << '\n';
    } else {
      out << "no recurrence of order " << config.order << " and degree " << config.degree << '\n';
    }
    return check_failed;
  }

  if (config.format == Format::json) {
    ordered_json j{{"kind", to_string(config.kind)},
                   {"order", config.order},
                   {"degree", config.degree},
                   {"equations", result.equations_used},
                   {"dimension", result.basis.size()},
                   {"unique", result.unique}};
    j["basis"] = ordered_json::array();
    for (const auto& rec : result.basis) j["basis"].push_back(ordered_json::parse(recurrence::to_json(rec)));
    out << j.dump() << '\n';
  } else {
    out << "equations " << result.equations_used << ", nullspace dimension " << result.basis.size() << '\n';
    for (std::size_t b = 0; b < result.basis.size(); ++b) {
      out << "candidate " << b << ":\n";
      print_matrix(out, result.basis[b]);
    }
    const auto known = recurrence::known::for_kind(config.kind);
    const bool matches = result.unique && recurrence::equivalent(result.basis.front(), known);
    out << (result.unique ? "unique" : "not unique");
    if (result.unique) out << (matches ? ", matches the known recurrence" : ", differs from the known recurrence");
    out << '\n';
  }
  return result.unique ? ok : check_failed;
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const auto rec = recurrence::known::for_kind(config.kind);
  const auto terms = direct_terms(config.kind, config.n + rec.order() + 1);
  const auto violation = recurrence::check_satisfies(rec, terms, config.n);
  if (config.format == Format::json) {
    ordered_json j{{"kind", to_string(config.kind)}, {"n", config.n}, {"pass", !violation}};
    if (violation) {
      j["index"] = violation->index;
      j["residue"] = to_string(violation->residue);
    }
    out << j.dump() << '\n';
  } else if (violation) {
    out << "fail at n = " << violation->index << ", residue " << to_string(violation->residue) << '\n';
  } else {
    out << "pass: " << to_string(config.kind) << " recurrence holds exactly for n = 0.." << config.n << '\n';
  }
  return violation ? check_failed : ok;
}

int cmd_positivity(const RunConfig& config, std::ostream& out) {
  const SeriesTable table = series::build_table(config.kind, config.n + 1);
  const auto report = recurrence::positivity_scan(table.terms, config.n);
  const bool asymptotic = config.kind == SeriesKind::dseq && config.n >= 2;
  double c = 0.0;
  if (asymptotic) c = recurrence::asymptotic_constant(table.terms, config.n, {}, config.precision);

  if (config.format == Format::json) {
    ordered_json j{{"kind", to_string(config.kind)},
                   {"n", config.n},
                   {"checked", report.checked},
                   {"all_positive", report.all_positive}};
    if (report.first_nonpositive) j["first_nonpositive"] = *report.first_nonpositive;
    if (asymptotic) j["c_n"] = real(c);
    out << j.dump() << '\n';
  } else {
    if (report.all_positive)
      out << "all positive: indices 0.." << report.checked - 1 << '\n';
    else
      out << "first non-positive term at index " << *report.first_nonpositive << '\n';
    if (asymptotic) out << "c_" << config.n << " = " << format_real(c) << '\n';
  }
  return report.all_positive ? ok : check_failed;
}

int cmd_charpoly(const RunConfig& config, std::ostream& out) {
  const auto rec = recurrence::known::for_kind(config.kind);
  const auto poly = recurrence::characteristic_poly(rec);
  const auto roots = recurrence::char_roots(poly);
  if (config.format == Format::json) {
    ordered_json j{{"kind", to_string(config.kind)}, {"polynomial", recurrence::poly_to_string(poly)}};
    j["coefficients"] = ordered_json::array();
    for (const auto& c : poly) j["coefficients"].push_back(c.get_str());
    j["palindromic"] = palindromic(poly);
    j["roots"] = ordered_json::array();
    for (const auto& r : roots) j["roots"].push_back({{"value", real(r.value)}, {"multiplicity", r.multiplicity}});
    out << j.dump() << '\n';
  } else {
    out << recurrence::poly_to_string(poly) << '\n';
    if (palindromic(poly)) out << "palindromic\n";
    for (const auto& r : roots) out << format_real(r.value) << " (multiplicity " << r.multiplicity << ")\n";
  }
  return ok;
}

int cmd_iso(const RunConfig& config, std::ostream& out) {
  const auto rows = quadrature::iso_curve(config.samples, config.max_a);
  bool increasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i) increasing = increasing && rows[i].iso > rows[i - 1].iso;

  if (config.format == Format::json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows)
      j.push_back({{"a", real(r.a)}, {"area", real(r.area)}, {"volume", real(r.volume)}, {"iso", real(r.iso)}});
    out << j.dump() << '\n';
  } else {
    quadrature::write_csv(out, rows);
  }
  return increasing ? ok : check_failed;
}

int cmd_rounding(const RunConfig& config, std::ostream& out) {
  quadrature::Surface surface;
  if (config.surface == "sphere")
    surface = quadrature::Surface::sphere;
  else if (config.surface == "torus")
    surface = quadrature::Surface::torus;
  else
    throw Error(Errc::parse, "unknown surface '" + config.surface + "'");

  quadrature::RoundingOptions options;
  options.torus_R = config.R;
  options.exact_sphere = !config.numeric_sphere;
  const auto rows = quadrature::rounding_scan(surface, config.eps, options);

  if (config.format == Format::json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : rows)
      j.push_back({{"eps", real(r.eps)},
                   {"scaled_area", real(r.scaled_area)},
                   {"scaled_volume", real(r.scaled_volume)},
                   {"iso", real(r.iso)}});
    out << j.dump() << '\n';
  } else {
    quadrature::write_csv(out, rows);
  }
  return ok;
}

int cmd_geometry(const RunConfig& config, std::ostream& out) {
  namespace g = geometry;
  const double R = config.R;
  const double rho = config.rho;
  const auto p1 = g::cyclide_measurements(rho, R);
  const auto p2 = g::p1_to_p2(p1);
  const auto maxwell = g::maxwell_data(p1);
  const bool outer = rho < R - 1.0;
  const double lambda = outer ? g::lambda1(rho, R) : g::lambda2(rho, R);
  const auto location = g::classify_inversion_center(rho, R);
  const auto plane = g::p1_coordinate_plane(rho, R) == g::CoordinatePlane::xz ? "xz" : "xy";
  const auto [R_dual, rho_dual] = g::duality_map(R, rho);

  if (config.format == Format::json) {
    ordered_json j;
    j["P1"] = ordered_json::parse(g::to_json(p1, rho, R));
    j["P2"] = ordered_json::parse(g::to_json(p2, rho, R));
    j["P1_plane"] = plane;
    j["branch"] = outer ? "outer" : "inner";
    j["lambda"] = real(lambda);
    j["center"] = g::to_string(location);
    j["maxwell"] = {{"a", real(maxwell.a)}, {"f", real(maxwell.f)}, {"L", real(maxwell.L)},
                    {"toroidal", maxwell.toroidal}};
    j["dual"] = {{"R", real(R_dual)}, {"rho", real(rho_dual)}};
    out << j.dump() << '\n';
  } else {
    out << "P1 (" << plane << "): r1 = " << format_real(p1.r1) << ", r2 = " << format_real(p1.r2)
        << ", d = " << format_real(p1.d) << '\n';
    out << "P2: r1 = " << format_real(p2.r1) << ", r2 = " << format_real(p2.r2) << ", d = " << format_real(p2.d)
        << '\n';
    out << (outer ? "lambda1" : "lambda2") << " = " << format_real(lambda) << '\n';
    out << "inversion center " << g::to_string(location) << " the torus\n";
    out << "Maxwell: a = " << format_real(maxwell.a) << ", f = " << format_real(maxwell.f)
        << ", L = " << format_real(maxwell.L) << (maxwell.toroidal ? " (toroidal)" : " (not toroidal)") << '\n';
    out << "dual: R = " << format_real(R_dual) << ", rho = " << format_real(rho_dual) << '\n';
  }
  return ok;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.precision = default_precision();
  std::string kind = "area";

  CLI::App app{"Series, recurrences and quadrature for conformal images of the Clifford torus", "clifford"};
  app.require_subcommand(1);
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "text, json or csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", config.out, "write to this file instead of stdout");
  };
  auto with_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", kind, "area, volume or dseq")->check(CLI::IsMember({"area", "volume", "dseq"}));
  };

  auto* coeffs = app.add_subcommand("coeffs", "exact normalized coefficients");
  with_kind(coeffs);
  coeffs->add_option("--count", config.count)->check(CLI::PositiveNumber);
  coeffs->add_option("--crossover", config.crossover, "last direct-summation index + 1");
  common(coeffs);

  auto* guess = app.add_subcommand("guess", "recover a P-recurrence from initial terms");
  with_kind(guess);
  guess->add_option("--order", config.order)->check(CLI::PositiveNumber);
  guess->add_option("--degree", config.degree);
  guess->add_option("--equations", config.equations, "system height (default 2(r+1)(d+1))");
  common(guess);

  auto* verify = app.add_subcommand("verify", "check the known recurrence on directly summed terms");
  with_kind(verify);
  verify->add_option("--n", config.n);
  common(verify);

  auto* positivity = app.add_subcommand("positivity", "sign scan of the extended sequence");
  with_kind(positivity);
  positivity->add_option("--n", config.n);
  positivity->add_option("--precision", config.precision, "bits for the asymptotic constant")
      ->check(CLI::Range(64u, 1u << 20));
  common(positivity);

  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial and its roots");
  with_kind(charpoly);
  common(charpoly);

  auto* iso = app.add_subcommand("iso", "isoperimetric ratio along the conformal family");
  iso->add_option("--samples", config.samples)->check(CLI::Range(2, 100000));
  iso->add_option("--max-a", config.max_a)->check(CLI::Range(0.0, 0.4142));
  common(iso);

  auto* rounding = app.add_subcommand("rounding", "inversion about points approaching the surface");
  rounding->add_option("--surface", config.surface)->check(CLI::IsMember({"sphere", "torus"}));
  rounding->add_option("--eps", config.eps)->delimiter(',')->check(CLI::PositiveNumber);
  rounding->add_option("--R", config.R, "torus major radius");
  rounding->add_flag("--numeric-sphere", config.numeric_sphere, "integrate the sphere instead of the closed form");
  common(rounding);

  auto* geometry = app.add_subcommand("geometry", "cyclide measurements of an inverted torus");
  geometry->add_option("--R", config.R, "torus major radius");
  geometry->add_option("--rho", config.rho, "inversion center abscissa");
  common(geometry);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int code = app.exit(e, help, help);
    (code == 0 ? out : err) << help.str();
    return code == 0 ? ok : usage;
  }

  config.kind = parse_series_kind(kind);
  config.command = app.get_subcommands().front()->get_name();

  std::ofstream file;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      err << "cannot open " << config.out << '\n';
      return usage;
    }
  }
  std::ostream& sink = config.out.empty() ? out : file;

  static const std::map<std::string, int (*)(const RunConfig&, std::ostream&)> commands{
      {"coeffs", cmd_coeffs},   {"guess", cmd_guess}, {"verify", cmd_verify},     {"positivity", cmd_positivity},
      {"charpoly", cmd_charpoly}, {"iso", cmd_iso},   {"rounding", cmd_rounding}, {"geometry", cmd_geometry}};
  try {
    return commands.at(config.command)(config, sink);
  } catch (const Error& e) {
    err << e.what() << '\n';
    const bool math = e.code() == Errc::cross_check_mismatch || e.code() == Errc::degenerate ||
                      e.code() == Errc::singular_extension;
    return math ? check_failed : usage;
  }
}

}  // namespace clifford::cli
