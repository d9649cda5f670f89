#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "clifford/series_table.hpp"

namespace clifford::cli {

enum class Format { text, json, csv };

enum Exit : int { ok = 0, check_failed = 1, usage = 2 };

struct RunConfig {
  std::string command;
  SeriesKind kind = SeriesKind::area;
  std::size_t count = 10;
  std::size_t order = 3;
  std::size_t degree = 4;
  std::size_t equations = 0;  // 0: default system height
  std::size_t n = 200;
  std::size_t crossover = 200;
  std::size_t n_u = 0, n_v = 0, n_r = 0;  // 0: automatic
  std::size_t samples = 41;
  double max_a = 0.40;
  std::string surface = "sphere";
  std::vector<double> eps{1e-2, 1e-3};
  double R = 1.4142135623730951;
  double rho = 0.2;
  bool numeric_sphere = false;
  Format format = Format::text;
  std::string out;
  unsigned precision = 256;
};

/// Default precision: $CLIFFORD_PRECISION if set and parseable, else 256.
unsigned default_precision();

/// Parses argv-style arguments (without the program name) and runs the
/// command, writing results to `out` (or --out) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_coeffs(const RunConfig& config, std::ostream& out);
int cmd_guess(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_positivity(const RunConfig& config, std::ostream& out);
int cmd_charpoly(const RunConfig& config, std::ostream& out);
int cmd_iso(const RunConfig& config, std::ostream& out);
int cmd_rounding(const RunConfig& config, std::ostream& out);
int cmd_geometry(const RunConfig& config, std::ostream& out);

}  // namespace clifford::cli
