#pragma once

#include <stdexcept>
#include <string>

namespace clifford {

enum class Errc {
  invalid_torus,
  pole_at_center,
  inversion_center_on_surface,
  no_radical_axis,
  out_of_canonical_range,
  domain,
  outside_disk,
  insufficient_terms,
  no_recurrence,
  singular_extension,
  degenerate,
  cross_check_mismatch,
  parse,
};

const char* to_string(Errc code) noexcept;

/// Exception carrying a machine-readable error code; thrown by every module.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace clifford
