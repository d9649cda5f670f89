#include "clifford/error.hpp"

namespace clifford {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_torus: return "invalid-torus";
    case Errc::pole_at_center: return "pole-at-center";
    case Errc::inversion_center_on_surface: return "inversion-center-on-surface";
    case Errc::no_radical_axis: return "no-radical-axis";
    case Errc::out_of_canonical_range: return "out-of-canonical-range";
    case Errc::domain: return "domain-error";
    case Errc::outside_disk: return "outside-disk-of-convergence";
    case Errc::insufficient_terms: return "insufficient-terms";
    case Errc::no_recurrence: return "no-recurrence";
    case Errc::singular_extension: return "singular-extension";
    case Errc::degenerate: return "degenerate";
    case Errc::cross_check_mismatch: return "cross-check-mismatch";
    case Errc::parse: return "parse-error";
  }
  return "unknown";
}

}  // namespace clifford
