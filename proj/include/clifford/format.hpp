#pragma once

#include <string>

namespace clifford {

/// Fixed 15-significant-digit rendering used by every text and CSV emitter.
std::string format_real(double x);

}  // namespace clifford

namespace clifford {

/// x rounded to 15 significant digits, so JSON emitters print the short form.
double round_to_15(double x);

}  // namespace clifford
