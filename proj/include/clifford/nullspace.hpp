#pragma once

// Exact nullspace of integer matrices by fraction-free (Bareiss) elimination.

#include <cstddef>
#include <vector>

#include "clifford/rational.hpp"

namespace clifford::linalg {

using IntegerMatrix = std::vector<std::vector<Integer>>;
using IntegerVector = std::vector<Integer>;

struct EchelonForm {
  IntegerMatrix rows;                       // the first `rank` rows are the nonzero echelon rows
  std::vector<std::size_t> pivot_columns;   // size == rank
  std::size_t columns = 0;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Fraction-free row echelon form. Every intermediate entry is a minor of
/// the input, so all divisions are exact.
EchelonForm fraction_free_echelon(IntegerMatrix matrix, std::size_t columns);

/// Basis of {x : A x = 0}, one primitive integer vector (content 1) per
/// free column. Empty when A has full column rank.
std::vector<IntegerVector> nullspace(const IntegerMatrix& matrix, std::size_t columns);

/// Scales a rational vector to a primitive integer vector.
IntegerVector primitive(const std::vector<Rational>& v);

}  // namespace clifford::linalg
