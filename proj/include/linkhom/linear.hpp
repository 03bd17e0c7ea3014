#pragma once

#include "linkhom/qt_arith.hpp"

#include <vector>

namespace linkhom {

// Exact solve of the square system A x = b over the fraction field. Rows are
// scaled to polynomial form, forward elimination is fraction-free with exact
// divisions by the previous pivot, and back-substitution works in fractions.
// Throws std::runtime_error when A is singular.
std::vector<RatFunc> linear_solve(std::vector<std::vector<RatFunc>> a, std::vector<RatFunc> b);

}  // namespace linkhom
