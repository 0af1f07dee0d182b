#ifndef DISCRECT_ALPHA_HPP
#define DISCRECT_ALPHA_HPP

#include "discrect/big_number.hpp"

#include <vector>

namespace discrect {

// Fastest exact path to alpha(m,n): closed formula for m <= 4 (or after
// transposing when n <= 4), column DP otherwise.
BigCount alpha_best(int rows, int cols);

// alpha(rows, n) for n = 0..cols_max via the same selection.
std::vector<BigCount> alpha_best_series(int rows, int cols_max);

} // namespace discrect

#endif
