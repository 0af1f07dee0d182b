#ifndef DISCRECT_ENGINE_HPP
#define DISCRECT_ENGINE_HPP

#include "discrect/big_number.hpp"

#include <span>
#include <vector>

namespace discrect::engine {

// Column-by-column transfer DP: states are vectors of running row sums,
// extended by every column of the height-m good-column alphabet, pruned by
// reachability (a coordinate farther than the remaining columns + 1 from the
// target band can never finish inside it). All counts are exact.

// Number of m x n matrices with every row and column sum in {-1,0,1}.
// n = 0 yields 1 (the empty matrix).
BigCount count_good(int rows, int cols);

// Same result as count_good; states are stored as sorted multisets, which is
// valid for the total count because the alphabet and the target band are
// symmetric under row permutation.
BigCount count_good_compressed(int rows, int cols);

// count_good(rows, n) for every n = 0..cols_max in one sweep (compressed
// states internally).
std::vector<BigCount> count_good_series(int rows, int cols_max);

// Number of column-good m x n matrices with row-sum vector exactly r.
// Returns 0 on parity/range infeasibility; throws on length mismatch.
BigCount count_row_profile(int rows, int cols, std::span<const int> r);

// count_row_profile(rows, n, r) for every n = 0..cols_max in one sweep.
std::vector<BigCount> count_row_profile_series(int rows, int cols_max,
                                               std::span<const int> r);

// Number of m x n +-1 matrices with row-sum vector r and column-sum vector c.
// Column j draws only from columns of sum c[j]; every |c[j]| <= 1 must hold
// (general column sums are not supported here - use the oracle).
BigCount count_profile_pair(int rows, int cols, std::span<const int> r,
                            std::span<const int> c);

} // namespace discrect::engine

#endif
