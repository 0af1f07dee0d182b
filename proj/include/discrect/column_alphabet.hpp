#ifndef DISCRECT_COLUMN_ALPHABET_HPP
#define DISCRECT_COLUMN_ALPHABET_HPP

#include <cstdint>
#include <vector>

namespace discrect {

// All +-1 columns of height m whose sum lies in {-1,0,1}. Order is
// deterministic: lexicographic with +1 before -1, top to bottom.
// Size is C(m, m/2) for even m and 2*C(m, (m-1)/2) for odd m.
struct ColumnAlphabet {
    int rows;
    std::vector<std::vector<std::int8_t>> columns;
};

ColumnAlphabet good_columns(int rows);

// All +-1 columns of height m with sum exactly s (empty when infeasible),
// same ordering convention.
std::vector<std::vector<std::int8_t>> columns_with_sum(int rows, int sum);

} // namespace discrect

#endif
