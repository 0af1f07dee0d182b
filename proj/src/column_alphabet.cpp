#include "discrect/column_alphabet.hpp"

#include <stdexcept>

namespace discrect {

namespace {

// Counting masks from 0 upward with bit=0 meaning +1 yields exactly the
// required lexicographic order (+1 before -1, top entry most significant).
template <class Pred>
std::vector<std::vector<std::int8_t>> columns_matching(int rows, Pred&& keep) {
    if (rows < 1 || rows > 30)
        throw std::invalid_argument("column alphabet: rows must be in [1,30]");
    std::vector<std::vector<std::int8_t>> out;
    const std::uint32_t end = 1u << rows;
    std::vector<std::int8_t> col(rows);
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        int sum = 0;
        for (int i = 0; i < rows; ++i) {
            col[i] = (mask >> (rows - 1 - i)) & 1u ? -1 : 1;
            sum += col[i];
        }
        if (keep(sum)) out.push_back(col);
    }
    return out;
}

} // namespace

ColumnAlphabet good_columns(int rows) {
    return ColumnAlphabet{
        rows, columns_matching(rows, [](int s) { return s >= -1 && s <= 1; })};
}

std::vector<std::vector<std::int8_t>> columns_with_sum(int rows, int sum) {
    return columns_matching(rows, [sum](int s) { return s == sum; });
}

} // namespace discrect
