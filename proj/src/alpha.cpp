#include "discrect/alpha.hpp"

#include "discrect/engine.hpp"
#include "discrect/formulas.hpp"

#include <stdexcept>

namespace discrect {

namespace {

BigCount alpha_formula(int rows, int cols) {
    switch (rows) {
    case 1:
    case 2: return formulas::alpha_rows12(cols);
    case 3: return formulas::alpha_three(cols);
    case 4: return formulas::alpha_four(cols);
    default: throw std::invalid_argument("alpha formula supports rows <= 4 only");
    }
}

} // namespace

BigCount alpha_best(int rows, int cols) {
    if (rows < 1 || cols < 0)
        throw std::invalid_argument("alpha_best: rows >= 1 and cols >= 0 required");
    if (rows <= 4) return alpha_formula(rows, cols);
    if (cols >= 1 && cols <= 4) return alpha_formula(cols, rows); // alpha is symmetric
    return engine::count_good_compressed(rows, cols);
}

std::vector<BigCount> alpha_best_series(int rows, int cols_max) {
    if (rows <= 4) {
        std::vector<BigCount> out;
        out.reserve(cols_max + 1);
        for (int n = 0; n <= cols_max; ++n) out.push_back(alpha_formula(rows, n));
        return out;
    }
    return engine::count_good_series(rows, cols_max);
}

} // namespace discrect
