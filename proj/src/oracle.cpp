#include "discrect/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace discrect::oracle {

namespace {

void check_budget(std::uint64_t base, int exponent, std::uint64_t budget, int rows,
                  int cols) {
    // detects overflow while computing base^exponent
    std::uint64_t total = 1;
    for (int e = 0; e < exponent; ++e) {
        if (base != 0 && total > budget / base + 1)
            total = budget + 1;
        else
            total *= base;
        if (total > budget)
            throw BudgetError("oracle: enumeration of (" + std::to_string(rows) + "," +
                              std::to_string(cols) + ") needs more than " +
                              std::to_string(budget) + " candidate matrices");
    }
}

} // namespace

GoodMatrixStream::GoodMatrixStream(int rows, int cols, std::uint64_t budget)
    : rows_(rows), cols_(cols), alphabet_(good_columns(rows)), exhausted_(false) {
    if (cols < 1) throw std::invalid_argument("GoodMatrixStream: cols must be >= 1");
    check_budget(alphabet_.columns.size(), cols, budget, rows, cols);
    indices_.assign(static_cast<std::size_t>(cols), 0);
}

std::optional<SignMatrix> GoodMatrixStream::next() {
    while (!exhausted_) {
        std::vector<int> sums(rows_, 0);
        for (int j = 0; j < cols_; ++j) {
            const auto& col = alphabet_.columns[indices_[j]];
            for (int i = 0; i < rows_; ++i) sums[i] += col[i];
        }
        bool good = std::all_of(sums.begin(), sums.end(),
                                [](int s) { return s >= -1 && s <= 1; });
        std::optional<SignMatrix> out;
        if (good) {
            std::vector<std::int8_t> flat(static_cast<std::size_t>(rows_) * cols_);
            for (int j = 0; j < cols_; ++j) {
                const auto& col = alphabet_.columns[indices_[j]];
                for (int i = 0; i < rows_; ++i)
                    flat[static_cast<std::size_t>(i) * cols_ + j] = col[i];
            }
            out.emplace(rows_, cols_, flat);
        }
        // odometer: last index varies fastest, giving lexicographic order
        int j = cols_ - 1;
        while (j >= 0 && ++indices_[j] == static_cast<int>(alphabet_.columns.size())) {
            indices_[j] = 0;
            --j;
        }
        if (j < 0) exhausted_ = true;
        if (out) return out;
    }
    return std::nullopt;
}

BigCount count_good_oracle(int rows, int cols, std::uint64_t budget) {
    if (cols == 0) return 1;
    GoodMatrixStream stream(rows, cols, budget);
    BigCount count = 0;
    while (stream.next()) ++count;
    return count;
}

namespace {

// Generic odometer over per-column candidate column sets with incremental
// row-sum tracking; counts assignments whose final row sums equal target.
BigCount count_with_target(int rows, int cols,
                           const std::vector<const std::vector<std::vector<std::int8_t>>*>& cands,
                           std::span<const int> target, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (const auto* c : cands) {
        if (c->empty()) return 0;
        if (total > budget / c->size() + 1)
            throw BudgetError("oracle: per-column enumeration exceeds budget of " +
                              std::to_string(budget));
        total *= c->size();
        if (total > budget)
            throw BudgetError("oracle: per-column enumeration exceeds budget of " +
                              std::to_string(budget));
    }
    BigCount count = 0;
    std::vector<int> idx(cols, 0);
    std::vector<int> sums(rows, 0);
    auto apply = [&](int j, int sign) {
        const auto& col = (*cands[j])[idx[j]];
        for (int i = 0; i < rows; ++i) sums[i] += sign * col[i];
    };
    for (int j = 0; j < cols; ++j) apply(j, +1);
    for (;;) {
        if (std::equal(sums.begin(), sums.end(), target.begin())) ++count;
        int j = cols - 1;
        for (;;) {
            if (j < 0) return count;
            apply(j, -1);
            if (++idx[j] < static_cast<int>(cands[j]->size())) {
                apply(j, +1);
                break;
            }
            idx[j] = 0;
            apply(j, +1);
            --j;
        }
    }
}

} // namespace

BigCount count_row_profile_oracle(int rows, int cols, std::span<const int> r,
                                  std::uint64_t budget) {
    if (static_cast<int>(r.size()) != rows)
        throw std::invalid_argument("count_row_profile_oracle: profile length mismatch");
    for (int ri : r)
        if (std::abs(ri) > cols || ((ri - cols) & 1)) return 0;
    if (cols == 0) return 1; // all-zero profile of the empty matrix
    const ColumnAlphabet alphabet = good_columns(rows);
    std::vector<const std::vector<std::vector<std::int8_t>>*> cands(
        cols, &alphabet.columns);
    return count_with_target(rows, cols, cands, r, budget);
}

std::map<std::vector<int>, BigCount> row_profile_census(int rows, int cols,
                                                        std::uint64_t budget) {
    std::map<std::vector<int>, BigCount> census;
    if (cols == 0) {
        census[std::vector<int>(rows, 0)] = 1;
        return census;
    }
    const ColumnAlphabet alphabet = good_columns(rows);
    check_budget(alphabet.columns.size(), cols, budget, rows, cols);
    std::vector<int> idx(cols, 0);
    std::vector<int> sums(rows, 0);
    auto apply = [&](int j, int sign) {
        const auto& col = alphabet.columns[idx[j]];
        for (int i = 0; i < rows; ++i) sums[i] += sign * col[i];
    };
    for (int j = 0; j < cols; ++j) apply(j, +1);
    for (;;) {
        ++census[sums];
        int j = cols - 1;
        for (;;) {
            if (j < 0) return census;
            apply(j, -1);
            if (++idx[j] < static_cast<int>(alphabet.columns.size())) {
                apply(j, +1);
                break;
            }
            idx[j] = 0;
            apply(j, +1);
            --j;
        }
    }
}

BigCount count_profile_pair_oracle(int rows, int cols, std::span<const int> r,
                                   std::span<const int> c, std::uint64_t budget) {
    if (static_cast<int>(r.size()) != rows)
        throw std::invalid_argument("count_profile_pair_oracle: row profile length mismatch");
    if (static_cast<int>(c.size()) != cols)
        throw std::invalid_argument("count_profile_pair_oracle: column profile length mismatch");
    if (cols == 0)
        return std::all_of(r.begin(), r.end(), [](int v) { return v == 0; }) ? 1 : 0;
    std::vector<std::vector<std::vector<std::int8_t>>> per_sum;
    std::vector<const std::vector<std::vector<std::int8_t>>*> cands;
    per_sum.reserve(cols);
    for (int j = 0; j < cols; ++j)
        per_sum.push_back(columns_with_sum(rows, c[j]));
    for (const auto& p : per_sum) cands.push_back(&p);
    return count_with_target(rows, cols, cands, r, budget);
}

ColumnCensus column_census(const SignMatrix& m) {
    if (m.rows() != 3)
        throw std::invalid_argument("column_census: matrix must have exactly 3 rows");
    ColumnCensus out{0, 0, 0, 0, 0, 0};
    for (int j = 0; j < m.cols(); ++j) {
        const int a = m.at(0, j), b = m.at(1, j), t = m.at(2, j);
        if (a == 1 && b == 1) ++out.x;
        else if (a == -1 && b == -1) ++out.y;
        else if (a == 1 && b == -1) ++out.z;
        else ++out.w;
        if (a + b == 0) (t == 1 ? out.u : out.v)++;
    }
    return out;
}

} // namespace discrect::oracle
