#ifndef DISCRECT_ORACLE_HPP
#define DISCRECT_ORACLE_HPP

#include "discrect/big_number.hpp"
#include "discrect/column_alphabet.hpp"
#include "discrect/sign_matrix.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>

namespace discrect::oracle {

// Brute-force ground truth: exhaustive enumeration over the good-column
// alphabet (never over all 2^(mn) raw matrices), filtering by row sums. Every
// other counting path in the toolkit is tested against this one at small
// sizes. Budget overruns are hard errors - an oracle never undercounts.

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Deterministic stream of A(m,n) in lexicographic order over column-alphabet
// indices. Requires n >= 1 (a SignMatrix cannot have zero columns).
class GoodMatrixStream {
public:
    GoodMatrixStream(int rows, int cols, std::uint64_t budget = kDefaultBudget);
    std::optional<SignMatrix> next();

private:
    int rows_;
    int cols_;
    ColumnAlphabet alphabet_;
    std::vector<int> indices_;
    bool exhausted_;
};

BigCount count_good_oracle(int rows, int cols, std::uint64_t budget = kDefaultBudget);

// |A_r(m,n)|: column-good matrices with row-sum vector exactly r. Parity or
// range infeasibility is count 0, not an error.
BigCount count_row_profile_oracle(int rows, int cols, std::span<const int> r,
                                  std::uint64_t budget = kDefaultBudget);

// Bulk form of count_row_profile_oracle: counts of column-good matrices
// grouped by row-sum vector, from one exhaustive pass. Absent keys are 0.
std::map<std::vector<int>, BigCount>
row_profile_census(int rows, int cols, std::uint64_t budget = kDefaultBudget);

// |A_{r,c}(m,n)|: +-1 matrices with the given row- and column-sum vectors.
// Column j is drawn from the columns of sum c[j] (any integer c[j]), so the
// search space is the product of the per-column candidate sets.
BigCount count_profile_pair_oracle(int rows, int cols, std::span<const int> r,
                                   std::span<const int> c,
                                   std::uint64_t budget = kDefaultBudget);

// Column statistics of a 3-row matrix: x,y,z,w count top-two-entry patterns
// (+1,+1), (-1,-1), (+1,-1), (-1,+1); u,v count columns with top-two sum 0
// whose third entry is +1 / -1. x+y+z+w = n and u+v = z+w.
struct ColumnCensus {
    int x, y, z, w, u, v;
    bool operator==(const ColumnCensus&) const = default;
};

ColumnCensus column_census(const SignMatrix& m);

} // namespace discrect::oracle

#endif
