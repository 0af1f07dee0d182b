#ifndef DISCRECT_MAJORIZATION_HPP
#define DISCRECT_MAJORIZATION_HPP

#include "discrect/big_number.hpp"
#include "discrect/sign_matrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace discrect::majorization {

// x majorizes y: equal sums and every prefix sum of the decreasing
// rearrangement of x dominates that of y. Throws on length mismatch.
bool majorizes(std::span<const int> x, std::span<const int> y);

// Transfer chain from r_prime down to r: consecutive vectors differ by a
// permutation of (+2,-2,0,...,0) and each majorizes the next. Built by a
// deterministic shortest-path search over majorization-monotone transfers
// (steps between permutation-equivalent vectors are monotone, since equal
// multisets majorize each other).
//
// Requires r_prime >= r in the majorization order and a common entry parity.
// Throws NoChainError when no such chain reaches r exactly; the classical
// transfer lemma only guarantees a chain up to a terminal permutation.
class NoChainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::vector<int>> dalton_chain(std::span<const int> r,
                                           std::span<const int> r_prime);

// The injection behind the single-adjustment comparison: M must be
// column-good with first two row sums (r1+2, r2-2) where r1 >= r2 (rows 1,2
// are the canonical transfer rows; permute rows first for other positions).
// Swaps the first two rows strictly after the pivot column k, producing a
// column-good matrix with row sums (r1, r2, rest unchanged).
SignMatrix psi(const SignMatrix& m);

struct DecreasingRow {
    std::vector<int> r;
    std::vector<int> r_prime;
    BigCount count_r;
    BigCount count_r_prime;
    bool ok;
};

struct DecreasingReport {
    int rows = 0, cols = 0, bound = 0;
    std::vector<DecreasingRow> pairs;
    // fixed-column-sum refinement (checked on small instances only)
    long fixed_c_checks = 0;
    long fixed_c_violations = 0;
    bool all_ok() const;
    // one line per pair: r;r_prime;count_r;count_r_prime;ok
    std::string to_csv() const;
};

// Exhaustively compares alpha_r(m,n) >= alpha_r'(m,n) over all pairs
// r' >= r of length-m vectors with |entries| <= bound and entry parity
// matching n. Infeasible profiles (count 0) satisfy the inequality vacuously.
// When m <= 3 and n <= 4 the fixed-c refinement runs as well.
DecreasingReport verify_decreasing(int rows, int cols, int bound);

} // namespace discrect::majorization

#endif
