#ifndef DISCRECT_ASYMPTOTICS_HPP
#define DISCRECT_ASYMPTOTICS_HPP

#include "discrect/big_number.hpp"

#include <span>
#include <vector>

namespace discrect::asymptotics {

// Limit and magnitude claims are verified empirically as monotone-trend plus
// terminal-tolerance properties over exactly computed values; true limits are
// not desk-reproducible. Values stay exact rationals for as long as possible;
// the irrational sqrt(n) factor of the normalized constant enters only in the
// final decimal conversion.

enum class Parity { even, odd };

struct SeriesPoint {
    int n;
    // exact value, or the rational cofactor when sqrt_factor is set
    BigRational rational;
    // true for normalized-constant points: value = rational * sqrt(n)
    bool sqrt_factor = false;
    Decimal decimal() const;
};

// alpha(m,n+gap)/alpha(m,n) for n = 0..cols_max; tends to alpha(m,1)^2 for
// gap 2.
std::vector<SeriesPoint> ratio_series(int rows, int cols_max, int gap = 2);

// alpha(2h, nn)/alpha(2h-1, nn) over odd nn <= cols_max; tends to
// C(2h,h)/2^(2h-1).
std::vector<SeriesPoint> oddeven_ratio_series(int half_m, int cols_max);

// alpha(m,n) * n^(floor((m-1)/2)+1/2) / alpha(m,1)^n over n of the given
// parity, 1 <= n <= cols_max.
std::vector<SeriesPoint> normalized_constant_series(int rows, Parity parity,
                                                    int cols_max);

// alpha_{r'}(m,n)/alpha_r(m,n) over n <= cols_max with alpha_r(m,n) > 0.
// Throws if no such n exists.
std::vector<SeriesPoint> row_profile_ratio_series(int rows, int cols_max,
                                                  std::span<const int> r,
                                                  std::span<const int> r_prime);

// P(|X_1+...+X_n| >= t) for i.i.d. uniform +-1 steps, exactly:
// 2^-n * sum of the qualifying binomials.
BigRational tail_probability(long n, long t);

// With b,c positive, c nonincreasing and a_i/b_i nonincreasing, checks
// sum(a_i c_i)/sum(b_i c_i) >= sum(a_i)/sum(b_i) and returns the outcome.
// Precondition violations throw.
bool weighted_mediant_holds(std::span<const BigRational> a,
                            std::span<const BigRational> b,
                            std::span<const BigRational> c);

// ---- target constants ----

// alpha(m,1)^2
BigCount porp_target(int rows);

// C(2h,h)/2^(2h-1)
BigRational oddeven_target(int half_m);

// Normalized-constant limits for rows = 3: even branch 3*sqrt(3)/(sqrt(2)*pi^1.5),
// odd branch 12*sqrt(6)/pi^1.5 (the value forced by combining the even branch
// with the even/odd row ratio; see also paper_odd_constant). rows = 4 reuses
// the rows = 3 branches (even: identical; odd: 6x the even constant). Other
// rows have no closed-form target and throw.
Decimal constant_target(int rows, Parity parity);

// 2*sqrt(6)/pi^1.5 - the odd-branch constant as usually printed; inconsistent
// with the computed series by more than a factor 4 and reported only for
// comparison.
Decimal paper_odd_constant();

} // namespace discrect::asymptotics

#endif
