#ifndef DISCRECT_FORMULAS_HPP
#define DISCRECT_FORMULAS_HPP

#include "discrect/big_number.hpp"

#include <mutex>
#include <span>
#include <vector>

namespace discrect::formulas {

// Memoized exact binomial/multinomial coefficients over cached factorials.
// Out-of-range binomials are 0, so printed summation bounds can be used
// verbatim. Thread-safe; values are deterministic.
class BinomialTable {
public:
    BigCount binomial(long n, long k) const;
    BigCount multinomial(long n, std::span<const long> parts) const;

private:
    const BigCount& factorial(long n) const;
    mutable std::mutex mu_;
    mutable std::vector<BigCount> factorials_{BigCount(1)};
};

// process-wide shared table
const BinomialTable& table();
BigCount binomial(long n, long k);
BigCount multinomial(long n, std::span<const long> parts);

// alpha(1,n) = alpha(2,n) = C(2*floor((n+1)/2), floor((n+1)/2))
BigCount alpha_rows12(long n);

// alpha(3,n): even n = 2k -> C(n,k) * sum_i C(k,i)^2 C(2i,i);
// odd n = 2k+1 -> 2 C(n,k) * sum_i C(k,i) [C(2i+1,i+1)C(k+1,i) + 2C(k+1,i+1)C(2i+1,i)]
BigCount alpha_three(long n);

// alpha(4,n) = C(2h,h) * sum_i C(h,i)^2 C(2i,i) with h = ceil(n/2);
// equals alpha_three(2*ceil(n/2)).
BigCount alpha_four(long n);

// alpha(m,1) = C(2*floor((m+1)/2), floor((m+1)/2))
BigCount alpha_one_column(long m);

// alpha(4,2k-1) - alpha(3,2k-1) = -C(2k,k) * sum_{i<k} C(k,i)C(k-1,i)C(2i,i+1);
// signed and nonpositive.
BigCount diff_four_three(long k);

} // namespace discrect::formulas

#endif
