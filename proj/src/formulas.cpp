#include "discrect/formulas.hpp"

#include <stdexcept>

namespace discrect::formulas {

const BigCount& BinomialTable::factorial(long n) const {
    // caller holds mu_
    while (static_cast<long>(factorials_.size()) <= n)
        factorials_.push_back(factorials_.back() * static_cast<long>(factorials_.size()));
    return factorials_[static_cast<std::size_t>(n)];
}

BigCount BinomialTable::binomial(long n, long k) const {
    if (k < 0 || k > n || n < 0) return 0;
    std::scoped_lock lock(mu_);
    factorial(n); // grow once up front: later lookups must not reallocate
    return factorials_[n] / (factorials_[k] * factorials_[n - k]);
}

BigCount BinomialTable::multinomial(long n, std::span<const long> parts) const {
    long total = 0;
    for (long p : parts) {
        if (p < 0) return 0;
        total += p;
    }
    if (n < 0 || total != n) return 0;
    std::scoped_lock lock(mu_);
    factorial(n);
    BigCount denom = 1;
    for (long p : parts) denom *= factorials_[p];
    return factorials_[n] / denom;
}

const BinomialTable& table() {
    static BinomialTable t;
    return t;
}

BigCount binomial(long n, long k) { return table().binomial(n, k); }

BigCount multinomial(long n, std::span<const long> parts) {
    return table().multinomial(n, parts);
}

BigCount alpha_rows12(long n) {
    if (n < 0) throw std::invalid_argument("alpha_rows12: n must be >= 0");
    const long h = (n + 1) / 2;
    return binomial(2 * h, h);
}

BigCount alpha_three(long n) {
    if (n < 0) throw std::invalid_argument("alpha_three: n must be >= 0");
    if (n % 2 == 0) {
        const long k = n / 2;
        BigCount sum = 0;
        for (long i = 0; i <= k; ++i) {
            BigCount c = binomial(k, i);
            sum += c * c * binomial(2 * i, i);
        }
        return binomial(n, k) * sum;
    }
    const long k = (n - 1) / 2;
    BigCount sum = 0;
    for (long i = 0; i <= k; ++i)
        sum += binomial(k, i) *
               (binomial(2 * i + 1, i + 1) * binomial(k + 1, i) +
                2 * binomial(k + 1, i + 1) * binomial(2 * i + 1, i));
    return 2 * binomial(n, k) * sum;
}

BigCount alpha_four(long n) {
    if (n < 0) throw std::invalid_argument("alpha_four: n must be >= 0");
    const long h = (n + 1) / 2;
    BigCount sum = 0;
    for (long i = 0; i <= h; ++i) {
        BigCount c = binomial(h, i);
        sum += c * c * binomial(2 * i, i);
    }
    return binomial(2 * h, h) * sum;
}

BigCount alpha_one_column(long m) {
    if (m < 1) throw std::invalid_argument("alpha_one_column: m must be >= 1");
    const long h = (m + 1) / 2;
    return binomial(2 * h, h);
}

BigCount diff_four_three(long k) {
    if (k < 1) throw std::invalid_argument("diff_four_three: k must be >= 1");
    BigCount sum = 0;
    for (long i = 0; i < k; ++i)
        sum += binomial(k, i) * binomial(k - 1, i) * binomial(2 * i, i + 1);
    return -binomial(2 * k, k) * sum;
}

} // namespace discrect::formulas
