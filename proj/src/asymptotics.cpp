#include "discrect/asymptotics.hpp"

#include "discrect/alpha.hpp"
#include "discrect/engine.hpp"
#include "discrect/formulas.hpp"

#include <boost/multiprecision/number.hpp>

#include <stdexcept>
#include <string>

namespace discrect::asymptotics {

Decimal SeriesPoint::decimal() const {
    Decimal v = to_decimal(rational);
    if (sqrt_factor) v *= sqrt(Decimal(n));
    return v;
}

std::vector<SeriesPoint> ratio_series(int rows, int cols_max, int gap) {
    if (gap < 1) throw std::invalid_argument("ratio_series: gap must be >= 1");
    const auto alpha = alpha_best_series(rows, cols_max + gap);
    std::vector<SeriesPoint> out;
    out.reserve(cols_max + 1);
    for (int n = 0; n <= cols_max; ++n)
        out.push_back({n, BigRational(alpha[n + gap], alpha[n]), false});
    return out;
}

std::vector<SeriesPoint> oddeven_ratio_series(int half_m, int cols_max) {
    if (half_m < 1) throw std::invalid_argument("oddeven_ratio_series: half_m >= 1");
    const int even_rows = 2 * half_m, odd_rows = 2 * half_m - 1;
    const auto top = alpha_best_series(even_rows, cols_max);
    const auto bottom = alpha_best_series(odd_rows, cols_max);
    std::vector<SeriesPoint> out;
    for (int nn = 1; nn <= cols_max; nn += 2)
        out.push_back({nn, BigRational(top[nn], bottom[nn]), false});
    return out;
}

std::vector<SeriesPoint> normalized_constant_series(int rows, Parity parity,
                                                    int cols_max) {
    const auto alpha = alpha_best_series(rows, cols_max);
    const BigCount alpha1 = formulas::alpha_one_column(rows);
    const int q = (rows - 1) / 2;
    std::vector<SeriesPoint> out;
    BigCount denom = 1; // alpha(m,1)^n, updated incrementally
    for (int n = 1; n <= cols_max; ++n) {
        denom *= alpha1;
        if ((n % 2 == 0) != (parity == Parity::even)) continue;
        BigCount numer = alpha[n];
        for (int e = 0; e < q; ++e) numer *= n;
        out.push_back({n, BigRational(numer, denom), true});
    }
    return out;
}

std::vector<SeriesPoint> row_profile_ratio_series(int rows, int cols_max,
                                                  std::span<const int> r,
                                                  std::span<const int> r_prime) {
    const auto base = engine::count_row_profile_series(rows, cols_max, r);
    const auto varied = engine::count_row_profile_series(rows, cols_max, r_prime);
    std::vector<SeriesPoint> out;
    for (int n = 0; n <= cols_max; ++n) {
        if (base[n] == 0) continue;
        out.push_back({n, BigRational(varied[n], base[n]), false});
    }
    if (out.empty())
        throw std::invalid_argument(
            "row_profile_ratio_series: profile r is infeasible for every n <= " +
            std::to_string(cols_max));
    return out;
}

BigRational tail_probability(long n, long t) {
    if (n < 1) throw std::invalid_argument("tail_probability: n must be >= 1");
    if (t < 0) throw std::invalid_argument("tail_probability: t must be >= 0");
    if (t == 0) return 1;
    // |2k - n| >= t: two symmetric tails, disjoint since t >= 1
    const long upper = (n - t) >= 0 ? (n - t) / 2 : -1;
    BigCount tail = 0;
    for (long k = 0; k <= upper; ++k) tail += formulas::binomial(n, k);
    BigCount denom = BigCount(1) << n;
    return BigRational(2 * tail, denom);
}

bool weighted_mediant_holds(std::span<const BigRational> a,
                            std::span<const BigRational> b,
                            std::span<const BigRational> c) {
    const std::size_t k = a.size();
    if (b.size() != k || c.size() != k || k == 0)
        throw std::invalid_argument("weighted_mediant_holds: need equal nonzero lengths");
    for (std::size_t i = 0; i < k; ++i)
        if (b[i] <= 0 || c[i] <= 0)
            throw std::invalid_argument("weighted_mediant_holds: b and c must be positive");
    for (std::size_t i = 1; i < k; ++i) {
        if (c[i] > c[i - 1])
            throw std::invalid_argument("weighted_mediant_holds: c must be nonincreasing");
        if (a[i] * b[i - 1] > a[i - 1] * b[i])
            throw std::invalid_argument("weighted_mediant_holds: a_i/b_i must be nonincreasing");
    }
    BigRational lhs_num = 0, lhs_den = 0, rhs_num = 0, rhs_den = 0;
    for (std::size_t i = 0; i < k; ++i) {
        lhs_num += a[i] * c[i];
        lhs_den += b[i] * c[i];
        rhs_num += a[i];
        rhs_den += b[i];
    }
    return lhs_num * rhs_den >= rhs_num * lhs_den;
}

BigCount porp_target(int rows) {
    const BigCount a1 = formulas::alpha_one_column(rows);
    return a1 * a1;
}

BigRational oddeven_target(int half_m) {
    return BigRational(formulas::binomial(2 * half_m, half_m),
                       BigCount(1) << (2 * half_m - 1));
}

namespace {

const Decimal& pi() {
    static const Decimal value(
        "3.14159265358979323846264338327950288419716939937510582097494");
    return value;
}

} // namespace

Decimal constant_target(int rows, Parity parity) {
    if (rows != 3 && rows != 4)
        throw std::invalid_argument("constant_target: closed-form targets exist for 3 "
                                    "or 4 rows only");
    const Decimal even_branch =
        3 * sqrt(Decimal(3)) / (sqrt(Decimal(2)) * pow(pi(), Decimal("1.5")));
    if (rows == 3)
        return parity == Parity::even
                   ? even_branch
                   : 12 * sqrt(Decimal(6)) / pow(pi(), Decimal("1.5"));
    // alpha(4,n) equals alpha(3,n) at even n and alpha(3,n+1) at odd n
    return parity == Parity::even ? even_branch : 6 * even_branch;
}

Decimal paper_odd_constant() {
    return 2 * sqrt(Decimal(6)) / pow(pi(), Decimal("1.5"));
}

} // namespace discrect::asymptotics
