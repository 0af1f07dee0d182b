#ifndef DISCRECT_BIG_NUMBER_HPP
#define DISCRECT_BIG_NUMBER_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <stdexcept>
#include <string>

namespace discrect {

// Exact arbitrary-precision integer. Carrier of every count in the toolkit;
// counting operations never round.
using BigCount = boost::multiprecision::cpp_int;

// Exact rational, used for ratios, probabilities and series values.
using BigRational = boost::multiprecision::cpp_rational;

// 50 significant decimal digits; the final conversion step for values that
// involve an irrational factor (sqrt, pi). Never used inside counting.
using Decimal = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<50>>;

inline Decimal to_decimal(const BigCount& v) { return Decimal(v); }

inline Decimal to_decimal(const BigRational& v) {
    return Decimal(boost::multiprecision::numerator(v)) /
           Decimal(boost::multiprecision::denominator(v));
}

// Fixed-width decimal rendering (shortest round-trippable is not needed;
// reports want stable text).
std::string decimal_string(const Decimal& v, int digits = 30);

// An enumeration or DP run would exceed its configured budget; carries the
// offending parameters in the message.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A DP layer grew beyond the configured capacity.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace discrect

#endif
