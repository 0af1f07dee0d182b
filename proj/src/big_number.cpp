#include "discrect/big_number.hpp"

#include <sstream>

namespace discrect {

std::string decimal_string(const Decimal& v, int digits) {
    std::ostringstream os;
    os.precision(digits);
    os << v;
    return os.str();
}

} // namespace discrect
