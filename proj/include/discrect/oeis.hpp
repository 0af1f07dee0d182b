#ifndef DISCRECT_OEIS_HPP
#define DISCRECT_OEIS_HPP

#include "discrect/big_number.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace discrect::oeis {

// OEIS b-file: one "index value" pair per line, '#' starts a comment.
// For A002896, index k corresponds to 2k-step walks, i.e. alpha(3, 2k).
struct BEntry {
    long index;
    BigCount value;
};

// Parse errors report the offending line number.
std::vector<BEntry> read_bfile(std::istream& is);
std::vector<BEntry> read_bfile(const std::string& path);

} // namespace discrect::oeis

#endif
