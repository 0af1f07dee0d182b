#include "discrect/oeis.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace discrect::oeis {

std::vector<BEntry> read_bfile(std::istream& is) {
    std::vector<BEntry> out;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        long index;
        std::string value_text;
        if (!(fields >> index))
            throw std::runtime_error("b-file: bad index on line " +
                                     std::to_string(line_no));
        if (!(fields >> value_text))
            throw std::runtime_error("b-file: missing value on line " +
                                     std::to_string(line_no));
        std::string extra;
        if (fields >> extra)
            throw std::runtime_error("b-file: trailing field on line " +
                                     std::to_string(line_no));
        BEntry entry;
        entry.index = index;
        try {
            entry.value = BigCount(value_text);
        } catch (const std::exception&) {
            throw std::runtime_error("b-file: bad value on line " +
                                     std::to_string(line_no));
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<BEntry> read_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("b-file: cannot open '" + path + "'");
    return read_bfile(in);
}

} // namespace discrect::oeis
