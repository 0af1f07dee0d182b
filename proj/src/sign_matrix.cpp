#include "discrect/sign_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace discrect {

SignMatrix::SignMatrix(int rows, int cols, std::span<const std::int8_t> entries)
    : rows_(rows), cols_(cols), entries_(entries.begin(), entries.end()) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("SignMatrix: rows and cols must be >= 1");
    if (entries.size() != static_cast<std::size_t>(rows) * cols)
        throw std::invalid_argument("SignMatrix: entry count does not match rows*cols");
    for (std::int8_t e : entries_)
        if (e != 1 && e != -1)
            throw std::invalid_argument("SignMatrix: entries must be +1 or -1");
}

SignMatrix SignMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
    std::vector<std::int8_t> flat;
    int cols = -1;
    for (const auto& r : rows) {
        if (cols < 0) cols = static_cast<int>(r.size());
        else if (cols != static_cast<int>(r.size()))
            throw std::invalid_argument("SignMatrix::from_rows: ragged rows");
        for (int e : r) flat.push_back(static_cast<std::int8_t>(e));
    }
    return SignMatrix(static_cast<int>(rows.size()), cols, flat);
}

SumVector row_sums(const SignMatrix& m) {
    SumVector out{Axis::row, std::vector<int>(m.rows(), 0)};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.values[i] += m.at(i, j);
    return out;
}

SumVector col_sums(const SignMatrix& m) {
    SumVector out{Axis::column, std::vector<int>(m.cols(), 0)};
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.values[j] += m.at(i, j);
    return out;
}

int discrepancy(const SignMatrix& m) {
    int best = 0;
    for (int s : row_sums(m).values) best = std::max(best, std::abs(s));
    for (int s : col_sums(m).values) best = std::max(best, std::abs(s));
    return best;
}

bool is_good(const SignMatrix& m) { return discrepancy(m) <= 1; }

bool is_column_good(const SignMatrix& m) {
    for (int s : col_sums(m).values)
        if (std::abs(s) > 1) return false;
    return true;
}

SignMatrix transpose(const SignMatrix& m) {
    std::vector<std::int8_t> flat(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            flat[static_cast<std::size_t>(j) * m.rows() + i] =
                static_cast<std::int8_t>(m.at(i, j));
    return SignMatrix(m.cols(), m.rows(), flat);
}

std::string to_text(const SignMatrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.rows()) * (m.cols() + 1) + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j)
            out.push_back(m.at(i, j) == 1 ? '+' : '-');
        out.push_back('\n');
    }
    out.push_back('\n');
    return out;
}

void write_matrix(std::ostream& os, const SignMatrix& m) { os << to_text(m); }

namespace {

std::optional<SignMatrix> parse_rows(const std::vector<std::string>& lines) {
    if (lines.empty()) return std::nullopt;
    const int cols = static_cast<int>(lines.front().size());
    std::vector<std::int8_t> flat;
    flat.reserve(lines.size() * cols);
    for (const auto& line : lines) {
        if (static_cast<int>(line.size()) != cols)
            throw std::invalid_argument("matrix text: ragged rows");
        for (char c : line) {
            if (c == '+') flat.push_back(1);
            else if (c == '-') flat.push_back(-1);
            else throw std::invalid_argument(std::string("matrix text: bad character '") + c + "'");
        }
    }
    return SignMatrix(static_cast<int>(lines.size()), cols, flat);
}

} // namespace

std::optional<SignMatrix> read_matrix(std::istream& is) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) {
            if (!lines.empty()) break; // terminator
            continue;                  // leading blank lines are skipped
        }
        lines.push_back(line);
    }
    return parse_rows(lines);
}

SignMatrix parse_matrix(std::string_view text) {
    std::istringstream is{std::string(text)};
    auto m = read_matrix(is);
    if (!m) throw std::invalid_argument("matrix text: empty input");
    // nothing but trailing blank lines may follow
    std::string line;
    while (std::getline(is, line))
        if (!line.empty())
            throw std::invalid_argument("matrix text: trailing content after matrix");
    return *m;
}

} // namespace discrect
