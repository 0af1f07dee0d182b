#ifndef DISCRECT_SIGN_MATRIX_HPP
#define DISCRECT_SIGN_MATRIX_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace discrect {

enum class Axis { row, column };

// Vector of per-row or per-column entry sums.
struct SumVector {
    Axis axis;
    std::vector<int> values;

    bool operator==(const SumVector&) const = default;
};

// Dense m x n matrix with entries +1/-1 only, immutable after construction.
// The literature this follows indexes entries a(i,j) from 1; this API is
// 0-based throughout.
class SignMatrix {
public:
    // entries are row-major and must each be +1 or -1.
    SignMatrix(int rows, int cols, std::span<const std::int8_t> entries);

    static SignMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool operator==(const SignMatrix&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<std::int8_t> entries_;
};

SumVector row_sums(const SignMatrix& m);
SumVector col_sums(const SignMatrix& m);

// max over |row sums| and |column sums|
int discrepancy(const SignMatrix& m);

// discrepancy <= 1
bool is_good(const SignMatrix& m);

// every column sum in {-1,0,1}; row sums unconstrained
bool is_column_good(const SignMatrix& m);

SignMatrix transpose(const SignMatrix& m);

// Text format: one row per line, entries '+'/'-' with no separators, a blank
// line terminates the matrix. Round-trips bit-exactly.
std::string to_text(const SignMatrix& m);
void write_matrix(std::ostream& os, const SignMatrix& m);

// Parses exactly one matrix; the input must contain nothing else.
SignMatrix parse_matrix(std::string_view text);

// Reads the next matrix from a stream of blank-line-separated matrices;
// nullopt at end of input.
std::optional<SignMatrix> read_matrix(std::istream& is);

} // namespace discrect

#endif
