#include "discrect/sign_matrix.hpp"

#include <doctest.h>

#include <cstdint>
#include <sstream>

using namespace discrect;

namespace {

// every m x n +-1 matrix, for exhaustive small-size properties
std::vector<SignMatrix> all_matrices(int m, int n) {
    std::vector<SignMatrix> out;
    const int cells = m * n;
    for (unsigned mask = 0; mask < (1u << cells); ++mask) {
        std::vector<std::int8_t> flat(cells);
        for (int b = 0; b < cells; ++b)
            flat[b] = (mask >> b) & 1u ? -1 : 1;
        out.emplace_back(m, n, flat);
    }
    return out;
}

} // namespace

TEST_CASE("row and column sums") {
    CHECK(row_sums(SignMatrix::from_rows({{1}})).values == std::vector<int>{1});
    const auto anti = SignMatrix::from_rows({{1, -1}, {-1, 1}});
    CHECK(row_sums(anti).values == std::vector<int>{0, 0});
    CHECK(col_sums(anti).values == std::vector<int>{0, 0});
    CHECK(row_sums(SignMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})).values ==
          std::vector<int>{3, 3, 3});
    CHECK(col_sums(SignMatrix::from_rows({{1}, {1}, {-1}})).values ==
          std::vector<int>{1});
    CHECK(row_sums(anti).axis == Axis::row);
    CHECK(col_sums(anti).axis == Axis::column);
}

TEST_CASE("discrepancy and goodness") {
    CHECK(discrepancy(SignMatrix::from_rows({{1, -1}, {-1, 1}})) == 0);
    CHECK(discrepancy(SignMatrix::from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}})) == 3);
    CHECK(discrepancy(SignMatrix::from_rows({{1, 1}, {-1, 1}})) == 2);

    CHECK(is_good(SignMatrix::from_rows({{1, -1}, {-1, 1}})));
    CHECK_FALSE(is_good(SignMatrix::from_rows({{1, 1, 1}})));
    CHECK(is_good(SignMatrix::from_rows({{1}, {1}, {-1}})));

    CHECK(is_column_good(SignMatrix::from_rows({{1, 1}, {-1, -1}})));
    CHECK_FALSE(is_column_good(SignMatrix::from_rows({{1}, {1}})));
    CHECK(is_column_good(SignMatrix::from_rows({{1}, {1}, {-1}})));
}

TEST_CASE("transpose") {
    const auto row = SignMatrix::from_rows({{1, -1}});
    CHECK(transpose(row) == SignMatrix::from_rows({{1}, {-1}}));
    for (const auto& m : all_matrices(2, 3)) {
        CHECK(discrepancy(transpose(m)) == discrepancy(m));
        CHECK(transpose(transpose(m)) == m);
    }
}

TEST_CASE("parity law and goodness implications, exhaustively") {
    for (auto [m, n] : {std::pair{2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
        for (const auto& mat : all_matrices(m, n)) {
            for (int s : row_sums(mat).values) CHECK((s - n) % 2 == 0);
            for (int s : col_sums(mat).values) CHECK((s - m) % 2 == 0);
            if (is_good(mat)) {
                CHECK(is_column_good(mat));
                if (m % 2 == 0)
                    for (int s : col_sums(mat).values) CHECK(s == 0);
            }
        }
    }
}

TEST_CASE("construction rejects bad input") {
    std::vector<std::int8_t> zero{0};
    CHECK_THROWS_AS(SignMatrix(1, 1, zero), std::invalid_argument);
    std::vector<std::int8_t> two{1, -1};
    CHECK_THROWS_AS(SignMatrix(0, 2, two), std::invalid_argument);
    CHECK_THROWS_AS(SignMatrix(2, 2, two), std::invalid_argument);
    CHECK_THROWS_AS(SignMatrix::from_rows({{1, -1}, {-1}}), std::invalid_argument);
}

TEST_CASE("text format round trip") {
    const auto m = SignMatrix::from_rows({{1, -1, 1}, {-1, 1, 1}});
    CHECK(to_text(m) == "+-+\n-++\n\n");
    CHECK(parse_matrix(to_text(m)) == m);

    // canonical string -> matrix -> identical string, exhaustively at 2x2
    for (const auto& mat : all_matrices(2, 2)) {
        const std::string text = to_text(mat);
        CHECK(parse_matrix(text) == mat);
        CHECK(to_text(parse_matrix(text)) == text);
    }

    CHECK_THROWS_AS(parse_matrix(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("+-\n+\n\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("+x\n\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("++\n\n--\n\n"), std::invalid_argument);
}

TEST_CASE("matrix stream") {
    std::istringstream is("+-\n-+\n\n++\n--\n\n");
    auto first = read_matrix(is);
    auto second = read_matrix(is);
    auto end = read_matrix(is);
    REQUIRE(first.has_value());
    REQUIRE(second.has_value());
    CHECK(*first == SignMatrix::from_rows({{1, -1}, {-1, 1}}));
    CHECK(*second == SignMatrix::from_rows({{1, 1}, {-1, -1}}));
    CHECK_FALSE(end.has_value());
}
