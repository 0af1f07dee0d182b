#include "discrect/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace discrect;
using oracle::ColumnCensus;

TEST_CASE("good column alphabet") {
    const auto one = good_columns(1);
    REQUIRE(one.columns.size() == 2);
    CHECK(one.columns[0] == std::vector<std::int8_t>{1});
    CHECK(one.columns[1] == std::vector<std::int8_t>{-1});

    const auto two = good_columns(2);
    REQUIRE(two.columns.size() == 2);
    CHECK(two.columns[0] == std::vector<std::int8_t>{1, -1});
    CHECK(two.columns[1] == std::vector<std::int8_t>{-1, 1});

    const auto three = good_columns(3);
    REQUIRE(three.columns.size() == 6);
    // lexicographic, +1 before -1, top to bottom
    CHECK(three.columns[0] == std::vector<std::int8_t>{1, 1, -1});
    CHECK(three.columns[1] == std::vector<std::int8_t>{1, -1, 1});
    CHECK(three.columns[2] == std::vector<std::int8_t>{1, -1, -1});
    CHECK(three.columns[3] == std::vector<std::int8_t>{-1, 1, 1});
    CHECK(three.columns[4] == std::vector<std::int8_t>{-1, 1, -1});
    CHECK(three.columns[5] == std::vector<std::int8_t>{-1, -1, 1});

    // size C(m, m/2) for even m, 2 C(m, (m-1)/2) for odd m
    const long expected[] = {0, 2, 2, 6, 6, 20, 20, 70, 70};
    for (int m = 1; m <= 8; ++m)
        CHECK(static_cast<long>(good_columns(m).columns.size()) == expected[m]);
}

TEST_CASE("columns with a fixed sum") {
    CHECK(columns_with_sum(3, 3).size() == 1);
    CHECK(columns_with_sum(3, 1).size() == 3);
    CHECK(columns_with_sum(3, 0).empty()); // parity-infeasible
    CHECK(columns_with_sum(2, 0).size() == 2);
}

TEST_CASE("enumeration stream") {
    oracle::GoodMatrixStream tiny(1, 1);
    std::vector<SignMatrix> got;
    while (auto m = tiny.next()) got.push_back(*m);
    REQUIRE(got.size() == 2);
    CHECK(got[0] == SignMatrix::from_rows({{1}}));
    CHECK(got[1] == SignMatrix::from_rows({{-1}}));

    // (3,2): 6 members, all good, no duplicates, deterministic replay
    oracle::GoodMatrixStream s1(3, 2), s2(3, 2);
    std::set<std::string> seen;
    long count = 0;
    while (auto m = s1.next()) {
        ++count;
        CHECK(is_good(*m));
        CHECK(seen.insert(to_text(*m)).second);
        auto other = s2.next();
        REQUIRE(other.has_value());
        CHECK(*other == *m);
    }
    CHECK(count == 6);
    CHECK_FALSE(s2.next().has_value());
}

TEST_CASE("good-matrix counts") {
    CHECK(oracle::count_good_oracle(2, 4) == 6);
    CHECK(oracle::count_good_oracle(4, 4) == 90);
    CHECK(oracle::count_good_oracle(3, 3) == 102);
    CHECK(oracle::count_good_oracle(1, 0) == 1);
}

TEST_CASE("budget guard") {
    CHECK_THROWS_AS(oracle::GoodMatrixStream(3, 20), BudgetError);
    CHECK_THROWS_AS(oracle::count_good_oracle(3, 3, 10), BudgetError);
    try {
        oracle::count_good_oracle(3, 40);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        // the offending size is named
        CHECK(std::string(e.what()).find("(3,40)") != std::string::npos);
    }
}

TEST_CASE("row-profile counts") {
    CHECK(oracle::count_row_profile_oracle(2, 2, std::vector<int>{0, 0}) == 2);
    CHECK(oracle::count_row_profile_oracle(2, 2, std::vector<int>{1, 0}) == 0);
    CHECK(oracle::count_row_profile_oracle(1, 2, std::vector<int>{0}) == 2);
    CHECK_THROWS_AS(oracle::count_row_profile_oracle(2, 2, std::vector<int>{0}),
                    std::invalid_argument);

    // sum over short profiles recovers the full count
    for (auto [m, n] : {std::pair{2, 3}, {3, 2}, {3, 3}}) {
        BigCount total = 0;
        std::vector<int> r(m);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == m) {
                total += oracle::count_row_profile_oracle(m, n, r);
                return;
            }
            for (int v = -1; v <= 1; ++v) {
                r[pos] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
        CHECK(total == oracle::count_good_oracle(m, n));
    }
}

TEST_CASE("profile-pair counts") {
    CHECK(oracle::count_profile_pair_oracle(2, 2, std::vector<int>{0, 0},
                                            std::vector<int>{0, 0}) == 2);
    CHECK(oracle::count_profile_pair_oracle(1, 1, std::vector<int>{1},
                                            std::vector<int>{1}) == 1);
    CHECK(oracle::count_profile_pair_oracle(2, 2, std::vector<int>{2, -2},
                                            std::vector<int>{0, 0}) == 1);
    // the "forced" matrix has a column-swapped twin
    CHECK(oracle::count_profile_pair_oracle(3, 2, std::vector<int>{0, 0, 2},
                                            std::vector<int>{1, 1}) == 2);
    // general column sums are allowed here
    CHECK(oracle::count_profile_pair_oracle(2, 2, std::vector<int>{2, 2},
                                            std::vector<int>{2, 2}) == 1);
    CHECK(oracle::count_profile_pair_oracle(2, 2, std::vector<int>{2, 0},
                                            std::vector<int>{0, 0}) == 0);
    CHECK_THROWS_AS(oracle::count_profile_pair_oracle(2, 2, std::vector<int>{0, 0},
                                                      std::vector<int>{0}),
                    std::invalid_argument);
}

TEST_CASE("column census") {
    CHECK(oracle::column_census(SignMatrix::from_rows({{1}, {1}, {-1}})) ==
          ColumnCensus{1, 0, 0, 0, 0, 0});
    CHECK(oracle::column_census(SignMatrix::from_rows({{1, -1}, {-1, 1}, {1, -1}})) ==
          ColumnCensus{0, 0, 1, 1, 1, 1});
    CHECK(oracle::column_census(
              SignMatrix::from_rows({{1, -1, 1}, {1, -1, -1}, {-1, 1, 1}})) ==
          ColumnCensus{1, 1, 1, 0, 1, 0});
    CHECK_THROWS_AS(oracle::column_census(SignMatrix::from_rows({{1, -1}, {-1, 1}})),
                    std::invalid_argument);
}

TEST_CASE("profile extension bijection at the oracle level") {
    // for even m, alpha_r(m-1,n) = alpha_{r+}(m,n) with the appended
    // balancing entry
    for (int r1 = -3; r1 <= 3; ++r1) {
        if ((r1 - 3) % 2 != 0) continue;
        const BigCount left = oracle::count_row_profile_oracle(1, 3, std::vector<int>{r1});
        const BigCount right =
            oracle::count_row_profile_oracle(2, 3, std::vector<int>{r1, -r1});
        CHECK(left == right);
    }
}
