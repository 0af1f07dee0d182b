#include "discrect/engine.hpp"

#include "discrect/oracle.hpp"

#include <doctest.h>

using namespace discrect;

TEST_CASE("count_good basics") {
    CHECK(engine::count_good(3, 4) == 90);
    CHECK(engine::count_good(3, 10) == 1172556);
    CHECK(engine::count_good(3, 0) == 1);
    CHECK(engine::count_good(1, 0) == 1);
    // frozen from the exhaustive oracle (20^5 column tuples)
    CHECK(engine::count_good(5, 5) == 384080);
    CHECK(engine::count_good(5, 5) == oracle::count_good_oracle(5, 5));
}

TEST_CASE("count_row_profile") {
    CHECK(engine::count_row_profile(2, 2, std::vector<int>{0, 0}) == 2);
    CHECK(engine::count_row_profile(3, 1, std::vector<int>{1, 1, -1}) == 1);
    CHECK(engine::count_row_profile(4, 6, std::vector<int>{0, 0, 0, 0}) ==
          engine::count_good(4, 6));
    // parity and range infeasibility are counts, not errors
    CHECK(engine::count_row_profile(2, 2, std::vector<int>{1, 0}) == 0);
    CHECK(engine::count_row_profile(2, 2, std::vector<int>{4, -4}) == 0);
    CHECK_THROWS_AS(engine::count_row_profile(2, 2, std::vector<int>{0}),
                    std::invalid_argument);
    // n = 0: only the all-zero profile is realized (by the empty matrix)
    CHECK(engine::count_row_profile(3, 0, std::vector<int>{0, 0, 0}) == 1);
    CHECK(engine::count_row_profile(3, 0, std::vector<int>{2, 0, -2}) == 0);
}

TEST_CASE("count_profile_pair") {
    CHECK(engine::count_profile_pair(2, 2, std::vector<int>{0, 0},
                                     std::vector<int>{0, 0}) == 2);
    CHECK(engine::count_profile_pair(3, 2, std::vector<int>{0, 0, 2},
                                     std::vector<int>{1, 1}) == 2);
    // mismatched grand totals: 0 by double counting
    CHECK(engine::count_profile_pair(2, 2, std::vector<int>{2, 0},
                                     std::vector<int>{0, 0}) == 0);
    CHECK_THROWS_AS(engine::count_profile_pair(2, 2, std::vector<int>{0, 0},
                                               std::vector<int>{2, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(engine::count_profile_pair(2, 2, std::vector<int>{0, 0},
                                               std::vector<int>{0}),
                    std::invalid_argument);
    CHECK(engine::count_profile_pair(2, 0, std::vector<int>{0, 0},
                                     std::vector<int>{}) == 1);

    // agreement with the per-column oracle over a small exhaustive grid
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> r(3), c(n);
        auto rec_c = [&](auto&& self, int pos) -> void {
            if (pos == n) {
                CHECK(engine::count_profile_pair(3, n, r, c) ==
                      oracle::count_profile_pair_oracle(3, n, r, c));
                return;
            }
            for (int v = -1; v <= 1; ++v) {
                c[pos] = v;
                self(self, pos + 1);
            }
        };
        auto rec_r = [&](auto&& self, int pos) -> void {
            if (pos == 3) {
                rec_c(rec_c, 0);
                return;
            }
            for (int v = -2; v <= 2; ++v) {
                r[pos] = v;
                self(self, pos + 1);
            }
        };
        rec_r(rec_r, 0);
    }
}

TEST_CASE("compressed states") {
    CHECK(engine::count_good_compressed(3, 4) == 90);
    CHECK(engine::count_good_compressed(6, 6) == engine::count_good(6, 6));
    // duplicate-row collapse: alpha(4,2k) = alpha(3,2k)
    CHECK(engine::count_good_compressed(4, 6) == engine::count_good(3, 6));
}

TEST_CASE("series sweeps match single-shot counts") {
    const auto s3 = engine::count_good_series(3, 12);
    for (int n = 0; n <= 12; ++n) CHECK(s3[n] == engine::count_good(3, n));
    const auto s5 = engine::count_good_series(5, 8);
    for (int n = 0; n <= 8; ++n) CHECK(s5[n] == engine::count_good(5, n));

    const std::vector<int> r{2, -2, 0, 0};
    const auto pr = engine::count_row_profile_series(4, 8, r);
    for (int n = 0; n <= 8; ++n) CHECK(pr[n] == engine::count_row_profile(4, n, r));
}

TEST_CASE("capacity limits are explicit") {
    CHECK_THROWS_AS(engine::count_good(25, 2), CapacityError);
    CHECK_THROWS_AS(engine::count_good(8, 200), CapacityError);
    try {
        engine::count_good(8, 200);
        FAIL("expected CapacityError");
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("200") != std::string::npos);
    }
}
