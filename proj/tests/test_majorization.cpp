#include "discrect/majorization.hpp"

#include "discrect/engine.hpp"

#include <doctest.h>

#include <numeric>

using namespace discrect;
using namespace discrect::majorization;

namespace {

std::vector<std::vector<int>> vectors_with(int len, int bound, int parity) {
    std::vector<int> values;
    for (int v = -bound; v <= bound; ++v)
        if (((v - parity) % 2 + 2) % 2 == 0) values.push_back(v);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            out.push_back(cur);
            return;
        }
        for (int v : values) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

TEST_CASE("majorization order") {
    CHECK(majorizes(std::vector<int>{2, 0, -2}, std::vector<int>{0, 0, 0}));
    CHECK_FALSE(majorizes(std::vector<int>{0, 0, 0}, std::vector<int>{2, 0, -2}));
    CHECK_FALSE(majorizes(std::vector<int>{2, -2}, std::vector<int>{1, 1}));
    CHECK_THROWS_AS(majorizes(std::vector<int>{1}, std::vector<int>{1, 1}),
                    std::invalid_argument);

    // reflexive, transitive; antisymmetric up to permutation
    const auto vecs = vectors_with(3, 2, 0);
    for (const auto& x : vecs) {
        CHECK(majorizes(x, x));
        for (const auto& y : vecs) {
            if (majorizes(x, y) && majorizes(y, x)) {
                auto xs = x, ys = y;
                std::sort(xs.begin(), xs.end());
                std::sort(ys.begin(), ys.end());
                CHECK(xs == ys);
            }
            for (const auto& z : vecs)
                if (majorizes(x, y) && majorizes(y, z)) CHECK(majorizes(x, z));
        }
    }
}

TEST_CASE("transfer chains") {
    const auto chain =
        dalton_chain(std::vector<int>{0, 0}, std::vector<int>{4, -4});
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == std::vector<int>{4, -4});
    CHECK(chain[1] == std::vector<int>{2, -2});
    CHECK(chain[2] == std::vector<int>{0, 0});

    CHECK(dalton_chain(std::vector<int>{2, -2}, std::vector<int>{2, -2}) ==
          std::vector<std::vector<int>>{{2, -2}});

    CHECK_THROWS_AS(dalton_chain(std::vector<int>{1, -1}, std::vector<int>{2, -2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(dalton_chain(std::vector<int>{2, 0, -2}, std::vector<int>{0, 0, 0}),
                    std::invalid_argument);
    // permutation-distant endpoints admit no monotone chain
    CHECK_THROWS_AS(dalton_chain(std::vector<int>{-4, 0}, std::vector<int>{0, -4}),
                    NoChainError);

    // canonical length when the chain never moves laterally: the shortest
    // possible chain has (sum of positive diffs)/2 + 1 elements; lateral
    // permutation steps can only lengthen it
    for (const auto& r : vectors_with(3, 4, 0))
        for (const auto& rp : vectors_with(3, 4, 0)) {
            if (!majorizes(rp, r)) continue;
            long shift = 0;
            for (std::size_t i = 0; i < r.size(); ++i)
                shift += std::max(rp[i] - r[i], 0);
            try {
                const auto c = dalton_chain(r, rp);
                CHECK(c.size() >= static_cast<std::size_t>(shift / 2 + 1));
            } catch (const NoChainError&) {
                // acceptable: exact endpoints unreachable
            }
        }
}

TEST_CASE("psi") {
    const auto m = SignMatrix::from_rows({{1, 1}, {-1, -1}});
    CHECK(psi(m) == SignMatrix::from_rows({{1, -1}, {-1, 1}}));

    // out of domain: first two row sums must differ by >= 4
    CHECK_THROWS_AS(psi(SignMatrix::from_rows({{1, -1}, {-1, 1}})),
                    std::invalid_argument);
    // not column-good
    CHECK_THROWS_AS(psi(SignMatrix::from_rows({{1, 1}, {1, 1}})),
                    std::invalid_argument);

    // worked 3-row example: row sums (3,-1,-1) -> (1,1,-1), column sums kept
    const auto t = SignMatrix::from_rows({{1, 1, 1}, {-1, -1, 1}, {1, -1, -1}});
    REQUIRE(is_column_good(t));
    const auto image = psi(t);
    CHECK(row_sums(image).values == std::vector<int>{1, 1, -1});
    CHECK(col_sums(image).values == col_sums(t).values);
}

TEST_CASE("verify_decreasing") {
    // degenerate single-row case: no two distinct length-1 vectors share a sum,
    // so there are no comparable pairs at all
    const auto degenerate = verify_decreasing(1, 2, 2);
    CHECK(degenerate.pairs.empty());
    CHECK(degenerate.all_ok());
    CHECK(engine::count_row_profile(1, 2, std::vector<int>{0}) == 2);
    CHECK(engine::count_row_profile(1, 2, std::vector<int>{2}) == 1);

    const auto report = verify_decreasing(2, 2, 2);
    CHECK(report.all_ok());
    CHECK(report.fixed_c_checks > 0);
    CHECK(report.fixed_c_violations == 0);
    // zero-sum profiles give 4 comparable pairs; the infeasible +-(2,0)
    // profiles pair up with their permutations for 4 more (counts 0, vacuous)
    REQUIRE(report.pairs.size() == 8);
    CHECK(report.to_csv() ==
          "-2,0;0,-2;0;0;1\n"
          "-2,2;2,-2;1;1;1\n"
          "0,-2;-2,0;0;0;1\n"
          "0,0;-2,2;2;1;1\n"
          "0,0;2,-2;2;1;1\n"
          "0,2;2,0;0;0;1\n"
          "2,-2;-2,2;1;1;1\n"
          "2,0;0,2;0;0;1\n");
}
