#ifndef DISCRECT_WALKS_HPP
#define DISCRECT_WALKS_HPP

#include "discrect/big_number.hpp"
#include "discrect/sign_matrix.hpp"

#include <array>
#include <vector>

namespace discrect::walks {

// W_n: n-step unit walks on Z^3 from the origin that end at the origin (even
// n) or at one of the six unit points or (1,1,1), (-1,-1,-1) (odd n). A(3,n)
// maps bijectively onto W_n column by column.

struct Point {
    int x = 0, y = 0, z = 0;
    bool operator==(const Point&) const = default;
};

// exactly one coordinate is +-1, the others 0
struct Step {
    int x, y, z;
    bool is_unit() const;
    bool operator==(const Step&) const = default;
};

extern const std::array<Step, 6> kUnitSteps;
extern const std::array<Point, 8> kOddEndpoints;

// Walks are anchored at the origin; only the steps are stored.
struct Walk {
    std::vector<Step> steps;
    Point endpoint() const;
    bool operator==(const Walk&) const = default;
};

// membership in W_n with n = walk.steps.size()
bool in_family(const Walk& w);

// phi of a single height-3 column (a,b,c) with a+b+c = +-1:
// ((b+c)/2, (c+a)/2, (a+b)/2). Sum +-3 is rejected.
Step phi_column(int a, int b, int c);

// Phi: columns of M in A(3,n), left to right. Rejects matrices that are not
// 3-row or not good.
Walk phi(const SignMatrix& m);

// Inverse of Phi: step (a,b,c) becomes column (b+c-a, a+c-b, a+b-c).
// Rejects walks outside W_n; the result is always in A(3,n).
SignMatrix phi_inverse(const Walk& w);

// |W_n| by position DP (shares the engine's layer machinery).
BigCount count_walks(int n);
std::vector<BigCount> count_walks_series(int n_max);

} // namespace discrect::walks

#endif
