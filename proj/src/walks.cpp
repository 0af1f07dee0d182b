#include "discrect/walks.hpp"

#include "discrect/detail/layer_dp.hpp"

#include <stdexcept>
#include <string>

namespace discrect::walks {

const std::array<Step, 6> kUnitSteps = {{{1, 0, 0},
                                         {-1, 0, 0},
                                         {0, 1, 0},
                                         {0, -1, 0},
                                         {0, 0, 1},
                                         {0, 0, -1}}};

const std::array<Point, 8> kOddEndpoints = {{{1, 0, 0},
                                             {-1, 0, 0},
                                             {0, 1, 0},
                                             {0, -1, 0},
                                             {0, 0, 1},
                                             {0, 0, -1},
                                             {1, 1, 1},
                                             {-1, -1, -1}}};

bool Step::is_unit() const {
    return std::abs(x) + std::abs(y) + std::abs(z) == 1;
}

Point Walk::endpoint() const {
    Point p;
    for (const Step& s : steps) {
        p.x += s.x;
        p.y += s.y;
        p.z += s.z;
    }
    return p;
}

bool in_family(const Walk& w) {
    for (const Step& s : w.steps)
        if (!s.is_unit()) return false;
    const Point end = w.endpoint();
    if (w.steps.size() % 2 == 0) return end == Point{0, 0, 0};
    for (const Point& p : kOddEndpoints)
        if (end == p) return true;
    return false;
}

Step phi_column(int a, int b, int c) {
    const int sum = a + b + c;
    if (sum != 1 && sum != -1)
        throw std::invalid_argument("phi_column: column sum must be +-1, got " +
                                    std::to_string(sum));
    return Step{(b + c) / 2, (c + a) / 2, (a + b) / 2};
}

Walk phi(const SignMatrix& m) {
    if (m.rows() != 3)
        throw std::invalid_argument("phi: matrix must have exactly 3 rows");
    if (!is_good(m))
        throw std::invalid_argument("phi: matrix is not in A(3,n)");
    Walk w;
    w.steps.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j)
        w.steps.push_back(phi_column(m.at(0, j), m.at(1, j), m.at(2, j)));
    return w;
}

SignMatrix phi_inverse(const Walk& w) {
    if (!in_family(w))
        throw std::invalid_argument("phi_inverse: walk is not a member of W_n");
    const int n = static_cast<int>(w.steps.size());
    if (n == 0)
        throw std::invalid_argument("phi_inverse: empty walk has no matrix form");
    std::vector<std::int8_t> flat(static_cast<std::size_t>(3) * n);
    for (int j = 0; j < n; ++j) {
        const Step& s = w.steps[j];
        flat[static_cast<std::size_t>(0) * n + j] = static_cast<std::int8_t>(s.y + s.z - s.x);
        flat[static_cast<std::size_t>(1) * n + j] = static_cast<std::int8_t>(s.x + s.z - s.y);
        flat[static_cast<std::size_t>(2) * n + j] = static_cast<std::int8_t>(s.x + s.y - s.z);
    }
    return SignMatrix(3, n, flat);
}

std::vector<BigCount> count_walks_series(int n_max) {
    if (n_max < 0) throw std::invalid_argument("count_walks_series: n_max must be >= 0");
    detail::StateCodec codec(3);
    if (n_max > codec.max_abs())
        throw CapacityError("count_walks_series: n_max too large for packed positions");
    static const std::vector<std::vector<std::int8_t>> moves = {
        {1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
    std::vector<BigCount> out(n_max + 1, BigCount(0));
    // a coordinate farther than remaining+1 from 0 cannot reach any endpoint
    auto keep = [&](const int* p, int j) {
        const int slack = n_max - j + 1;
        return std::abs(p[0]) <= slack && std::abs(p[1]) <= slack && std::abs(p[2]) <= slack;
    };
    auto on_layer = [&](int j, const detail::Layer& layer) {
        BigCount total = 0;
        int p[3] = {0, 0, 0};
        if (j % 2 == 0) {
            auto it = layer.find(codec.pack(p));
            if (it != layer.end()) total = it->second;
        } else {
            for (const Point& e : kOddEndpoints) {
                p[0] = e.x; p[1] = e.y; p[2] = e.z;
                auto it = layer.find(codec.pack(p));
                if (it != layer.end()) total += it->second;
            }
        }
        out[j] = total;
    };
    detail::run_layered_dp(
        codec, n_max, [&](int) -> const auto& { return moves; }, keep, [](int*) {},
        on_layer);
    return out;
}

BigCount count_walks(int n) { return count_walks_series(n).back(); }

} // namespace discrect::walks
