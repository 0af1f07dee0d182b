#include "discrect/engine.hpp"

#include "discrect/column_alphabet.hpp"
#include "discrect/detail/layer_dp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace discrect::engine {

namespace {

using detail::Layer;
using detail::StateCodec;

StateCodec make_codec(int rows, int cols) {
    if (rows < 1) throw std::invalid_argument("engine: rows must be >= 1");
    if (cols < 0) throw std::invalid_argument("engine: cols must be >= 0");
    StateCodec codec(rows);
    // every coordinate stays within [-cols, cols]
    if (cols > codec.max_abs())
        throw CapacityError("engine: " + std::to_string(cols) +
                            " columns exceed the packed-state range " +
                            std::to_string(codec.max_abs()) + " for " +
                            std::to_string(rows) + " rows");
    return codec;
}

// |p_i| <= j and p_i == j (mod 2) hold for every state the DP can produce;
// checked while traversing because the pruning logic relies on them.
void check_state_law(const int* p, int dim, int j) {
    for (int i = 0; i < dim; ++i)
        if (std::abs(p[i]) > j || ((p[i] - j) & 1) != 0)
            throw std::logic_error("engine: layer " + std::to_string(j) +
                                   " holds a state outside the |p_i| <= j / parity law");
}

BigCount sum_within_band(const Layer& layer, const StateCodec& codec) {
    BigCount total = 0;
    std::vector<int> st(codec.dim());
    for (const auto& [key, count] : layer) {
        codec.unpack(key, st.data());
        bool inside = true;
        for (int v : st)
            if (v < -1 || v > 1) { inside = false; break; }
        if (inside) total += count;
    }
    return total;
}

std::vector<BigCount> good_series(int rows, int cols_max, bool compress) {
    StateCodec codec = make_codec(rows, cols_max);
    const ColumnAlphabet alphabet = good_columns(rows);
    std::vector<BigCount> out(cols_max + 1);
    auto keep = [&](const int* p, int j) {
        check_state_law(p, rows, j);
        const int slack = cols_max - j + 1;
        for (int i = 0; i < rows; ++i)
            if (p[i] > slack || p[i] < -slack) return false;
        return true;
    };
    auto canon_sort = [&](int* p) { std::sort(p, p + rows); };
    auto canon_id = [](int*) {};
    auto on_layer = [&](int j, const Layer& layer) {
        out[j] = sum_within_band(layer, codec);
    };
    auto moves = [&](int) -> const auto& { return alphabet.columns; };
    if (compress)
        detail::run_layered_dp(codec, cols_max, moves, keep, canon_sort, on_layer);
    else
        detail::run_layered_dp(codec, cols_max, moves, keep, canon_id, on_layer);
    return out;
}

void require_profile(int rows, std::span<const int> r) {
    if (static_cast<int>(r.size()) != rows)
        throw std::invalid_argument("engine: row profile length " +
                                    std::to_string(r.size()) + " does not match rows " +
                                    std::to_string(rows));
}

bool profile_feasible(std::span<const int> r, int cols) {
    for (int ri : r)
        if (std::abs(ri) > cols || ((ri - cols) & 1)) return false;
    return true;
}

} // namespace

BigCount count_good(int rows, int cols) { return good_series(rows, cols, false).back(); }

BigCount count_good_compressed(int rows, int cols) {
    return good_series(rows, cols, true).back();
}

std::vector<BigCount> count_good_series(int rows, int cols_max) {
    return good_series(rows, cols_max, true);
}

std::vector<BigCount> count_row_profile_series(int rows, int cols_max,
                                               std::span<const int> r) {
    require_profile(rows, r);
    StateCodec codec = make_codec(rows, cols_max);
    const ColumnAlphabet alphabet = good_columns(rows);
    std::vector<BigCount> out(cols_max + 1, BigCount(0));
    const std::vector<int> target(r.begin(), r.end());
    const std::uint64_t target_key = codec.pack(target.data());
    auto keep = [&](const int* p, int j) {
        check_state_law(p, rows, j);
        const int slack = cols_max - j;
        for (int i = 0; i < rows; ++i)
            if (std::abs(p[i] - target[i]) > slack) return false;
        return true;
    };
    auto on_layer = [&](int j, const Layer& layer) {
        auto it = layer.find(target_key);
        if (it != layer.end()) out[j] = it->second;
    };
    detail::run_layered_dp(
        codec, cols_max, [&](int) -> const auto& { return alphabet.columns; }, keep,
        [](int*) {}, on_layer);
    return out;
}

BigCount count_row_profile(int rows, int cols, std::span<const int> r) {
    require_profile(rows, r);
    if (!profile_feasible(r, cols)) return 0;
    return count_row_profile_series(rows, cols, r).back();
}

BigCount count_profile_pair(int rows, int cols, std::span<const int> r,
                            std::span<const int> c) {
    require_profile(rows, r);
    if (static_cast<int>(c.size()) != cols)
        throw std::invalid_argument("engine: column profile length " +
                                    std::to_string(c.size()) + " does not match cols " +
                                    std::to_string(cols));
    for (int cj : c)
        if (cj < -1 || cj > 1)
            throw std::invalid_argument(
                "engine: column sum " + std::to_string(cj) +
                " unsupported; count_profile_pair handles |c_j| <= 1 only");
    if (cols == 0)
        return std::all_of(r.begin(), r.end(), [](int v) { return v == 0; }) ? 1 : 0;
    // the grand total is counted twice, once per axis
    if (std::accumulate(r.begin(), r.end(), 0) != std::accumulate(c.begin(), c.end(), 0))
        return 0;
    if (!profile_feasible(r, cols)) return 0;

    StateCodec codec = make_codec(rows, cols);
    // per-sum alphabets; an empty list (parity-infeasible c_j) zeroes the count
    std::vector<std::vector<std::int8_t>> by_sum[3] = {
        columns_with_sum(rows, -1), columns_with_sum(rows, 0), columns_with_sum(rows, 1)};
    const std::vector<int> target(r.begin(), r.end());
    auto keep = [&](const int* p, int j) {
        check_state_law(p, rows, j);
        const int slack = cols - j;
        for (int i = 0; i < rows; ++i)
            if (std::abs(p[i] - target[i]) > slack) return false;
        return true;
    };
    BigCount result = 0;
    auto on_layer = [&](int j, const Layer& layer) {
        if (j == cols) {
            auto it = layer.find(codec.pack(target.data()));
            if (it != layer.end()) result = it->second;
        }
    };
    detail::run_layered_dp(
        codec, cols,
        [&](int j) -> const auto& { return by_sum[c[j - 1] + 1]; }, keep,
        [](int*) {}, on_layer);
    return result;
}

} // namespace discrect::engine
