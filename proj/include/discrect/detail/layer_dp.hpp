#ifndef DISCRECT_DETAIL_LAYER_DP_HPP
#define DISCRECT_DETAIL_LAYER_DP_HPP

#include "discrect/big_number.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace discrect::detail {

// Packs small integer vectors into 64-bit keys, one biased lane per
// coordinate. Lane width is 64/dim capped at 16 bits, so the representable
// coordinate range shrinks as dim grows; max_abs() is the usable bound.
class StateCodec {
public:
    explicit StateCodec(int dim)
        : dim_(dim), lane_bits_(dim > 0 ? std::min(16, 64 / dim) : 0) {
        if (dim < 1 || lane_bits_ < 3)
            throw CapacityError("state codec: dimension " + std::to_string(dim) +
                                " does not fit a 64-bit packed key");
        bias_ = 1 << (lane_bits_ - 1);
        mask_ = (std::uint64_t(1) << lane_bits_) - 1;
    }

    int dim() const { return dim_; }
    int max_abs() const { return bias_ - 2; }

    std::uint64_t pack(const int* v) const {
        std::uint64_t key = 0;
        for (int i = 0; i < dim_; ++i)
            key |= (static_cast<std::uint64_t>(v[i] + bias_) & mask_)
                   << (lane_bits_ * i);
        return key;
    }

    void unpack(std::uint64_t key, int* v) const {
        for (int i = 0; i < dim_; ++i)
            v[i] = static_cast<int>((key >> (lane_bits_ * i)) & mask_) - bias_;
    }

private:
    int dim_;
    int lane_bits_;
    int bias_;
    std::uint64_t mask_;
};

using Layer = std::unordered_map<std::uint64_t, BigCount>;

inline constexpr std::size_t kDefaultMaxLayerStates = 64u << 20;
inline constexpr int kMaxStateDim = 21; // 3-bit lanes

// Layered transfer DP from the all-zero state. For each layer j = 1..n_layers
// every state is extended by every move from moves_for(j); freshly produced
// states surviving keep(state, j) are canonicalized and merged by exact
// addition, so the result is independent of map iteration order.
//
//   moves_for(j) -> const std::vector<std::vector<int8_t>>&  (1-based j)
//   keep(const int* state, int j) -> bool
//   canon(int* state)                  in-place canonicalization
//   on_layer(int j, const Layer&)      called once per layer, j = 0..n_layers
template <class MovesFor, class Keep, class Canon, class OnLayer>
void run_layered_dp(const StateCodec& codec, int n_layers, MovesFor&& moves_for,
                    Keep&& keep, Canon&& canon, OnLayer&& on_layer,
                    std::size_t max_layer_states = kDefaultMaxLayerStates) {
    const int dim = codec.dim();
    std::vector<int> zero(dim, 0);
    Layer layer;
    layer.emplace(codec.pack(zero.data()), BigCount(1));
    on_layer(0, layer);

    std::vector<int> cur(dim), nxt(dim);
    for (int j = 1; j <= n_layers; ++j) {
        const auto& moves = moves_for(j);
        Layer next;
        next.reserve(layer.size() + layer.size() / 2);
        for (const auto& [key, count] : layer) {
            codec.unpack(key, cur.data());
            for (const auto& mv : moves) {
                for (int i = 0; i < dim; ++i) {
                    nxt[i] = cur[i] + mv[i];
                    if (nxt[i] > codec.max_abs() || nxt[i] < -codec.max_abs())
                        throw CapacityError(
                            "layered dp: coordinate magnitude exceeds the packed-key range of " +
                            std::to_string(codec.max_abs()) + " for dimension " +
                            std::to_string(dim));
                }
                if (!keep(nxt.data(), j)) continue;
                canon(nxt.data());
                next[codec.pack(nxt.data())] += count;
            }
        }
        if (next.size() > max_layer_states)
            throw CapacityError("layered dp: layer " + std::to_string(j) + " holds " +
                                std::to_string(next.size()) + " states, exceeding the cap of " +
                                std::to_string(max_layer_states));
        layer.swap(next);
        on_layer(j, layer);
    }
}

} // namespace discrect::detail

#endif
