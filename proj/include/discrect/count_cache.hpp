#ifndef DISCRECT_COUNT_CACHE_HPP
#define DISCRECT_COUNT_CACHE_HPP

#include "discrect/big_number.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace discrect::cache {

// Append-only text cache of computed counts, one entry per line:
//   alpha <m> <n> <decimal>
//   alpha_r <m> <n> <r1,r2,...> <decimal>
// Duplicate keys resolve last-write-wins on load. In paranoid mode every
// loaded entry is recomputed and a mismatch is a hard error.
class CountCache {
public:
    // Path from DISC_RECT_CACHE, if set.
    static std::optional<std::string> env_path();

    explicit CountCache(std::string path, bool paranoid = false);

    std::optional<BigCount> get_alpha(int rows, int cols) const;
    std::optional<BigCount> get_alpha_r(int rows, int cols,
                                        std::span<const int> r) const;

    // store and append to the backing file
    void put_alpha(int rows, int cols, const BigCount& value);
    void put_alpha_r(int rows, int cols, std::span<const int> r,
                     const BigCount& value);

    std::size_t size() const { return entries_.size(); }

private:
    struct Key {
        std::string kind;
        int rows;
        int cols;
        std::vector<int> profile;
        auto operator<=>(const Key&) const = default;
    };
    void append_line(const Key& key, const BigCount& value);

    std::string path_;
    std::map<Key, BigCount> entries_;
};

} // namespace discrect::cache

#endif
