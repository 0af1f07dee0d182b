#include "discrect/count_cache.hpp"

#include "discrect/alpha.hpp"
#include "discrect/engine.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace discrect::cache {

std::optional<std::string> CountCache::env_path() {
    const char* p = std::getenv("DISC_RECT_CACHE");
    if (p && *p) return std::string(p);
    return std::nullopt;
}

namespace {

std::vector<int> parse_profile(const std::string& field, int line_no) {
    std::vector<int> out;
    std::istringstream is(field);
    std::string item;
    while (std::getline(is, item, ','))
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw std::runtime_error("cache: bad profile on line " +
                                     std::to_string(line_no));
        }
    return out;
}

} // namespace

CountCache::CountCache(std::string path, bool paranoid) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return; // a missing file is an empty cache
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string kind;
        int rows, cols;
        if (!(is >> kind >> rows >> cols))
            throw std::runtime_error("cache: malformed line " + std::to_string(line_no));
        Key key{kind, rows, cols, {}};
        std::string value_field;
        if (kind == "alpha") {
            if (!(is >> value_field))
                throw std::runtime_error("cache: missing value on line " +
                                         std::to_string(line_no));
        } else if (kind == "alpha_r") {
            std::string profile_field;
            if (!(is >> profile_field >> value_field))
                throw std::runtime_error("cache: missing fields on line " +
                                         std::to_string(line_no));
            key.profile = parse_profile(profile_field, line_no);
        } else {
            throw std::runtime_error("cache: unknown kind '" + kind + "' on line " +
                                     std::to_string(line_no));
        }
        BigCount value;
        try {
            value = BigCount(value_field);
        } catch (const std::exception&) {
            throw std::runtime_error("cache: bad count on line " + std::to_string(line_no));
        }
        entries_[key] = value; // last write wins
    }
    if (paranoid) {
        for (const auto& [key, value] : entries_) {
            const BigCount fresh = key.kind == "alpha"
                                       ? alpha_best(key.rows, key.cols)
                                       : engine::count_row_profile(key.rows, key.cols,
                                                                   key.profile);
            if (fresh != value)
                throw std::runtime_error("cache: paranoid check failed for " + key.kind +
                                         "(" + std::to_string(key.rows) + "," +
                                         std::to_string(key.cols) + "): cached " +
                                         value.str() + " != recomputed " + fresh.str());
        }
    }
}

std::optional<BigCount> CountCache::get_alpha(int rows, int cols) const {
    auto it = entries_.find(Key{"alpha", rows, cols, {}});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::optional<BigCount> CountCache::get_alpha_r(int rows, int cols,
                                                std::span<const int> r) const {
    auto it = entries_.find(Key{"alpha_r", rows, cols, {r.begin(), r.end()}});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CountCache::append_line(const Key& key, const BigCount& value) {
    std::ofstream out(path_, std::ios::app);
    if (!out)
        throw IoError("cache: cannot open '" + path_ + "' for append");
    out << key.kind << ' ' << key.rows << ' ' << key.cols;
    if (key.kind == "alpha_r") {
        out << ' ';
        for (std::size_t i = 0; i < key.profile.size(); ++i) {
            if (i) out << ',';
            out << key.profile[i];
        }
    }
    out << ' ' << value.str() << '\n';
}

void CountCache::put_alpha(int rows, int cols, const BigCount& value) {
    Key key{"alpha", rows, cols, {}};
    entries_[key] = value;
    append_line(key, value);
}

void CountCache::put_alpha_r(int rows, int cols, std::span<const int> r,
                             const BigCount& value) {
    Key key{"alpha_r", rows, cols, {r.begin(), r.end()}};
    entries_[key] = value;
    append_line(key, value);
}

} // namespace discrect::cache
