#include "discrect/majorization.hpp"

#include "discrect/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace discrect::majorization {

bool majorizes(std::span<const int> x, std::span<const int> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("majorizes: length mismatch");
    if (std::accumulate(x.begin(), x.end(), 0L) !=
        std::accumulate(y.begin(), y.end(), 0L))
        return false;
    std::vector<int> xs(x.begin(), x.end()), ys(y.begin(), y.end());
    std::sort(xs.begin(), xs.end(), std::greater<>());
    std::sort(ys.begin(), ys.end(), std::greater<>());
    long px = 0, py = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        px += xs[i];
        py += ys[i];
        if (px < py) return false;
    }
    return true;
}

namespace {

constexpr std::size_t kChainSearchCap = 4u << 20;

void require_common_parity(std::span<const int> r, std::span<const int> r_prime) {
    const int parity = ((r.empty() ? r_prime[0] : r[0]) % 2 + 2) % 2;
    for (int v : r)
        if (((v % 2) + 2) % 2 != parity)
            throw std::invalid_argument("dalton_chain: entries of r mix parities");
    for (int v : r_prime)
        if (((v % 2) + 2) % 2 != parity)
            throw std::invalid_argument(
                "dalton_chain: r and r_prime disagree in entry parity");
}

} // namespace

std::vector<std::vector<int>> dalton_chain(std::span<const int> r,
                                           std::span<const int> r_prime) {
    if (r.size() != r_prime.size())
        throw std::invalid_argument("dalton_chain: length mismatch");
    if (r.empty()) throw std::invalid_argument("dalton_chain: empty vectors");
    require_common_parity(r, r_prime);
    if (!majorizes(r_prime, r))
        throw std::invalid_argument("dalton_chain: r_prime does not majorize r");

    const std::vector<int> start(r_prime.begin(), r_prime.end());
    const std::vector<int> goal(r.begin(), r.end());
    if (start == goal) return {start};

    const int m = static_cast<int>(start.size());
    // breadth-first over monotone transfers, pruned to vectors still above r;
    // FIFO order and fixed (i,j) neighbor order make the result deterministic
    std::map<std::vector<int>, std::vector<int>> parent;
    std::deque<std::vector<int>> queue{start};
    parent[start] = {};
    while (!queue.empty()) {
        std::vector<int> v = std::move(queue.front());
        queue.pop_front();
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                std::vector<int> w = v;
                w[i] -= 2;
                w[j] += 2;
                if (!majorizes(v, w)) continue;
                if (w == goal) {
                    std::vector<std::vector<int>> chain{goal};
                    for (const std::vector<int>* cur = &v;; cur = &parent.at(*cur)) {
                        chain.push_back(*cur);
                        if (*cur == start) break;
                    }
                    std::reverse(chain.begin(), chain.end());
                    return chain;
                }
                if (parent.contains(w) || !majorizes(w, goal)) continue;
                parent[w] = v;
                queue.push_back(std::move(w));
            }
        }
        if (parent.size() > kChainSearchCap)
            throw CapacityError("dalton_chain: search space exceeds " +
                                std::to_string(kChainSearchCap) + " vectors");
    }
    throw NoChainError(
        "dalton_chain: no majorization-monotone transfer chain reaches r exactly "
        "(it exists only up to a terminal permutation of r)");
}

SignMatrix psi(const SignMatrix& m) {
    if (m.rows() < 2) throw std::invalid_argument("psi: needs at least 2 rows");
    if (!is_column_good(m))
        throw std::invalid_argument("psi: matrix is not column-good");
    const SumVector sums = row_sums(m);
    const int b1 = sums.values[0], b2 = sums.values[1];
    if (b1 - b2 < 4)
        throw std::invalid_argument(
            "psi: first two row sums must be (r1+2, r2-2) with r1 >= r2, i.e. "
            "differ by at least 4");
    // pivot: first k with sum_{j<=k} (b_1j - b_2j) == r1 - r2 + 2 == b1 - b2 - 2
    const int target = b1 - b2 - 2;
    int running = 0, pivot = -1;
    for (int j = 0; j < m.cols(); ++j) {
        running += m.at(0, j) - m.at(1, j);
        if (running == target) {
            pivot = j;
            break;
        }
    }
    if (pivot < 0)
        throw std::invalid_argument("psi: no pivot column (preconditions violated)");
    std::vector<std::int8_t> flat(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            int src_row = i;
            if (j > pivot && i < 2) src_row = 1 - i;
            flat[static_cast<std::size_t>(i) * m.cols() + j] =
                static_cast<std::int8_t>(m.at(src_row, j));
        }
    return SignMatrix(m.rows(), m.cols(), flat);
}

bool DecreasingReport::all_ok() const {
    if (fixed_c_violations != 0) return false;
    return std::all_of(pairs.begin(), pairs.end(),
                       [](const DecreasingRow& p) { return p.ok; });
}

namespace {

void append_vector(std::string& out, const std::vector<int>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(v[i]);
    }
}

} // namespace

std::string DecreasingReport::to_csv() const {
    std::string out;
    for (const DecreasingRow& p : pairs) {
        append_vector(out, p.r);
        out.push_back(';');
        append_vector(out, p.r_prime);
        out.push_back(';');
        out += p.count_r.str();
        out.push_back(';');
        out += p.count_r_prime.str();
        out.push_back(';');
        out += p.ok ? "1" : "0";
        out.push_back('\n');
    }
    return out;
}

namespace {

std::vector<std::vector<int>> profiles_within(int rows, int cols, int bound) {
    std::vector<int> values;
    for (int v = -bound; v <= bound; ++v)
        if (((v - cols) % 2 + 2) % 2 == 0) values.push_back(v);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(rows);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == rows) {
            out.push_back(cur);
            return;
        }
        for (int v : values) {
            cur[pos] = v;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out; // lexicographic by construction
}

} // namespace

DecreasingReport verify_decreasing(int rows, int cols, int bound) {
    if (rows < 1 || cols < 0 || bound < 0)
        throw std::invalid_argument("verify_decreasing: bad arguments");
    DecreasingReport report;
    report.rows = rows;
    report.cols = cols;
    report.bound = bound;

    const auto profiles = profiles_within(rows, cols, bound);
    std::map<std::vector<int>, BigCount> counts;
    for (const auto& p : profiles)
        counts.emplace(p, engine::count_row_profile(rows, cols, p));

    for (const auto& r : profiles) {
        for (const auto& rp : profiles) {
            if (r == rp || !majorizes(rp, r)) continue;
            const BigCount& cr = counts.at(r);
            const BigCount& crp = counts.at(rp);
            report.pairs.push_back({r, rp, cr, crp, cr >= crp});
        }
    }

    // fixed-c refinement on small instances: alpha_{r,c} >= alpha_{r',c}
    if (rows <= 3 && cols <= 4) {
        std::vector<std::vector<int>> col_profiles;
        std::vector<int> cur(cols);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == cols) {
                col_profiles.push_back(cur);
                return;
            }
            for (int v : {-1, 0, 1}) {
                // parity-infeasible column sums give 0 == 0; skip them
                if (((v - rows) % 2 + 2) % 2 != 0) continue;
                cur[pos] = v;
                self(self, pos + 1);
            }
        };
        if (cols > 0) rec(rec, 0);
        std::map<std::pair<std::vector<int>, std::vector<int>>, BigCount> pair_counts;
        auto pair_count = [&](const std::vector<int>& r, const std::vector<int>& c) {
            auto key = std::make_pair(r, c);
            auto it = pair_counts.find(key);
            if (it == pair_counts.end())
                it = pair_counts.emplace(key, engine::count_profile_pair(rows, cols, r, c))
                         .first;
            return it->second;
        };
        for (const auto& r : profiles)
            for (const auto& rp : profiles) {
                if (r == rp || !majorizes(rp, r)) continue;
                for (const auto& c : col_profiles) {
                    ++report.fixed_c_checks;
                    if (pair_count(r, c) < pair_count(rp, c)) ++report.fixed_c_violations;
                }
            }
    }
    return report;
}

} // namespace discrect::majorization
