#include "haphy/ldpc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>

namespace haphy {

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t x = (state += 0x9E3779B97F4A7C15ull);
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
        return x ^ (x >> 31);
    }
    std::uint32_t below(std::uint32_t bound) {
        return static_cast<std::uint32_t>(next() % bound);
    }
};

struct BaseEdge {
    int row;
    int col;
    std::uint32_t shift_seed;  // reduced mod z at lift time
};

// Base graph shared by every lift size. Parity columns are fixed; info
// columns are placed by PEG with seeded tie-breaks.
std::vector<BaseEdge> build_base_graph() {
    constexpr int rows = LdpcCode::base_check_rows;
    constexpr int info_cols = LdpcCode::base_info_cols;

    std::vector<BaseEdge> edges;
    // Anchor parity column: weight 3 at top, middle, bottom.
    const int p0 = info_cols;
    edges.push_back({0, p0, 0});
    edges.push_back({rows / 2 - 1, p0, 0});
    edges.push_back({rows - 1, p0, 0});
    // Accumulator chain p1..p31.
    for (int j = 1; j < rows; ++j) {
        edges.push_back({j - 1, info_cols + j, 0});
        edges.push_back({j, info_cols + j, 0});
    }

    std::vector<std::vector<int>> check_adj(rows);          // check -> cols
    std::vector<std::vector<int>> var_adj(LdpcCode::base_cols);  // col -> checks
    std::vector<int> check_degree(rows, 0);
    for (const auto& e : edges) {
        check_adj[e.row].push_back(e.col);
        var_adj[e.col].push_back(e.row);
        ++check_degree[e.row];
    }

    SplitMix64 rng{LdpcCode::construction_seed};

    auto pick = [&](const std::vector<int>& candidates) {
        int best_degree = std::numeric_limits<int>::max();
        std::vector<int> ties;
        for (int c : candidates) {
            if (check_degree[c] < best_degree) {
                best_degree = check_degree[c];
                ties.clear();
            }
            if (check_degree[c] == best_degree) ties.push_back(c);
        }
        return ties[rng.below(static_cast<std::uint32_t>(ties.size()))];
    };

    std::vector<BaseEdge> info_edges;
    for (int v = 0; v < info_cols; ++v) {
        for (int e = 0; e < LdpcCode::info_col_degree; ++e) {
            int chosen;
            if (var_adj[v].empty()) {
                std::vector<int> all(rows);
                for (int c = 0; c < rows; ++c) all[c] = c;
                chosen = pick(all);
            } else {
                // BFS from v; prefer unreachable checks, else the farthest.
                std::vector<int> check_dist(rows, -1);
                std::vector<int> var_dist(LdpcCode::base_cols, -1);
                std::queue<int> frontier;  // encodes vars as col, checks as col_count+row
                var_dist[v] = 0;
                frontier.push(v);
                while (!frontier.empty()) {
                    const int node = frontier.front();
                    frontier.pop();
                    if (node < LdpcCode::base_cols) {
                        for (int c : var_adj[node]) {
                            if (check_dist[c] < 0) {
                                check_dist[c] = var_dist[node] + 1;
                                frontier.push(LdpcCode::base_cols + c);
                            }
                        }
                    } else {
                        const int c = node - LdpcCode::base_cols;
                        for (int col : check_adj[c]) {
                            if (var_dist[col] < 0) {
                                var_dist[col] = check_dist[c] + 1;
                                frontier.push(col);
                            }
                        }
                    }
                }
                std::vector<int> candidates;
                for (int c = 0; c < rows; ++c) {
                    if (check_dist[c] < 0) candidates.push_back(c);
                }
                if (candidates.empty()) {
                    int far = 0;
                    for (int c = 0; c < rows; ++c) far = std::max(far, check_dist[c]);
                    for (int c = 0; c < rows; ++c) {
                        if (check_dist[c] == far) candidates.push_back(c);
                    }
                }
                chosen = pick(candidates);
            }
            info_edges.push_back({chosen, v, 0});
            check_adj[chosen].push_back(v);
            var_adj[v].push_back(chosen);
            ++check_degree[chosen];
        }
    }
    // Shift seeds drawn after placement, in creation order, so the base
    // description does not depend on the lift size.
    for (auto& e : info_edges) {
        e.shift_seed = static_cast<std::uint32_t>(rng.next() >> 33);
    }
    edges.insert(edges.end(), info_edges.begin(), info_edges.end());
    return edges;
}

const std::vector<BaseEdge>& base_graph() {
    static const std::vector<BaseEdge> graph = build_base_graph();
    return graph;
}

inline int hard_bit(double llr) { return llr < 0.0 ? 1 : 0; }

}  // namespace

LdpcCode ldpc_build(int target_info_bits) {
    if (target_info_bits <= 0) {
        throw std::invalid_argument("ldpc_build: target size must be positive");
    }
    LdpcCode code;
    code.z_ = (target_info_bits + LdpcCode::base_info_cols - 1) / LdpcCode::base_info_cols;
    code.k_ = LdpcCode::base_info_cols * code.z_;
    code.n_ = LdpcCode::base_cols * code.z_;
    code.n_checks_ = LdpcCode::base_check_rows * code.z_;

    for (const auto& e : base_graph()) {
        code.edges_.push_back({e.row, e.col, static_cast<int>(e.shift_seed % static_cast<std::uint32_t>(code.z_))});
    }

    // Lifted CSR: check (row, lane) connects to var (col, (lane+shift) mod z).
    std::vector<std::vector<int>> per_row(LdpcCode::base_check_rows);
    for (std::size_t i = 0; i < code.edges_.size(); ++i) {
        per_row[static_cast<std::size_t>(code.edges_[i].row)].push_back(static_cast<int>(i));
    }
    code.check_offsets_.assign(static_cast<std::size_t>(code.n_checks_) + 1, 0);
    std::size_t total = 0;
    for (int row = 0; row < LdpcCode::base_check_rows; ++row) {
        for (int lane = 0; lane < code.z_; ++lane) {
            total += per_row[static_cast<std::size_t>(row)].size();
            code.check_offsets_[static_cast<std::size_t>(row * code.z_ + lane) + 1] = static_cast<int>(total);
        }
    }
    code.check_vars_.resize(total);
    for (int row = 0; row < LdpcCode::base_check_rows; ++row) {
        const auto& edge_ids = per_row[static_cast<std::size_t>(row)];
        for (int lane = 0; lane < code.z_; ++lane) {
            const int check = row * code.z_ + lane;
            int* dst = code.check_vars_.data() + code.check_offsets_[static_cast<std::size_t>(check)];
            for (int id : edge_ids) {
                const auto& e = code.edges_[static_cast<std::size_t>(id)];
                *dst++ = e.col * code.z_ + (lane + e.shift) % code.z_;
            }
            std::sort(code.check_vars_.data() + code.check_offsets_[static_cast<std::size_t>(check)], dst);
        }
    }
    return code;
}

BitBlock ldpc_encode(const LdpcCode& code, const BitBlock& info) {
    if (static_cast<int>(info.size()) != code.k()) {
        throw std::invalid_argument("ldpc_encode: info length mismatch");
    }
    const int z = code.z();
    constexpr int rows = LdpcCode::base_check_rows;
    constexpr int info_cols = LdpcCode::base_info_cols;

    // t[i] = systematic contribution of base row i, one z-bit lane vector.
    std::vector<std::uint8_t> t(static_cast<std::size_t>(rows) * z, 0);
    for (const auto& e : code.base_edges()) {
        if (e.col >= info_cols) continue;
        const std::uint8_t* src = info.data() + static_cast<std::size_t>(e.col) * z;
        std::uint8_t* dst = t.data() + static_cast<std::size_t>(e.row) * z;
        for (int r = 0; r < z; ++r) {
            dst[r] ^= src[(r + e.shift) % z];
        }
    }

    BitBlock cw(static_cast<std::size_t>(code.n()), 0);
    std::copy(info.begin(), info.end(), cw.begin());
    auto parity = [&](int j) { return cw.data() + static_cast<std::size_t>(info_cols + j) * z; };

    // Anchor block: summing every check row cancels the chain and leaves p0.
    std::uint8_t* p0 = parity(0);
    for (int i = 0; i < rows; ++i) {
        const std::uint8_t* ti = t.data() + static_cast<std::size_t>(i) * z;
        for (int r = 0; r < z; ++r) p0[r] ^= ti[r];
    }
    // Forward substitution along the accumulator chain.
    for (int i = 0; i + 1 < rows; ++i) {
        const std::uint8_t* ti = t.data() + static_cast<std::size_t>(i) * z;
        const std::uint8_t* prev = parity(i);
        std::uint8_t* next = parity(i + 1);
        const bool anchored = (i == rows / 2 - 1);  // row 15 also carries p0
        for (int r = 0; r < z; ++r) {
            next[r] = static_cast<std::uint8_t>(ti[r] ^ prev[r] ^ (anchored ? p0[r] : 0));
        }
    }
    return cw;
}

LdpcDecodeResult ldpc_decode(const LdpcCode& code, const LlrBlock& llrs, int max_iters) {
    if (static_cast<int>(llrs.size()) != code.n()) {
        throw std::invalid_argument("ldpc_decode: LLR length mismatch");
    }
    if (max_iters < 0) throw std::invalid_argument("ldpc_decode: negative iteration cap");

    const auto& offsets = code.check_offsets();
    const auto& vars = code.check_vars();
    const int n_checks = code.n_checks();

    std::vector<double> posterior(llrs.begin(), llrs.end());
    std::vector<double> c2v(vars.size(), 0.0);

    auto syndrome_ok = [&]() {
        for (int c = 0; c < n_checks; ++c) {
            int parity = 0;
            for (int e = offsets[static_cast<std::size_t>(c)]; e < offsets[static_cast<std::size_t>(c) + 1]; ++e) {
                parity ^= hard_bit(posterior[static_cast<std::size_t>(vars[static_cast<std::size_t>(e)])]);
            }
            if (parity) return false;
        }
        return true;
    };
    auto all_decided = [&]() {
        for (double p : posterior) {
            if (p == 0.0) return false;
        }
        return true;
    };

    LdpcDecodeResult result;
    result.iters_used = 0;
    result.converged = syndrome_ok() && all_decided();

    for (int iter = 0; iter < max_iters && !result.converged; ++iter) {
        for (int c = 0; c < n_checks; ++c) {
            const int begin = offsets[static_cast<std::size_t>(c)];
            const int end = offsets[static_cast<std::size_t>(c) + 1];
            // Two smallest extrinsic magnitudes and the overall sign.
            double min1 = std::numeric_limits<double>::infinity();
            double min2 = min1;
            int min_pos = begin;
            int sign = 1;
            for (int e = begin; e < end; ++e) {
                const double v2c = posterior[static_cast<std::size_t>(vars[static_cast<std::size_t>(e)])] - c2v[static_cast<std::size_t>(e)];
                const double mag = std::abs(v2c);
                if (v2c < 0.0) sign = -sign;
                if (mag < min1) {
                    min2 = min1;
                    min1 = mag;
                    min_pos = e;
                } else if (mag < min2) {
                    min2 = mag;
                }
            }
            for (int e = begin; e < end; ++e) {
                const std::size_t v = static_cast<std::size_t>(vars[static_cast<std::size_t>(e)]);
                const double v2c = posterior[v] - c2v[static_cast<std::size_t>(e)];
                const double mag = (e == min_pos) ? min2 : min1;
                double msg = ldpc_min_sum_scale * mag;
                const int msg_sign = (v2c < 0.0) ? -sign : sign;
                if (msg_sign < 0) msg = -msg;
                posterior[v] = v2c + msg;  // fold the new message in directly
                c2v[static_cast<std::size_t>(e)] = msg;
            }
        }
        result.iters_used = iter + 1;
        result.converged = syndrome_ok() && all_decided();
    }

    result.info.resize(static_cast<std::size_t>(code.k()));
    for (int i = 0; i < code.k(); ++i) {
        result.info[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(hard_bit(posterior[static_cast<std::size_t>(i)]));
    }
    return result;
}

BitBlock puncture_to_rate_half(const LdpcCode& code, const BitBlock& codeword) {
    if (static_cast<int>(codeword.size()) != code.n()) {
        throw std::invalid_argument("puncture_to_rate_half: codeword length mismatch");
    }
    const int z = code.z();
    BitBlock out;
    out.reserve(static_cast<std::size_t>(2 * code.k()));
    out.insert(out.end(), codeword.begin(), codeword.begin() + code.k());
    for (int j = 0; j < LdpcCode::base_check_rows; j += 2) {
        const auto begin = codeword.begin() + static_cast<std::size_t>(LdpcCode::base_info_cols + j) * z;
        out.insert(out.end(), begin, begin + z);
    }
    return out;
}

LlrBlock depuncture_from_rate_half(const LdpcCode& code, const LlrBlock& llrs) {
    if (static_cast<int>(llrs.size()) != 2 * code.k()) {
        throw std::invalid_argument("depuncture_from_rate_half: LLR length mismatch");
    }
    const int z = code.z();
    LlrBlock out(static_cast<std::size_t>(code.n()), 0.0);
    std::copy(llrs.begin(), llrs.begin() + code.k(), out.begin());
    auto src = llrs.begin() + code.k();
    for (int j = 0; j < LdpcCode::base_check_rows; j += 2) {
        std::copy(src, src + z, out.begin() + static_cast<std::size_t>(LdpcCode::base_info_cols + j) * z);
        src += z;
    }
    return out;
}

long coded_block_size(const LdpcCode& code, CodeRate rate) {
    return rate == CodeRate::r13 ? code.n() : 2L * code.k();
}

void export_parity_check(const LdpcCode& code, std::ostream& out) {
    const auto& offsets = code.check_offsets();
    const auto& vars = code.check_vars();
    for (int c = 0; c < code.n_checks(); ++c) {
        out << c << ':';
        for (int e = offsets[static_cast<std::size_t>(c)]; e < offsets[static_cast<std::size_t>(c) + 1]; ++e) {
            out << ' ' << vars[static_cast<std::size_t>(e)];
        }
        out << '\n';
    }
}

std::vector<std::vector<int>> import_parity_check(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) {
            throw std::runtime_error("import_parity_check: missing ':' separator");
        }
        const std::size_t index = std::stoul(line.substr(0, colon));
        if (index != rows.size()) {
            throw std::runtime_error("import_parity_check: non-sequential check index");
        }
        std::istringstream cols(line.substr(colon + 1));
        std::vector<int> row;
        int v;
        while (cols >> v) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace haphy
