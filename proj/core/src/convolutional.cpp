#include "haphy/convolutional.hpp"

#include <limits>
#include <stdexcept>

namespace haphy {

namespace {

constexpr int n_states = 4;  // two memory bits

// state = (s1 << 1) | s2 with s1 the most recent bit
inline int coded_pair(int state, int b) {
    const int s1 = state >> 1;
    const int s2 = state & 1;
    const int c0 = b ^ s1 ^ s2;  // generator 7 octal
    const int c1 = b ^ s2;       // generator 5 octal
    return (c0 << 1) | c1;
}

}  // namespace

BitBlock conv_encode(const BitBlock& input) {
    if (input.empty()) throw std::invalid_argument("conv_encode: empty input");
    BitBlock out;
    out.reserve(input.size() * 2);
    int state = 0;
    for (std::uint8_t bit : input) {
        const int b = bit & 1;
        const int pair = coded_pair(state, b);
        out.push_back(static_cast<std::uint8_t>((pair >> 1) & 1));
        out.push_back(static_cast<std::uint8_t>(pair & 1));
        state = ((b << 1) | (state >> 1)) & 3;
    }
    return out;
}

ViterbiResult viterbi_decode(const LlrBlock& llrs) {
    if (llrs.empty() || llrs.size() % 2 != 0) {
        throw std::invalid_argument("viterbi_decode: LLR count must be even and > 0");
    }
    const std::size_t steps = llrs.size() / 2;
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();

    std::vector<double> metric(n_states, neg_inf);
    std::vector<double> next_metric(n_states);
    metric[0] = 0.0;  // encoder starts in the all-zero state
    std::vector<std::uint8_t> survivor(steps * n_states);

    for (std::size_t k = 0; k < steps; ++k) {
        const double l0 = llrs[2 * k];
        const double l1 = llrs[2 * k + 1];
        for (int ns = 0; ns < n_states; ++ns) {
            const int b = ns >> 1;
            double best = neg_inf;
            std::uint8_t best_s2 = 0;
            for (int s2 = 0; s2 < 2; ++s2) {
                const int ps = ((ns & 1) << 1) | s2;
                if (metric[ps] == neg_inf) continue;
                const int pair = coded_pair(ps, b);
                const double bm = ((pair & 2) ? -l0 : l0) + ((pair & 1) ? -l1 : l1);
                const double cand = metric[ps] + bm;
                if (cand > best) {
                    best = cand;
                    best_s2 = static_cast<std::uint8_t>(s2);
                }
            }
            next_metric[ns] = best;
            survivor[k * n_states + ns] = best_s2;
        }
        metric.swap(next_metric);
    }

    ViterbiResult result;
    result.metric = metric[0];  // tail bits force termination in state 0
    result.bits.resize(steps);
    int state = 0;
    for (std::size_t k = steps; k-- > 0;) {
        result.bits[k] = static_cast<std::uint8_t>(state >> 1);
        state = ((state & 1) << 1) | survivor[k * n_states + state];
    }
    return result;
}

}  // namespace haphy
