#include "haphy/constellation.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace haphy {

namespace {

constexpr double qpsk_amp = 0.70710678118654752440;   // 1/sqrt(2)
constexpr double qam16_amp = 0.31622776601683793320;  // 1/sqrt(10)

struct Qam16Tables {
    std::array<cplx, 16> points;
    Qam16Tables() {
        for (int label = 0; label < 16; ++label) {
            const int b0 = (label >> 3) & 1;
            const int b1 = (label >> 2) & 1;
            const int b2 = (label >> 1) & 1;
            const int b3 = label & 1;
            const double i = (1 - 2 * b0) * (2 - (1 - 2 * b2)) * qam16_amp;
            const double q = (1 - 2 * b1) * (2 - (1 - 2 * b3)) * qam16_amp;
            points[static_cast<std::size_t>(label)] = {i, q};
        }
    }
};

const Qam16Tables qam16;

}  // namespace

int bits_per_symbol(ModScheme scheme) {
    return scheme == ModScheme::qpsk ? 2 : 4;
}

std::vector<cplx> map_symbols(const BitBlock& bits, ModScheme scheme) {
    const int bps = bits_per_symbol(scheme);
    if (bits.size() % static_cast<std::size_t>(bps) != 0) {
        throw std::invalid_argument("map_symbols: bit count not divisible by bits per symbol");
    }
    std::vector<cplx> out(bits.size() / static_cast<std::size_t>(bps));
    if (scheme == ModScheme::qpsk) {
        for (std::size_t s = 0; s < out.size(); ++s) {
            out[s] = {(1 - 2 * bits[2 * s]) * qpsk_amp, (1 - 2 * bits[2 * s + 1]) * qpsk_amp};
        }
    } else {
        for (std::size_t s = 0; s < out.size(); ++s) {
            int label = 0;
            for (int b = 0; b < 4; ++b) label = (label << 1) | bits[4 * s + static_cast<std::size_t>(b)];
            out[s] = qam16.points[static_cast<std::size_t>(label)];
        }
    }
    return out;
}

LlrBlock demap_llrs(std::span<const cplx> symbols, ModScheme scheme, double noise_var) {
    return demap_llrs_scaled(symbols, scheme, 1.0, noise_var);
}

LlrBlock demap_llrs_scaled(std::span<const cplx> symbols, ModScheme scheme, double gain,
                           double noise_var) {
    if (!(noise_var > 0.0)) {
        throw std::invalid_argument("demap_llrs: noise variance must be positive");
    }
    const int bps = bits_per_symbol(scheme);
    LlrBlock llrs(symbols.size() * static_cast<std::size_t>(bps));
    if (scheme == ModScheme::qpsk) {
        // Max-log closed form: 2*sqrt(2)*component*gain/noise_var per bit.
        const double scale = 4.0 * qpsk_amp * gain / noise_var;
        for (std::size_t s = 0; s < symbols.size(); ++s) {
            llrs[2 * s] = scale * symbols[s].real();
            llrs[2 * s + 1] = scale * symbols[s].imag();
        }
    } else {
        for (std::size_t s = 0; s < symbols.size(); ++s) {
            std::array<double, 4> best0;
            std::array<double, 4> best1;
            best0.fill(std::numeric_limits<double>::infinity());
            best1.fill(std::numeric_limits<double>::infinity());
            for (int label = 0; label < 16; ++label) {
                const cplx ref = gain * qam16.points[static_cast<std::size_t>(label)];
                const double d = std::norm(symbols[s] - ref);
                for (int b = 0; b < 4; ++b) {
                    if ((label >> (3 - b)) & 1) {
                        best1[static_cast<std::size_t>(b)] = std::min(best1[static_cast<std::size_t>(b)], d);
                    } else {
                        best0[static_cast<std::size_t>(b)] = std::min(best0[static_cast<std::size_t>(b)], d);
                    }
                }
            }
            for (int b = 0; b < 4; ++b) {
                llrs[4 * s + static_cast<std::size_t>(b)] =
                    (best1[static_cast<std::size_t>(b)] - best0[static_cast<std::size_t>(b)]) / noise_var;
            }
        }
    }
    return llrs;
}

}  // namespace haphy
