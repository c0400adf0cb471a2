#include "haphy/ofdm.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace haphy {

namespace dsp {

void fft(std::vector<cplx>& data, bool inverse) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("fft: size must be a power of two");
    }
    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const cplx wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const cplx u = data[i + j];
                const cplx v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (auto& x : data) x *= scale;
}

}  // namespace dsp

std::vector<cplx> ofdm_modulate(std::span<const cplx> grid_column,
                                const BandwidthProfile& profile, int symbol_in_subframe) {
    if (static_cast<int>(grid_column.size()) != profile.n_data_subcarriers) {
        throw std::invalid_argument("ofdm_modulate: column length mismatch");
    }
    const int cp = symbol_cp_length(profile, symbol_in_subframe);
    std::vector<cplx> bins(static_cast<std::size_t>(profile.fft_size), cplx{0.0, 0.0});
    for (int k = 0; k < profile.n_data_subcarriers; ++k) {
        bins[static_cast<std::size_t>(subcarrier_to_fft_bin(profile, k))] = grid_column[static_cast<std::size_t>(k)];
    }
    dsp::fft(bins, true);
    std::vector<cplx> out(static_cast<std::size_t>(cp + profile.fft_size));
    for (int i = 0; i < cp; ++i) {
        out[static_cast<std::size_t>(i)] = bins[static_cast<std::size_t>(profile.fft_size - cp + i)];
    }
    std::copy(bins.begin(), bins.end(), out.begin() + cp);
    return out;
}

std::vector<cplx> ofdm_demodulate(std::span<const cplx> samples,
                                  const BandwidthProfile& profile, int symbol_in_subframe) {
    const int cp = symbol_cp_length(profile, symbol_in_subframe);
    if (static_cast<int>(samples.size()) != cp + profile.fft_size) {
        throw std::invalid_argument("ofdm_demodulate: wrong sample count for symbol");
    }
    std::vector<cplx> bins(samples.begin() + cp, samples.end());
    dsp::fft(bins, false);
    std::vector<cplx> out(static_cast<std::size_t>(profile.n_data_subcarriers));
    for (int k = 0; k < profile.n_data_subcarriers; ++k) {
        out[static_cast<std::size_t>(k)] = bins[static_cast<std::size_t>(subcarrier_to_fft_bin(profile, k))];
    }
    return out;
}

void write_iq_cf32(std::ostream& out, std::span<const cplx> samples) {
    static_assert(std::endian::native == std::endian::little,
                  "cf32 writer assumes a little-endian host");
    for (const cplx& s : samples) {
        const float i = static_cast<float>(s.real());
        const float q = static_cast<float>(s.imag());
        out.write(reinterpret_cast<const char*>(&i), sizeof(float));
        out.write(reinterpret_cast<const char*>(&q), sizeof(float));
    }
}

std::vector<cplx> read_iq_cf32(std::istream& in) {
    std::vector<cplx> samples;
    float iq[2];
    while (in.read(reinterpret_cast<char*>(iq), sizeof(iq))) {
        samples.emplace_back(iq[0], iq[1]);
    }
    return samples;
}

void write_iq_cf32_file(const std::string& path, std::span<const cplx> samples) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_iq_cf32(out, samples);
}

std::vector<cplx> read_iq_cf32_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return read_iq_cf32(in);
}

}  // namespace haphy
