#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "haphy/constellation.hpp"
#include "haphy/numerology.hpp"

namespace haphy {

/// Complex baseband sample stream.
struct IqSamples {
    std::vector<cplx> samples;
    double sample_rate_hz = 0.0;
};

/// One OFDM symbol: data subcarriers onto their FFT bins, unitary inverse
/// transform, cyclic prefix of the per-symbol schedule prepended. Output
/// length is cp + fft_size. Throws on column length mismatch.
std::vector<cplx> ofdm_modulate(std::span<const cplx> grid_column,
                                const BandwidthProfile& profile, int symbol_in_subframe);

/// Inverse of ofdm_modulate on clean input: CP discarded, unitary forward
/// transform, data bins extracted. Throws on wrong sample count.
std::vector<cplx> ofdm_demodulate(std::span<const cplx> samples,
                                  const BandwidthProfile& profile, int symbol_in_subframe);

/// Canonical IQ capture format: interleaved 32-bit little-endian IEEE-754
/// floats, I then Q, no header.
void write_iq_cf32(std::ostream& out, std::span<const cplx> samples);
std::vector<cplx> read_iq_cf32(std::istream& in);
void write_iq_cf32_file(const std::string& path, std::span<const cplx> samples);
std::vector<cplx> read_iq_cf32_file(const std::string& path);

namespace dsp {

/// In-place unitary radix-2 FFT (scale 1/sqrt(N) both directions);
/// size must be a power of two.
void fft(std::vector<cplx>& data, bool inverse);

}  // namespace dsp

}  // namespace haphy
