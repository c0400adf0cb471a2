#pragma once

#include <complex>
#include <span>

#include "haphy/bits.hpp"

namespace haphy {

using cplx = std::complex<double>;

enum class ModScheme { qpsk, qam16 };

int bits_per_symbol(ModScheme scheme);

/// Gray-mapped unit-average-energy constellations.
/// QPSK: (b0 b1) -> ((1-2*b0) + j(1-2*b1)) / sqrt(2).
/// 16-QAM: (b0 b1 b2 b3) -> I from (b0, b2), Q from (b1, b3), levels
/// {±1, ±3} / sqrt(10). Throws if the bit count is not divisible by the
/// bits per symbol.
std::vector<cplx> map_symbols(const BitBlock& bits, ModScheme scheme);

/// Max-log LLRs consistent with map_symbols labeling; positive favors bit 0.
/// Throws on noise_var <= 0.
LlrBlock demap_llrs(std::span<const cplx> symbols, ModScheme scheme, double noise_var);

/// Max-log demapping of y ~ gain * s + noise, used after MMSE equalization
/// where the equalizer output keeps a known amplitude bias.
LlrBlock demap_llrs_scaled(std::span<const cplx> symbols, ModScheme scheme, double gain,
                           double noise_var);

}  // namespace haphy
