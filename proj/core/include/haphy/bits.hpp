#pragma once

#include <cstdint>
#include <vector>

namespace haphy {

/// Bit sequence, one bit per element, MSB-first field semantics throughout.
using BitBlock = std::vector<std::uint8_t>;

/// Log-likelihood ratios paired with coded bits: positive means bit 0 is the
/// more likely hypothesis.
using LlrBlock = std::vector<double>;

/// Append `width` bits of `value`, most significant first.
void append_bits_msb(BitBlock& bits, std::uint32_t value, int width);

/// Read `width` bits starting at `pos`, most significant first.
std::uint32_t read_bits_msb(const BitBlock& bits, std::size_t pos, int width);

}  // namespace haphy
