#pragma once

#include "haphy/bits.hpp"

namespace haphy {

inline constexpr int crc8_width = 8;
inline constexpr int control_info_bits = 25;
inline constexpr int control_crc_bits = control_info_bits + crc8_width;  // 33

/// 8-bit remainder of msg(D) * D^8 modulo
/// g(D) = D^8 + D^7 + D^4 + D^3 + D + 1, zero initial register, no final
/// XOR, MSB first. Table-driven; accepts any message length >= 1.
BitBlock crc8_parity(const BitBlock& msg);

/// msg (25 bits) followed by its parity. Throws on wrong input length.
BitBlock crc8_append(const BitBlock& msg);

/// True iff the 33-bit codeword divides by g(D) under the crc8_append
/// convention. Throws on wrong length.
bool crc8_check(const BitBlock& codeword);

}  // namespace haphy
