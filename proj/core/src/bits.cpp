#include "haphy/bits.hpp"

#include <stdexcept>

namespace haphy {

void append_bits_msb(BitBlock& bits, std::uint32_t value, int width) {
    if (width < 0 || width > 32) throw std::invalid_argument("append_bits_msb: bad width");
    for (int i = width - 1; i >= 0; --i) {
        bits.push_back(static_cast<std::uint8_t>((value >> i) & 1u));
    }
}

std::uint32_t read_bits_msb(const BitBlock& bits, std::size_t pos, int width) {
    if (width < 0 || width > 32) throw std::invalid_argument("read_bits_msb: bad width");
    if (pos + static_cast<std::size_t>(width) > bits.size()) {
        throw std::out_of_range("read_bits_msb: range outside block");
    }
    std::uint32_t value = 0;
    for (int i = 0; i < width; ++i) {
        value = (value << 1) | (bits[pos + i] & 1u);
    }
    return value;
}

}  // namespace haphy
