#include "haphy/crc.hpp"

#include <array>
#include <stdexcept>

namespace haphy {

namespace {

// g(D) = D^8 + D^7 + D^4 + D^3 + D + 1 with the leading term dropped.
constexpr std::uint8_t poly = 0x9B;

constexpr std::array<std::uint8_t, 256> make_table() {
    std::array<std::uint8_t, 256> table{};
    for (int byte = 0; byte < 256; ++byte) {
        std::uint8_t reg = static_cast<std::uint8_t>(byte);
        for (int bit = 0; bit < 8; ++bit) {
            const bool top = (reg & 0x80) != 0;
            reg = static_cast<std::uint8_t>(reg << 1);
            if (top) reg ^= poly;
        }
        table[static_cast<std::size_t>(byte)] = reg;
    }
    return table;
}

constexpr auto crc_table = make_table();

}  // namespace

BitBlock crc8_parity(const BitBlock& msg) {
    if (msg.empty()) throw std::invalid_argument("crc8_parity: empty message");
    // Leading zero bits do not change the remainder with a zero-initialized
    // register, so the message is left-padded to a whole number of bytes.
    const std::size_t pad = (8 - msg.size() % 8) % 8;
    std::uint8_t reg = 0;
    std::uint8_t byte = 0;
    std::size_t filled = pad;
    for (std::uint8_t bit : msg) {
        byte = static_cast<std::uint8_t>((byte << 1) | (bit & 1u));
        if (++filled == 8) {
            reg = crc_table[static_cast<std::size_t>(reg ^ byte)];
            filled = 0;
            byte = 0;
        }
    }
    BitBlock parity(crc8_width);
    for (int i = 0; i < crc8_width; ++i) {
        parity[static_cast<std::size_t>(i)] = (reg >> (7 - i)) & 1u;
    }
    return parity;
}

BitBlock crc8_append(const BitBlock& msg) {
    if (msg.size() != control_info_bits) {
        throw std::invalid_argument("crc8_append: message must be 25 bits");
    }
    BitBlock out = msg;
    const BitBlock parity = crc8_parity(msg);
    out.insert(out.end(), parity.begin(), parity.end());
    return out;
}

bool crc8_check(const BitBlock& codeword) {
    if (codeword.size() != control_crc_bits) {
        throw std::invalid_argument("crc8_check: codeword must be 33 bits");
    }
    const BitBlock msg(codeword.begin(), codeword.begin() + control_info_bits);
    const BitBlock parity = crc8_parity(msg);
    for (int i = 0; i < crc8_width; ++i) {
        if (parity[static_cast<std::size_t>(i)] != codeword[control_info_bits + static_cast<std::size_t>(i)]) {
            return false;
        }
    }
    return true;
}

}  // namespace haphy
