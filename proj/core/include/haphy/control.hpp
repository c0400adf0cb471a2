#pragma once

#include "haphy/constellation.hpp"
#include "haphy/crc.hpp"
#include "haphy/ldpc.hpp"
#include "haphy/numerology.hpp"

namespace haphy {

/// Downlink control information, 25 bits packed in table row order.
struct Dci {
    std::uint16_t frame_number = 0;  // 10 bits
    CodeRate code_rate = CodeRate::r13;
    ModScheme modulation = ModScheme::qpsk;
    std::uint8_t frames_in_tb = 0;  // 4 bits, encodes count-1
    bool end_of_payload = false;
    std::uint8_t uplink_ss_id = 0;  // 3 bits
    std::uint8_t reserved = 0;      // 5 bits, transmitted as zero

    friend bool operator==(const Dci&, const Dci&) = default;
};

/// Uplink control information, 25 bits; bandwidth leads the packing order.
struct Uci {
    Bandwidth bandwidth = Bandwidth::bw_1p4_mhz;
    std::uint16_t frame_number = 0;  // 10 bits
    CodeRate code_rate = CodeRate::r13;
    ModScheme modulation = ModScheme::qpsk;
    std::uint8_t frames_in_tb = 0;  // 4 bits, encodes count-1
    bool end_of_payload = false;
    std::uint8_t reserved = 0;  // 7 bits

    friend bool operator==(const Uci&, const Uci&) = default;
};

BitBlock pack_dci(const Dci& dci);
Dci unpack_dci(const BitBlock& bits);
BitBlock pack_uci(const Uci& uci);
Uci unpack_uci(const BitBlock& bits);

/// Control chain: 25 info bits -> CRC-8 append (33) -> 15 zero tail bits
/// (48) -> rate-1/2 convolutional code (96) -> 48 QPSK symbols.
std::vector<cplx> build_control_symbols(const BitBlock& info25);

inline constexpr int control_symbol_count = 48;

}  // namespace haphy
