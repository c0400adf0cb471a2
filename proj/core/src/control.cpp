#include "haphy/control.hpp"

#include <stdexcept>

#include "haphy/convolutional.hpp"

namespace haphy {

namespace {

void check_field(std::uint32_t value, std::uint32_t limit, const char* name) {
    if (value > limit) throw std::invalid_argument(std::string("control field out of range: ") + name);
}

}  // namespace

BitBlock pack_dci(const Dci& dci) {
    check_field(dci.frame_number, 1023, "frame_number");
    check_field(dci.frames_in_tb, 15, "frames_in_tb");
    check_field(dci.uplink_ss_id, 7, "uplink_ss_id");
    check_field(dci.reserved, 31, "reserved");
    BitBlock bits;
    bits.reserve(control_info_bits);
    append_bits_msb(bits, dci.frame_number, 10);
    append_bits_msb(bits, dci.code_rate == CodeRate::r12 ? 1u : 0u, 1);
    append_bits_msb(bits, dci.modulation == ModScheme::qam16 ? 1u : 0u, 1);
    append_bits_msb(bits, dci.frames_in_tb, 4);
    append_bits_msb(bits, dci.end_of_payload ? 1u : 0u, 1);
    append_bits_msb(bits, dci.uplink_ss_id, 3);
    append_bits_msb(bits, dci.reserved, 5);
    return bits;
}

Dci unpack_dci(const BitBlock& bits) {
    if (bits.size() != control_info_bits) {
        throw std::invalid_argument("unpack_dci: block must be 25 bits");
    }
    Dci dci;
    dci.frame_number = static_cast<std::uint16_t>(read_bits_msb(bits, 0, 10));
    dci.code_rate = read_bits_msb(bits, 10, 1) ? CodeRate::r12 : CodeRate::r13;
    dci.modulation = read_bits_msb(bits, 11, 1) ? ModScheme::qam16 : ModScheme::qpsk;
    dci.frames_in_tb = static_cast<std::uint8_t>(read_bits_msb(bits, 12, 4));
    dci.end_of_payload = read_bits_msb(bits, 16, 1) != 0;
    dci.uplink_ss_id = static_cast<std::uint8_t>(read_bits_msb(bits, 17, 3));
    dci.reserved = static_cast<std::uint8_t>(read_bits_msb(bits, 20, 5));
    return dci;
}

BitBlock pack_uci(const Uci& uci) {
    check_field(uci.frame_number, 1023, "frame_number");
    check_field(uci.frames_in_tb, 15, "frames_in_tb");
    check_field(uci.reserved, 127, "reserved");
    BitBlock bits;
    bits.reserve(control_info_bits);
    append_bits_msb(bits, uci.bandwidth == Bandwidth::bw_3_mhz ? 1u : 0u, 1);
    append_bits_msb(bits, uci.frame_number, 10);
    append_bits_msb(bits, uci.code_rate == CodeRate::r12 ? 1u : 0u, 1);
    append_bits_msb(bits, uci.modulation == ModScheme::qam16 ? 1u : 0u, 1);
    append_bits_msb(bits, uci.frames_in_tb, 4);
    append_bits_msb(bits, uci.end_of_payload ? 1u : 0u, 1);
    append_bits_msb(bits, uci.reserved, 7);
    return bits;
}

Uci unpack_uci(const BitBlock& bits) {
    if (bits.size() != control_info_bits) {
        throw std::invalid_argument("unpack_uci: block must be 25 bits");
    }
    Uci uci;
    uci.bandwidth = read_bits_msb(bits, 0, 1) ? Bandwidth::bw_3_mhz : Bandwidth::bw_1p4_mhz;
    uci.frame_number = static_cast<std::uint16_t>(read_bits_msb(bits, 1, 10));
    uci.code_rate = read_bits_msb(bits, 11, 1) ? CodeRate::r12 : CodeRate::r13;
    uci.modulation = read_bits_msb(bits, 12, 1) ? ModScheme::qam16 : ModScheme::qpsk;
    uci.frames_in_tb = static_cast<std::uint8_t>(read_bits_msb(bits, 13, 4));
    uci.end_of_payload = read_bits_msb(bits, 17, 1) != 0;
    uci.reserved = static_cast<std::uint8_t>(read_bits_msb(bits, 18, 7));
    return uci;
}

std::vector<cplx> build_control_symbols(const BitBlock& info25) {
    if (info25.size() != control_info_bits) {
        throw std::invalid_argument("build_control_symbols: info must be 25 bits");
    }
    BitBlock with_crc = crc8_append(info25);
    with_crc.insert(with_crc.end(), conv_tail_bits, 0);
    const BitBlock coded = conv_encode(with_crc);
    return map_symbols(coded, ModScheme::qpsk);
}

}  // namespace haphy
