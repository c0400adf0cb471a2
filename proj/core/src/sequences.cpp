#include "haphy/sequences.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace haphy {

namespace {

constexpr int m_seq_length = 31;
constexpr int zc_length = 71;

// m-sequence from x^5 + x^2 + 1, initial state 00001.
std::array<std::uint8_t, m_seq_length> base_m_sequence() {
    std::array<std::uint8_t, m_seq_length> s{};
    std::array<std::uint8_t, 5> reg{0, 0, 0, 0, 1};
    for (int i = 0; i < m_seq_length; ++i) {
        s[static_cast<std::size_t>(i)] = reg[0];
        const std::uint8_t fb = static_cast<std::uint8_t>(reg[0] ^ reg[2]);
        for (int j = 0; j < 4; ++j) reg[static_cast<std::size_t>(j)] = reg[static_cast<std::size_t>(j) + 1];
        reg[4] = fb;
    }
    return s;
}

const std::array<std::uint8_t, m_seq_length> m_seq = base_m_sequence();

constexpr double inv_sqrt2 = 0.70710678118654752440;

cplx qpsk_from_bits(std::uint8_t b0, std::uint8_t b1) {
    return {(1 - 2 * b0) * inv_sqrt2, (1 - 2 * b1) * inv_sqrt2};
}

// Pilot lattice shared by DRS and URS: symbols 0 and 4 of every slot, every
// 6th subcarrier, with the shift alternating by +3 between the two symbols.
template <typename ValueFn>
RsPlan build_rs_plan(int id, const BandwidthProfile& profile, ValueFn&& value_at) {
    RsPlan plan;
    const int per_symbol = profile.n_data_subcarriers / rs_subcarrier_spacing;
    plan.reserve(static_cast<std::size_t>(per_symbol) * 2 * slots_per_subframe * subframes_per_frame);
    for (int slot = 0; slot < subframes_per_frame * slots_per_subframe; ++slot) {
        for (int sym_in_slot : {0, 4}) {
            const int abs_symbol = slot * symbols_per_slot + sym_in_slot;
            const int shift = (sym_in_slot == 0) ? id % rs_subcarrier_spacing
                                                 : (id + 3) % rs_subcarrier_spacing;
            for (int m = 0; m < per_symbol; ++m) {
                const int sc = shift + m * rs_subcarrier_spacing;
                plan.push_back({abs_symbol, sc, value_at(abs_symbol, m)});
            }
        }
    }
    return plan;
}

}  // namespace

AccessPointId::AccessPointId(int value) : value_(value) {
    if (value < 0 || value > max_value) {
        throw std::out_of_range("AccessPointId: value outside 0..167");
    }
}

UssId::UssId(int value) : value_(value) {
    if (value < 0 || value > max_value) {
        throw std::out_of_range("UssId: value outside 0..7");
    }
}

std::vector<int> gen_dss(AccessPointId ap_id) {
    const int m0 = ap_id.value() % m_seq_length;
    const int m1 = (m0 + ap_id.value() / m_seq_length + 1) % m_seq_length;
    std::vector<int> out(dss_length);
    for (int i = 0; i < m_seq_length; ++i) {
        out[static_cast<std::size_t>(2 * i)] = 1 - 2 * m_seq[static_cast<std::size_t>((i + m0) % m_seq_length)];
        out[static_cast<std::size_t>(2 * i + 1)] = 1 - 2 * m_seq[static_cast<std::size_t>((i + m1) % m_seq_length)];
    }
    return out;
}

std::vector<cplx> gen_uss(UssId uss_id, AccessPointId ap_id) {
    const int root = 1 + (ap_id.value() * 8 + uss_id.value()) % (zc_length - 1);
    std::vector<cplx> out(uss_length);
    for (int n = 0; n < uss_length; ++n) {
        const long m = n % zc_length;
        const double phase = -std::numbers::pi * root * static_cast<double>(m) *
                             static_cast<double>(m + 1) / zc_length;
        out[static_cast<std::size_t>(n)] = {std::cos(phase), std::sin(phase)};
    }
    return out;
}

std::vector<std::uint8_t> gold_sequence(std::uint32_t c_init, int length) {
    constexpr int warmup = 1600;
    constexpr int degree = 31;
    std::vector<std::uint8_t> x1(static_cast<std::size_t>(warmup + length + degree));
    std::vector<std::uint8_t> x2(x1.size());
    x1[0] = 1;
    for (int i = 0; i < degree; ++i) x2[static_cast<std::size_t>(i)] = (c_init >> i) & 1u;
    for (std::size_t i = 0; i + degree < x1.size(); ++i) {
        x1[i + degree] = static_cast<std::uint8_t>(x1[i + 3] ^ x1[i]);
        x2[i + degree] = static_cast<std::uint8_t>(x2[i + 3] ^ x2[i + 2] ^ x2[i + 1] ^ x2[i]);
    }
    std::vector<std::uint8_t> c(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) {
        c[static_cast<std::size_t>(i)] =
            static_cast<std::uint8_t>(x1[static_cast<std::size_t>(i + warmup)] ^ x2[static_cast<std::size_t>(i + warmup)]);
    }
    return c;
}

RsPlan gen_drs(AccessPointId ap_id, const BandwidthProfile& profile) {
    if (profile.n_data_subcarriers != profile_for(Bandwidth::bw_1p4_mhz).n_data_subcarriers) {
        throw std::invalid_argument("gen_drs: downlink uses the 1.4 MHz profile");
    }
    const int id = ap_id.value();
    const int per_symbol = profile.n_data_subcarriers / rs_subcarrier_spacing;
    // One Gold draw per RS symbol keeps pilots distinct in time and id.
    std::vector<std::vector<std::uint8_t>> per_symbol_bits(symbols_per_frame);
    return build_rs_plan(id, profile, [&](int abs_symbol, int m) {
        auto& bits = per_symbol_bits[static_cast<std::size_t>(abs_symbol)];
        if (bits.empty()) {
            const std::uint32_t c_init =
                (static_cast<std::uint32_t>(abs_symbol + 1) * static_cast<std::uint32_t>(2 * id + 1) << 10) +
                static_cast<std::uint32_t>(2 * id + 1);
            bits = gold_sequence(c_init, 2 * per_symbol);
        }
        return qpsk_from_bits(bits[static_cast<std::size_t>(2 * m)], bits[static_cast<std::size_t>(2 * m + 1)]);
    });
}

RsPlan gen_urs(UssId uss_id, const BandwidthProfile& profile) {
    const std::vector<cplx> material = gen_uss(uss_id, AccessPointId(0));
    return build_rs_plan(uss_id.value(), profile, [&](int, int m) {
        return material[static_cast<std::size_t>(m % uss_length)];
    });
}

ControlRs gen_control_rs(int id_material) {
    if (id_material < 0) throw std::out_of_range("gen_control_rs: negative id");
    ControlRs rs;
    const std::uint32_t c_init =
        (static_cast<std::uint32_t>(2 * id_material + 1) << 10) ^ 0x2A5u;
    const auto bits = gold_sequence(c_init, 2 * control_rs_subcarriers);
    for (int m = 0; m < control_rs_subcarriers; ++m) {
        rs.subcarriers[static_cast<std::size_t>(m)] = 2 + 3 * m;
        rs.values[static_cast<std::size_t>(m)] =
            qpsk_from_bits(bits[static_cast<std::size_t>(2 * m)], bits[static_cast<std::size_t>(2 * m + 1)]);
    }
    return rs;
}

std::array<int, control_data_subcarriers> control_data_positions() {
    std::array<int, control_data_subcarriers> out{};
    int idx = 0;
    for (int k = 0; k < sync_block_subcarriers; ++k) {
        if (k % 3 != 2) out[static_cast<std::size_t>(idx++)] = k;
    }
    return out;
}

int sync_block_offset(const BandwidthProfile& profile) {
    return (profile.n_data_subcarriers - sync_block_subcarriers) / 2;
}

SyncPlacement sync_placement(Direction direction, const BandwidthProfile& profile) {
    SyncPlacement placement;
    placement.symbols = sync_symbols;
    const int block = sync_block_offset(profile);
    if (direction == Direction::downlink) {
        placement.first_subcarrier = block + (sync_block_subcarriers - dss_length) / 2;
        placement.length = dss_length;
    } else {
        placement.first_subcarrier = block;
        placement.length = uss_length;
    }
    return placement;
}

void dump_sequence(std::ostream& out, std::span<const cplx> values) {
    char line[64];
    for (const cplx& v : values) {
        std::snprintf(line, sizeof(line), "%.17g %.17g\n", v.real(), v.imag());
        out << line;
    }
}

}  // namespace haphy
