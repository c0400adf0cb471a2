#include "haphy/numerology.hpp"

#include <stdexcept>

namespace haphy {

namespace {

constexpr BandwidthProfile profile_1p4{1.92e6, 128, 72, 56, 10, 9};
constexpr BandwidthProfile profile_3{3.84e6, 256, 180, 76, 20, 18};

}  // namespace

const BandwidthProfile& profile_for(Bandwidth bw) {
    switch (bw) {
        case Bandwidth::bw_1p4_mhz: return profile_1p4;
        case Bandwidth::bw_3_mhz: return profile_3;
    }
    throw std::invalid_argument("profile_for: unknown bandwidth");
}

int symbol_cp_length(const BandwidthProfile& profile, int symbol_in_subframe) {
    if (symbol_in_subframe < 0 || symbol_in_subframe >= symbols_per_subframe) {
        throw std::out_of_range("symbol_cp_length: symbol index outside 0..13");
    }
    return (symbol_in_subframe == 0 || symbol_in_subframe == 7) ? profile.cp_long
                                                                : profile.cp_short;
}

long subframe_sample_count(const BandwidthProfile& profile) {
    long total = 0;
    for (int s = 0; s < symbols_per_subframe; ++s) {
        total += profile.fft_size + symbol_cp_length(profile, s);
    }
    return total;
}

long frame_sample_count(const BandwidthProfile& profile) {
    return subframes_per_frame * subframe_sample_count(profile);
}

int subcarrier_to_fft_bin(const BandwidthProfile& profile, int k) {
    const int n = profile.n_data_subcarriers;
    if (k < 0 || k >= n) {
        throw std::out_of_range("subcarrier_to_fft_bin: subcarrier outside data band");
    }
    const int half = n / 2;
    // Lower half sits on the negative-frequency bins, upper half starts at
    // bin 1 so the DC bin stays null.
    if (k < half) return profile.fft_size - half + k;
    return k - half + 1;
}

int absolute_symbol(const GridPosition& pos) {
    if (pos.subframe < 0 || pos.subframe >= subframes_per_frame || pos.slot < 0 ||
        pos.slot >= slots_per_subframe || pos.symbol < 0 || pos.symbol >= symbols_per_slot) {
        throw std::out_of_range("absolute_symbol: position out of range");
    }
    return symbols_per_subframe * pos.subframe + symbols_per_slot * pos.slot + pos.symbol;
}

GridPosition position_of(int abs_symbol, int subcarrier) {
    if (abs_symbol < 0 || abs_symbol >= symbols_per_frame) {
        throw std::out_of_range("position_of: symbol index outside 0..139");
    }
    GridPosition pos;
    pos.subframe = abs_symbol / symbols_per_subframe;
    const int within = abs_symbol % symbols_per_subframe;
    pos.slot = within / symbols_per_slot;
    pos.symbol = within % symbols_per_slot;
    pos.subcarrier = subcarrier;
    return pos;
}

int symbol_in_subframe_of(int abs_symbol) {
    if (abs_symbol < 0 || abs_symbol >= symbols_per_frame) {
        throw std::out_of_range("symbol_in_subframe_of: symbol index outside 0..139");
    }
    return abs_symbol % symbols_per_subframe;
}

long symbol_sample_offset(const BandwidthProfile& profile, int abs_symbol) {
    if (abs_symbol < 0 || abs_symbol >= symbols_per_frame) {
        throw std::out_of_range("symbol_sample_offset: symbol index outside 0..139");
    }
    const long per_subframe = subframe_sample_count(profile);
    long offset = (abs_symbol / symbols_per_subframe) * per_subframe;
    for (int s = 0; s < abs_symbol % symbols_per_subframe; ++s) {
        offset += profile.fft_size + symbol_cp_length(profile, s);
    }
    return offset;
}

}  // namespace haphy
