#pragma once

#include <cstdint>

namespace haphy {

/// Link direction. The downlink is fixed to the 1.4 MHz profile; the uplink
/// may use either bandwidth.
enum class Direction { downlink, uplink };

enum class Bandwidth { bw_1p4_mhz, bw_3_mhz };

/// Frame geometry constants for one bandwidth option.
///
/// A frame is 10 ms = 10 subframes; each subframe holds two 0.5 ms slots of
/// seven OFDM symbols. Symbols 0 and 7 of a subframe carry the long cyclic
/// prefix, the rest the short one, so a subframe fills exactly 1 ms:
///   14 * fft_size + 2 * cp_long + 12 * cp_short == sampling_rate / 1000
struct BandwidthProfile {
    double sampling_rate_hz;
    int fft_size;
    int n_data_subcarriers;
    int n_null_subcarriers;
    int cp_long;   // samples, symbols 0 and 7 of a subframe
    int cp_short;  // samples, all other symbols
};

inline constexpr int subframes_per_frame = 10;
inline constexpr int slots_per_subframe = 2;
inline constexpr int symbols_per_slot = 7;
inline constexpr int symbols_per_subframe = slots_per_subframe * symbols_per_slot;
inline constexpr int symbols_per_frame = subframes_per_frame * symbols_per_subframe;
inline constexpr double subcarrier_spacing_hz = 15e3;

const BandwidthProfile& profile_for(Bandwidth bw);

/// Cyclic prefix length of a symbol, indexed 0..13 within its subframe.
/// Throws std::out_of_range for indices outside 0..13.
int symbol_cp_length(const BandwidthProfile& profile, int symbol_in_subframe);

/// Total samples in one 10 ms frame (19200 at 1.4 MHz, 38400 at 3 MHz).
long frame_sample_count(const BandwidthProfile& profile);

/// Samples in one 1 ms subframe.
long subframe_sample_count(const BandwidthProfile& profile);

/// FFT bin carrying data subcarrier k. Data subcarriers are contiguous
/// around DC with the DC bin itself excluded; the remaining bins form the
/// guard band and stay empty. Throws std::out_of_range for bad k.
int subcarrier_to_fft_bin(const BandwidthProfile& profile, int k);

/// Position of one resource element inside a frame.
struct GridPosition {
    int subframe;    // 0..9
    int slot;        // 0..1
    int symbol;      // 0..6 within the slot
    int subcarrier;  // 0..n_data_subcarriers-1

    friend bool operator==(const GridPosition&, const GridPosition&) = default;
};

/// Absolute OFDM symbol index in 0..139.
int absolute_symbol(const GridPosition& pos);

/// Inverse of absolute_symbol; subcarrier is carried through.
GridPosition position_of(int abs_symbol, int subcarrier = 0);

/// Symbol index within its subframe (0..13) from the absolute index.
int symbol_in_subframe_of(int abs_symbol);

/// Sample offset of an OFDM symbol (start of its CP) from the frame start.
long symbol_sample_offset(const BandwidthProfile& profile, int abs_symbol);

}  // namespace haphy
