#pragma once

#include <array>
#include <iosfwd>

#include "haphy/constellation.hpp"
#include "haphy/numerology.hpp"

namespace haphy {

/// Cloud access point identity, 0..167.
class AccessPointId {
  public:
    static constexpr int max_value = 167;
    explicit AccessPointId(int value);
    int value() const { return value_; }
    friend bool operator==(const AccessPointId&, const AccessPointId&) = default;

  private:
    int value_;
};

/// Uplink synchronization signal identity, 0..7 (3 bits of the DCI).
class UssId {
  public:
    static constexpr int max_value = 7;
    explicit UssId(int value);
    int value() const { return value_; }
    friend bool operator==(const UssId&, const UssId&) = default;

  private:
    int value_;
};

inline constexpr int dss_length = 62;
inline constexpr int uss_length = 72;
inline constexpr int sync_block_subcarriers = 72;  // sync/control always live in a 72-wide block
inline constexpr int control_data_subcarriers = 48;
inline constexpr int control_rs_subcarriers = 24;
inline constexpr int rs_subcarrier_spacing = 6;

/// Downlink sync sequence: interleaved pair of cyclically shifted length-31
/// m-sequences, shifts m0 = id mod 31 and m1 = (m0 + id/31 + 1) mod 31,
/// values mapped to ±1.
std::vector<int> gen_dss(AccessPointId ap_id);

/// Uplink sync sequence: Zadoff-Chu of prime length 71 with root
/// 1 + ((ap*8 + uss) mod 70), cyclically extended to 72 entries.
std::vector<cplx> gen_uss(UssId uss_id, AccessPointId ap_id);

struct RsPilot {
    int symbol;      // absolute OFDM symbol 0..139
    int subcarrier;  // absolute data-subcarrier index
    cplx value;      // unit magnitude
};
using RsPlan = std::vector<RsPilot>;

/// Downlink reference signal: pilots on symbols 0 and 4 of every slot, every
/// 6th subcarrier, lattice shift ap mod 6 (symbol 0) and (ap+3) mod 6
/// (symbol 4); QPSK values from a Gold sequence seeded per (id, symbol).
/// Requires the 1.4 MHz profile.
RsPlan gen_drs(AccessPointId ap_id, const BandwidthProfile& profile);

/// Uplink reference signal: same lattice with shift uss mod 6 / (uss+3) mod 6,
/// values cycled from gen_uss(uss, ap=0).
RsPlan gen_urs(UssId uss_id, const BandwidthProfile& profile);

/// Control-channel reference signal inside the 72-wide control block:
/// 24 QPSK pilots on subcarriers k ≡ 2 (mod 3); the other 48 subcarriers
/// carry control symbols. Subcarrier indices here are relative to the block.
struct ControlRs {
    std::array<int, control_rs_subcarriers> subcarriers;
    std::array<cplx, control_rs_subcarriers> values;
};
ControlRs gen_control_rs(int id_material);

/// Relative subcarriers of the 48 control data positions (k ≢ 2 mod 3).
std::array<int, control_data_subcarriers> control_data_positions();

/// Where the sync sequence sits: absolute symbols {5, 75}; downlink centers
/// the 62 entries inside the 72-subcarrier band, uplink fills the centered
/// 72-block of the profile's data band.
struct SyncPlacement {
    std::array<int, 2> symbols;
    int first_subcarrier;
    int length;
};
SyncPlacement sync_placement(Direction direction, const BandwidthProfile& profile);

inline constexpr std::array<int, 2> sync_symbols{5, 75};
inline constexpr std::array<int, 2> control_symbols{6, 76};

/// First absolute subcarrier of the centered 72-wide sync/control block.
int sync_block_offset(const BandwidthProfile& profile);

/// Sequence fixture dump: one complex value per line, "re im".
void dump_sequence(std::ostream& out, std::span<const cplx> values);

/// LTE-style degree-31 Gold sequence (1600-step warmup), used for pilot
/// values. Exposed for conformance fixtures.
std::vector<std::uint8_t> gold_sequence(std::uint32_t c_init, int length);

}  // namespace haphy
