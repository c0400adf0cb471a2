#pragma once

#include <iosfwd>

#include "haphy/control.hpp"
#include "haphy/sequences.hpp"

namespace haphy {

enum class CellTag : std::uint8_t { null_cell, sync, control_rs, control, rs, shared };

struct GridIds {
    AccessPointId ap;
    UssId uss;
};

/// Placement of everything in one frame, derived only from direction,
/// bandwidth and the identities. Shared cells are ordered symbol-major,
/// subcarrier ascending, which fixes the shared-channel fill order.
struct GridLayout {
    Direction direction;
    Bandwidth bandwidth;
    SyncPlacement sync;
    std::vector<cplx> sync_values;            // DSS mapped to ±1, or USS
    std::array<int, 2> control_syms;          // absolute symbols {6, 76}
    std::vector<int> control_rs_sc;           // absolute subcarriers, 24
    std::vector<cplx> control_rs_values;      // matching pilots
    std::vector<int> control_data_sc;         // absolute subcarriers, 48
    RsPlan rs;                                // DRS or URS
    std::vector<std::pair<int, int>> shared;  // (symbol, subcarrier)

    static GridLayout make(Direction direction, Bandwidth bandwidth, const GridIds& ids);

    long shared_cell_count() const { return static_cast<long>(shared.size()); }
    long shared_bit_capacity(ModScheme scheme) const;
    /// Information bits one frame can carry at the given shared-channel rate.
    long shared_info_capacity(ModScheme scheme, CodeRate rate) const;
};

/// 140 x n_data_subcarriers complex grid for one 10 ms frame, with one
/// occupancy tag per cell.
struct ResourceGrid {
    Direction direction = Direction::downlink;
    Bandwidth bandwidth = Bandwidth::bw_1p4_mhz;
    int n_subcarriers = 0;
    std::vector<cplx> cells;          // symbol-major
    std::vector<CellTag> tags;

    cplx& at(int symbol, int subcarrier) {
        return cells[static_cast<std::size_t>(symbol) * static_cast<std::size_t>(n_subcarriers) +
                     static_cast<std::size_t>(subcarrier)];
    }
    const cplx& at(int symbol, int subcarrier) const {
        return cells[static_cast<std::size_t>(symbol) * static_cast<std::size_t>(n_subcarriers) +
                     static_cast<std::size_t>(subcarrier)];
    }
    CellTag tag(int symbol, int subcarrier) const {
        return tags[static_cast<std::size_t>(symbol) * static_cast<std::size_t>(n_subcarriers) +
                    static_cast<std::size_t>(subcarrier)];
    }
};

/// Builds the full frame grid: sync at symbols {5, 75}, control plus its RS
/// at {6, 76}, reference-signal pilots, and every remaining data-band cell
/// filled with shared-channel symbols mapped from shared_bits. Throws if
/// shared_bits does not match the layout capacity, or on a downlink 3 MHz
/// request.
ResourceGrid build_grid(const GridLayout& layout, const BitBlock& control_info25,
                        const BitBlock& shared_bits, ModScheme scheme);

/// Per-tag contents of a grid, extracted in deterministic symbol-major order.
struct DemappedGrid {
    std::vector<cplx> sync_values;
    std::array<std::vector<cplx>, 2> control_symbols;  // one per control symbol copy
    std::array<std::vector<cplx>, 2> control_rs;
    std::vector<cplx> rs_observations;  // in RS-plan order
    std::vector<cplx> shared_symbols;
};
DemappedGrid demap_grid(const ResourceGrid& grid, const GridLayout& layout);

/// Conformance dump: header line, then one line per cell "sym sc tag re im".
void dump_grid(std::ostream& out, const ResourceGrid& grid, const GridIds& ids);

const char* cell_tag_name(CellTag tag);

}  // namespace haphy
