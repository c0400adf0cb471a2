#include "haphy/grid.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace haphy {

GridLayout GridLayout::make(Direction direction, Bandwidth bandwidth, const GridIds& ids) {
    if (direction == Direction::downlink && bandwidth != Bandwidth::bw_1p4_mhz) {
        throw std::invalid_argument("GridLayout: downlink is fixed to 1.4 MHz");
    }
    const BandwidthProfile& profile = profile_for(bandwidth);
    GridLayout layout;
    layout.direction = direction;
    layout.bandwidth = bandwidth;
    layout.sync = sync_placement(direction, profile);
    if (direction == Direction::downlink) {
        for (int v : gen_dss(ids.ap)) layout.sync_values.emplace_back(v, 0.0);
        layout.rs = gen_drs(ids.ap, profile);
    } else {
        layout.sync_values = gen_uss(ids.uss, ids.ap);
        layout.rs = gen_urs(ids.uss, profile);
    }

    layout.control_syms = control_symbols;
    const int block = sync_block_offset(profile);
    const int rs_id = direction == Direction::downlink ? ids.ap.value() : ids.uss.value();
    const ControlRs control_rs = gen_control_rs(rs_id);
    for (int m = 0; m < control_rs_subcarriers; ++m) {
        layout.control_rs_sc.push_back(block + control_rs.subcarriers[static_cast<std::size_t>(m)]);
        layout.control_rs_values.push_back(control_rs.values[static_cast<std::size_t>(m)]);
    }
    for (int k : control_data_positions()) layout.control_data_sc.push_back(block + k);

    // Everything not claimed above carries shared-channel symbols.
    std::vector<CellTag> tags(static_cast<std::size_t>(symbols_per_frame) *
                                  static_cast<std::size_t>(profile.n_data_subcarriers),
                              CellTag::shared);
    auto claim = [&](int symbol, int sc, CellTag tag) {
        tags[static_cast<std::size_t>(symbol) * static_cast<std::size_t>(profile.n_data_subcarriers) +
             static_cast<std::size_t>(sc)] = tag;
    };
    for (int symbol : layout.sync.symbols) {
        if (direction == Direction::downlink) {
            // The sync block spans 72 subcarriers but the sequence only 62;
            // the edges stay empty.
            const int block_start = sync_block_offset(profile);
            for (int k = 0; k < sync_block_subcarriers; ++k) {
                claim(symbol, block_start + k, CellTag::null_cell);
            }
        }
        for (int i = 0; i < layout.sync.length; ++i) {
            claim(symbol, layout.sync.first_subcarrier + i, CellTag::sync);
        }
    }
    for (int symbol : layout.control_syms) {
        for (int sc : layout.control_rs_sc) claim(symbol, sc, CellTag::control_rs);
        for (int sc : layout.control_data_sc) claim(symbol, sc, CellTag::control);
    }
    for (const RsPilot& pilot : layout.rs) claim(pilot.symbol, pilot.subcarrier, CellTag::rs);

    for (int symbol = 0; symbol < symbols_per_frame; ++symbol) {
        for (int sc = 0; sc < profile.n_data_subcarriers; ++sc) {
            if (tags[static_cast<std::size_t>(symbol) * static_cast<std::size_t>(profile.n_data_subcarriers) +
                     static_cast<std::size_t>(sc)] == CellTag::shared) {
                layout.shared.emplace_back(symbol, sc);
            }
        }
    }
    return layout;
}

long GridLayout::shared_bit_capacity(ModScheme scheme) const {
    return shared_cell_count() * bits_per_symbol(scheme);
}

long GridLayout::shared_info_capacity(ModScheme scheme, CodeRate rate) const {
    const long coded = shared_bit_capacity(scheme);
    return rate == CodeRate::r13 ? coded / 3 : coded / 2;
}

ResourceGrid build_grid(const GridLayout& layout, const BitBlock& control_info25,
                        const BitBlock& shared_bits, ModScheme scheme) {
    const BandwidthProfile& profile = profile_for(layout.bandwidth);
    if (static_cast<long>(shared_bits.size()) != layout.shared_bit_capacity(scheme)) {
        throw std::invalid_argument("build_grid: shared bits do not match capacity");
    }

    ResourceGrid grid;
    grid.direction = layout.direction;
    grid.bandwidth = layout.bandwidth;
    grid.n_subcarriers = profile.n_data_subcarriers;
    const std::size_t n_cells = static_cast<std::size_t>(symbols_per_frame) *
                                static_cast<std::size_t>(profile.n_data_subcarriers);
    grid.cells.assign(n_cells, cplx{0.0, 0.0});
    grid.tags.assign(n_cells, CellTag::shared);

    auto set = [&](int symbol, int sc, CellTag tag, cplx value) {
        const std::size_t idx = static_cast<std::size_t>(symbol) *
                                    static_cast<std::size_t>(profile.n_data_subcarriers) +
                                static_cast<std::size_t>(sc);
        grid.cells[idx] = value;
        grid.tags[idx] = tag;
    };

    for (int symbol : layout.sync.symbols) {
        if (layout.direction == Direction::downlink) {
            const int block_start = sync_block_offset(profile);
            for (int k = 0; k < sync_block_subcarriers; ++k) {
                set(symbol, block_start + k, CellTag::null_cell, {0.0, 0.0});
            }
        }
        for (int i = 0; i < layout.sync.length; ++i) {
            set(symbol, layout.sync.first_subcarrier + i, CellTag::sync,
                layout.sync_values[static_cast<std::size_t>(i)]);
        }
    }

    const std::vector<cplx> control = build_control_symbols(control_info25);
    for (int symbol : layout.control_syms) {
        for (std::size_t m = 0; m < layout.control_rs_sc.size(); ++m) {
            set(symbol, layout.control_rs_sc[m], CellTag::control_rs, layout.control_rs_values[m]);
        }
        for (std::size_t i = 0; i < layout.control_data_sc.size(); ++i) {
            set(symbol, layout.control_data_sc[i], CellTag::control, control[i]);
        }
    }

    for (const RsPilot& pilot : layout.rs) {
        set(pilot.symbol, pilot.subcarrier, CellTag::rs, pilot.value);
    }

    const std::vector<cplx> shared = map_symbols(shared_bits, scheme);
    if (shared.size() != layout.shared.size()) {
        throw std::logic_error("build_grid: shared symbol count mismatch");
    }
    for (std::size_t i = 0; i < shared.size(); ++i) {
        set(layout.shared[i].first, layout.shared[i].second, CellTag::shared, shared[i]);
    }
    return grid;
}

DemappedGrid demap_grid(const ResourceGrid& grid, const GridLayout& layout) {
    DemappedGrid out;
    for (int symbol : layout.sync.symbols) {
        for (int i = 0; i < layout.sync.length; ++i) {
            out.sync_values.push_back(grid.at(symbol, layout.sync.first_subcarrier + i));
        }
    }
    for (int copy = 0; copy < 2; ++copy) {
        const int symbol = layout.control_syms[static_cast<std::size_t>(copy)];
        for (int sc : layout.control_data_sc) {
            out.control_symbols[static_cast<std::size_t>(copy)].push_back(grid.at(symbol, sc));
        }
        for (int sc : layout.control_rs_sc) {
            out.control_rs[static_cast<std::size_t>(copy)].push_back(grid.at(symbol, sc));
        }
    }
    out.rs_observations.reserve(layout.rs.size());
    for (const RsPilot& pilot : layout.rs) {
        out.rs_observations.push_back(grid.at(pilot.symbol, pilot.subcarrier));
    }
    out.shared_symbols.reserve(layout.shared.size());
    for (const auto& [symbol, sc] : layout.shared) {
        out.shared_symbols.push_back(grid.at(symbol, sc));
    }
    return out;
}

const char* cell_tag_name(CellTag tag) {
    switch (tag) {
        case CellTag::null_cell: return "Null";
        case CellTag::sync: return "Sync";
        case CellTag::control_rs: return "ControlRs";
        case CellTag::control: return "Control";
        case CellTag::rs: return "Rs";
        case CellTag::shared: return "Shared";
    }
    return "?";
}

void dump_grid(std::ostream& out, const ResourceGrid& grid, const GridIds& ids) {
    out << "direction=" << (grid.direction == Direction::downlink ? "dl" : "ul")
        << " bandwidth=" << (grid.bandwidth == Bandwidth::bw_1p4_mhz ? "1.4" : "3")
        << " ap_id=" << ids.ap.value() << " uss_id=" << ids.uss.value() << '\n';
    char line[96];
    for (int symbol = 0; symbol < symbols_per_frame; ++symbol) {
        for (int sc = 0; sc < grid.n_subcarriers; ++sc) {
            const cplx v = grid.at(symbol, sc);
            std::snprintf(line, sizeof(line), "%d %d %s %.17g %.17g\n", symbol, sc,
                          cell_tag_name(grid.tag(symbol, sc)), v.real(), v.imag());
            out << line;
        }
    }
}

}  // namespace haphy
