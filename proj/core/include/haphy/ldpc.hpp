#pragma once

#include <iosfwd>

#include "haphy/bits.hpp"

namespace haphy {

/// Shared-channel code rate advertised in the control information. Rate 1/2
/// is realized by puncturing the rate-1/3 mother code.
enum class CodeRate { r13, r12 };

/// Rate-1/3 quasi-cyclic LDPC code.
///
/// The base graph is fixed: 32 check rows by 48 variable columns, of which
/// 16 are systematic. Info columns carry three edges each, placed by a
/// progressive-edge-growth pass seeded with 0x5EED; the parity columns form
/// a weight-3 anchor column plus an accumulator chain, which keeps the
/// parity part triangular so encoding is a forward substitution and the
/// parity-check matrix has full row rank by construction. The lift size is
/// k/16, so the reference k=432 code uses a 27-fold lift. Circulant shifts
/// for the info edges come from the same seeded generator reduced mod z;
/// parity edges use shift 0.
class LdpcCode {
  public:
    struct Edge {
        int row;    // base check row
        int col;    // base variable column
        int shift;  // circulant shift, already reduced mod z
    };

    int z() const { return z_; }
    int k() const { return k_; }
    int n() const { return n_; }
    int n_checks() const { return n_checks_; }

    const std::vector<Edge>& base_edges() const { return edges_; }

    /// Lifted check-node adjacency in CSR form; vars of check c are
    /// check_vars[check_offsets[c] .. check_offsets[c+1]).
    const std::vector<int>& check_offsets() const { return check_offsets_; }
    const std::vector<int>& check_vars() const { return check_vars_; }

    static constexpr int base_info_cols = 16;
    static constexpr int base_check_rows = 32;
    static constexpr int base_cols = 48;
    static constexpr int info_col_degree = 3;
    static constexpr std::uint64_t construction_seed = 0x5EED;

  private:
    friend LdpcCode ldpc_build(int target_info_bits);
    int z_ = 0, k_ = 0, n_ = 0, n_checks_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> check_offsets_;
    std::vector<int> check_vars_;
};

/// Builds the code with k = 16 * ceil(target_info_bits / 16) >= target.
/// Deterministic: equal targets give bit-identical matrices. Throws on
/// target <= 0.
LdpcCode ldpc_build(int target_info_bits);

/// Systematic encoding; info bits appear verbatim as the first k codeword
/// bits. Throws on length mismatch.
BitBlock ldpc_encode(const LdpcCode& code, const BitBlock& info);

struct LdpcDecodeResult {
    BitBlock info;
    bool converged;  // true iff the syndrome is zero at exit
    int iters_used;
};

inline constexpr int ldpc_default_max_iters = 25;
inline constexpr double ldpc_min_sum_scale = 0.75;

/// Normalized min-sum decoding with early exit on a zero syndrome. A zero
/// syndrome is only trusted when no posterior is exactly zero, so an
/// all-erasure input never reports convergence. Throws unless llrs has
/// exactly n entries (fill punctured positions with zeros first).
LdpcDecodeResult ldpc_decode(const LdpcCode& code, const LlrBlock& llrs,
                             int max_iters = ldpc_default_max_iters);

/// Rate-1/2 puncturing keeps the systematic bits and every even-indexed
/// parity block; alternating whole blocks guarantees each check keeps at
/// most one punctured neighbor, so belief propagation can always fill the
/// gaps. Output length is 2k.
BitBlock puncture_to_rate_half(const LdpcCode& code, const BitBlock& codeword);

/// Inverse of the puncturing map on soft values: re-inserts zero LLRs at the
/// punctured positions. Input length 2k, output length n.
LlrBlock depuncture_from_rate_half(const LdpcCode& code, const LlrBlock& llrs);

/// Transmitted bits per codeword at the given rate (n or 2k).
long coded_block_size(const LdpcCode& code, CodeRate rate);

/// Text sparse-matrix export, one line per check: "check_index: col col ...".
void export_parity_check(const LdpcCode& code, std::ostream& out);

/// Parses the export format back into per-check column lists.
std::vector<std::vector<int>> import_parity_check(std::istream& in);

}  // namespace haphy
