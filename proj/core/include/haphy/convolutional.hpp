#pragma once

#include "haphy/bits.hpp"

namespace haphy {

// Rate-1/2 constraint-length-3 code with generators (7, 5) octal. The
// encoder starts in the all-zero state; the control chain appends 15 zero
// tail bits so it also ends there.
inline constexpr int conv_constraint_length = 3;
inline constexpr int conv_tail_bits = 15;
inline constexpr int control_coded_bits = 96;

/// Encode input bits; output holds the interleaved pair (c0, c1) per input
/// bit, so it is twice as long. Throws on empty input.
BitBlock conv_encode(const BitBlock& input);

struct ViterbiResult {
    BitBlock bits;
    double metric;  // accumulated path metric of the surviving path
};

/// Maximum-likelihood sequence decoding over the 4-state trellis, forced to
/// terminate in the all-zero state (the tail bits guarantee it on encode).
/// Takes one LLR per coded bit; throws unless the length is even and > 0.
ViterbiResult viterbi_decode(const LlrBlock& llrs);

}  // namespace haphy
