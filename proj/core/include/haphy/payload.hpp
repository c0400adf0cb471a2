#pragma once

#include <span>
#include <string_view>

#include "haphy/bits.hpp"

namespace haphy {

/// IEEE-754 single-precision bit pattern per sample, MSB first, concatenated.
BitBlock re2bin(std::span<const float> samples);

/// Exact inverse; throws unless the length divides by 32.
std::vector<float> bin2re(const BitBlock& bits);

struct Key128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    friend bool operator==(const Key128&, const Key128&) = default;
};

/// Parses 32 hex characters into a key. Throws on malformed input.
Key128 key_from_hex(std::string_view hex);
std::string key_to_hex(const Key128& key);

/// Keystream XOR: applying twice with the same key restores the input. The
/// keystream comes from a counter-mode pseudorandom generator seeded by the
/// key; the construction is a stand-in cipher that fixes the pipeline
/// position of encryption, not a vetted primitive.
BitBlock cipher_apply(const Key128& key, const BitBlock& stream);

inline constexpr int max_frames_per_transport_block = 16;

struct FrameMeta {
    std::uint8_t frames_in_tb;  // frames in this transport block, minus one
    bool end_of_payload;
};

struct Segmentation {
    std::vector<BitBlock> frame_info;  // zero-padded to capacity
    std::vector<FrameMeta> meta;
};

/// Splits the payload into ceil(len/capacity) per-frame info blocks, zero
/// padding the last one. end_of_payload marks only the final frame; frames
/// group into transport blocks of at most 16. Throws on empty payload or
/// non-positive capacity.
Segmentation segment_transport_block(const BitBlock& payload_bits, long per_frame_info_capacity);

}  // namespace haphy
