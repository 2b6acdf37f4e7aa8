#pragma once

// Binary index image.  Little-endian throughout:
//
//   "PALFMIX1" | version u32 | flags u32 | n u64 | delta u64 | K u32
//   sections [tag u32][length u64][payload], tags 1..4 in order:
//     1 L codes, one byte per row     2 F codes, same encoding
//     3 sampling bits, row 1 = LSB    4 sampled values, u64 each
//   CRC32 u32 over everything before it
//
// Codes are 0 for $, 1..K for group ids and K+1 for INF.

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "palfm/index.hpp"

namespace palfm {

inline constexpr char kIndexMagic[8] = {'P', 'A', 'L', 'F', 'M', 'I', 'X', '1'};
inline constexpr std::uint32_t kIndexVersion = 1;

/// Throws build_limit_error when K + 1 does not fit a byte.
std::vector<std::uint8_t> serialize(const PalFmIndex& index);

/// Throws format_error; the kind tells bad magic, version mismatch,
/// truncation, checksum failure and malformed contents apart.
PalFmIndex deserialize(std::span<const std::uint8_t> image);

void save_index(const PalFmIndex& index, const std::filesystem::path& path);
PalFmIndex load_index(const std::filesystem::path& path);

}  // namespace palfm
