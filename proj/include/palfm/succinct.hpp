#pragma once

// Query substructures of the index.  All positions are 1-based: rank(i)
// counts over [1..i], select returns a position in [1..size()].

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace palfm {

/// Static bit vector with constant-time rank and logarithmic select.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(const std::vector<bool>& bits);

    std::size_t size() const { return size_; }
    bool operator[](std::size_t pos) const;

    /// Ones (or zeros) in positions [1..i]; i may be 0.
    std::size_t rank1(std::size_t i) const;
    std::size_t rank0(std::size_t i) const { return i - rank1(i); }
    std::size_t ones() const { return ones_; }

    /// Position of the r-th one (zero); throws query_range_error when r is
    /// 0 or exceeds the count.
    std::size_t select1(std::size_t r) const;
    std::size_t select0(std::size_t r) const;

    /// Raw 64-bit words, position 1 in the least significant bit of word 0.
    std::span<const std::uint64_t> words() const { return words_; }

    std::size_t size_in_bits() const;

  private:
    static constexpr std::size_t kWordsPerBlock = 8;
    static constexpr std::size_t kBitsPerBlock = 64 * kWordsPerBlock;

    std::size_t rank1_prefix(std::size_t bits) const;  // ones among the first `bits` bits

    std::size_t size_ = 0;
    std::size_t ones_ = 0;
    std::vector<std::uint64_t> words_;
    std::vector<std::uint64_t> block_ranks_;  // ones before each 512-bit block
    std::vector<std::uint16_t> word_ranks_;   // ones before each word within its block
};

/// Integer sequence over [0..sigma) with rank, select and rangeCount, stored
/// as a wavelet matrix.  Query time is O(lg sigma).
class CodeSequence {
  public:
    CodeSequence() = default;
    CodeSequence(std::span<const std::uint32_t> codes, std::uint32_t sigma);

    std::size_t size() const { return size_; }
    std::uint32_t sigma() const { return sigma_; }

    std::uint32_t operator[](std::size_t pos) const;

    /// Occurrences of c in [1..i]; codes outside the alphabet count 0.
    std::size_t rank(std::size_t i, std::uint32_t c) const;

    /// Position of the r-th occurrence of c.
    std::size_t select(std::size_t r, std::uint32_t c) const;

    /// |{p in [i..j] : lo <= seq[p] <= hi}|; an empty range (i > j) gives 0.
    std::size_t range_count(std::size_t i, std::size_t j, std::uint32_t lo, std::uint32_t hi) const;

    std::size_t size_in_bits() const;

  private:
    // values < v among half-open rows [b, e) of the top level
    std::size_t count_less(std::size_t b, std::size_t e, std::uint64_t v) const;

    std::size_t size_ = 0;
    std::uint32_t sigma_ = 0;
    std::vector<BitVector> levels_;
    std::vector<std::size_t> zeros_;
};

/// Sparse-table range-maximum index; ties resolve to the leftmost position.
class RangeMaxIndex {
  public:
    RangeMaxIndex() = default;
    explicit RangeMaxIndex(std::span<const std::uint32_t> values);

    std::size_t size() const { return values_.size(); }

    /// Position of the maximum of values[i..j]; requires 1 <= i <= j <= size().
    std::size_t argmax(std::size_t i, std::size_t j) const;

    std::size_t size_in_bits() const;

  private:
    std::vector<std::uint32_t> values_;
    std::vector<std::vector<std::uint32_t>> table_;  // table_[k][x]: argmax of [x, x + 2^k), 0-based
};

}  // namespace palfm
