#include "palfm/succinct.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "palfm/error.hpp"

namespace palfm {
namespace {

// 0-based index of the r-th (1-based) set bit of x.
unsigned select_in_word(std::uint64_t x, std::size_t r) {
    for (std::size_t k = 1; k < r; ++k) {
        x &= x - 1;
    }
    return static_cast<unsigned>(std::countr_zero(x));
}

[[noreturn]] void out_of_range(const char* what, std::size_t value, std::size_t bound) {
    throw query_range_error(std::string(what) + ": " + std::to_string(value) + " outside [1.." +
                            std::to_string(bound) + "]");
}

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(const std::vector<bool>& bits) : size_(bits.size()) {
    // one spare word so rank at the very end never reads past the array
    words_.assign(size_ / 64 + 1, 0);
    for (std::size_t i = 0; i < size_; ++i) {
        if (bits[i]) {
            words_[i / 64] |= std::uint64_t{1} << (i % 64);
        }
    }
    const std::size_t blocks = (words_.size() + kWordsPerBlock - 1) / kWordsPerBlock;
    block_ranks_.assign(blocks + 1, 0);
    word_ranks_.assign(words_.size(), 0);
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (w % kWordsPerBlock == 0) {
            block_ranks_[w / kWordsPerBlock] = total;
        }
        word_ranks_[w] = static_cast<std::uint16_t>(total - block_ranks_[w / kWordsPerBlock]);
        total += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    block_ranks_[blocks] = total;
    ones_ = total;
}

bool BitVector::operator[](std::size_t pos) const {
    if (pos == 0 || pos > size_) {
        out_of_range("BitVector access", pos, size_);
    }
    const std::size_t i = pos - 1;
    return (words_[i / 64] >> (i % 64)) & 1U;
}

std::size_t BitVector::rank1_prefix(std::size_t bits) const {
    const std::size_t w = bits / 64;
    const std::size_t off = bits % 64;
    std::size_t r = block_ranks_[w / kWordsPerBlock] + word_ranks_[w];
    if (off != 0) {
        r += static_cast<std::size_t>(std::popcount(words_[w] & ((std::uint64_t{1} << off) - 1)));
    }
    return r;
}

std::size_t BitVector::rank1(std::size_t i) const {
    if (i > size_) {
        out_of_range("BitVector rank", i, size_);
    }
    return rank1_prefix(i);
}

std::size_t BitVector::select1(std::size_t r) const {
    if (r == 0 || r > ones_) {
        out_of_range("BitVector select1 rank", r, ones_);
    }
    // last block whose preceding count is below r
    const auto it = std::lower_bound(block_ranks_.begin(), block_ranks_.end(), r);
    std::size_t block = static_cast<std::size_t>(it - block_ranks_.begin()) - 1;
    std::size_t remaining = r - block_ranks_[block];
    for (std::size_t w = block * kWordsPerBlock;; ++w) {
        const auto c = static_cast<std::size_t>(std::popcount(words_[w]));
        if (remaining <= c) {
            return w * 64 + select_in_word(words_[w], remaining) + 1;
        }
        remaining -= c;
    }
}

std::size_t BitVector::select0(std::size_t r) const {
    const std::size_t zeros = size_ - ones_;
    if (r == 0 || r > zeros) {
        out_of_range("BitVector select0 rank", r, zeros);
    }
    std::size_t lo = 0;
    std::size_t hi = block_ranks_.size() - 1;
    // largest block b with zeros-before(b) < r
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (mid * kBitsPerBlock - block_ranks_[mid] < r) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    std::size_t remaining = r - (lo * kBitsPerBlock - block_ranks_[lo]);
    for (std::size_t w = lo * kWordsPerBlock;; ++w) {
        const std::uint64_t inv = ~words_[w];
        const auto c = static_cast<std::size_t>(std::popcount(inv));
        if (remaining <= c) {
            return w * 64 + select_in_word(inv, remaining) + 1;
        }
        remaining -= c;
    }
}

std::size_t BitVector::size_in_bits() const {
    return 64 * words_.size() + 64 * block_ranks_.size() + 16 * word_ranks_.size();
}

// ---------------------------------------------------------------------------
// CodeSequence

CodeSequence::CodeSequence(std::span<const std::uint32_t> codes, std::uint32_t sigma)
    : size_(codes.size()), sigma_(sigma) {
    if (sigma == 0) {
        throw usage_error("CodeSequence needs a non-empty alphabet");
    }
    const int depth = std::max(1, static_cast<int>(std::bit_width(sigma - 1)));
    std::vector<std::uint32_t> cur(codes.begin(), codes.end());
    for (std::uint32_t c : cur) {
        if (c >= sigma) {
            throw usage_error("code " + std::to_string(c) + " outside alphabet of size " + std::to_string(sigma));
        }
    }
    std::vector<std::uint32_t> next(cur.size());
    for (int l = 0; l < depth; ++l) {
        const int shift = depth - 1 - l;
        std::vector<bool> bits(cur.size());
        std::size_t zeros = 0;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            bits[i] = (cur[i] >> shift) & 1U;
            zeros += bits[i] ? 0 : 1;
        }
        levels_.emplace_back(bits);
        zeros_.push_back(zeros);
        std::size_t z = 0;
        std::size_t o = zeros;
        for (std::size_t i = 0; i < cur.size(); ++i) {
            (bits[i] ? next[o++] : next[z++]) = cur[i];
        }
        cur.swap(next);
    }
}

std::uint32_t CodeSequence::operator[](std::size_t pos) const {
    if (pos == 0 || pos > size_) {
        out_of_range("CodeSequence access", pos, size_);
    }
    std::size_t p = pos - 1;
    std::uint32_t value = 0;
    for (std::size_t l = 0; l < levels_.size(); ++l) {
        const bool bit = levels_[l][p + 1];
        value = (value << 1) | (bit ? 1U : 0U);
        p = bit ? zeros_[l] + levels_[l].rank1(p) : levels_[l].rank0(p);
    }
    return value;
}

std::size_t CodeSequence::rank(std::size_t i, std::uint32_t c) const {
    if (i > size_) {
        out_of_range("CodeSequence rank", i, size_);
    }
    if (c >= sigma_) {
        return 0;
    }
    std::size_t b = 0;
    std::size_t e = i;
    const std::size_t depth = levels_.size();
    for (std::size_t l = 0; l < depth; ++l) {
        if ((c >> (depth - 1 - l)) & 1U) {
            b = zeros_[l] + levels_[l].rank1(b);
            e = zeros_[l] + levels_[l].rank1(e);
        } else {
            b = levels_[l].rank0(b);
            e = levels_[l].rank0(e);
        }
    }
    return e - b;
}

std::size_t CodeSequence::select(std::size_t r, std::uint32_t c) const {
    const std::size_t total = rank(size_, c);
    if (r == 0 || r > total) {
        out_of_range("CodeSequence select rank", r, total);
    }
    const std::size_t depth = levels_.size();
    std::size_t start = 0;
    for (std::size_t l = 0; l < depth; ++l) {
        start = ((c >> (depth - 1 - l)) & 1U) ? zeros_[l] + levels_[l].rank1(start) : levels_[l].rank0(start);
    }
    std::size_t p = start + r;
    for (std::size_t l = depth; l-- > 0;) {
        p = ((c >> (depth - 1 - l)) & 1U) ? levels_[l].select1(p - zeros_[l]) : levels_[l].select0(p);
    }
    return p;
}

std::size_t CodeSequence::count_less(std::size_t b, std::size_t e, std::uint64_t v) const {
    const std::size_t depth = levels_.size();
    if (v >= (std::uint64_t{1} << depth)) {
        return e - b;
    }
    std::size_t result = 0;
    for (std::size_t l = 0; l < depth; ++l) {
        if ((v >> (depth - 1 - l)) & 1U) {
            result += levels_[l].rank0(e) - levels_[l].rank0(b);
            b = zeros_[l] + levels_[l].rank1(b);
            e = zeros_[l] + levels_[l].rank1(e);
        } else {
            b = levels_[l].rank0(b);
            e = levels_[l].rank0(e);
        }
    }
    return result;
}

std::size_t CodeSequence::range_count(std::size_t i, std::size_t j, std::uint32_t lo, std::uint32_t hi) const {
    if (i > j || lo > hi) {
        return 0;
    }
    if (i == 0) {
        out_of_range("CodeSequence range_count start", i, size_);
    }
    if (j > size_) {
        out_of_range("CodeSequence range_count end", j, size_);
    }
    const std::uint64_t upper = std::uint64_t{hi} + 1;
    return count_less(i - 1, j, upper) - count_less(i - 1, j, lo);
}

std::size_t CodeSequence::size_in_bits() const {
    std::size_t bits = 64 * zeros_.size();
    for (const auto& level : levels_) {
        bits += level.size_in_bits();
    }
    return bits;
}

// ---------------------------------------------------------------------------
// RangeMaxIndex

RangeMaxIndex::RangeMaxIndex(std::span<const std::uint32_t> values) : values_(values.begin(), values.end()) {
    const std::size_t n = values_.size();
    if (n == 0) {
        return;
    }
    table_.emplace_back(n);
    for (std::size_t x = 0; x < n; ++x) {
        table_[0][x] = static_cast<std::uint32_t>(x);
    }
    for (std::size_t half = 1; 2 * half <= n; half *= 2) {
        const auto& prev = table_.back();
        std::vector<std::uint32_t> cur(n - 2 * half + 1);
        for (std::size_t x = 0; x < cur.size(); ++x) {
            const std::uint32_t a = prev[x];
            const std::uint32_t b = prev[x + half];
            cur[x] = values_[a] >= values_[b] ? a : b;
        }
        table_.push_back(std::move(cur));
    }
}

std::size_t RangeMaxIndex::argmax(std::size_t i, std::size_t j) const {
    if (i == 0 || i > j || j > values_.size()) {
        throw query_range_error("RangeMaxIndex: invalid range [" + std::to_string(i) + ".." + std::to_string(j) +
                                "] over " + std::to_string(values_.size()) + " values");
    }
    const std::size_t x = i - 1;
    const std::size_t width = j - i + 1;
    const auto k = static_cast<std::size_t>(std::bit_width(width) - 1);
    const std::uint32_t a = table_[k][x];
    const std::uint32_t b = table_[k][x + width - (std::size_t{1} << k)];
    return (values_[a] >= values_[b] ? a : b) + 1;
}

std::size_t RangeMaxIndex::size_in_bits() const {
    std::size_t bits = 32 * values_.size();
    for (const auto& row : table_) {
        bits += 32 * row.size();
    }
    return bits;
}

}  // namespace palfm
