#pragma once

// FM-index for palindrome pattern matching.
//
// Suffixes of the text (the empty one included) are sorted by their ssp
// encodings.  Row r of the index is the r-th suffix in that order; rows,
// text positions and occurrences are all 1-based.  F[r] / L[r] hold pi() of
// the row's suffix and of the suffix one position earlier.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "palfm/palcore.hpp"
#include "palfm/succinct.hpp"
#include "palfm/types.hpp"

namespace palfm {

/// Inclusive row range [b..e]; empty when b > e.
struct PalInterval {
    std::size_t b = 1;
    std::size_t e = 0;

    bool empty() const { return b > e; }
    std::size_t width() const { return empty() ? 0 : e - b + 1; }

    friend bool operator==(const PalInterval&, const PalInterval&) = default;
};

struct BuildOptions {
    /// Longest text the explicit-sort construction accepts.
    std::size_t max_length = 50'000;
    /// Lift max_length.
    bool force_large = false;
};

/// Raw persisted contents of an index.  Everything else is derived on load.
struct IndexParts {
    std::uint64_t n = 0;
    std::uint64_t delta = 1;
    std::uint32_t max_group = 0;
    std::vector<std::uint32_t> l_codes;  ///< one per row, dense codes (see SymbolCode::code)
    std::vector<std::uint32_t> f_codes;
    std::vector<bool> sampled;           ///< one per row
    std::vector<std::uint64_t> samples;  ///< suffix-array values of the sampled rows, row order
};

struct IndexStats {
    std::size_t n = 0;
    std::size_t rows = 0;
    std::uint32_t max_group = 0;
    std::size_t delta = 0;
    std::size_t samples = 0;
    std::size_t f_bits = 0;
    std::size_t l_bits = 0;
    std::size_t lf_bits = 0;
    std::size_t rmq_bits = 0;
    std::size_t sampled_bits = 0;
    std::size_t sample_value_bits = 0;
    std::size_t total_bits = 0;
    double bits_per_symbol = 0.0;
};

/// Rows sorted by the ssp encodings of their suffixes: result[r-1] is the
/// 1-based start of the r-th suffix (n + 1 for the empty suffix).
std::vector<std::uint32_t> pal_sorted_suffixes(std::string_view text);

class PalFmIndex {
  public:
    enum class validation { strict, unchecked };

    PalFmIndex() = default;

    /// Requires 1 <= delta <= max(n, 1).
    static PalFmIndex build(std::string_view text, std::size_t delta, const BuildOptions& options = {});

    /// Reassembles an index from persisted parts.  Strict validation throws
    /// format_error(malformed) on inconsistent parts; unchecked accepts any
    /// shape-consistent parts (for diagnostics and mutation tests), and rows
    /// whose LF cannot be evaluated get LF value 0.
    static PalFmIndex from_parts(IndexParts parts, validation mode = validation::strict);

    IndexParts parts() const;

    std::size_t text_length() const { return n_; }
    std::size_t rows() const { return n_ + 1; }
    std::size_t delta() const { return delta_; }
    std::uint32_t max_group() const { return max_group_; }

    SymbolCode f(std::size_t row) const;
    SymbolCode l(std::size_t row) const;

    /// LF mapping evaluated as select_F(rank_L(row, L[row]), L[row]); 1 for
    /// the DOLLAR row.
    std::size_t lf(std::size_t row) const;

    /// Stored LF value of a row (the array the range-max index is built on).
    std::size_t lf_value(std::size_t row) const { return lf_values_.at(row - 1); }

    /// False when some row's LF could not be evaluated (unchecked parts only).
    bool lf_complete() const { return lf_valid_; }

    /// One backward-search step from the w-interval to the cw-interval given
    /// pi(cw) and the number g of character-keyed prefix-pal-groups of w.
    PalInterval backward_step(PalInterval iv, SymbolCode pi_cw, std::size_t groups) const;

    /// Rows whose suffixes start with a substring pal-matching the pattern.
    PalInterval find(std::string_view pattern) const;
    PalInterval find(const PatternProfile& profile) const;

    std::size_t count(std::string_view pattern) const;
    std::vector<std::size_t> locate(std::string_view pattern) const;

    /// Suffix-array value of a row from the sampled values and LF walks.
    std::size_t sa_access(std::size_t row) const;

    IndexStats stats() const;

  private:
    void check_row(std::size_t row) const;

    std::size_t n_ = 0;
    std::size_t delta_ = 1;
    std::uint32_t max_group_ = 0;
    CodeSequence f_;
    CodeSequence l_;
    std::vector<std::uint32_t> lf_values_;
    RangeMaxIndex lf_max_;
    BitVector sampled_;
    std::vector<std::uint64_t> samples_;
    bool lf_valid_ = true;
};

/// Outcome of PalFmIndex consistency checks against the original text.
struct VerifyReport {
    struct Violation {
        std::string check;
        std::string detail;
    };
    std::vector<Violation> violations;
    std::vector<std::string> passed;
    std::vector<std::string> skipped;  ///< checks whose prerequisites failed

    bool ok() const { return violations.empty(); }
    bool has(std::string_view check) const;
};

/// Runs every structural check; each failing check reports its first
/// witness.  Checks against the text are skipped when the lengths differ.  Check names: "row-structure", "histogram", "lf-permutation",
/// "text-length", "non-crossing", "definitional-lf", "symbols",
/// "sampling", "sorted-order".
VerifyReport verify(const PalFmIndex& index, std::string_view text);

}  // namespace palfm
