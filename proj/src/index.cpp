#include "palfm/index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "palfm/error.hpp"

namespace palfm {
namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
constexpr std::size_t kInsertionSortCutoff = 16;

// Encoding of the suffix starting at `start`, read at offset `depth`:
// 0 once the suffix is exhausted ($), otherwise its ssp value.  A palindrome
// ending at p belongs to the suffix only if it starts inside it, and the
// shortest one ending at p is the text-wide ssp value, so a value that does
// not fit turns into INF.
class SuffixKeys {
  public:
    explicit SuffixKeys(std::string_view text) : n_(text.size()) {
        const auto lengths = ssp(text);
        ssp_.reserve(n_);
        for (PalLength v : lengths) {
            ssp_.push_back(v.is_inf() ? kInf : v.value());
        }
    }

    std::uint32_t operator()(std::uint32_t start, std::size_t depth) const {
        const std::size_t p = start + depth;
        if (p > n_) {
            return 0;
        }
        const std::uint32_t v = ssp_[p - 1];
        return v != kInf && v <= depth + 1 ? v : kInf;
    }

    bool less(std::uint32_t a, std::uint32_t b, std::size_t depth) const {
        for (;; ++depth) {
            const std::uint32_t ka = (*this)(a, depth);
            const std::uint32_t kb = (*this)(b, depth);
            if (ka != kb) {
                return ka < kb;
            }
            if (ka == 0) {
                return false;
            }
        }
    }

  private:
    std::size_t n_;
    std::vector<std::uint32_t> ssp_;
};

// Multikey quicksort over the suffix encodings.
void sort_suffixes(std::vector<std::uint32_t>& sa, const SuffixKeys& keys) {
    struct Range {
        std::size_t lo;
        std::size_t hi;
        std::size_t depth;
    };
    std::vector<Range> stack{{0, sa.size(), 0}};
    while (!stack.empty()) {
        const Range r = stack.back();
        stack.pop_back();
        if (r.hi - r.lo < 2) {
            continue;
        }
        if (r.hi - r.lo <= kInsertionSortCutoff) {
            for (std::size_t i = r.lo + 1; i < r.hi; ++i) {
                for (std::size_t j = i; j > r.lo && keys.less(sa[j], sa[j - 1], r.depth); --j) {
                    std::swap(sa[j], sa[j - 1]);
                }
            }
            continue;
        }
        const std::uint32_t a = keys(sa[r.lo], r.depth);
        const std::uint32_t b = keys(sa[r.lo + (r.hi - r.lo) / 2], r.depth);
        const std::uint32_t c = keys(sa[r.hi - 1], r.depth);
        const std::uint32_t pivot = std::max(std::min(a, b), std::min(std::max(a, b), c));

        std::size_t lt = r.lo;
        std::size_t i = r.lo;
        std::size_t gt = r.hi;
        while (i < gt) {
            const std::uint32_t k = keys(sa[i], r.depth);
            if (k < pivot) {
                std::swap(sa[lt++], sa[i++]);
            } else if (k > pivot) {
                std::swap(sa[i], sa[--gt]);
            } else {
                ++i;
            }
        }
        stack.push_back({r.lo, lt, r.depth});
        stack.push_back({gt, r.hi, r.depth});
        if (pivot != 0) {
            stack.push_back({lt, gt, r.depth + 1});
        }
    }
}

[[noreturn]] void malformed(const std::string& what) { throw format_error(format_error::kind::malformed, what); }

}  // namespace

std::vector<std::uint32_t> pal_sorted_suffixes(std::string_view text) {
    if (text.size() >= std::numeric_limits<std::uint32_t>::max()) {
        throw build_limit_error("text too long for 32-bit suffix positions");
    }
    const SuffixKeys keys(text);
    std::vector<std::uint32_t> sa(text.size() + 1);
    std::iota(sa.begin(), sa.end(), 1U);
    sort_suffixes(sa, keys);
    return sa;
}

PalFmIndex PalFmIndex::build(std::string_view text, std::size_t delta, const BuildOptions& options) {
    const std::size_t n = text.size();
    if (delta < 1 || delta > std::max<std::size_t>(n, 1)) {
        throw usage_error("delta must lie in [1.." + std::to_string(std::max<std::size_t>(n, 1)) + "], got " +
                          std::to_string(delta));
    }
    if (n > options.max_length && !options.force_large) {
        throw build_limit_error("text of " + std::to_string(n) + " bytes exceeds the construction limit of " +
                                std::to_string(options.max_length) + " bytes; pass --force-large to override");
    }

    const auto sa = pal_sorted_suffixes(text);

    // pi(T[i..]) is sspg of reverse(T) at position n - i + 1
    const std::string rev(text.rbegin(), text.rend());
    const auto ids = sspg(rev);
    std::uint32_t max_group = 0;
    for (SymbolCode c : ids) {
        if (c.is_group()) {
            max_group = std::max(max_group, c.group_id());
        }
    }
    auto pi_code = [&](std::size_t start) { return ids[n - start].code(max_group); };

    IndexParts parts;
    parts.n = n;
    parts.delta = delta;
    parts.max_group = max_group;
    parts.f_codes.resize(n + 1);
    parts.l_codes.resize(n + 1);
    parts.sampled.resize(n + 1);
    for (std::size_t r = 0; r <= n; ++r) {
        const std::uint32_t s = sa[r];
        parts.f_codes[r] = r == 0 ? 0 : pi_code(s);
        parts.l_codes[r] = s == 1 ? 0 : pi_code(s - 1);
        parts.sampled[r] = (s - 1) % delta == 0;
        if (parts.sampled[r]) {
            parts.samples.push_back(s);
        }
    }
    PalFmIndex index = from_parts(std::move(parts));

    // the rank/select LF has to coincide with the suffix-array definition
    std::vector<std::uint32_t> row_of(n + 2);
    for (std::size_t r = 0; r <= n; ++r) {
        row_of[sa[r]] = static_cast<std::uint32_t>(r + 1);
    }
    for (std::size_t r = 0; r <= n; ++r) {
        const std::size_t expected = sa[r] == 1 ? 1 : row_of[sa[r] - 1];
        if (index.lf_values_[r] != expected) {
            throw std::logic_error("LF mapping disagrees with the suffix order at row " + std::to_string(r + 1));
        }
    }
    return index;
}

PalFmIndex PalFmIndex::from_parts(IndexParts parts, validation mode) {
    const std::size_t rows = parts.n + 1;
    if (parts.l_codes.size() != rows || parts.f_codes.size() != rows || parts.sampled.size() != rows) {
        malformed("sequence lengths do not match n + 1 = " + std::to_string(rows));
    }
    if (parts.max_group >= std::numeric_limits<std::uint32_t>::max() - 1) {
        malformed("group alphabet too large");
    }
    const std::uint32_t sigma = parts.max_group + 2;
    for (std::size_t r = 0; r < rows; ++r) {
        if (parts.l_codes[r] >= sigma || parts.f_codes[r] >= sigma) {
            malformed("code outside alphabet at row " + std::to_string(r + 1));
        }
    }
    if (mode == validation::strict) {
        if (parts.delta < 1 || parts.delta > std::max<std::uint64_t>(parts.n, 1)) {
            malformed("delta out of range");
        }
        if (parts.f_codes[0] != 0 || std::count(parts.f_codes.begin(), parts.f_codes.end(), 0U) != 1) {
            malformed("F must hold exactly one $, at row 1");
        }
        if (std::count(parts.l_codes.begin(), parts.l_codes.end(), 0U) != 1) {
            malformed("L must hold exactly one $");
        }
        std::vector<std::size_t> hist(sigma, 0);
        for (std::size_t r = 0; r < rows; ++r) {
            ++hist[parts.f_codes[r]];
            --hist[parts.l_codes[r]];
        }
        if (std::any_of(hist.begin(), hist.end(), [](std::size_t h) { return h != 0; })) {
            malformed("F and L histograms differ");
        }
        const auto marked = static_cast<std::size_t>(std::count(parts.sampled.begin(), parts.sampled.end(), true));
        if (marked != parts.samples.size()) {
            malformed("sample count does not match the marked rows");
        }
        for (std::uint64_t s : parts.samples) {
            if (s < 1 || s > rows) {
                malformed("sample value out of range");
            }
        }
    }

    PalFmIndex index;
    index.n_ = parts.n;
    index.delta_ = parts.delta;
    index.max_group_ = parts.max_group;
    index.f_ = CodeSequence(parts.f_codes, sigma);
    index.l_ = CodeSequence(parts.l_codes, sigma);
    index.sampled_ = BitVector(parts.sampled);
    index.samples_ = std::move(parts.samples);

    // bulk rank/select: the r-th occurrence of c in L maps to the r-th in F
    std::vector<std::vector<std::uint32_t>> f_rows(sigma);
    for (std::size_t r = 0; r < rows; ++r) {
        f_rows[parts.f_codes[r]].push_back(static_cast<std::uint32_t>(r + 1));
    }
    std::vector<std::size_t> seen(sigma, 0);
    index.lf_values_.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::uint32_t c = parts.l_codes[r];
        if (c == 0) {
            index.lf_values_[r] = 1;
        } else if (seen[c] < f_rows[c].size()) {
            index.lf_values_[r] = f_rows[c][seen[c]++];
        } else {
            index.lf_values_[r] = 0;
            index.lf_valid_ = false;
        }
    }
    index.lf_max_ = RangeMaxIndex(index.lf_values_);

    if (mode == validation::strict) {
        // LF must walk the text backwards through every row exactly once
        std::size_t row = 1;
        for (std::size_t step = 0; step < rows; ++step) {
            row = index.lf_values_[row - 1];
            if (row == 1 && step + 1 < rows) {
                malformed("LF mapping is not a single cycle");
            }
        }
        if (row != 1) {
            malformed("LF mapping is not a single cycle");
        }
        for (std::size_t r = 1; r <= rows; ++r) {
            if (index.sampled_[r] && (index.samples_[index.sampled_.rank1(r) - 1] - 1) % index.delta_ != 0) {
                malformed("sampled suffix-array value off the sampling grid");
            }
        }
    }
    return index;
}

IndexParts PalFmIndex::parts() const {
    IndexParts p;
    p.n = n_;
    p.delta = delta_;
    p.max_group = max_group_;
    p.l_codes.resize(rows());
    p.f_codes.resize(rows());
    p.sampled.resize(rows());
    for (std::size_t r = 1; r <= rows(); ++r) {
        p.l_codes[r - 1] = l_[r];
        p.f_codes[r - 1] = f_[r];
        p.sampled[r - 1] = sampled_[r];
    }
    p.samples = samples_;
    return p;
}

void PalFmIndex::check_row(std::size_t row) const {
    if (row == 0 || row > rows()) {
        throw query_range_error("row " + std::to_string(row) + " outside [1.." + std::to_string(rows()) + "]");
    }
}

SymbolCode PalFmIndex::f(std::size_t row) const {
    check_row(row);
    return SymbolCode::from_code(f_[row], max_group_);
}

SymbolCode PalFmIndex::l(std::size_t row) const {
    check_row(row);
    return SymbolCode::from_code(l_[row], max_group_);
}

std::size_t PalFmIndex::lf(std::size_t row) const {
    check_row(row);
    const std::uint32_t c = l_[row];
    if (c == 0) {
        return 1;
    }
    return f_.select(l_.rank(row, c), c);
}

PalInterval PalFmIndex::backward_step(PalInterval iv, SymbolCode pi_cw, std::size_t groups) const {
    if (iv.empty()) {
        throw usage_error("backward_step on an empty interval");
    }
    if (iv.b < 1 || iv.e > rows()) {
        throw usage_error("interval outside the index rows");
    }
    if (pi_cw.is_dollar()) {
        throw usage_error("backward_step with pi = $");
    }
    if (pi_cw.is_group()) {
        const std::uint32_t k = pi_cw.group_id();
        if (k > max_group_) {
            return {};
        }
        const std::size_t before = l_.rank(iv.b - 1, k);
        const std::size_t upto = l_.rank(iv.e, k);
        if (upto == before) {
            return {};
        }
        return {f_.select(before + 1, k), f_.select(upto, k)};
    }
    // pi(cw) = INF: keep the rows whose L symbol exceeds g; their LF images
    // are the largest among the interval's and stay contiguous
    const std::uint32_t inf_code = max_group_ + 1;
    const std::uint32_t lo = static_cast<std::uint32_t>(std::min<std::size_t>(groups + 1, inf_code));
    const std::size_t cnt = l_.range_count(iv.b, iv.e, lo, inf_code);
    if (cnt == 0) {
        return {};
    }
    const std::size_t e = lf_values_[lf_max_.argmax(iv.b, iv.e) - 1];
    return {e - cnt + 1, e};
}

PalInterval PalFmIndex::find(const PatternProfile& profile) const {
    PalInterval iv{1, rows()};
    for (std::size_t i = profile.size(); i >= 1; --i) {
        iv = backward_step(iv, profile.pi[i - 1], profile.groups[i - 1]);
        if (iv.empty()) {
            break;
        }
    }
    return iv;
}

PalInterval PalFmIndex::find(std::string_view pattern) const { return find(pattern_preprocess(pattern)); }

std::size_t PalFmIndex::count(std::string_view pattern) const {
    if (pattern.empty()) {
        throw usage_error("empty pattern");
    }
    if (pattern.size() > n_) {
        return 0;
    }
    return find(pattern).width();
}

std::vector<std::size_t> PalFmIndex::locate(std::string_view pattern) const {
    if (pattern.empty()) {
        throw usage_error("empty pattern");
    }
    std::vector<std::size_t> out;
    if (pattern.size() > n_) {
        return out;
    }
    const PalInterval iv = find(pattern);
    out.reserve(iv.width());
    for (std::size_t r = iv.b; r <= iv.e; ++r) {
        out.push_back(sa_access(r));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t PalFmIndex::sa_access(std::size_t row) const {
    check_row(row);
    std::size_t steps = 0;
    while (!sampled_[row]) {
        row = lf_values_[row - 1];
        if (row == 0 || ++steps > rows()) {
            throw std::runtime_error("suffix-array walk did not reach a sampled row");
        }
    }
    return samples_.at(sampled_.rank1(row) - 1) + steps;
}

IndexStats PalFmIndex::stats() const {
    IndexStats s;
    s.n = n_;
    s.rows = rows();
    s.max_group = max_group_;
    s.delta = delta_;
    s.samples = samples_.size();
    s.f_bits = f_.size_in_bits();
    s.l_bits = l_.size_in_bits();
    s.lf_bits = 32 * lf_values_.size();
    s.rmq_bits = lf_max_.size_in_bits();
    s.sampled_bits = sampled_.size_in_bits();
    s.sample_value_bits = 64 * samples_.size();
    s.total_bits = s.f_bits + s.l_bits + s.lf_bits + s.rmq_bits + s.sampled_bits + s.sample_value_bits;
    s.bits_per_symbol = static_cast<double>(s.total_bits) / static_cast<double>(std::max<std::size_t>(n_, 1));
    return s;
}

}  // namespace palfm
