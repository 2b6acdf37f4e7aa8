#include <algorithm>
#include <string>

#include "palfm/index.hpp"

namespace palfm {
namespace {

class Checker {
  public:
    explicit Checker(VerifyReport& report) : report_(report) {}

    // Records the outcome of one check; returns whether it passed.
    bool record(const std::string& check, const std::string& failure) {
        if (failure.empty()) {
            report_.passed.push_back(check);
            return true;
        }
        report_.violations.push_back({check, failure});
        return false;
    }

    void skip(const std::string& check) { report_.skipped.push_back(check); }

  private:
    VerifyReport& report_;
};

std::string row_str(std::size_t r) { return "row " + std::to_string(r); }

// Lexicographic order on ssp encodings: INF above every finite value, the
// shorter string first when one is a prefix of the other.
bool encoding_le(const std::vector<PalLength>& a, const std::vector<PalLength>& b) {
    return !std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::string check_row_structure(const PalFmIndex& idx) {
    if (!idx.f(1).is_dollar()) {
        return "F[1] is " + to_string(idx.f(1)) + ", expected $";
    }
    std::size_t f_dollars = 0;
    std::size_t l_dollars = 0;
    for (std::size_t r = 1; r <= idx.rows(); ++r) {
        f_dollars += idx.f(r).is_dollar() ? 1 : 0;
        l_dollars += idx.l(r).is_dollar() ? 1 : 0;
    }
    if (f_dollars != 1 || l_dollars != 1) {
        return std::to_string(f_dollars) + " $ in F and " + std::to_string(l_dollars) + " in L, expected one each";
    }
    return {};
}

std::string check_histogram(const PalFmIndex& idx) {
    std::vector<long long> hist(idx.max_group() + 2, 0);
    for (std::size_t r = 1; r <= idx.rows(); ++r) {
        ++hist[idx.f(r).code(idx.max_group())];
        --hist[idx.l(r).code(idx.max_group())];
    }
    for (std::uint32_t c = 0; c < hist.size(); ++c) {
        if (hist[c] != 0) {
            return "symbol " + to_string(SymbolCode::from_code(c, idx.max_group())) + " occurs " +
                   std::to_string(hist[c]) + " more times in F than in L";
        }
    }
    return {};
}

std::string check_lf_permutation(const PalFmIndex& idx) {
    if (!idx.lf_complete()) {
        return "some L symbol has no matching F occurrence";
    }
    std::size_t row = 1;
    for (std::size_t step = 1; step <= idx.rows(); ++step) {
        row = idx.lf_value(row);
        if (row == 1 && step < idx.rows()) {
            return "LF returns to row 1 after " + std::to_string(step) + " of " + std::to_string(idx.rows()) +
                   " steps";
        }
    }
    return row == 1 ? std::string{} : "LF walk from row 1 does not close";
}

}  // namespace

bool VerifyReport::has(std::string_view check) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.check == check; });
}

VerifyReport verify(const PalFmIndex& idx, std::string_view text) {
    VerifyReport report;
    Checker checker(report);

    const bool rows_ok = checker.record("row-structure", check_row_structure(idx));
    const bool hist_ok = checker.record("histogram", check_histogram(idx));
    const bool lf_ok = checker.record("lf-permutation", check_lf_permutation(idx));
    const bool len_ok = checker.record(
        "text-length", idx.text_length() == text.size()
                           ? std::string{}
                           : "index covers " + std::to_string(idx.text_length()) + " symbols, text has " +
                                 std::to_string(text.size()));

    const std::size_t n = text.size();
    std::vector<std::uint32_t> sa;
    std::vector<std::size_t> def_lf;
    if (len_ok) {
        sa = pal_sorted_suffixes(text);
        std::vector<std::size_t> row_of(n + 2);
        for (std::size_t r = 1; r <= n + 1; ++r) {
            row_of[sa[r - 1]] = r;
        }
        def_lf.resize(n + 2);
        for (std::size_t r = 1; r <= n + 1; ++r) {
            def_lf[r] = sa[r - 1] == 1 ? 1 : row_of[sa[r - 1] - 1];
        }
    }

    if (len_ok) {
        std::string failure;
        std::vector<std::size_t> last(idx.max_group() + 2, 0);
        for (std::size_t r = 1; r <= idx.rows() && failure.empty(); ++r) {
            const std::uint32_t c = idx.l(r).code(idx.max_group());
            if (c == 0) {
                continue;
            }
            if (last[c] != 0 && def_lf[last[c]] >= def_lf[r]) {
                failure = row_str(last[c]) + " and " + row_str(r) + " share L = " + to_string(idx.l(r)) +
                          " but LF maps them to " + std::to_string(def_lf[last[c]]) + " and " +
                          std::to_string(def_lf[r]);
            }
            last[c] = r;
        }
        checker.record("non-crossing", failure);
    } else {
        checker.skip("non-crossing");
    }

    if (len_ok && hist_ok && rows_ok) {
        std::string failure;
        for (std::size_t r = 1; r <= idx.rows() && failure.empty(); ++r) {
            const std::size_t got = idx.lf(r);
            if (got != def_lf[r]) {
                failure = row_str(r) + ": LF formula gives " + std::to_string(got) + ", suffix order gives " +
                          std::to_string(def_lf[r]);
            }
        }
        checker.record("definitional-lf", failure);
    } else {
        checker.skip("definitional-lf");
    }

    if (len_ok) {
        std::string failure;
        auto pi_of = [&](std::size_t start) {
            return start > n ? SymbolCode::dollar() : pi(text.substr(start - 1));
        };
        for (std::size_t r = 1; r <= idx.rows() && failure.empty(); ++r) {
            const std::size_t s = sa[r - 1];
            const SymbolCode want_f = pi_of(s);
            const SymbolCode want_l = s == 1 ? SymbolCode::dollar() : pi_of(s - 1);
            if (idx.f(r) != want_f) {
                failure = row_str(r) + ": F is " + to_string(idx.f(r)) + ", expected " + to_string(want_f);
            } else if (idx.l(r) != want_l) {
                failure = row_str(r) + ": L is " + to_string(idx.l(r)) + ", expected " + to_string(want_l);
            }
        }
        checker.record("symbols", failure);
    } else {
        checker.skip("symbols");
    }

    if (len_ok && lf_ok) {
        std::string failure;
        const auto marks = idx.parts().sampled;
        for (std::size_t r = 1; r <= idx.rows() && failure.empty(); ++r) {
            const std::size_t s = sa[r - 1];
            const bool want_marked = (s - 1) % idx.delta() == 0;
            std::size_t got = 0;
            try {
                got = idx.sa_access(r);
            } catch (const std::exception& e) {
                failure = row_str(r) + ": " + e.what();
                break;
            }
            if (got != s) {
                failure = row_str(r) + ": sa_access gives " + std::to_string(got) + ", expected " + std::to_string(s);
            } else if (want_marked != marks[r - 1]) {
                failure = row_str(r) + ": sampling mark disagrees with text position " + std::to_string(s);
            }
        }
        checker.record("sampling", failure);
    } else {
        checker.skip("sampling");
    }

    if (len_ok && lf_ok) {
        std::string failure;
        std::vector<PalLength> prev;
        for (std::size_t r = 1; r <= idx.rows() && failure.empty(); ++r) {
            std::size_t s = 0;
            try {
                s = idx.sa_access(r);
            } catch (const std::exception& e) {
                failure = row_str(r) + ": " + e.what();
                break;
            }
            if (s < 1 || s > n + 1) {
                failure = row_str(r) + ": recovered suffix start " + std::to_string(s) + " out of range";
                break;
            }
            auto cur = ssp(text.substr(s - 1));
            if (r > 1 && !encoding_le(prev, cur)) {
                failure = row_str(r - 1) + " and " + row_str(r) + " are out of order";
            }
            prev = std::move(cur);
        }
        checker.record("sorted-order", failure);
    } else {
        checker.skip("sorted-order");
    }
    return report;
}

}  // namespace palfm
