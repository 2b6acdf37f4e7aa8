// palfm: build and query palindrome-matching FM-indexes over byte texts.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "palfm/error.hpp"
#include "palfm/index.hpp"
#include "palfm/oracle.hpp"
#include "palfm/palcore.hpp"
#include "palfm/serialize.hpp"

namespace {

enum exit_code : int { ok = 0, usage = 1, io = 2, verification = 3 };

enum class output_format { plain, tsv };

struct Config {
    std::string text_path;
    std::string index_path;
    std::string pattern;
    std::string which;
    std::size_t delta = 32;
    bool strip_newlines = false;
    bool force_large = false;
    output_format format = output_format::plain;
    std::uint64_t seed = 20240611;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw palfm::io_error("cannot open " + path);
    }
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw palfm::io_error("failed reading " + path);
    }
    return data;
}

std::string strip(std::string s, bool newlines) {
    if (newlines) {
        std::erase_if(s, [](char c) { return c == '\n' || c == '\r'; });
    }
    return s;
}

std::string load_text(const Config& cfg) { return strip(read_file(cfg.text_path), cfg.strip_newlines); }

// "@path" reads the pattern from a file; "@@x" is the literal "@x".
std::string resolve_pattern(const Config& cfg) {
    if (cfg.pattern.starts_with("@@")) {
        return cfg.pattern.substr(1);
    }
    if (cfg.pattern.starts_with("@")) {
        return strip(read_file(cfg.pattern.substr(1)), cfg.strip_newlines);
    }
    return cfg.pattern;
}

void print_pair(const Config& cfg, const std::string& key, const std::string& value) {
    if (cfg.format == output_format::tsv) {
        std::cout << key << '\t' << value << '\n';
    } else {
        std::cout << key << ": " << value << '\n';
    }
}

std::string fixed(double v, int digits) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

int cmd_build(const Config& cfg, bool delta_given) {
    const std::string text = load_text(cfg);
    std::size_t delta = cfg.delta;
    const std::size_t max_delta = std::max<std::size_t>(text.size(), 1);
    if (!delta_given) {
        delta = std::min(delta, max_delta);
    }
    const auto t0 = std::chrono::steady_clock::now();
    palfm::BuildOptions options;
    options.force_large = cfg.force_large;
    const auto index = palfm::PalFmIndex::build(text, delta, options);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    palfm::save_index(index, cfg.index_path);

    const auto st = index.stats();
    print_pair(cfg, "n", std::to_string(st.n));
    print_pair(cfg, "K", std::to_string(st.max_group));
    print_pair(cfg, "delta", std::to_string(st.delta));
    print_pair(cfg, "build_seconds", fixed(secs, 3));
    print_pair(cfg, "bits_per_symbol", fixed(st.bits_per_symbol, 2));
    return ok;
}

int cmd_count(const Config& cfg) {
    const std::string pattern = resolve_pattern(cfg);
    const auto index = palfm::load_index(cfg.index_path);
    const std::size_t c = index.count(pattern);
    if (cfg.format == output_format::tsv) {
        std::cout << "count\t" << c << '\n';
    } else {
        std::cout << c << '\n';
    }
    return ok;
}

int cmd_locate(const Config& cfg) {
    const std::string pattern = resolve_pattern(cfg);
    const auto index = palfm::load_index(cfg.index_path);
    const auto hits = index.locate(pattern);
    for (std::size_t k = 0; k < hits.size(); ++k) {
        if (cfg.format == output_format::tsv) {
            std::cout << k + 1 << '\t' << hits[k] << '\n';
        } else {
            std::cout << hits[k] << '\n';
        }
    }
    return ok;
}

template <typename T>
void print_array(const Config& cfg, const std::vector<T>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (cfg.format == output_format::tsv) {
            std::cout << i + 1 << '\t';
        }
        if constexpr (std::is_same_v<T, std::uint32_t>) {
            std::cout << values[i] << '\n';
        } else {
            std::cout << palfm::to_string(values[i]) << '\n';
        }
    }
}

int cmd_encode(const Config& cfg) {
    const std::string text = load_text(cfg);
    if (cfg.which == "lpal") {
        print_array(cfg, palfm::lpal(text));
    } else if (cfg.which == "ssp") {
        print_array(cfg, palfm::ssp(text));
    } else if (cfg.which == "sspg") {
        print_array(cfg, palfm::sspg(text));
    } else {
        print_array(cfg, palfm::group_counts(text));
    }
    return ok;
}

int cmd_stats(const Config& cfg) {
    const auto st = palfm::load_index(cfg.index_path).stats();
    print_pair(cfg, "n", std::to_string(st.n));
    print_pair(cfg, "rows", std::to_string(st.rows));
    print_pair(cfg, "K", std::to_string(st.max_group));
    print_pair(cfg, "delta", std::to_string(st.delta));
    print_pair(cfg, "samples", std::to_string(st.samples));
    print_pair(cfg, "f_bits", std::to_string(st.f_bits));
    print_pair(cfg, "l_bits", std::to_string(st.l_bits));
    print_pair(cfg, "lf_bits", std::to_string(st.lf_bits));
    print_pair(cfg, "rmq_bits", std::to_string(st.rmq_bits));
    print_pair(cfg, "sampled_bits", std::to_string(st.sampled_bits));
    print_pair(cfg, "sample_value_bits", std::to_string(st.sample_value_bits));
    print_pair(cfg, "total_bits", std::to_string(st.total_bits));
    print_pair(cfg, "bits_per_symbol", fixed(st.bits_per_symbol, 2));
    return ok;
}

// Half substrings of the text, half strings over its alphabet.
std::vector<std::string> sample_patterns(const std::string& text, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::set<char> distinct(text.begin(), text.end());
    const std::string alphabet = distinct.empty() ? std::string("ab") : std::string(distinct.begin(), distinct.end());
    std::vector<std::string> out;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t max_len = std::max<std::size_t>(1, std::min<std::size_t>(20, text.size()));
        const std::size_t len = std::uniform_int_distribution<std::size_t>(1, max_len)(rng);
        if (k % 2 == 0 && len <= text.size()) {
            const std::size_t start = std::uniform_int_distribution<std::size_t>(0, text.size() - len)(rng);
            out.push_back(text.substr(start, len));
        } else {
            std::string p(len, ' ');
            for (char& c : p) {
                c = alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
            }
            out.push_back(std::move(p));
        }
    }
    return out;
}

int cmd_verify(const Config& cfg) {
    const std::string text = load_text(cfg);
    palfm::PalFmIndex index;
    try {
        index = palfm::load_index(cfg.index_path);
    } catch (const palfm::format_error& e) {
        std::cerr << "palfm: load failed (" << palfm::to_string(e.error_kind()) << "): " << e.what() << '\n';
        return verification;
    }

    const auto report = palfm::verify(index, text);
    for (const auto& name : report.passed) {
        std::cout << "ok\t" << name << '\n';
    }
    for (const auto& name : report.skipped) {
        std::cout << "skipped\t" << name << '\n';
    }
    for (const auto& v : report.violations) {
        std::cout << "FAIL\t" << v.check << '\t' << v.detail << '\n';
    }
    bool good = report.ok();

    if (good && text.size() <= palfm::oracle::kMaxOracleLength) {
        std::size_t mismatches = 0;
        const auto patterns = sample_patterns(text, 50, cfg.seed);
        for (const auto& p : patterns) {
            const auto want = palfm::oracle::naive_search(text, p);
            if (index.locate(p) != want || index.count(p) != want.size()) {
                if (mismatches++ == 0) {
                    std::cout << "FAIL\toracle-queries\tpattern \"" << p << "\" disagrees with naive search\n";
                }
            }
        }
        if (mismatches == 0) {
            std::cout << "ok\toracle-queries\t" << patterns.size() << " patterns\n";
        }
        good = mismatches == 0;
    }
    return good ? ok : verification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Palindrome pattern matching FM-index"};
    app.require_subcommand(1);
    Config cfg;
    const std::map<std::string, output_format> formats{{"plain", output_format::plain}, {"tsv", output_format::tsv}};

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format: plain or tsv")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto add_strip = [&](CLI::App* sub) {
        sub->add_flag("--strip-newlines", cfg.strip_newlines, "Drop \\n and \\r bytes from input files");
    };

    auto* build = app.add_subcommand("build", "Build an index over a text file");
    build->add_option("text", cfg.text_path, "Text file")->required();
    build->add_option("index", cfg.index_path, "Output index file")->required();
    auto* delta_opt = build->add_option("--delta", cfg.delta, "Suffix-array sampling rate")
                          ->check(CLI::PositiveNumber);
    build->add_flag("--force-large", cfg.force_large, "Lift the construction length limit");
    add_strip(build);
    add_format(build);

    auto* count = app.add_subcommand("count", "Count occurrences of a pattern");
    auto* locate = app.add_subcommand("locate", "List occurrence positions of a pattern");
    for (auto* sub : {count, locate}) {
        sub->add_option("index", cfg.index_path, "Index file")->required();
        sub->add_option("pattern", cfg.pattern, "Pattern, or @file")->required();
        add_strip(sub);
        add_format(sub);
    }

    auto* encode = app.add_subcommand("encode", "Print an encoding of a text file");
    encode->add_option("text", cfg.text_path, "Text file")->required();
    encode->add_option("which", cfg.which, "lpal, ssp, sspg or g")
        ->required()
        ->check(CLI::IsMember({"lpal", "ssp", "sspg", "g"}));
    add_strip(encode);
    add_format(encode);

    auto* stats = app.add_subcommand("stats", "Report index size");
    stats->add_option("index", cfg.index_path, "Index file")->required();
    add_format(stats);

    auto* verify = app.add_subcommand("verify", "Check an index against its text");
    verify->add_option("index", cfg.index_path, "Index file")->required();
    verify->add_option("text", cfg.text_path, "Text file")->required();
    verify->add_option("--seed", cfg.seed, "Seed for the random query patterns");
    add_strip(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? ok : usage;
    }

    try {
        if (*build) {
            return cmd_build(cfg, delta_opt->count() > 0);
        }
        if (*count) {
            return cmd_count(cfg);
        }
        if (*locate) {
            return cmd_locate(cfg);
        }
        if (*encode) {
            return cmd_encode(cfg);
        }
        if (*stats) {
            return cmd_stats(cfg);
        }
        return cmd_verify(cfg);
    } catch (const palfm::usage_error& e) {
        std::cerr << "palfm: " << e.what() << '\n';
        return usage;
    } catch (const palfm::build_limit_error& e) {
        std::cerr << "palfm: " << e.what() << '\n';
        return usage;
    } catch (const palfm::io_error& e) {
        std::cerr << "palfm: " << e.what() << '\n';
        return io;
    } catch (const palfm::format_error& e) {
        std::cerr << "palfm: cannot load index (" << palfm::to_string(e.error_kind()) << "): " << e.what() << '\n';
        return io;
    }
}
