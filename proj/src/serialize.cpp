#include "palfm/serialize.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include <zlib.h>

#include "palfm/error.hpp"

namespace palfm {
namespace {

enum section_tag : std::uint32_t { tag_l = 1, tag_f = 2, tag_sampled = 3, tag_samples = 4 };

constexpr std::size_t kHeaderSize = 8 + 4 + 4 + 8 + 8 + 4;
constexpr std::size_t kSectionHeaderSize = 4 + 8;
constexpr std::size_t kChecksumSize = 4;

std::uint32_t crc32_of(std::span<const std::uint8_t> bytes) {
    uLong crc = crc32(0L, Z_NULL, 0);
    // zlib takes uInt lengths
    std::size_t done = 0;
    while (done < bytes.size()) {
        const auto chunk = static_cast<uInt>(std::min<std::size_t>(bytes.size() - done, 1U << 30));
        crc = crc32(crc, bytes.data() + done, chunk);
        done += chunk;
    }
    return static_cast<std::uint32_t>(crc);
}

class Writer {
  public:
    template <typename T>
    void put(T value) {
        for (std::size_t k = 0; k < sizeof(T); ++k) {
            out_.push_back(static_cast<std::uint8_t>(static_cast<std::uint64_t>(value) >> (8 * k)));
        }
    }

    void section(std::uint32_t tag, std::span<const std::uint8_t> payload) {
        put<std::uint32_t>(tag);
        put<std::uint64_t>(payload.size());
        out_.insert(out_.end(), payload.begin(), payload.end());
    }

    std::vector<std::uint8_t>& bytes() { return out_; }

  private:
    std::vector<std::uint8_t> out_;
};

class Reader {
  public:
    explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    template <typename T>
    T get(const char* field) {
        need(sizeof(T), field);
        std::uint64_t v = 0;
        for (std::size_t k = 0; k < sizeof(T); ++k) {
            v |= std::uint64_t{bytes_[pos_ + k]} << (8 * k);
        }
        pos_ += sizeof(T);
        return static_cast<T>(v);
    }

    std::span<const std::uint8_t> take(std::uint64_t len, const char* field) {
        need(len, field);
        auto s = bytes_.subspan(pos_, static_cast<std::size_t>(len));
        pos_ += static_cast<std::size_t>(len);
        return s;
    }

    std::size_t position() const { return pos_; }

  private:
    void need(std::uint64_t len, const char* field) const {
        if (len > bytes_.size() - pos_) {
            throw format_error(format_error::kind::truncated,
                               std::string("index image truncated while reading ") + field);
        }
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

[[noreturn]] void malformed(const std::string& what) { throw format_error(format_error::kind::malformed, what); }

}  // namespace

std::vector<std::uint8_t> serialize(const PalFmIndex& index) {
    const IndexParts p = index.parts();
    if (p.max_group + 1 > 255) {
        throw build_limit_error("group id " + std::to_string(p.max_group) + " does not fit one-byte codes");
    }
    const std::size_t rows = p.n + 1;

    Writer w;
    w.bytes().insert(w.bytes().end(), std::begin(kIndexMagic), std::end(kIndexMagic));
    w.put<std::uint32_t>(kIndexVersion);
    w.put<std::uint32_t>(0);
    w.put<std::uint64_t>(p.n);
    w.put<std::uint64_t>(p.delta);
    w.put<std::uint32_t>(p.max_group);

    std::vector<std::uint8_t> buf(p.l_codes.begin(), p.l_codes.end());
    w.section(tag_l, buf);
    buf.assign(p.f_codes.begin(), p.f_codes.end());
    w.section(tag_f, buf);

    buf.assign((rows + 7) / 8, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        if (p.sampled[r]) {
            buf[r / 8] |= static_cast<std::uint8_t>(1U << (r % 8));
        }
    }
    w.section(tag_sampled, buf);

    buf.clear();
    for (std::uint64_t s : p.samples) {
        for (std::size_t k = 0; k < 8; ++k) {
            buf.push_back(static_cast<std::uint8_t>(s >> (8 * k)));
        }
    }
    w.section(tag_samples, buf);

    w.put<std::uint32_t>(crc32_of(w.bytes()));
    return std::move(w.bytes());
}

PalFmIndex deserialize(std::span<const std::uint8_t> image) {
    const std::size_t magic_seen = std::min(image.size(), sizeof kIndexMagic);
    if (magic_seen > 0 && std::memcmp(image.data(), kIndexMagic, magic_seen) != 0) {
        throw format_error(format_error::kind::bad_magic, "not a palfm index image");
    }
    if (image.size() < kHeaderSize + kChecksumSize) {
        throw format_error(format_error::kind::truncated, "index image shorter than its header");
    }

    Reader rd(image.first(image.size() - kChecksumSize));
    rd.take(sizeof kIndexMagic, "magic");
    const auto version = rd.get<std::uint32_t>("version");
    if (version != kIndexVersion) {
        throw format_error(format_error::kind::version_mismatch,
                           "index format version " + std::to_string(version) + ", expected " +
                               std::to_string(kIndexVersion));
    }
    const auto flags = rd.get<std::uint32_t>("flags");
    IndexParts p;
    p.n = rd.get<std::uint64_t>("n");
    p.delta = rd.get<std::uint64_t>("delta");
    p.max_group = rd.get<std::uint32_t>("K");

    std::span<const std::uint8_t> payload[4];
    for (std::uint32_t want = tag_l; want <= tag_samples; ++want) {
        const auto tag = rd.get<std::uint32_t>("section tag");
        const auto len = rd.get<std::uint64_t>("section length");
        payload[want - 1] = rd.take(len, "section payload");
        if (tag != want) {
            malformed("expected section " + std::to_string(want) + ", found tag " + std::to_string(tag));
        }
    }
    const std::size_t body = rd.position();
    if (body != image.size() - kChecksumSize) {
        malformed("trailing bytes after the last section");
    }

    Reader tail(image.subspan(body));
    const auto stored = tail.get<std::uint32_t>("checksum");
    if (stored != crc32_of(image.first(body))) {
        throw format_error(format_error::kind::checksum_mismatch, "index image checksum mismatch");
    }

    if (flags != 0) {
        malformed("unsupported flags " + std::to_string(flags));
    }
    if (p.n >= std::numeric_limits<std::uint32_t>::max() - 1) {
        malformed("text length out of range");
    }
    const std::size_t rows = p.n + 1;
    if (payload[0].size() != rows || payload[1].size() != rows) {
        malformed("code sections must hold one byte per row");
    }
    if (payload[2].size() != (rows + 7) / 8) {
        malformed("sampling section has the wrong length");
    }
    if (payload[3].size() % 8 != 0) {
        malformed("sample section is not a whole number of u64 values");
    }
    p.l_codes.assign(payload[0].begin(), payload[0].end());
    p.f_codes.assign(payload[1].begin(), payload[1].end());
    p.sampled.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        p.sampled[r] = (payload[2][r / 8] >> (r % 8)) & 1U;
    }
    if (rows % 8 != 0 && (payload[2].back() >> (rows % 8)) != 0) {
        malformed("padding bits of the sampling section are set");
    }
    Reader samples(payload[3]);
    for (std::size_t k = 0; k < payload[3].size() / 8; ++k) {
        p.samples.push_back(samples.get<std::uint64_t>("sample"));
    }
    return PalFmIndex::from_parts(std::move(p));
}

void save_index(const PalFmIndex& index, const std::filesystem::path& path) {
    const auto bytes = serialize(index);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw io_error("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out.flush()) {
        throw io_error("failed writing " + path.string());
    }
}

PalFmIndex load_index(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw io_error("failed reading " + path.string());
    }
    return deserialize(bytes);
}

}  // namespace palfm
