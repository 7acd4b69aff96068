#include "edgekeep/pnm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

namespace edgekeep {

namespace {

bool is_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

std::string kind_name(PnmErrorKind kind) {
    switch (kind) {
        case PnmErrorKind::MalformedHeader:
            return "malformed-header";
        case PnmErrorKind::TruncatedPayload:
            return "truncated-payload";
        case PnmErrorKind::UnsupportedMaxval:
            return "unsupported-maxval";
    }
    return "pnm-error";
}

class HeaderReader {
public:
    explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::size_t offset() const { return pos_; }
    void skip_to(std::size_t pos) { pos_ = pos; }

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (is_space(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    unsigned long read_number(const char* field) {
        skip_space_and_comments();
        const std::size_t start = pos_;
        unsigned long value = 0;
        while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
            value = value * 10 + (bytes_[pos_] - '0');
            if (value > std::numeric_limits<int>::max()) {
                throw PnmError(PnmErrorKind::MalformedHeader, start, std::string(field) + " out of range");
            }
            ++pos_;
        }
        if (pos_ == start) {
            throw PnmError(PnmErrorKind::MalformedHeader, start, std::string("expected ") + field);
        }
        return value;
    }

    void expect_single_space() {
        if (pos_ >= bytes_.size() || !is_space(bytes_[pos_])) {
            throw PnmError(PnmErrorKind::MalformedHeader, pos_, "expected whitespace before payload");
        }
        ++pos_;
    }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

PnmError::PnmError(PnmErrorKind kind, std::size_t offset, const std::string& what)
    : std::runtime_error(kind_name(kind) + " at byte " + std::to_string(offset) + ": " + what),
      kind_(kind),
      offset_(offset) {}

ImageBuffer load_pnm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '6')) {
        throw PnmError(PnmErrorKind::MalformedHeader, 0, "expected magic P5 or P6");
    }
    const int channels = bytes[1] == '5' ? 1 : 3;

    HeaderReader reader(bytes);
    reader.skip_to(2);
    if (reader.offset() < bytes.size() && !is_space(bytes[reader.offset()]) && bytes[reader.offset()] != '#') {
        throw PnmError(PnmErrorKind::MalformedHeader, reader.offset(), "expected whitespace after magic");
    }
    const auto width = reader.read_number("width");
    const auto height = reader.read_number("height");
    const std::size_t maxval_offset = reader.offset();
    const auto maxval = reader.read_number("maxval");
    if (width == 0 || height == 0) {
        throw PnmError(PnmErrorKind::MalformedHeader, maxval_offset, "zero image dimension");
    }
    if (maxval != 255 && maxval != 65535) {
        throw PnmError(PnmErrorKind::UnsupportedMaxval, maxval_offset,
                       "maxval " + std::to_string(maxval) + " (supported: 255, 65535)");
    }
    reader.expect_single_space();

    const std::size_t payload_start = reader.offset();
    const std::size_t bytes_per_sample = maxval == 255 ? 1 : 2;
    const std::size_t sample_count = static_cast<std::size_t>(width) * height * channels;
    const std::size_t needed = sample_count * bytes_per_sample;
    if (bytes.size() - payload_start < needed) {
        throw PnmError(PnmErrorKind::TruncatedPayload, bytes.size(),
                       "payload has " + std::to_string(bytes.size() - payload_start) + " bytes, expected " +
                           std::to_string(needed));
    }

    const auto payload = bytes.subspan(payload_start, needed);
    const double scale = 1.0 / static_cast<double>(maxval);
    std::vector<double> samples(sample_count);
    for (std::size_t i = 0; i < sample_count; ++i) {
        unsigned raw = payload[i * bytes_per_sample];
        if (bytes_per_sample == 2) {
            raw = (raw << 8) | payload[i * 2 + 1];
        }
        samples[i] = std::min(1.0, raw * scale);
    }
    return ImageBuffer(static_cast<int>(width), static_cast<int>(height), channels, std::move(samples));
}

std::vector<std::uint8_t> save_pnm(const ImageBuffer& img) {
    const std::string header = std::string(img.channels() == 1 ? "P5" : "P6") + "\n" + std::to_string(img.width()) +
                               " " + std::to_string(img.height()) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.reserve(header.size() + img.samples().size());
    for (double s : img.samples()) {
        out.push_back(static_cast<std::uint8_t>(std::lround(s * 255.0)));
    }
    return out;
}

ImageBuffer read_pnm_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string() + " for reading");
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw IoError("read error on " + path.string());
    }
    return load_pnm(bytes);
}

void write_pnm_file(const std::filesystem::path& path, const ImageBuffer& img) {
    const auto bytes = save_pnm(img);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw IoError("write error on " + path.string());
    }
}

}  // namespace edgekeep
