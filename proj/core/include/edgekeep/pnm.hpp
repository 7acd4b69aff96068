#ifndef EDGEKEEP_PNM_HPP
#define EDGEKEEP_PNM_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <vector>

#include "edgekeep/image.hpp"

namespace edgekeep {

enum class PnmErrorKind {
    MalformedHeader,
    TruncatedPayload,
    UnsupportedMaxval,
};

/// Decoding failure; offset is the byte position where decoding stopped.
class PnmError : public std::runtime_error {
public:
    PnmError(PnmErrorKind kind, std::size_t offset, const std::string& what);

    PnmErrorKind kind() const noexcept { return kind_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    PnmErrorKind kind_;
    std::size_t offset_;
};

/// Decodes binary P5/P6 with maxval 255 or 65535 (16-bit samples big-endian).
ImageBuffer load_pnm(std::span<const std::uint8_t> bytes);

/// Encodes as P5 (gray) or P6 (RGB), maxval 255, each sample as round(s * 255).
std::vector<std::uint8_t> save_pnm(const ImageBuffer& img);

/// Raised by the file helpers when the file cannot be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ImageBuffer read_pnm_file(const std::filesystem::path& path);
void write_pnm_file(const std::filesystem::path& path, const ImageBuffer& img);

}  // namespace edgekeep

#endif  // EDGEKEEP_PNM_HPP
