#ifndef EDGEKEEP_METRICS_HPP
#define EDGEKEEP_METRICS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "edgekeep/image.hpp"

namespace edgekeep {

/**
 * A metric value or one of the degenerate outcomes that have no finite value.
 * Identical: SNR between images that do not differ. Undefined: E_P whose
 * denominator vanishes (constant input, or a zero reference exponent in a ratio).
 */
class Measurement {
public:
    enum class Status { Value, Identical, Undefined };

    static Measurement of(double v) noexcept { return Measurement(Status::Value, v); }
    static Measurement identical() noexcept { return Measurement(Status::Identical, 0.0); }
    static Measurement undefined() noexcept { return Measurement(Status::Undefined, 0.0); }

    Status status() const noexcept { return status_; }
    bool has_value() const noexcept { return status_ == Status::Value; }
    /// Throws std::logic_error for degenerate outcomes.
    double value() const;

    /// Fixed 6-decimal rendering, or "identical" / "undefined".
    std::string to_string() const;

    friend bool operator==(const Measurement&, const Measurement&) = default;

private:
    Measurement(Status s, double v) noexcept : status_(s), value_(v) {}

    Status status_;
    double value_;
};

enum class Direction { Horizontal, Vertical };

/// 10 log10(sum ref^2 / sum (ref - test)^2) over the grayscale conversions.
Measurement snr_db(const ImageBuffer& reference, const ImageBuffer& test);

/**
 * Sum of |adjacent differences| of filtered over the same sum of input, both
 * in grayscale, over every adjacent pair in the direction: horizontal pairs
 * (x, y)-(x+1, y), vertical pairs (x, y)-(x, y+1).
 */
Measurement edge_preserving_exponent(const ImageBuffer& input, const ImageBuffer& filtered, Direction direction);

/// E_P(multi) / E_P(bi); degenerate operands propagate as Undefined.
Measurement ep_ratio(const ImageBuffer& input, const ImageBuffer& filtered_multi, const ImageBuffer& filtered_bi,
                     Direction direction);

struct MetricsReport {
    Measurement snr_db = Measurement::undefined();
    Measurement ep_horizontal = Measurement::undefined();
    Measurement ep_vertical = Measurement::undefined();
    /// SNR against a clean reference, when one was supplied. Never mixed with snr_db.
    std::optional<Measurement> snr_clean_db;
};

/// SNR against the filter input plus both exponents; clean adds snr_clean_db.
MetricsReport evaluate(const ImageBuffer& input, const ImageBuffer& filtered, const ImageBuffer* clean = nullptr);

/// "key=value" lines: snr_db, ep_h, ep_v and optionally snr_clean_db.
std::string to_key_value(const MetricsReport& report);
std::string metrics_csv_header(bool with_clean);
std::string to_csv_row(const MetricsReport& report);

}  // namespace edgekeep

#endif  // EDGEKEEP_METRICS_HPP
