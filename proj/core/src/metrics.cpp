#include "edgekeep/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace edgekeep {

namespace {

void require_same_size(const ImageBuffer& a, const ImageBuffer& b) {
    if (a.width() != b.width() || a.height() != b.height()) {
        throw std::invalid_argument("metric operands differ in size: " + std::to_string(a.width()) + "x" +
                                    std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                                    std::to_string(b.height()));
    }
}

double total_variation(const ImageBuffer& gray, Direction direction) {
    double sum = 0.0;
    const int w = gray.width();
    const int h = gray.height();
    if (direction == Direction::Horizontal) {
        for (int y = 0; y < h; ++y) {
            for (int x = 0; x + 1 < w; ++x) {
                sum += std::abs(gray.at(x + 1, y) - gray.at(x, y));
            }
        }
    } else {
        for (int y = 0; y + 1 < h; ++y) {
            for (int x = 0; x < w; ++x) {
                sum += std::abs(gray.at(x, y + 1) - gray.at(x, y));
            }
        }
    }
    return sum;
}

}  // namespace

double Measurement::value() const {
    if (status_ != Status::Value) {
        throw std::logic_error("measurement has no value: " + to_string());
    }
    return value_;
}

std::string Measurement::to_string() const {
    switch (status_) {
        case Status::Identical:
            return "identical";
        case Status::Undefined:
            return "undefined";
        case Status::Value:
            break;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value_);
    return buf;
}

Measurement snr_db(const ImageBuffer& reference, const ImageBuffer& test) {
    require_same_size(reference, test);
    const ImageBuffer ref = to_grayscale(reference);
    const ImageBuffer out = to_grayscale(test);
    double signal = 0.0;
    double error = 0.0;
    for (std::size_t i = 0; i < ref.samples().size(); ++i) {
        const double r = ref.samples()[i];
        const double d = r - out.samples()[i];
        signal += r * r;
        error += d * d;
    }
    if (error == 0.0) {
        return Measurement::identical();
    }
    return Measurement::of(10.0 * std::log10(signal / error));
}

Measurement edge_preserving_exponent(const ImageBuffer& input, const ImageBuffer& filtered, Direction direction) {
    require_same_size(input, filtered);
    const double denom = total_variation(to_grayscale(input), direction);
    if (denom == 0.0) {
        return Measurement::undefined();
    }
    return Measurement::of(total_variation(to_grayscale(filtered), direction) / denom);
}

Measurement ep_ratio(const ImageBuffer& input, const ImageBuffer& filtered_multi, const ImageBuffer& filtered_bi,
                     Direction direction) {
    const Measurement multi = edge_preserving_exponent(input, filtered_multi, direction);
    const Measurement bi = edge_preserving_exponent(input, filtered_bi, direction);
    if (!multi.has_value() || !bi.has_value() || bi.value() == 0.0) {
        return Measurement::undefined();
    }
    return Measurement::of(multi.value() / bi.value());
}

MetricsReport evaluate(const ImageBuffer& input, const ImageBuffer& filtered, const ImageBuffer* clean) {
    MetricsReport report;
    report.snr_db = snr_db(input, filtered);
    report.ep_horizontal = edge_preserving_exponent(input, filtered, Direction::Horizontal);
    report.ep_vertical = edge_preserving_exponent(input, filtered, Direction::Vertical);
    if (clean) {
        report.snr_clean_db = snr_db(*clean, filtered);
    }
    return report;
}

std::string to_key_value(const MetricsReport& report) {
    std::string out = "snr_db=" + report.snr_db.to_string() + "\nep_h=" + report.ep_horizontal.to_string() +
                      "\nep_v=" + report.ep_vertical.to_string() + "\n";
    if (report.snr_clean_db) {
        out += "snr_clean_db=" + report.snr_clean_db->to_string() + "\n";
    }
    return out;
}

std::string metrics_csv_header(bool with_clean) {
    return with_clean ? "snr_db,ep_h,ep_v,snr_clean_db" : "snr_db,ep_h,ep_v";
}

std::string to_csv_row(const MetricsReport& report) {
    std::string out =
        report.snr_db.to_string() + "," + report.ep_horizontal.to_string() + "," + report.ep_vertical.to_string();
    if (report.snr_clean_db) {
        out += "," + report.snr_clean_db->to_string();
    }
    return out;
}

}  // namespace edgekeep
