#include "wikiqual/model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "wikiqual/errors.hpp"

namespace wikiqual {

int class_rank(QualityClass c) { return static_cast<int>(c) + 1; }

std::string_view class_name(QualityClass c) {
    switch (c) {
        case QualityClass::kStub: return "STUB";
        case QualityClass::kStart: return "START";
        case QualityClass::kC: return "C";
        case QualityClass::kB: return "B";
        case QualityClass::kGA: return "GA";
        case QualityClass::kFA: return "FA";
    }
    return "?";
}

std::optional<QualityClass> class_from_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    for (QualityClass c : kAllClasses) {
        if (class_name(c) == upper) return c;
    }
    return std::nullopt;
}

WeightSet WeightSet::defaults() {
    // page_length, references, sections, wikilinks, categories, media
    return WeightSet({0.395, 0.181, 0.123, 0.115, 0.070, 0.114});
}

WeightSet::WeightSet(std::array<double, kFeatureCount> weights)
    : weights_(weights) {
    for (Feature f : kAllFeatures) {
        double w = weights_[static_cast<std::size_t>(f)];
        if (!(w >= 0.0) || !std::isfinite(w)) {
            throw CalibrationError("weight for " + std::string(feature_name(f)) +
                                   " must be finite and >= 0");
        }
    }
}

double WeightSet::sum() const {
    double total = 0.0;
    for (double w : weights_) total += w;
    return total;
}

WeightSet WeightSet::normalized() const {
    double total = sum();
    if (total <= 0.0) throw CalibrationError("cannot normalize all-zero weights");
    auto scaled = weights_;
    for (double& w : scaled) w /= total;
    return WeightSet(scaled);
}

ThresholdSet ThresholdSet::default_minimums() {
    // Transformed space: sqrt(10000) = 100 for page length; the ratio
    // minimums are already per-sqrt-char; counts are their own space.
    return ThresholdSet({100.0, 0.15, 0.1, 0.1, 5.0, 2.0});
}

ThresholdSet::ThresholdSet(std::array<double, kFeatureCount> thresholds)
    : values_(thresholds) {
    for (Feature f : kAllFeatures) {
        double t = values_[static_cast<std::size_t>(f)];
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw CalibrationError("threshold for " + std::string(feature_name(f)) +
                                   " must be finite and > 0");
        }
    }
}

void ThresholdSet::set(Feature f, double value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw CalibrationError("threshold for " + std::string(feature_name(f)) +
                               " must be finite and > 0");
    }
    values_[static_cast<std::size_t>(f)] = value;
}

ClassBoundaries::ClassBoundaries(std::array<double, 6> upper_limits)
    : limits_(upper_limits) {
    for (std::size_t i = 1; i < limits_.size(); ++i) {
        if (!(limits_[i - 1] < limits_[i])) {
            throw CalibrationError(
                "class boundaries must be strictly increasing: " +
                std::string(class_name(static_cast<QualityClass>(i - 1))) + " (" +
                std::to_string(limits_[i - 1]) + ") vs " +
                std::string(class_name(static_cast<QualityClass>(i))) + " (" +
                std::to_string(limits_[i]) + ")");
        }
    }
    if (limits_.back() != 1.0) {
        throw CalibrationError("FA upper limit must be exactly 1.0");
    }
}

double feature_score(double value, double threshold) {
    if (!(threshold > 0.0)) {
        throw CalibrationError("feature_score: threshold must be > 0, got " +
                               std::to_string(threshold));
    }
    return std::min(1.0, value / threshold);
}

double score(const TransformedFeatures& tf, const ThresholdSet& thresholds,
             const WeightSet& weights) {
    double total = 0.0;
    for (Feature f : kAllFeatures) {
        total += weights[f] * feature_score(tf[f], thresholds[f]);
    }
    return total;
}

QualityClass classify(double s, const ClassBoundaries& boundaries) {
    for (QualityClass c : kAllClasses) {
        if (s <= boundaries.upper_limit(c)) return c;
    }
    return QualityClass::kFA;  // anything past the GA limit
}

}  // namespace wikiqual
