#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "wikiqual/features.hpp"

namespace wikiqual {

/// Ordered six-level quality scheme, lowest first.
enum class QualityClass { kStub = 0, kStart, kC, kB, kGA, kFA };

inline constexpr std::array<QualityClass, 6> kAllClasses = {
    QualityClass::kStub, QualityClass::kStart, QualityClass::kC,
    QualityClass::kB,    QualityClass::kGA,    QualityClass::kFA,
};

/// 1 for STUB through 6 for FA.
int class_rank(QualityClass c);
std::string_view class_name(QualityClass c);

/// Parses an English class name, case-insensitive. nullopt when unknown.
std::optional<QualityClass> class_from_name(std::string_view name);

/// Universal per-feature weights. Defaults are the published values; they
/// sum to 0.998 and are not renormalized unless asked.
class WeightSet {
public:
    static WeightSet defaults();
    explicit WeightSet(std::array<double, kFeatureCount> weights);

    double operator[](Feature f) const { return weights_[static_cast<std::size_t>(f)]; }
    double sum() const;

    /// Rescaled copy whose weights sum to 1.
    WeightSet normalized() const;

private:
    std::array<double, kFeatureCount> weights_;
};

/// Per-feature saturation thresholds in transformed space. Global minimums
/// act as floors: page length 10,000 chars (100.0 transformed), references
/// 0.15, sections 0.1, wikilinks 0.1, categories 5, media 2.
class ThresholdSet {
public:
    static ThresholdSet default_minimums();
    explicit ThresholdSet(std::array<double, kFeatureCount> thresholds);

    double operator[](Feature f) const { return values_[static_cast<std::size_t>(f)]; }
    void set(Feature f, double value);

private:
    std::array<double, kFeatureCount> values_;
};

/// Score upper limit per class, strictly increasing; FA is exactly 1.0.
class ClassBoundaries {
public:
    /// Limits in class order STUB..FA. Throws CalibrationError unless
    /// strictly increasing with FA == 1.0.
    explicit ClassBoundaries(std::array<double, 6> upper_limits);

    double upper_limit(QualityClass c) const {
        return limits_[static_cast<std::size_t>(c)];
    }

private:
    std::array<double, 6> limits_;
};

/// min(1, value / threshold). Throws CalibrationError when threshold <= 0.
double feature_score(double value, double threshold);

/// Weighted sum of per-feature scores; in [0, weights.sum()].
double score(const TransformedFeatures& tf, const ThresholdSet& thresholds,
             const WeightSet& weights);

/// Lowest class whose upper limit is >= s.
QualityClass classify(double s, const ClassBoundaries& boundaries);

}  // namespace wikiqual
