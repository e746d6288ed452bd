#include "wikiqual/calibration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wikiqual/errors.hpp"

namespace wikiqual {

double percentile(std::span<const double> values, double p) {
    if (values.empty()) throw CalibrationError("percentile of an empty dataset");
    if (!(p >= 0.0 && p <= 1.0)) {
        throw CalibrationError("percentile fraction must be in [0,1], got " +
                               std::to_string(p));
    }
    std::vector<double> v(values.begin(), values.end());
    const double h = p * static_cast<double>(v.size() - 1);
    const auto lo = static_cast<std::size_t>(h);
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(lo), v.end());
    const double lower = v[lo];
    const double frac = h - static_cast<double>(lo);
    if (frac == 0.0 || lo + 1 == v.size()) return lower;
    // next order statistic is the minimum of the partition above lo
    const double upper = *std::min_element(v.begin() + static_cast<std::ptrdiff_t>(lo) + 1,
                                           v.end());
    return lower + frac * (upper - lower);
}

ThresholdCalibrator::ThresholdCalibrator(ThresholdSet minimums)
    : minimums_(minimums) {}

void ThresholdCalibrator::add(const TransformedFeatures& tf) {
    for (Feature f : kAllFeatures) {
        values_[static_cast<std::size_t>(f)].push_back(tf[f]);
    }
}

void ThresholdCalibrator::merge(ThresholdCalibrator&& shard) {
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
        auto& mine = values_[i];
        auto& theirs = shard.values_[i];
        mine.insert(mine.end(), theirs.begin(), theirs.end());
        theirs.clear();
    }
}

ThresholdSet ThresholdCalibrator::thresholds(double p) const {
    if (size() == 0) throw CalibrationError("cannot calibrate thresholds: empty dataset");
    ThresholdSet result = minimums_;
    for (Feature f : kAllFeatures) {
        const double p95 = percentile(values_[static_cast<std::size_t>(f)], p);
        result.set(f, std::max(minimums_[f], p95));
    }
    return result;
}

ThresholdSet compute_thresholds(std::span<const TransformedFeatures> dataset,
                                const ThresholdSet& minimums) {
    ThresholdCalibrator calibrator(minimums);
    for (const auto& tf : dataset) calibrator.add(tf);
    return calibrator.thresholds();
}

namespace {

double median(std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return (v[n / 2 - 1] + v[n / 2]) / 2.0;  // mean of the two middle values
}

}  // namespace

ClassBoundaries derive_class_boundaries(
    std::span<const std::pair<double, QualityClass>> labeled) {
    std::array<std::vector<double>, 6> per_class;
    for (const auto& [score, cls] : labeled) {
        per_class[static_cast<std::size_t>(cls)].push_back(score);
    }
    std::array<double, 6> limits{};
    for (QualityClass c : kAllClasses) {
        auto& scores = per_class[static_cast<std::size_t>(c)];
        if (scores.empty()) {
            throw CalibrationError("no labeled samples for class " +
                                   std::string(class_name(c)));
        }
        limits[static_cast<std::size_t>(c)] = median(scores);
    }
    limits[static_cast<std::size_t>(QualityClass::kFA)] = 1.0;
    for (std::size_t i = 1; i < limits.size(); ++i) {
        if (!(limits[i - 1] < limits[i])) {
            throw CalibrationError(
                "per-class medians are not strictly increasing: " +
                std::string(class_name(static_cast<QualityClass>(i - 1))) + " (" +
                std::to_string(limits[i - 1]) + ") >= " +
                std::string(class_name(static_cast<QualityClass>(i))) + " (" +
                std::to_string(limits[i]) + ")");
        }
    }
    return ClassBoundaries(limits);
}

}  // namespace wikiqual
