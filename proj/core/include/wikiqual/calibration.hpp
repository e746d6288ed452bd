#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "wikiqual/features.hpp"
#include "wikiqual/model.hpp"

namespace wikiqual {

/// Linear-interpolation percentile: with sorted values v[0..n-1] and
/// h = p*(n-1), returns v[floor(h)] + frac(h) * (v[floor(h)+1] - v[floor(h)]).
/// Throws CalibrationError for an empty input or p outside [0, 1].
double percentile(std::span<const double> values, double p);

/// Collects transformed feature values and derives per-feature thresholds as
/// max(global minimum, 95th percentile). Shards may collect independently
/// and merge deterministically before the percentile step.
class ThresholdCalibrator {
public:
    explicit ThresholdCalibrator(
        ThresholdSet minimums = ThresholdSet::default_minimums());

    void add(const TransformedFeatures& tf);
    void merge(ThresholdCalibrator&& shard);

    std::size_t size() const { return values_[0].size(); }

    /// Throws CalibrationError when no samples were added.
    ThresholdSet thresholds(double p = 0.95) const;

private:
    ThresholdSet minimums_;
    std::array<std::vector<double>, kFeatureCount> values_;
};

/// Convenience wrapper over ThresholdCalibrator for in-memory datasets.
ThresholdSet compute_thresholds(std::span<const TransformedFeatures> dataset,
                                const ThresholdSet& minimums);

/// Upper limit of each class = median predicted score of revisions labeled
/// with that class, except FA which is pinned to 1.0. Requires at least one
/// sample per class and strictly increasing medians; otherwise throws
/// CalibrationError naming the offending class (pair).
ClassBoundaries derive_class_boundaries(
    std::span<const std::pair<double, QualityClass>> labeled);

}  // namespace wikiqual
