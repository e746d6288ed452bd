#pragma once

#include <filesystem>
#include <optional>

#include "wikiqual/config.hpp"
#include "wikiqual/model.hpp"

namespace wikiqual {

/// Model parameters read from the plain-text config format. Sections:
///
///   [weights]     per-feature weights (defaults: the published values)
///   [minimums]    global floors, native units (page_length in characters)
///   [thresholds]  effective thresholds, transformed space
///   [boundaries]  stub/start/c/b/ga/fa upper score limits
///
/// Any section may be absent.
struct ModelConfig {
    std::optional<WeightSet> weights;
    std::optional<ThresholdSet> minimums;    // converted to transformed space
    std::optional<ThresholdSet> thresholds;  // transformed space as stored
    std::optional<ClassBoundaries> boundaries;

    static ModelConfig from(const ConfigFile& cfg);
    static ModelConfig load(const std::filesystem::path& path);
};

/// Serialization for calibration outputs. Values round-trip exactly.
void add_thresholds_section(ConfigFile& cfg, const ThresholdSet& thresholds);
void add_boundaries_section(ConfigFile& cfg, const ClassBoundaries& boundaries);

}  // namespace wikiqual
