#include "wikiqual/model_config.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "wikiqual/errors.hpp"

namespace wikiqual {

namespace {

double parse_number(const std::string& value, const std::string& where) {
    char* end = nullptr;
    double v = std::strtod(value.c_str(), &end);
    if (value.empty() || end != value.c_str() + value.size()) {
        throw ConfigError(where + ": not a number: '" + value + "'");
    }
    return v;
}

std::array<double, kFeatureCount> read_feature_section(
    const ConfigFile::Section& section) {
    std::array<double, kFeatureCount> values{};
    std::array<bool, kFeatureCount> seen{};
    for (const auto& [key, value] : section.entries) {
        auto f = feature_from_name(key);
        if (!f) {
            throw ConfigError("[" + section.name + "]: unknown feature '" + key + "'");
        }
        values[static_cast<std::size_t>(*f)] =
            parse_number(value, "[" + section.name + "] " + key);
        seen[static_cast<std::size_t>(*f)] = true;
    }
    for (Feature f : kAllFeatures) {
        if (!seen[static_cast<std::size_t>(f)]) {
            throw ConfigError("[" + section.name + "]: missing feature '" +
                              std::string(feature_name(f)) + "'");
        }
    }
    return values;
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

constexpr std::array<const char*, 6> kBoundaryKeys = {"stub", "start", "c",
                                                      "b",    "ga",    "fa"};

}  // namespace

ModelConfig ModelConfig::from(const ConfigFile& cfg) {
    ModelConfig mc;
    if (const auto* s = cfg.find("weights")) {
        mc.weights = WeightSet(read_feature_section(*s));
    }
    if (const auto* s = cfg.find("minimums")) {
        auto values = read_feature_section(*s);
        // page_length floor is written in characters; thresholds compare in
        // transformed space
        values[static_cast<std::size_t>(Feature::kPageLength)] =
            std::sqrt(values[static_cast<std::size_t>(Feature::kPageLength)]);
        mc.minimums = ThresholdSet(values);
    }
    if (const auto* s = cfg.find("thresholds")) {
        mc.thresholds = ThresholdSet(read_feature_section(*s));
    }
    if (const auto* s = cfg.find("boundaries")) {
        std::array<double, 6> limits{};
        for (std::size_t i = 0; i < kBoundaryKeys.size(); ++i) {
            const std::string* v = s->get(kBoundaryKeys[i]);
            if (v == nullptr) {
                throw ConfigError("[boundaries]: missing class '" +
                                  std::string(kBoundaryKeys[i]) + "'");
            }
            limits[i] = parse_number(*v, "[boundaries] " + std::string(kBoundaryKeys[i]));
        }
        mc.boundaries = ClassBoundaries(limits);
    }
    return mc;
}

ModelConfig ModelConfig::load(const std::filesystem::path& path) {
    return from(ConfigFile::load(path));
}

void add_thresholds_section(ConfigFile& cfg, const ThresholdSet& thresholds) {
    auto& section = cfg.section("thresholds");
    for (Feature f : kAllFeatures) {
        section.entries.emplace_back(std::string(feature_name(f)),
                                     format_value(thresholds[f]));
    }
}

void add_boundaries_section(ConfigFile& cfg, const ClassBoundaries& boundaries) {
    auto& section = cfg.section("boundaries");
    for (std::size_t i = 0; i < kBoundaryKeys.size(); ++i) {
        section.entries.emplace_back(
            kBoundaryKeys[i],
            format_value(boundaries.upper_limit(static_cast<QualityClass>(i))));
    }
}

}  // namespace wikiqual
