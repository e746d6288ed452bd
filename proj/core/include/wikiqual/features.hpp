#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace wikiqual {

/// The six structural features, in dataset column order.
enum class Feature {
    kPageLength = 0,
    kReferences,
    kSections,
    kWikilinks,
    kCategories,
    kMedia,
};

inline constexpr std::size_t kFeatureCount = 6;

inline constexpr std::array<Feature, kFeatureCount> kAllFeatures = {
    Feature::kPageLength, Feature::kReferences, Feature::kSections,
    Feature::kWikilinks,  Feature::kCategories, Feature::kMedia,
};

std::string_view feature_name(Feature f);
std::optional<Feature> feature_from_name(std::string_view name);

/// Untransformed per-revision counts. num_chars counts Unicode scalar
/// values, not bytes.
struct RawFeatures {
    std::uint64_t num_chars = 0;
    std::uint64_t num_refs = 0;
    std::uint64_t num_headings = 0;
    std::uint64_t num_wikilinks = 0;
    std::uint64_t num_categories = 0;
    std::uint64_t num_media = 0;

    friend bool operator==(const RawFeatures&, const RawFeatures&) = default;
};

/// Model-space feature values:
///   page_length = sqrt(chars)
///   references  = refs / sqrt(chars)
///   sections    = headings / sqrt(chars)
///   wikilinks   = sqrt(wikilinks) / sqrt(chars)
///   categories, media = raw counts
/// Ratio features are defined as 0 when num_chars is 0.
struct TransformedFeatures {
    double page_length = 0.0;
    double references = 0.0;
    double sections = 0.0;
    double wikilinks = 0.0;
    double categories = 0.0;
    double media = 0.0;

    double operator[](Feature f) const;
    double& operator[](Feature f);

    friend bool operator==(const TransformedFeatures&,
                           const TransformedFeatures&) = default;
};

TransformedFeatures transform(const RawFeatures& raw);

}  // namespace wikiqual
