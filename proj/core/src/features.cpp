#include "wikiqual/features.hpp"

#include <cmath>

namespace wikiqual {

std::string_view feature_name(Feature f) {
    switch (f) {
        case Feature::kPageLength: return "page_length";
        case Feature::kReferences: return "references";
        case Feature::kSections: return "sections";
        case Feature::kWikilinks: return "wikilinks";
        case Feature::kCategories: return "categories";
        case Feature::kMedia: return "media";
    }
    return "?";
}

std::optional<Feature> feature_from_name(std::string_view name) {
    for (Feature f : kAllFeatures) {
        if (feature_name(f) == name) return f;
    }
    return std::nullopt;
}

double TransformedFeatures::operator[](Feature f) const {
    return const_cast<TransformedFeatures&>(*this)[f];
}

double& TransformedFeatures::operator[](Feature f) {
    switch (f) {
        case Feature::kPageLength: return page_length;
        case Feature::kReferences: return references;
        case Feature::kSections: return sections;
        case Feature::kWikilinks: return wikilinks;
        case Feature::kCategories: return categories;
        case Feature::kMedia: return media;
    }
    return page_length;  // unreachable
}

TransformedFeatures transform(const RawFeatures& raw) {
    TransformedFeatures tf;
    tf.categories = static_cast<double>(raw.num_categories);
    tf.media = static_cast<double>(raw.num_media);
    if (raw.num_chars == 0) return tf;  // ratio features stay 0
    const double root_len = std::sqrt(static_cast<double>(raw.num_chars));
    tf.page_length = root_len;
    tf.references = static_cast<double>(raw.num_refs) / root_len;
    tf.sections = static_cast<double>(raw.num_headings) / root_len;
    tf.wikilinks = std::sqrt(static_cast<double>(raw.num_wikilinks)) / root_len;
    return tf;
}

}  // namespace wikiqual
