#pragma once

#include <cstdint>
#include <string_view>

#include "wikiqual/features.hpp"
#include "wikiqual/locale.hpp"

namespace wikiqual {

/// Feature counters over raw wikitext. Pure pattern matching, no template
/// expansion; malformed markup never throws. All functions are pure and
/// thread-safe.

/// Unicode scalar values in the text (not bytes).
std::uint64_t count_characters(std::string_view wikitext);

/// <ref ...>...</ref> pairs plus self-closing <ref .../>, case-insensitive.
/// An unclosed opening tag counts once.
std::uint64_t count_refs(std::string_view wikitext);

/// Heading lines of level 2 or 3 (`== t ==`, `=== t ===`). Level is the
/// shorter of the two `=` runs; levels 1 and 4+ are excluded. The line must
/// start at column 0; trailing whitespace is tolerated.
std::uint64_t count_headings(std::string_view wikitext);

/// [[target]] / [[target|label]] links whose target is not a category or
/// media namespace. Leading-colon targets always count as wikilinks.
std::uint64_t count_wikilinks(std::string_view wikitext, const LocaleConfig& locale);

/// [[<category-alias>:name]] links.
std::uint64_t count_categories(std::string_view wikitext, const LocaleConfig& locale);

/// [[<media-alias>:name|...]] links plus one per non-empty line inside
/// <gallery>...</gallery> blocks.
std::uint64_t count_media(std::string_view wikitext, const LocaleConfig& locale);

/// All six counts in one pass set; agrees field-by-field with the
/// standalone counters on any input.
RawFeatures extract_features(std::string_view wikitext, const LocaleConfig& locale);

}  // namespace wikiqual
