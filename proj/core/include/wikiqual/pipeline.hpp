#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "wikiqual/locale.hpp"

namespace wikiqual {

struct ExtractOptions {
    LocaleConfig locale = LocaleConfig::builtin("en");
    int threads = 1;

    /// Inclusive timestamp filters compared by prefix, so "2022" covers the
    /// whole year. Empty means unbounded.
    std::string since;
    std::string until;

    /// Bounds on the text queue feeding the worker pool; memory stays at
    /// roughly max_queue_bytes plus one revision regardless of dump size.
    std::size_t max_queue_items = 256;
    std::size_t max_queue_bytes = 48ull * 1024 * 1024;
};

struct ExtractStats {
    std::uint64_t pages_seen = 0;
    std::uint64_t revisions_seen = 0;
    std::uint64_t revisions_written = 0;
    std::uint64_t pages_skipped_namespace = 0;
    std::uint64_t pages_skipped_redirect = 0;
    std::uint64_t revisions_skipped_redirect = 0;  // #REDIRECT fallback
    std::uint64_t revisions_skipped_time = 0;
};

/// Streams a MediaWiki dump, keeps main-namespace non-redirect revisions,
/// extracts features and writes the features CSV. With threads > 1,
/// extraction fans out to a worker pool and rows are re-merged in document
/// order, so output bytes match the single-threaded run exactly.
ExtractStats extract_to_csv(std::istream& dump, std::ostream& csv,
                            const ExtractOptions& options);

}  // namespace wikiqual
