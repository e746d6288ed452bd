#pragma once

#include <cstdint>
#include <deque>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

namespace wikiqual {

struct PageMeta {
    std::uint64_t page_id = 0;
    std::string title;
    int ns = 0;
    bool redirect = false;  // from the <redirect> element
};

/// One revision pulled from a dump, with its page context.
struct RevisionEvent {
    PageMeta page;
    std::uint64_t revision_id = 0;
    std::string timestamp;
    std::string text;
};

/// Main-namespace, non-redirect pages are articles.
bool is_article(const PageMeta& page);

/// Fallback redirect detection for wikitext whose page lacks a <redirect>
/// element: a leading #REDIRECT (or a localized alias) before the first link.
bool looks_like_redirect(std::string_view wikitext);

/// Streaming reader over MediaWiki export XML. Yields revisions in document
/// order; memory use is bounded by the largest single revision plus a fixed
/// input buffer, never the whole dump.
///
/// Throws XmlParseError (with byte offset) on malformed XML and
/// TruncatedDumpError when the stream ends mid-document; revisions completed
/// before the failure are still delivered first.
class DumpReader {
public:
    explicit DumpReader(std::istream& in);
    ~DumpReader();

    DumpReader(const DumpReader&) = delete;
    DumpReader& operator=(const DumpReader&) = delete;

    /// False at clean end of document.
    bool next(RevisionEvent& out);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace wikiqual
