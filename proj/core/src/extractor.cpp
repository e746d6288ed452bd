#include "wikiqual/extractor.hpp"

#include <cctype>
#include <cstddef>
#include <string>

namespace wikiqual {

namespace {

constexpr std::string_view kTagBoundary = " \t\n\r\f>/";

bool is_tag_boundary(char c) {
    return kTagBoundary.find(c) != std::string_view::npos;
}

char lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

/// Case-insensitive find for short ASCII needles.
std::size_t find_ci(std::string_view text, std::string_view needle, std::size_t from) {
    if (needle.empty() || text.size() < needle.size()) return std::string_view::npos;
    for (std::size_t i = from; i + needle.size() <= text.size(); ++i) {
        std::size_t j = 0;
        while (j < needle.size() && lower(text[i + j]) == lower(needle[j])) ++j;
        if (j == needle.size()) return i;
    }
    return std::string_view::npos;
}

/// Finds the end of a closing tag `</name ...>` starting the search at
/// `from`. Returns npos when no properly delimited closer exists.
std::size_t find_closing_tag_end(std::string_view text, std::string_view name,
                                 std::size_t from) {
    std::string needle = "</" + std::string(name);
    std::size_t c = from;
    while (true) {
        c = find_ci(text, needle, c);
        if (c == std::string_view::npos) return std::string_view::npos;
        std::size_t after = c + needle.size();
        if (after >= text.size() || text[after] == '>' || text[after] == ' ' ||
            text[after] == '\t' || text[after] == '\n' || text[after] == '\r' ||
            text[after] == '\f') {
            std::size_t gt = text.find('>', after);
            return gt == std::string_view::npos ? text.size() : gt + 1;
        }
        c = after;  // e.g. </refx>, keep looking
    }
}

std::string_view trim_spaces(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

struct LinkCounts {
    std::uint64_t wikilinks = 0;
    std::uint64_t categories = 0;
    std::uint64_t media = 0;
};

/// One left-to-right scan classifying every [[...]] occurrence. A link needs
/// a target free of '[', ']' and newlines; |-links additionally need a `]]`
/// somewhere after the pipe. Scanning resumes right after the target so
/// nested links in image captions are seen. Unmatched openers are skipped.
LinkCounts scan_links(std::string_view text, const LocaleConfig& locale) {
    LinkCounts counts;
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (true) {
        std::size_t open = text.find("[[", i);
        if (open == std::string_view::npos) break;
        std::size_t k = open + 2;
        enum class Term { kPipe, kClose, kBad, kEof } term = Term::kEof;
        while (k < n) {
            char c = text[k];
            if (c == '|') { term = Term::kPipe; break; }
            if (c == ']' && k + 1 < n && text[k + 1] == ']') { term = Term::kClose; break; }
            if (c == '[' || c == ']' || c == '\n') { term = Term::kBad; break; }
            ++k;
        }
        if (term == Term::kEof) break;  // unclosed at end of text
        if (term == Term::kBad) { i = open + 2; continue; }
        if (term == Term::kPipe &&
            text.find("]]", k + 1) == std::string_view::npos) {
            i = open + 2;  // no closing braces anywhere after the pipe
            continue;
        }
        std::string_view target = trim_spaces(text.substr(open + 2, k - open - 2));
        i = (term == Term::kPipe) ? k + 1 : k + 2;
        if (target.empty()) continue;
        if (target.front() == ':') { ++counts.wikilinks; continue; }
        std::size_t colon = target.find(':');
        if (colon == std::string_view::npos) { ++counts.wikilinks; continue; }
        std::string_view prefix = target.substr(0, colon);
        if (locale.matches_category(prefix)) {
            ++counts.categories;
        } else if (locale.matches_media(prefix)) {
            ++counts.media;
        } else {
            ++counts.wikilinks;  // Help:, interwiki, plain colons in titles
        }
    }
    return counts;
}

/// One media item per non-empty line inside each <gallery>...</gallery>.
std::uint64_t count_gallery_items(std::string_view text) {
    std::uint64_t items = 0;
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (true) {
        std::size_t j = find_ci(text, "<gallery", i);
        if (j == std::string_view::npos) break;
        std::size_t k = j + 8;
        if (k < n && !is_tag_boundary(text[k])) { i = k; continue; }
        std::size_t gt = text.find('>', k);
        if (gt == std::string_view::npos) break;  // truncated opener
        if (text[gt - 1] == '/') { i = gt + 1; continue; }  // <gallery/>
        std::size_t close = find_ci(text, "</gallery", gt + 1);
        std::size_t body_end = std::string_view::npos;
        while (close != std::string_view::npos) {
            std::size_t after = close + 9;
            if (after >= n || text[after] == '>' || text[after] == ' ' ||
                text[after] == '\t' || text[after] == '\n' ||
                text[after] == '\r' || text[after] == '\f') {
                body_end = close;
                break;
            }
            close = find_ci(text, "</gallery", after);
        }
        if (body_end == std::string_view::npos) { i = gt + 1; continue; }  // unmatched opener
        std::string_view body = text.substr(gt + 1, body_end - gt - 1);
        std::size_t start = 0;
        while (start <= body.size()) {
            std::size_t nl = body.find('\n', start);
            if (nl == std::string_view::npos) nl = body.size();
            if (!trim_spaces(body.substr(start, nl - start)).empty()) ++items;
            if (nl == body.size()) break;
            start = nl + 1;
        }
        std::size_t gt2 = text.find('>', body_end + 9);
        i = gt2 == std::string_view::npos ? n : gt2 + 1;
    }
    return items;
}

}  // namespace

std::uint64_t count_characters(std::string_view wikitext) {
    // Scalar values = bytes that are not UTF-8 continuation bytes.
    std::uint64_t count = 0;
    for (unsigned char b : wikitext) {
        count += (b & 0xC0u) != 0x80u;
    }
    return count;
}

std::uint64_t count_refs(std::string_view wikitext) {
    std::uint64_t count = 0;
    const std::size_t n = wikitext.size();
    std::size_t i = 0;
    while (true) {
        std::size_t j = find_ci(wikitext, "<ref", i);
        if (j == std::string_view::npos) break;
        std::size_t k = j + 4;
        if (k < n && !is_tag_boundary(wikitext[k])) { i = k; continue; }  // <references>
        ++count;
        std::size_t gt = wikitext.find('>', k);
        if (gt == std::string_view::npos) break;  // truncated opener, counted once
        if (wikitext[gt - 1] == '/') { i = gt + 1; continue; }  // self-closing
        std::size_t end = find_closing_tag_end(wikitext, "ref", gt + 1);
        i = end == std::string_view::npos ? gt + 1 : end;  // unclosed opener counted once
    }
    return count;
}

std::uint64_t count_headings(std::string_view wikitext) {
    std::uint64_t count = 0;
    std::size_t start = 0;
    while (start <= wikitext.size()) {
        std::size_t nl = wikitext.find('\n', start);
        if (nl == std::string_view::npos) nl = wikitext.size();
        std::string_view line = wikitext.substr(start, nl - start);
        while (!line.empty() &&
               (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.remove_suffix(1);
        if (!line.empty() && line.front() == '=') {
            std::size_t lead = line.find_first_not_of('=');
            if (lead != std::string_view::npos) {  // not all '='
                std::string_view rest = line.substr(lead);
                std::size_t last = rest.find_last_not_of('=');
                std::size_t trail = rest.size() - last - 1;
                if (trail > 0 &&
                    !trim_spaces(rest.substr(0, last + 1)).empty()) {
                    std::size_t level = std::min(lead, trail);
                    if (level == 2 || level == 3) ++count;
                }
            }
        }
        if (nl == wikitext.size()) break;
        start = nl + 1;
    }
    return count;
}

std::uint64_t count_wikilinks(std::string_view wikitext, const LocaleConfig& locale) {
    return scan_links(wikitext, locale).wikilinks;
}

std::uint64_t count_categories(std::string_view wikitext, const LocaleConfig& locale) {
    return scan_links(wikitext, locale).categories;
}

std::uint64_t count_media(std::string_view wikitext, const LocaleConfig& locale) {
    return scan_links(wikitext, locale).media + count_gallery_items(wikitext);
}

RawFeatures extract_features(std::string_view wikitext, const LocaleConfig& locale) {
    RawFeatures f;
    f.num_chars = count_characters(wikitext);
    f.num_refs = count_refs(wikitext);
    f.num_headings = count_headings(wikitext);
    LinkCounts links = scan_links(wikitext, locale);
    f.num_wikilinks = links.wikilinks;
    f.num_categories = links.categories;
    f.num_media = links.media + count_gallery_items(wikitext);
    return f;
}

}  // namespace wikiqual
