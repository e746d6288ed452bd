#include "wikiqual/dump.hpp"

#include <expat.h>

#include <array>
#include <cctype>
#include <istream>
#include <vector>

#include "wikiqual/errors.hpp"

namespace wikiqual {

bool is_article(const PageMeta& page) { return page.ns == 0 && !page.redirect; }

bool looks_like_redirect(std::string_view wikitext) {
    std::size_t i = 0;
    while (i < wikitext.size() &&
           (wikitext[i] == ' ' || wikitext[i] == '\t' || wikitext[i] == '\n' ||
            wikitext[i] == '\r'))
        ++i;
    if (i >= wikitext.size() || wikitext[i] != '#') return false;
    std::string word;
    for (++i; i < wikitext.size() && word.size() < 24; ++i) {
        unsigned char c = static_cast<unsigned char>(wikitext[i]);
        if (std::isalpha(c)) {
            word.push_back(static_cast<char>(std::toupper(c)));
        } else if (c >= 0x80) {
            word.push_back(static_cast<char>(c));  // localized aliases compared raw
        } else {
            break;
        }
    }
    static const std::array<std::string_view, 6> kAliases = {
        "REDIRECT",      // en (and canonical everywhere)
        "REDIRECTION",   // fr
        "WEITERLEITUNG", // de
        "REDIRECCI\xC3\x93N",  // es
        "REDIRECCION",
        "UMLEITUNG",
    };
    for (std::string_view alias : kAliases) {
        if (word == alias) return true;
    }
    return false;
}

namespace {

/// Elements whose character data we accumulate.
enum class Capture { kNone, kTitle, kNs, kPageId, kRevisionId, kTimestamp, kText };

constexpr std::size_t kReadChunk = 64 * 1024;

}  // namespace

struct DumpReader::Impl {
    explicit Impl(std::istream& stream) : in(stream) {
        parser = XML_ParserCreate(nullptr);
        if (parser == nullptr) throw Error("failed to create XML parser");
        XML_SetUserData(parser, this);
        XML_SetElementHandler(parser, start_element, end_element);
        XML_SetCharacterDataHandler(parser, character_data);
    }

    ~Impl() {
        if (parser != nullptr) XML_ParserFree(parser);
    }

    std::istream& in;
    XML_Parser parser = nullptr;
    std::vector<char> buffer = std::vector<char>(kReadChunk);
    bool input_done = false;
    bool document_ended = false;

    // element stack: depth of interesting containers
    int depth = 0;
    int page_depth = -1;
    int revision_depth = -1;
    int contributor_depth = -1;

    Capture capture = Capture::kNone;
    std::string capture_buf;

    PageMeta current_page;
    std::uint64_t current_revision_id = 0;
    std::string current_timestamp;
    std::string current_text;

    std::deque<RevisionEvent> ready;

    static Impl* self(void* ud) { return static_cast<Impl*>(ud); }

    static void start_element(void* ud, const XML_Char* name, const XML_Char** attrs) {
        Impl* p = self(ud);
        ++p->depth;
        std::string_view n(name);
        if (n == "page") {
            p->page_depth = p->depth;
            p->current_page = PageMeta{};
        } else if (p->page_depth > 0 && n == "revision") {
            p->revision_depth = p->depth;
            p->current_revision_id = 0;
            p->current_timestamp.clear();
            p->current_text.clear();
        } else if (n == "contributor") {
            p->contributor_depth = p->depth;
        } else if (p->page_depth > 0 && n == "redirect" &&
                   p->depth == p->page_depth + 1) {
            p->current_page.redirect = true;
        }
        (void)attrs;

        p->capture = Capture::kNone;
        p->capture_buf.clear();
        if (p->contributor_depth > 0) return;  // ignore contributor ids/names
        if (p->revision_depth > 0 && p->depth == p->revision_depth + 1) {
            if (n == "id") p->capture = Capture::kRevisionId;
            else if (n == "timestamp") p->capture = Capture::kTimestamp;
            else if (n == "text") p->capture = Capture::kText;
        } else if (p->page_depth > 0 && p->depth == p->page_depth + 1) {
            if (n == "id") p->capture = Capture::kPageId;
            else if (n == "title") p->capture = Capture::kTitle;
            else if (n == "ns") p->capture = Capture::kNs;
        }
    }

    static void end_element(void* ud, const XML_Char* name) {
        Impl* p = self(ud);
        std::string_view n(name);
        switch (p->capture) {
            case Capture::kTitle: p->current_page.title = p->capture_buf; break;
            case Capture::kNs:
                p->current_page.ns = std::atoi(p->capture_buf.c_str());
                break;
            case Capture::kPageId:
                p->current_page.page_id = std::strtoull(p->capture_buf.c_str(), nullptr, 10);
                break;
            case Capture::kRevisionId:
                p->current_revision_id = std::strtoull(p->capture_buf.c_str(), nullptr, 10);
                break;
            case Capture::kTimestamp: p->current_timestamp = p->capture_buf; break;
            case Capture::kText: p->current_text = std::move(p->capture_buf); break;
            case Capture::kNone: break;
        }
        p->capture = Capture::kNone;
        p->capture_buf.clear();

        if (p->depth == p->contributor_depth && n == "contributor") {
            p->contributor_depth = -1;
        } else if (p->depth == p->revision_depth && n == "revision") {
            RevisionEvent ev;
            ev.page = p->current_page;
            ev.revision_id = p->current_revision_id;
            ev.timestamp = std::move(p->current_timestamp);
            ev.text = std::move(p->current_text);
            p->ready.push_back(std::move(ev));
            p->revision_depth = -1;
            p->current_timestamp.clear();
            p->current_text.clear();
        } else if (p->depth == p->page_depth && n == "page") {
            p->page_depth = -1;
        } else if (p->depth == 1 && n == "mediawiki") {
            p->document_ended = true;
        }
        --p->depth;
    }

    static void character_data(void* ud, const XML_Char* s, int len) {
        Impl* p = self(ud);
        if (p->capture != Capture::kNone) {
            p->capture_buf.append(s, static_cast<std::size_t>(len));
        }
    }

    [[noreturn]] void throw_parse_error() {
        const XML_Error code = XML_GetErrorCode(parser);
        const auto offset = static_cast<std::uint64_t>(XML_GetCurrentByteIndex(parser));
        throw XmlParseError(std::string("malformed XML: ") +
                                XML_ErrorString(code),
                            offset);
    }

    /// Feeds one more chunk into the parser. Returns false at input end.
    bool pump() {
        if (input_done) return false;
        in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        const auto got = in.gcount();
        if (got < 0 || (in.bad())) throw IoError("dump read failed");
        const bool is_final = got == 0 || in.eof();
        if (is_final) input_done = true;
        if (XML_Parse(parser, buffer.data(), static_cast<int>(got),
                      is_final ? 1 : 0) == XML_STATUS_ERROR) {
            if (input_done && !document_ended &&
                (XML_GetErrorCode(parser) == XML_ERROR_UNCLOSED_TOKEN ||
                 XML_GetErrorCode(parser) == XML_ERROR_PARTIAL_CHAR ||
                 XML_GetErrorCode(parser) == XML_ERROR_NO_ELEMENTS)) {
                return false;  // truncation reported by next() once drained
            }
            throw_parse_error();
        }
        return !input_done;
    }
};

DumpReader::DumpReader(std::istream& in) : impl_(std::make_unique<Impl>(in)) {}

DumpReader::~DumpReader() = default;

bool DumpReader::next(RevisionEvent& out) {
    while (impl_->ready.empty()) {
        if (!impl_->pump()) {
            if (!impl_->ready.empty()) break;
            if (!impl_->document_ended) {
                throw TruncatedDumpError(
                    "dump stream ended before </mediawiki>; document truncated");
            }
            return false;
        }
    }
    out = std::move(impl_->ready.front());
    impl_->ready.pop_front();
    return true;
}

}  // namespace wikiqual
