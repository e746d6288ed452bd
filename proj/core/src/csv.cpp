#include "wikiqual/csv.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "wikiqual/errors.hpp"

namespace wikiqual {

namespace {

constexpr std::string_view kFeaturesHeader =
    "revision_id,page_id,page_length,num_refs,num_sections,num_wikilinks,"
    "num_categories,num_media";

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

std::uint64_t parse_u64(std::string_view field, std::uint64_t lineno, const char* col) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw InputError("line " + std::to_string(lineno) + ": column '" + col +
                         "' is not an unsigned integer: '" + std::string(field) + "'");
    }
    return value;
}

double parse_double(std::string_view field, std::uint64_t lineno, const char* col) {
    // from_chars<double> is available on this toolchain, but strtod keeps us
    // tolerant of exponent spellings from other writers
    std::string tmp(field);
    char* end = nullptr;
    double value = std::strtod(tmp.c_str(), &end);
    if (end != tmp.c_str() + tmp.size() || tmp.empty()) {
        throw InputError("line " + std::to_string(lineno) + ": column '" + col +
                         "' is not a number: '" + tmp + "'");
    }
    return value;
}

void check_sink(std::ostream& out, std::uint64_t rows_written) {
    if (!out.good()) {
        throw IoError("CSV write failed after " + std::to_string(rows_written) +
                      " rows");
    }
}

}  // namespace

FeaturesCsvWriter::FeaturesCsvWriter(std::ostream& out) : out_(out) {
    out_ << kFeaturesHeader << "\n";
    check_sink(out_, 0);
}

void FeaturesCsvWriter::write(const RevisionRecord& r) {
    char buf[160];
    int len = std::snprintf(buf, sizeof(buf), "%llu,%llu,%llu,%llu,%llu,%llu,%llu,%llu\n",
                            static_cast<unsigned long long>(r.revision_id),
                            static_cast<unsigned long long>(r.page_id),
                            static_cast<unsigned long long>(r.features.num_chars),
                            static_cast<unsigned long long>(r.features.num_refs),
                            static_cast<unsigned long long>(r.features.num_headings),
                            static_cast<unsigned long long>(r.features.num_wikilinks),
                            static_cast<unsigned long long>(r.features.num_categories),
                            static_cast<unsigned long long>(r.features.num_media));
    out_.write(buf, len);
    check_sink(out_, rows_);
    ++rows_;
}

ScoresCsvWriter::ScoresCsvWriter(std::ostream& out, bool with_class)
    : out_(out), with_class_(with_class) {
    out_ << "revision_id,page_id,item_id,pred_qual";
    if (with_class_) out_ << ",pred_class";
    out_ << "\n";
    check_sink(out_, 0);
}

void ScoresCsvWriter::write(const ScoreRecord& r) {
    char buf[96];
    int len = std::snprintf(buf, sizeof(buf), "%llu,%llu,%s,%.6f",
                            static_cast<unsigned long long>(r.revision_id),
                            static_cast<unsigned long long>(r.page_id),
                            r.item_id.c_str(), r.pred_qual);
    out_.write(buf, len);
    if (with_class_) {
        out_ << ',' << (r.pred_class ? class_name(*r.pred_class) : "");
    }
    out_ << '\n';
    check_sink(out_, rows_);
    ++rows_;
}

std::uint64_t write_features_csv(std::span<const RevisionRecord> records,
                                 std::ostream& out) {
    FeaturesCsvWriter writer(out);
    for (const auto& r : records) writer.write(r);
    return writer.rows();
}

std::uint64_t write_scores_csv(std::span<const ScoreRecord> records,
                               std::ostream& out, bool with_class) {
    ScoresCsvWriter writer(out, with_class);
    for (const auto& r : records) writer.write(r);
    return writer.rows();
}

FeaturesCsvReader::FeaturesCsvReader(std::istream& in) : in_(in) {
    std::string header;
    if (!std::getline(in_, header)) {
        throw InputError("features CSV: missing header");
    }
    auto fields = split_fields(strip_cr(header));
    auto expected = split_fields(kFeaturesHeader);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i >= fields.size() || fields[i] != expected[i]) {
            throw InputError("features CSV: missing column '" +
                             std::string(expected[i]) + "' in header");
        }
    }
}

bool FeaturesCsvReader::next(RevisionRecord& out) {
    std::string line;
    while (std::getline(in_, line)) {
        ++lineno_;
        std::string_view s = strip_cr(line);
        if (s.empty()) continue;
        auto f = split_fields(s);
        if (f.size() < 8) {
            throw InputError("line " + std::to_string(lineno_) +
                             ": expected 8 columns, got " + std::to_string(f.size()));
        }
        out.revision_id = parse_u64(f[0], lineno_, "revision_id");
        out.page_id = parse_u64(f[1], lineno_, "page_id");
        out.features.num_chars = parse_u64(f[2], lineno_, "page_length");
        out.features.num_refs = parse_u64(f[3], lineno_, "num_refs");
        out.features.num_headings = parse_u64(f[4], lineno_, "num_sections");
        out.features.num_wikilinks = parse_u64(f[5], lineno_, "num_wikilinks");
        out.features.num_categories = parse_u64(f[6], lineno_, "num_categories");
        out.features.num_media = parse_u64(f[7], lineno_, "num_media");
        out.timestamp.clear();
        return true;
    }
    return false;
}

LabeledCsvReader::LabeledCsvReader(std::istream& in) : in_(in) {
    std::string header;
    if (!std::getline(in_, header)) {
        throw InputError("labeled CSV: missing header");
    }
    auto fields = split_fields(strip_cr(header));
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (fields[i] == "revision_id") idx_revision_ = static_cast<int>(i);
        else if (fields[i] == "pred_qual") idx_qual_ = static_cast<int>(i);
        else if (fields[i] == "true_label") idx_label_ = static_cast<int>(i);
        else if (fields[i] == "language") idx_language_ = static_cast<int>(i);
        else if (fields[i] == "pred_class") idx_pred_class_ = static_cast<int>(i);
    }
    if (idx_revision_ < 0) throw InputError("labeled CSV: missing column 'revision_id'");
    if (idx_qual_ < 0) throw InputError("labeled CSV: missing column 'pred_qual'");
    if (idx_label_ < 0) throw InputError("labeled CSV: missing column 'true_label'");
}

bool LabeledCsvReader::next(LabeledScoreRow& out) {
    std::string line;
    while (std::getline(in_, line)) {
        ++lineno_;
        std::string_view s = strip_cr(line);
        if (s.empty()) continue;
        auto f = split_fields(s);
        auto field = [&](int idx) -> std::string_view {
            return idx >= 0 && idx < static_cast<int>(f.size())
                       ? f[static_cast<std::size_t>(idx)]
                       : std::string_view{};
        };
        out.revision_id = parse_u64(field(idx_revision_), lineno_, "revision_id");
        out.pred_qual = parse_double(field(idx_qual_), lineno_, "pred_qual");
        out.true_label = std::string(field(idx_label_));
        out.language = std::string(field(idx_language_));
        out.pred_class.reset();
        std::string_view pc = field(idx_pred_class_);
        if (!pc.empty()) {
            auto cls = class_from_name(pc);
            if (!cls) {
                throw InputError("line " + std::to_string(lineno_) +
                                 ": unknown pred_class '" + std::string(pc) + "'");
            }
            out.pred_class = *cls;
        }
        return true;
    }
    return false;
}

}  // namespace wikiqual
