#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include "wikiqual/features.hpp"
#include "wikiqual/model.hpp"

namespace wikiqual {

/// One revision with its extracted counts.
struct RevisionRecord {
    std::uint64_t revision_id = 0;
    std::uint64_t page_id = 0;
    std::string timestamp;  // ISO-8601; not serialized in the CSV schemas
    RawFeatures features;
};

/// One scored revision. item_id is an optional Wikidata id pass-through.
struct ScoreRecord {
    std::uint64_t revision_id = 0;
    std::uint64_t page_id = 0;
    std::string item_id;
    double pred_qual = 0.0;
    std::optional<QualityClass> pred_class;
};

/// Incremental writer for the features schema:
/// revision_id,page_id,page_length,num_refs,num_sections,num_wikilinks,num_categories,num_media
/// The header goes out on construction. No quoting, LF endings, UTF-8.
class FeaturesCsvWriter {
public:
    explicit FeaturesCsvWriter(std::ostream& out);
    void write(const RevisionRecord& record);
    std::uint64_t rows() const { return rows_; }

private:
    std::ostream& out_;
    std::uint64_t rows_ = 0;
};

/// Incremental writer for the scores schema:
/// revision_id,page_id,item_id,pred_qual[,pred_class]
/// pred_qual is printed with 6 decimals; item_id is empty when absent.
class ScoresCsvWriter {
public:
    explicit ScoresCsvWriter(std::ostream& out, bool with_class = false);
    void write(const ScoreRecord& record);
    std::uint64_t rows() const { return rows_; }

private:
    std::ostream& out_;
    bool with_class_;
    std::uint64_t rows_ = 0;
};

/// Whole-sequence helpers; return rows written. Throw IoError carrying the
/// rows-written count when the sink fails.
std::uint64_t write_features_csv(std::span<const RevisionRecord> records,
                                 std::ostream& out);
std::uint64_t write_scores_csv(std::span<const ScoreRecord> records,
                               std::ostream& out, bool with_class = false);

/// Streaming reader for the features schema. Validates the header up front
/// and throws InputError naming the first missing column.
class FeaturesCsvReader {
public:
    explicit FeaturesCsvReader(std::istream& in);
    bool next(RevisionRecord& out);  // false at EOF

private:
    std::istream& in_;
    std::uint64_t lineno_ = 1;
};

/// A row of a labeled scores CSV (revision_id, pred_qual, true_label and
/// optionally language / pred_class / page_id).
struct LabeledScoreRow {
    std::uint64_t revision_id = 0;
    double pred_qual = 0.0;
    std::string true_label;
    std::string language;                    // empty when the column is absent
    std::optional<QualityClass> pred_class;  // from an optional pred_class column
};

class LabeledCsvReader {
public:
    explicit LabeledCsvReader(std::istream& in);
    bool next(LabeledScoreRow& out);

private:
    std::istream& in_;
    int idx_revision_ = -1, idx_qual_ = -1, idx_label_ = -1, idx_language_ = -1,
        idx_pred_class_ = -1;
    std::uint64_t lineno_ = 1;
};

}  // namespace wikiqual
