// wikiqual: extract structural features from MediaWiki dumps, calibrate
// per-language thresholds, score revisions and evaluate against editor
// quality labels.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <vector>

#include "wikiqual/calibration.hpp"
#include "wikiqual/csv.hpp"
#include "wikiqual/errors.hpp"
#include "wikiqual/evaluation.hpp"
#include "wikiqual/io.hpp"
#include "wikiqual/locale.hpp"
#include "wikiqual/model.hpp"
#include "wikiqual/model_config.hpp"
#include "wikiqual/pipeline.hpp"

namespace fs = std::filesystem;
using namespace wikiqual;

namespace {

/// $WIKIQUAL_CONFIG_DIR/<name> when it exists, else empty.
fs::path config_dir_file(const std::string& name) {
    const char* dir = std::getenv("WIKIQUAL_CONFIG_DIR");
    if (dir == nullptr || *dir == '\0') return {};
    fs::path candidate = fs::path(dir) / name;
    std::error_code ec;
    return fs::exists(candidate, ec) && !ec ? candidate : fs::path{};
}

LocaleConfig resolve_locale(const std::string& lang, const std::string& locales_file) {
    fs::path path = locales_file.empty() ? config_dir_file("locales.conf")
                                         : fs::path(locales_file);
    return LocaleConfig::resolve(lang, path);
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write output file: " + path);
    return out;
}

QualityClass parse_truth_label(const LabeledScoreRow& row, bool map_fr) {
    const bool french =
        map_fr || (!row.language.empty() && row.language.rfind("fr", 0) == 0);
    if (french) return map_french_label(row.true_label);
    auto cls = class_from_name(row.true_label);
    if (!cls) {
        throw InputError("unknown quality label '" + row.true_label +
                         "' (pass --map-fr for French labels)");
    }
    return *cls;
}

// ---------------------------------------------------------------- extract

struct ExtractArgs {
    std::string dump;
    std::string lang = "en";
    std::string out;
    std::string locales_file;
    std::string since, until;
    int threads = static_cast<int>(std::thread::hardware_concurrency());
};

int run_extract(const ExtractArgs& args) {
    ExtractOptions options;
    options.locale = resolve_locale(args.lang, args.locales_file);
    options.threads = args.threads;
    options.since = args.since;
    options.until = args.until;

    auto dump = open_input(args.dump);
    std::ofstream csv = open_output(args.out);
    ExtractStats stats = extract_to_csv(*dump, csv, options);
    csv.close();
    if (!csv.good()) throw IoError("failed writing " + args.out);

    std::cerr << "pages seen: " << stats.pages_seen << " (skipped "
              << stats.pages_skipped_namespace << " non-article namespace, "
              << stats.pages_skipped_redirect << " redirects)\n"
              << "revisions: " << stats.revisions_seen << " seen, "
              << stats.revisions_written << " written, "
              << stats.revisions_skipped_redirect << " skipped as redirects, "
              << stats.revisions_skipped_time << " outside time range\n";
    return 0;
}

// -------------------------------------------------------------- calibrate

struct CalibrateArgs {
    std::string features;
    std::string labeled;
    std::string out;
    std::string minimums_file;
    bool all_revisions = false;
    bool map_fr = false;
};

int run_calibrate(const CalibrateArgs& args) {
    if (args.features.empty() && args.labeled.empty()) {
        throw InputError("calibrate needs a features CSV and/or --labeled scores");
    }
    ConfigFile out_cfg;

    if (!args.features.empty()) {
        ThresholdSet minimums = ThresholdSet::default_minimums();
        if (!args.minimums_file.empty()) {
            auto mc = ModelConfig::load(args.minimums_file);
            if (!mc.minimums) {
                throw ConfigError(args.minimums_file + ": no [minimums] section");
            }
            minimums = *mc.minimums;
        }
        std::ifstream in(args.features);
        if (!in) throw IoError("cannot open features CSV: " + args.features);
        FeaturesCsvReader reader(in);
        ThresholdCalibrator calibrator(minimums);
        RevisionRecord record;
        if (args.all_revisions) {
            while (reader.next(record)) calibrator.add(transform(record.features));
        } else {
            // latest revision of each page only
            std::unordered_map<std::uint64_t, RevisionRecord> latest;
            while (reader.next(record)) {
                auto [it, inserted] = latest.try_emplace(record.page_id, record);
                if (!inserted && record.revision_id > it->second.revision_id) {
                    it->second = record;
                }
            }
            for (const auto& [page_id, rec] : latest) {
                calibrator.add(transform(rec.features));
            }
        }
        if (calibrator.size() == 0) {
            throw CalibrationError("empty dataset: " + args.features +
                                   " has no data rows");
        }
        add_thresholds_section(out_cfg, calibrator.thresholds());
        std::cerr << "calibrated thresholds from " << calibrator.size()
                  << " revisions\n";
    }

    if (!args.labeled.empty()) {
        std::ifstream in(args.labeled);
        if (!in) throw IoError("cannot open labeled CSV: " + args.labeled);
        LabeledCsvReader reader(in);
        std::vector<std::pair<double, QualityClass>> labeled;
        LabeledScoreRow row;
        while (reader.next(row)) {
            labeled.emplace_back(row.pred_qual, parse_truth_label(row, args.map_fr));
        }
        if (labeled.empty()) {
            throw CalibrationError("empty dataset: " + args.labeled +
                                   " has no data rows");
        }
        add_boundaries_section(out_cfg, derive_class_boundaries(labeled));
        std::cerr << "derived class boundaries from " << labeled.size()
                  << " labeled scores\n";
    }

    std::ofstream out = open_output(args.out);
    out_cfg.write(out);
    out.close();
    if (!out.good()) throw IoError("failed writing " + args.out);
    return 0;
}

// ------------------------------------------------------------------ score

struct ScoreArgs {
    std::string features;
    std::string thresholds_file;
    std::string weights_file;
    std::string boundaries_file;
    std::string item_map;
    std::string out;
    bool normalize_weights = false;
};

std::unordered_map<std::uint64_t, std::string> load_item_map(const std::string& path) {
    std::unordered_map<std::uint64_t, std::string> map;
    std::ifstream in(path);
    if (!in) throw IoError("cannot open item map: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        char* end = nullptr;
        std::uint64_t page_id = std::strtoull(line.c_str(), &end, 10);
        if (end != line.c_str() + comma) continue;  // header or junk
        map[page_id] = line.substr(comma + 1);
    }
    return map;
}

int run_score(const ScoreArgs& args) {
    if (args.thresholds_file.empty()) {
        throw InputError("missing thresholds: pass --thresholds <file>");
    }
    ModelConfig threshold_cfg = ModelConfig::load(args.thresholds_file);
    if (!threshold_cfg.thresholds) {
        throw ConfigError(args.thresholds_file + ": no [thresholds] section");
    }
    const ThresholdSet thresholds = *threshold_cfg.thresholds;

    WeightSet weights = WeightSet::defaults();
    if (!args.weights_file.empty()) {
        auto mc = ModelConfig::load(args.weights_file);
        if (!mc.weights) throw ConfigError(args.weights_file + ": no [weights] section");
        weights = *mc.weights;
    } else if (threshold_cfg.weights) {
        weights = *threshold_cfg.weights;
    }
    if (args.normalize_weights) weights = weights.normalized();

    std::optional<ClassBoundaries> boundaries;
    if (!args.boundaries_file.empty()) {
        auto mc = ModelConfig::load(args.boundaries_file);
        if (!mc.boundaries) {
            throw ConfigError(args.boundaries_file + ": no [boundaries] section");
        }
        boundaries = *mc.boundaries;
    }

    std::unordered_map<std::uint64_t, std::string> item_map;
    if (!args.item_map.empty()) item_map = load_item_map(args.item_map);

    std::ifstream in(args.features);
    if (!in) throw IoError("cannot open features CSV: " + args.features);
    FeaturesCsvReader reader(in);
    std::ofstream out = open_output(args.out);
    ScoresCsvWriter writer(out, boundaries.has_value());

    RevisionRecord record;
    while (reader.next(record)) {
        ScoreRecord sr;
        sr.revision_id = record.revision_id;
        sr.page_id = record.page_id;
        if (auto it = item_map.find(record.page_id); it != item_map.end()) {
            sr.item_id = it->second;
        }
        sr.pred_qual = score(transform(record.features), thresholds, weights);
        if (boundaries) sr.pred_class = classify(sr.pred_qual, *boundaries);
        writer.write(sr);
    }
    out.close();
    if (!out.good()) throw IoError("failed writing " + args.out);
    std::cerr << "scored " << writer.rows() << " revisions\n";
    return 0;
}

// --------------------------------------------------------------- evaluate

struct EvaluateArgs {
    std::string labeled;
    std::string boundaries_file;
    std::string out;
    bool map_fr = false;
    bool m1_class_ranks = false;
};

int run_evaluate(const EvaluateArgs& args) {
    std::optional<ClassBoundaries> boundaries;
    if (!args.boundaries_file.empty()) {
        auto mc = ModelConfig::load(args.boundaries_file);
        if (!mc.boundaries) {
            throw ConfigError(args.boundaries_file + ": no [boundaries] section");
        }
        boundaries = *mc.boundaries;
    }

    std::ifstream in(args.labeled);
    if (!in) throw IoError("cannot open labeled CSV: " + args.labeled);
    LabeledCsvReader reader(in);
    std::vector<double> scores;
    std::vector<QualityClass> preds, truths;
    LabeledScoreRow row;
    while (reader.next(row)) {
        scores.push_back(row.pred_qual);
        truths.push_back(parse_truth_label(row, args.map_fr));
        if (row.pred_class) {
            preds.push_back(*row.pred_class);
        } else if (boundaries) {
            preds.push_back(classify(row.pred_qual, *boundaries));
        } else {
            throw InputError(
                "no pred_class column and no --boundaries to classify scores");
        }
    }
    EvalReport report = evaluate(scores, preds, truths, args.m1_class_ranks);

    write_report_text(std::cout, report);
    if (!args.out.empty()) {
        std::ofstream out = open_output(args.out);
        write_report_kv(out, report);
        out.close();
        if (!out.good()) throw IoError("failed writing " + args.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"language-agnostic Wikipedia article quality toolkit"};
    app.require_subcommand(1);

    ExtractArgs extract_args;
    auto* cmd_extract = app.add_subcommand(
        "extract", "stream a dump and write the features CSV");
    cmd_extract->add_option("dump", extract_args.dump, "MediaWiki export XML (.xml/.gz/.bz2)")
        ->required();
    cmd_extract->add_option("--lang", extract_args.lang, "language code for namespace aliases");
    cmd_extract->add_option("--out", extract_args.out, "features CSV path")->required();
    cmd_extract->add_option("--locales", extract_args.locales_file, "locale aliases config file");
    cmd_extract->add_option("--since", extract_args.since, "keep revisions at/after this timestamp prefix");
    cmd_extract->add_option("--until", extract_args.until, "keep revisions at/before this timestamp prefix");
    cmd_extract->add_option("--threads", extract_args.threads, "extraction worker threads");

    CalibrateArgs calibrate_args;
    auto* cmd_calibrate = app.add_subcommand(
        "calibrate", "derive thresholds (and boundaries) from data");
    cmd_calibrate->add_option("features", calibrate_args.features, "features CSV");
    cmd_calibrate->add_option("--labeled", calibrate_args.labeled,
                              "scored CSV with true_label column, for boundaries");
    cmd_calibrate->add_option("--out", calibrate_args.out, "output config file")->required();
    cmd_calibrate->add_option("--minimums", calibrate_args.minimums_file,
                              "config file with a [minimums] section");
    cmd_calibrate->add_flag("--all-revisions", calibrate_args.all_revisions,
                            "calibrate over all revisions, not just the latest per page");
    cmd_calibrate->add_flag("--map-fr", calibrate_args.map_fr,
                            "labels in --labeled are French classes");

    ScoreArgs score_args;
    auto* cmd_score = app.add_subcommand("score", "score a features CSV");
    cmd_score->add_option("features", score_args.features, "features CSV")->required();
    cmd_score->add_option("--thresholds", score_args.thresholds_file,
                          "config file with [thresholds]");
    cmd_score->add_option("--weights", score_args.weights_file,
                          "config file with [weights] (default: published weights)");
    cmd_score->add_option("--boundaries", score_args.boundaries_file,
                          "config file with [boundaries]; adds a pred_class column");
    cmd_score->add_option("--item-map", score_args.item_map,
                          "page_id,item_id CSV for the item_id column");
    cmd_score->add_option("--out", score_args.out, "scores CSV path")->required();
    cmd_score->add_flag("--normalize-weights", score_args.normalize_weights,
                        "rescale weights to sum to 1");

    EvaluateArgs evaluate_args;
    auto* cmd_evaluate = app.add_subcommand(
        "evaluate", "compare predictions against ground-truth labels");
    cmd_evaluate->add_option("labeled", evaluate_args.labeled,
                             "CSV with revision_id,pred_qual,true_label[,language][,pred_class]")
        ->required();
    cmd_evaluate->add_option("--boundaries", evaluate_args.boundaries_file,
                             "config file with [boundaries] to classify pred_qual");
    cmd_evaluate->add_option("--out", evaluate_args.out, "write flat key,value report here");
    cmd_evaluate->add_flag("--map-fr", evaluate_args.map_fr, "true labels are French classes");
    cmd_evaluate->add_flag("--m1-class-ranks", evaluate_args.m1_class_ranks,
                           "correlate predicted class ranks instead of raw scores");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_extract->parsed()) return run_extract(extract_args);
        if (cmd_calibrate->parsed()) return run_calibrate(calibrate_args);
        if (cmd_score->parsed()) return run_score(score_args);
        if (cmd_evaluate->parsed()) return run_evaluate(evaluate_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
