#include "wikiqual/evaluation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "wikiqual/errors.hpp"

namespace wikiqual {

namespace {

/// Lowercases ASCII and strips the Latin-1 accents that occur in the French
/// labels (é, É, è, ...), so "Ébauche" and "ebauche" normalize alike.
std::string normalize_label(std::string_view label) {
    std::string out;
    out.reserve(label.size());
    for (std::size_t i = 0; i < label.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(label[i]);
        if (c < 0x80) {
            if (!std::isspace(c)) out.push_back(static_cast<char>(std::tolower(c)));
            continue;
        }
        // UTF-8 Latin-1 supplement: 0xC3 then 0x80..0xBF
        if (c == 0xC3 && i + 1 < label.size()) {
            unsigned char d = static_cast<unsigned char>(label[++i]);
            unsigned char folded = d >= 0x80 && d <= 0x9E ? d + 0x20 : d;  // upper -> lower
            // lowercase accented Latin-1 letters map onto their base letter
            char base = 0;
            if (folded >= 0xA0 && folded <= 0xA5) base = 'a';
            else if (folded == 0xA7) base = 'c';
            else if (folded >= 0xA8 && folded <= 0xAB) base = 'e';
            else if (folded >= 0xAC && folded <= 0xAF) base = 'i';
            else if (folded >= 0xB2 && folded <= 0xB6) base = 'o';
            else if (folded >= 0xB9 && folded <= 0xBC) base = 'u';
            if (base != 0) {
                out.push_back(base);
            } else {
                out.push_back(static_cast<char>(0xC3));
                out.push_back(static_cast<char>(folded));
            }
            continue;
        }
        out.push_back(static_cast<char>(c));
    }
    return out;
}

int group_of(QualityClass c) {
    return (class_rank(c) - 1) / 2;  // {STUB,START}=0, {C,B}=1, {GA,FA}=2
}

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

void require_paired(std::size_t a, std::size_t b, const char* who) {
    if (a != b) {
        throw InputError(std::string(who) + ": length mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
    }
}

}  // namespace

QualityClass map_french_label(std::string_view label) {
    const std::string key = normalize_label(label);
    if (key == "adq") return QualityClass::kFA;
    if (key == "ba") return QualityClass::kGA;
    if (key == "a") return QualityClass::kB;
    if (key == "b") return QualityClass::kC;
    if (key == "bd") return QualityClass::kStart;
    if (key == "ebauche") return QualityClass::kStub;
    throw InputError("unknown French quality label '" + std::string(label) + "'");
}

double label_to_rank(QualityClass c) { return class_rank(c) / 6.0; }

double spearman(std::span<const double> xs, std::span<const double> ys) {
    require_paired(xs.size(), ys.size(), "spearman");
    if (xs.size() < 2) throw InputError("spearman: need at least 2 samples");
    const std::vector<double> rx = average_ranks(xs);
    const std::vector<double> ry = average_ranks(ys);
    const double n = static_cast<double>(rx.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        mx += rx[i];
        my += ry[i];
    }
    mx /= n;
    my /= n;
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        const double dx = rx[i] - mx;
        const double dy = ry[i] - my;
        cov += dx * dy;
        vx += dx * dx;
        vy += dy * dy;
    }
    if (vx == 0.0 || vy == 0.0) {
        throw InputError("spearman: undefined for constant input");
    }
    return cov / std::sqrt(vx * vy);
}

AlignmentMetrics alignment_metrics(std::span<const QualityClass> preds,
                                   std::span<const QualityClass> truths) {
    require_paired(preds.size(), truths.size(), "alignment_metrics");
    if (preds.empty()) throw InputError("alignment_metrics: empty input");
    std::size_t exact = 0, group = 0, within = 0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        exact += preds[i] == truths[i];
        group += group_of(preds[i]) == group_of(truths[i]);
        within += std::abs(class_rank(preds[i]) - class_rank(truths[i])) <= 1;
    }
    const double n = static_cast<double>(preds.size());
    return AlignmentMetrics{100.0 * static_cast<double>(exact) / n,
                            100.0 * static_cast<double>(group) / n,
                            100.0 * static_cast<double>(within) / n};
}

ConfusionMatrix confusion_matrix(std::span<const QualityClass> preds,
                                 std::span<const QualityClass> truths) {
    require_paired(preds.size(), truths.size(), "confusion_matrix");
    ConfusionMatrix m{};
    for (std::size_t i = 0; i < preds.size(); ++i) {
        ++m[static_cast<std::size_t>(truths[i])][static_cast<std::size_t>(preds[i])];
    }
    return m;
}

EvalReport evaluate(std::span<const double> scores,
                    std::span<const QualityClass> preds,
                    std::span<const QualityClass> truths,
                    bool m1_from_pred_ranks) {
    require_paired(scores.size(), preds.size(), "evaluate");
    require_paired(scores.size(), truths.size(), "evaluate");
    if (scores.size() < 2) throw InputError("evaluate: need at least 2 samples");

    std::vector<double> truth_ranks(truths.size());
    for (std::size_t i = 0; i < truths.size(); ++i)
        truth_ranks[i] = label_to_rank(truths[i]);

    EvalReport report;
    if (m1_from_pred_ranks) {
        std::vector<double> pred_ranks(preds.size());
        for (std::size_t i = 0; i < preds.size(); ++i)
            pred_ranks[i] = label_to_rank(preds[i]);
        report.m1 = spearman(pred_ranks, truth_ranks);
    } else {
        report.m1 = spearman(scores, truth_ranks);
    }
    const AlignmentMetrics am = alignment_metrics(preds, truths);
    report.m2 = am.exact;
    report.m3 = am.same_group;
    report.m4 = am.within_one;
    report.confusion = confusion_matrix(preds, truths);
    report.n = scores.size();
    return report;
}

void write_report_text(std::ostream& out, const EvalReport& report) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "n  = %zu\n", report.n);
    out << buf;
    std::snprintf(buf, sizeof(buf), "m1 (Spearman rho)      = %.4f\n", report.m1);
    out << buf;
    std::snprintf(buf, sizeof(buf), "m2 (exact match %%)     = %.2f\n", report.m2);
    out << buf;
    std::snprintf(buf, sizeof(buf), "m3 (same group %%)      = %.2f\n", report.m3);
    out << buf;
    std::snprintf(buf, sizeof(buf), "m4 (within one class %%) = %.2f\n", report.m4);
    out << buf;
    out << "confusion (rows = truth, cols = predicted):\n";
    out << "        ";
    for (QualityClass c : kAllClasses) {
        std::snprintf(buf, sizeof(buf), "%7s", std::string(class_name(c)).c_str());
        out << buf;
    }
    out << "\n";
    for (QualityClass t : kAllClasses) {
        std::snprintf(buf, sizeof(buf), "%7s ", std::string(class_name(t)).c_str());
        out << buf;
        for (QualityClass p : kAllClasses) {
            std::snprintf(buf, sizeof(buf), "%7llu",
                          static_cast<unsigned long long>(
                              report.confusion[static_cast<std::size_t>(t)]
                                              [static_cast<std::size_t>(p)]));
            out << buf;
        }
        out << "\n";
    }
}

void write_report_kv(std::ostream& out, const EvalReport& report) {
    char buf[64];
    out << "n," << report.n << "\n";
    std::snprintf(buf, sizeof(buf), "%.6f", report.m1);
    out << "m1," << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.6f", report.m2);
    out << "m2," << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.6f", report.m3);
    out << "m3," << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.6f", report.m4);
    out << "m4," << buf << "\n";
    for (QualityClass t : kAllClasses) {
        for (QualityClass p : kAllClasses) {
            out << "confusion_" << class_name(t) << "_" << class_name(p) << ","
                << report.confusion[static_cast<std::size_t>(t)]
                                   [static_cast<std::size_t>(p)]
                << "\n";
        }
    }
}

}  // namespace wikiqual
