#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>

#include "wikiqual/model.hpp"

namespace wikiqual {

/// French quality scheme mapped onto the English one:
/// AdQ->FA, BA->GA, A->B, B->C, BD->START, ébauche->STUB.
/// Labels are case- and accent-normalized first. Throws InputError naming
/// the label when it is not one of the six.
QualityClass map_french_label(std::string_view label);

/// rank/6: STUB=1/6 .. FA=1.0.
double label_to_rank(QualityClass c);

/// Spearman rank correlation: average (fractional) ranks for ties, then
/// Pearson on the rank vectors. Throws InputError on length mismatch, fewer
/// than two samples, or when either side is constant.
double spearman(std::span<const double> xs, std::span<const double> ys);

/// m2/m3/m4 as percentages in [0, 100].
struct AlignmentMetrics {
    double exact = 0.0;       // m2: pred == truth
    double same_group = 0.0;  // m3: same {FA,GA} / {B,C} / {START,STUB} group
    double within_one = 0.0;  // m4: |rank difference| <= 1
};

AlignmentMetrics alignment_metrics(std::span<const QualityClass> preds,
                                   std::span<const QualityClass> truths);

/// confusion[truth][pred], classes in STUB..FA order.
using ConfusionMatrix = std::array<std::array<std::uint64_t, 6>, 6>;

ConfusionMatrix confusion_matrix(std::span<const QualityClass> preds,
                                 std::span<const QualityClass> truths);

struct EvalReport {
    double m1 = 0.0;  // Spearman rho of scores vs truth ranks
    double m2 = 0.0;
    double m3 = 0.0;
    double m4 = 0.0;
    ConfusionMatrix confusion{};
    std::size_t n = 0;
};

/// Full report. m1 correlates the continuous scores with truth ranks by
/// default; set m1_from_pred_ranks to correlate predicted-class ranks
/// instead.
EvalReport evaluate(std::span<const double> scores,
                    std::span<const QualityClass> preds,
                    std::span<const QualityClass> truths,
                    bool m1_from_pred_ranks = false);

void write_report_text(std::ostream& out, const EvalReport& report);

/// Flat key,value lines: n, m1..m4, confusion_<truth>_<pred>.
void write_report_kv(std::ostream& out, const EvalReport& report);

}  // namespace wikiqual
