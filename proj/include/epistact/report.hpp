#pragma once

#include <string>

#include "epistact/agreement.hpp"
#include "epistact/metrics.hpp"
#include "epistact/significance.hpp"
#include "epistact/stats.hpp"

namespace epistact {

enum class ReportFormat { Text, Csv, JsonLines };

ReportFormat parse_format(const std::string& s);

/// Rounds half-to-even at two decimals and renders with exactly two decimals.
std::string format_score(double v);

std::string emit_report(const EvalReport& report, ReportFormat format);
std::string emit_stats(const StatsTable& stats, ReportFormat format);
std::string emit_agreement(const AgreementReport& report, ReportFormat format);
std::string emit_significance(const SignificanceResult& result,
                              ReportFormat format);
/// CSV with a header row/column of activity-set names; cells are
/// row-normalized percentages. All-zero rows/columns can be omitted.
std::string confusion_to_csv(const ConfusionMatrix& m, bool omit_empty);

}  // namespace epistact
