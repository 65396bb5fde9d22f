#include "epistact/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace epistact {

using nlohmann::ordered_json;

ReportFormat parse_format(const std::string& s)
{
    if (s == "text") return ReportFormat::Text;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "json-lines" || s == "jsonl" || s == "json")
        return ReportFormat::JsonLines;
    throw std::invalid_argument("unknown report format: " + s);
}

namespace {

/// Half-to-even rounding at two decimals.
double round_even_2(double v)
{
    double scaled = v * 100.0;
    double floor_v = std::floor(scaled);
    double frac = scaled - floor_v;
    double r;
    if (std::abs(frac - 0.5) < 1e-9) {
        r = (std::fmod(floor_v, 2.0) == 0.0) ? floor_v : floor_v + 1.0;
    } else {
        r = std::floor(scaled + 0.5);
    }
    return r / 100.0;
}

std::string fixed2(double v)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(2) << v;
    return os.str();
}

std::string opt_score(const std::optional<double>& v)
{
    return v ? format_score(*v) : "--";
}

}  // namespace

std::string format_score(double v) { return fixed2(round_even_2(v)); }

std::string emit_report(const EvalReport& report, ReportFormat format)
{
    static const char* cols[] = {"HL",    "MS-EG", "MS-EE", "MS-HG", "MS-DC",
                                 "MA",    "MO-EG", "MO-EE", "MO-HG", "MO-DC"};
    // Column order mirrors the published table: EG, EE, HG, DC.
    static const Activity act_order[] = {Activity::EG, Activity::EE,
                                         Activity::HG, Activity::DC};

    switch (format) {
    case ReportFormat::Text: {
        std::ostringstream os;
        for (const char* c : cols) os << std::setw(7) << c;
        os << '\n';
        os << std::setw(7) << format_score(report.hl);
        for (Activity a : act_order)
            os << std::setw(7)
               << format_score(report.m_s[static_cast<std::size_t>(a)]);
        os << std::setw(7) << format_score(report.m_a);
        for (Activity a : act_order)
            os << std::setw(7)
               << (report.m_o
                       ? format_score((*report.m_o)[static_cast<std::size_t>(a)])
                       : std::string("--"));
        os << '\n';
        return os.str();
    }
    case ReportFormat::Csv: {
        std::ostringstream os;
        for (std::size_t i = 0; i < std::size(cols); ++i)
            os << (i ? "," : "") << cols[i];
        os << '\n';
        os << std::setprecision(17) << report.hl;
        for (Activity a : act_order)
            os << ',' << report.m_s[static_cast<std::size_t>(a)];
        os << ',' << report.m_a;
        for (Activity a : act_order) {
            os << ',';
            if (report.m_o) os << (*report.m_o)[static_cast<std::size_t>(a)];
        }
        os << '\n';
        return os.str();
    }
    case ReportFormat::JsonLines: {
        ordered_json j;
        j["hl"] = report.hl;
        for (Activity a : kActivities)
            j["m_s"][std::string(to_string(a))] =
                report.m_s[static_cast<std::size_t>(a)];
        j["m_a"] = report.m_a;
        if (report.m_o) {
            for (Activity a : kActivities)
                j["m_o"][std::string(to_string(a))] =
                    (*report.m_o)[static_cast<std::size_t>(a)];
        } else {
            j["m_o"] = nullptr;
        }
        return j.dump() + "\n";
    }
    }
    return {};
}

std::string emit_stats(const StatsTable& stats, ReportFormat format)
{
    if (format == ReportFormat::JsonLines) {
        ordered_json j;
        j["documents"] = stats.document_count;
        for (Activity a : kActivities) {
            const auto& pa = stats.activities[static_cast<std::size_t>(a)];
            ordered_json e;
            e["count"] = pa.count;
            e["avg_per_doc"] =
                pa.avg_per_doc ? ordered_json(*pa.avg_per_doc) : nullptr;
            e["avg_length"] =
                pa.avg_length ? ordered_json(*pa.avg_length) : nullptr;
            j["activities"][std::string(to_string(a))] = std::move(e);
        }
        for (const auto& [key, pp] : stats.pairs) {
            std::string name = std::string(to_string(key.first)) + "/" +
                               std::string(to_string(key.second));
            ordered_json e;
            e["overlap_count"] = pp.overlap_count;
            e["avg_overlap_length"] = pp.avg_overlap_length
                                          ? ordered_json(*pp.avg_overlap_length)
                                          : nullptr;
            j["overlaps"][name] = std::move(e);
        }
        return j.dump() + "\n";
    }

    const char sep = format == ReportFormat::Csv ? ',' : '\t';
    std::ostringstream os;
    os << "kind" << sep << "labels" << sep << "count" << sep << "avg_per_doc"
       << sep << "avg_length\n";
    for (Activity a : kActivities) {
        const auto& pa = stats.activities[static_cast<std::size_t>(a)];
        os << "activity" << sep << to_string(a) << sep << pa.count << sep
           << opt_score(pa.avg_per_doc) << sep << opt_score(pa.avg_length)
           << '\n';
    }
    for (const auto& [key, pp] : stats.pairs) {
        os << "overlap" << sep << to_string(key.first) << '/'
           << to_string(key.second) << sep << pp.overlap_count << sep << "--"
           << sep << opt_score(pp.avg_overlap_length) << '\n';
    }
    return os.str();
}

std::string emit_agreement(const AgreementReport& report, ReportFormat format)
{
    if (format == ReportFormat::JsonLines) {
        ordered_json j;
        j["alpha_u"] = report.overall ? ordered_json(*report.overall) : nullptr;
        for (Activity a : kActivities) {
            const auto& v = report.per_category[static_cast<std::size_t>(a)];
            j["per_category"][std::string(to_string(a))] =
                v ? ordered_json(*v) : nullptr;
        }
        j["segment"] =
            report.segment_only ? ordered_json(*report.segment_only) : nullptr;
        for (const auto& [key, v] : report.pairwise.pairs)
            j["pairwise"][key.first + "&" + key.second] =
                v ? ordered_json(*v) : nullptr;
        for (const auto& [key, v] : report.merged)
            j["merged"][std::string(to_string(key.first)) + "&" +
                        std::string(to_string(key.second))] =
                v ? ordered_json(*v) : nullptr;
        return j.dump() + "\n";
    }

    std::ostringstream os;
    os << "alpha_U" << '\t' << opt_score(report.overall) << '\n';
    for (Activity a : kActivities)
        os << "alpha_U-" << to_string(a) << '\t'
           << opt_score(report.per_category[static_cast<std::size_t>(a)])
           << '\n';
    os << "alpha_U-segment" << '\t' << opt_score(report.segment_only) << '\n';
    if (report.pairwise.max)
        os << "max-pair (" << report.pairwise.max->first.first << ","
           << report.pairwise.max->first.second << ")\t"
           << format_score(report.pairwise.max->second) << '\n';
    if (report.pairwise.min)
        os << "min-pair (" << report.pairwise.min->first.first << ","
           << report.pairwise.min->first.second << ")\t"
           << format_score(report.pairwise.min->second) << '\n';
    for (const auto& [key, v] : report.merged)
        os << "alpha_U-" << to_string(key.first) << "&" << to_string(key.second)
           << '\t' << opt_score(v) << '\n';
    return os.str();
}

std::string emit_significance(const SignificanceResult& result,
                              ReportFormat format)
{
    if (format == ReportFormat::JsonLines) {
        ordered_json j;
        j["u"] = result.u_statistic;
        j["p"] = result.p_value;
        j["corrected_alpha"] = result.corrected_alpha;
        j["significant"] = result.significant;
        return j.dump() + "\n";
    }
    std::ostringstream os;
    os << "U = " << result.u_statistic << '\n';
    os << "p (exact, two-sided) = " << std::setprecision(10) << result.p_value
       << '\n';
    os << "corrected alpha = " << result.corrected_alpha << '\n';
    os << "significant: " << (result.significant ? "yes" : "no") << '\n';
    return os.str();
}

std::string confusion_to_csv(const ConfusionMatrix& m, bool omit_empty)
{
    std::vector<int> keep;
    for (int i = 0; i < 16; ++i)
        if (!omit_empty || !m.row_empty(i) || !m.col_empty(i)) keep.push_back(i);

    std::ostringstream os;
    os << "gold\\pred";
    for (int c : keep) os << ',' << activity_set_name(activity_set_order()[c]);
    os << '\n';
    for (int r : keep) {
        os << activity_set_name(activity_set_order()[r]);
        for (int c : keep) os << ',' << std::setprecision(17) << m.percent(r, c);
        os << '\n';
    }
    return os.str();
}

}  // namespace epistact
