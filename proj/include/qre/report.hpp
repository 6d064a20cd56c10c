#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qre/analysis.hpp"
#include "qre/core.hpp"

namespace qre {
namespace report {

// One rendered estimate: header echoing the request, the estimate body in
// the standard row order, and footnotes (infeasibility or calibration notes).
struct ReportDocument {
    std::string algorithm;
    std::string technology;
    std::string code;
    double epsilon = 0.5;
    bool include_memory_error = false;
    bool feasible = false;
    std::string infeasible_reason;
    std::optional<ResourceEstimate> estimate;
    std::vector<std::string> footnotes;
};

std::string format_sig3(double v);
std::string format_full(double v);

// Auto-scaled human duration (ns through years, 365.25-day years).
std::string humanize_duration_ns(double ns);

std::string render_table(const ReportDocument& doc);
std::string render_csv(const ReportDocument& doc);
std::string render_json(const ReportDocument& doc);
ReportDocument parse_json(const std::string& text);

// Sweep CSV: fixed column order, one row per grid point, then one crossover
// summary comment line per metric.
extern const char* const kSweepCsvHeader;
std::string render_sweep_csv(const std::vector<analysis::SweepRow>& rows,
                             const analysis::SweepConfig& cfg);
std::string render_sweep_json(const std::vector<analysis::SweepRow>& rows);

// Two columns (kind, fraction), descending, small fractions cut off.
std::string render_composition(const GateArray<double>& fractions, double cutoff = 1e-4);

}  // namespace report
}  // namespace qre
