#include "qre/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace qre {
namespace report {

using nlohmann::json;

std::string format_sig3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string format_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string humanize_duration_ns(double ns) {
    struct Unit {
        double scale;
        const char* name;
    };
    constexpr double kSecond = 1e9;
    constexpr double kHour = 3600.0 * kSecond;
    constexpr double kDay = 24.0 * kHour;
    constexpr double kYear = 365.25 * kDay;
    const Unit units[] = {
        {kYear, "years"}, {kDay, "days"}, {kHour, "hours"},
        {kSecond, "s"},   {1e6, "ms"},    {1e3, "us"},
    };
    for (const Unit& u : units) {
        if (ns >= u.scale) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.2f %s", ns / u.scale, u.name);
            return buf;
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f ns", ns);
    return buf;
}

namespace {

struct Row {
    const char* label;
    std::string value;
};

std::vector<Row> body_rows(const ReportDocument& doc) {
    std::vector<Row> rows;
    const char* param_label =
        doc.code == "bacon-shor" ? "Code concatenations" : "Code distance";
    if (!doc.feasible || !doc.estimate) {
        for (const char* label :
             {"Execution time", "No. qubits", "No. gates", "Dominant gate"})
            rows.push_back({label, "N/A"});
        rows.push_back({param_label, "N/A"});
        for (const char* label : {"Logical gate error", "Logical gate time",
                                  "No. qubits per logical", "No. gates per logical"})
            rows.push_back({label, "N/A"});
        return rows;
    }
    const ResourceEstimate& est = *doc.estimate;
    rows.push_back({"Execution time", humanize_duration_ns(est.execution_time_ns)});
    rows.push_back({"No. qubits", format_sig3(est.total_physical_qubits)});
    rows.push_back({"No. gates", format_sig3(est.total_physical_gates)});
    rows.push_back({"Dominant gate", std::string(gate_kind_name(est.dominant_gate))});
    rows.push_back({param_label, std::to_string(est.code_parameter)});
    rows.push_back({"Logical gate error", format_sig3(est.logical_gate_error)});
    rows.push_back({"Logical gate time", format_sig3(est.logical_gate_time_ns) + " ns"});
    rows.push_back({"No. qubits per logical", format_sig3(est.qubits_per_logical)});
    rows.push_back({"No. gates per logical", format_sig3(est.gates_per_logical)});
    return rows;
}

}  // namespace

std::string render_table(const ReportDocument& doc) {
    std::ostringstream out;
    out << "Algorithm:  " << doc.algorithm << "\n";
    out << "Technology: " << doc.technology << "\n";
    out << "Code:       " << doc.code << "\n";
    out << "Epsilon:    " << format_sig3(doc.epsilon)
        << (doc.include_memory_error ? "  (memory error included)" : "") << "\n";
    out << "\n";
    for (const Row& r : body_rows(doc)) {
        char line[128];
        std::snprintf(line, sizeof(line), "%-24s%s\n", r.label, r.value.c_str());
        out << line;
    }
    if (!doc.feasible && !doc.infeasible_reason.empty())
        out << "\nInfeasible: " << doc.infeasible_reason << "\n";
    for (const std::string& note : doc.footnotes) out << "Note: " << note << "\n";
    return out.str();
}

std::string render_csv(const ReportDocument& doc) {
    std::ostringstream out;
    out << "algorithm,technology,code,feasible,execution_time_ns,total_physical_qubits,"
           "total_physical_gates,dominant_gate,code_parameter,logical_gate_error,"
           "logical_gate_time_ns,qubits_per_logical,gates_per_logical\n";
    out << doc.algorithm << ',' << doc.technology << ',' << doc.code << ','
        << (doc.feasible ? 1 : 0);
    if (doc.feasible && doc.estimate) {
        const ResourceEstimate& e = *doc.estimate;
        out << ',' << format_full(e.execution_time_ns) << ','
            << format_full(e.total_physical_qubits) << ','
            << format_full(e.total_physical_gates) << ',' << gate_kind_name(e.dominant_gate)
            << ',' << e.code_parameter << ',' << format_full(e.logical_gate_error) << ','
            << format_full(e.logical_gate_time_ns) << ',' << format_full(e.qubits_per_logical)
            << ',' << format_full(e.gates_per_logical);
    } else {
        out << ",N/A,N/A,N/A,N/A,N/A,N/A,N/A,N/A,N/A";
    }
    out << '\n';
    return out.str();
}

std::string render_json(const ReportDocument& doc) {
    json j;
    j["header"] = {{"algorithm", doc.algorithm},
                   {"technology", doc.technology},
                   {"code", doc.code},
                   {"epsilon", doc.epsilon},
                   {"include_memory_error", doc.include_memory_error}};
    j["feasible"] = doc.feasible;
    if (!doc.feasible) j["infeasible_reason"] = doc.infeasible_reason;
    if (doc.feasible && doc.estimate) {
        const ResourceEstimate& e = *doc.estimate;
        j["estimate"] = {{"execution_time_ns", e.execution_time_ns},
                         {"total_physical_qubits", e.total_physical_qubits},
                         {"total_physical_gates", e.total_physical_gates},
                         {"dominant_gate", std::string(gate_kind_name(e.dominant_gate))},
                         {"code_parameter", e.code_parameter},
                         {"logical_gate_error", e.logical_gate_error},
                         {"logical_gate_time_ns", e.logical_gate_time_ns},
                         {"qubits_per_logical", e.qubits_per_logical},
                         {"gates_per_logical", e.gates_per_logical}};
    }
    j["footnotes"] = doc.footnotes;
    return j.dump(2) + "\n";
}

ReportDocument parse_json(const std::string& text) {
    json j = json::parse(text);
    ReportDocument doc;
    doc.algorithm = j.at("header").at("algorithm").get<std::string>();
    doc.technology = j.at("header").at("technology").get<std::string>();
    doc.code = j.at("header").at("code").get<std::string>();
    doc.epsilon = j.at("header").at("epsilon").get<double>();
    doc.include_memory_error = j.at("header").at("include_memory_error").get<bool>();
    doc.feasible = j.at("feasible").get<bool>();
    if (j.contains("infeasible_reason"))
        doc.infeasible_reason = j.at("infeasible_reason").get<std::string>();
    if (j.contains("estimate")) {
        const json& e = j.at("estimate");
        ResourceEstimate est;
        est.execution_time_ns = e.at("execution_time_ns").get<double>();
        est.total_physical_qubits = e.at("total_physical_qubits").get<double>();
        est.total_physical_gates = e.at("total_physical_gates").get<double>();
        auto kind = parse_gate_kind(e.at("dominant_gate").get<std::string>());
        if (!kind) throw InvalidValue("bad dominant_gate in report JSON");
        est.dominant_gate = *kind;
        est.code_parameter = e.at("code_parameter").get<int>();
        est.logical_gate_error = e.at("logical_gate_error").get<double>();
        est.logical_gate_time_ns = e.at("logical_gate_time_ns").get<double>();
        est.qubits_per_logical = e.at("qubits_per_logical").get<double>();
        est.gates_per_logical = e.at("gates_per_logical").get<double>();
        doc.estimate = est;
    }
    for (const auto& note : j.at("footnotes")) doc.footnotes.push_back(note.get<std::string>());
    return doc;
}

const char* const kSweepCsvHeader =
    "p,bs_feasible,bs_level,bs_avg_time_ns,bs_qubits_per_logical,bs_gates_per_logical,"
    "bs_logical_error,sc_feasible,sc_distance,sc_avg_time_ns,sc_qubits_per_logical,"
    "sc_gates_per_logical,sc_logical_error";

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void append_entry(std::ostringstream& out, const analysis::CodeSweepEntry& e) {
    if (e.feasible) {
        out << ",1," << e.code_parameter << ',' << fmt(e.avg_logical_time_ns) << ','
            << fmt(e.qubits_per_logical) << ',' << fmt(e.gates_per_logical) << ','
            << fmt(e.logical_error);
    } else {
        out << ",0,,,,,";
    }
}

}  // namespace

std::string render_sweep_csv(const std::vector<analysis::SweepRow>& rows,
                             const analysis::SweepConfig& cfg) {
    (void)cfg;
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    for (const analysis::SweepRow& row : rows) {
        out << fmt(row.p);
        append_entry(out, row.bacon_shor);
        append_entry(out, row.surface);
        out << '\n';
    }
    using analysis::SweepMetric;
    for (SweepMetric m : {SweepMetric::Time, SweepMetric::Qubits, SweepMetric::Gates}) {
        out << "# crossover " << analysis::sweep_metric_name(m) << ": ";
        try {
            auto iv = analysis::find_crossover(rows, m);
            if (iv)
                out << '[' << fmt(iv->lo) << ", " << fmt(iv->hi) << ']';
            else
                out << "none";
        } catch (const InsufficientData&) {
            out << "insufficient data";
        }
        out << '\n';
    }
    return out.str();
}

std::string render_sweep_json(const std::vector<analysis::SweepRow>& rows) {
    json arr = json::array();
    auto entry = [](const analysis::CodeSweepEntry& e) {
        json j;
        j["feasible"] = e.feasible;
        if (e.feasible) {
            j["code_parameter"] = e.code_parameter;
            j["avg_logical_time_ns"] = e.avg_logical_time_ns;
            j["qubits_per_logical"] = e.qubits_per_logical;
            j["gates_per_logical"] = e.gates_per_logical;
            j["logical_error"] = e.logical_error;
        }
        return j;
    };
    for (const analysis::SweepRow& row : rows) {
        json j;
        j["p"] = row.p;
        j["bacon_shor"] = entry(row.bacon_shor);
        j["surface"] = entry(row.surface);
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string render_composition(const GateArray<double>& fractions, double cutoff) {
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < kGateKindCount; ++i) order.push_back(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fractions[a] > fractions[b]; });
    std::ostringstream out;
    for (std::size_t i : order) {
        if (fractions[i] < cutoff) continue;
        char line[64];
        std::snprintf(line, sizeof(line), "%-10s%.6f\n",
                      std::string(gate_kind_name(kAllGateKinds[i])).c_str(), fractions[i]);
        out << line;
    }
    return out.str();
}

}  // namespace report
}  // namespace qre
