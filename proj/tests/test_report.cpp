#include <doctest.h>

#include "qre/report.hpp"
#include "qre/surface.hpp"
#include "test_helpers.hpp"

using namespace qre;
using namespace qre::report;

namespace {

ReportDocument sample_doc() {
    ReportDocument doc;
    doc.algorithm = "Shor-1024";
    doc.technology = "Superconductors";
    doc.code = "surface";
    doc.epsilon = 0.5;
    doc.feasible = true;
    EstimatorOptions opts;
    doc.estimate = surface::estimate(test::load_shor(), test::load_tech("superconductors.json"),
                                     opts, surface::Config{}, DistillationModel{});
    return doc;
}

}  // namespace

TEST_CASE("table output carries the standard row labels") {
    std::string table = render_table(sample_doc());
    for (const char* label :
         {"Execution time", "No. qubits", "No. gates", "Dominant gate", "Code distance",
          "Logical gate error", "Logical gate time", "No. qubits per logical",
          "No. gates per logical"}) {
        CHECK(table.find(label) != std::string::npos);
    }
    CHECK(table.find("Code distance           5") != std::string::npos);
    CHECK(table.find("210 ns") != std::string::npos);  // cycle time
}

TEST_CASE("infeasible reports render an N/A body") {
    ReportDocument doc;
    doc.algorithm = "Shor-1024";
    doc.technology = "Neutral Atoms";
    doc.code = "bacon-shor";
    doc.feasible = false;
    doc.infeasible_reason = "above threshold";
    std::string table = render_table(doc);
    CHECK(table.find("N/A") != std::string::npos);
    CHECK(table.find("Code concatenations") != std::string::npos);
    std::string csv = render_csv(doc);
    CHECK(csv.find("N/A") != std::string::npos);
}

TEST_CASE("json round-trip reproduces the rendered table exactly") {
    ReportDocument doc = sample_doc();
    std::string json_text = render_json(doc);
    ReportDocument parsed = parse_json(json_text);
    CHECK(render_table(parsed) == render_table(doc));
    CHECK(render_csv(parsed) == render_csv(doc));
    CHECK(render_json(parsed) == json_text);
}

TEST_CASE("durations humanize with calendar years") {
    CHECK(humanize_duration_ns(2.22 * test::kYear) == "2.22 years");
    CHECK(humanize_duration_ns(57.98 * test::kDay) == "57.98 days");
    CHECK(humanize_duration_ns(10.81 * test::kHour) == "10.81 hours");
    CHECK(humanize_duration_ns(1.5e9) == "1.50 s");
    CHECK(humanize_duration_ns(2.5e6) == "2.50 ms");
    CHECK(humanize_duration_ns(3.2e3) == "3.20 us");
    CHECK(humanize_duration_ns(210.0) == "210.00 ns");
}

TEST_CASE("three significant figures in the table, full precision in json") {
    CHECK(format_sig3(282475249.0) == "2.82e+08");
    CHECK(format_sig3(2.95123e-11) == "2.95e-11");
    std::string full = format_full(282475249.0);
    CHECK(full.find("282475249") != std::string::npos);
}

TEST_CASE("sweep csv uses the fixed header and is byte-stable") {
    CHECK(std::string(kSweepCsvHeader) ==
          "p,bs_feasible,bs_level,bs_avg_time_ns,bs_qubits_per_logical,bs_gates_per_logical,"
          "bs_logical_error,sc_feasible,sc_distance,sc_avg_time_ns,sc_qubits_per_logical,"
          "sc_gates_per_logical,sc_logical_error");

    analysis::SweepConfig cfg;
    auto mix = analysis::GateMix::from_algorithm(test::load_shor());
    auto grid = analysis::log_grid(1e-9, 1e-5, 5);
    auto rows = analysis::sweep(grid, 1e-10, mix, cfg);
    std::string a = render_sweep_csv(rows, cfg);
    std::string b = render_sweep_csv(analysis::sweep(grid, 1e-10, mix, cfg), cfg);
    CHECK(a == b);
    CHECK(a.rfind(kSweepCsvHeader, 0) == 0);
    CHECK(a.find("# crossover time:") != std::string::npos);
    CHECK(a.find("# crossover qubits:") != std::string::npos);
    CHECK(a.find("# crossover gates:") != std::string::npos);
}

TEST_CASE("composition rendering is descending with a cutoff") {
    GateArray<double> fractions{};
    fractions[index_of(GateKind::T)] = 0.43768;
    fractions[index_of(GateKind::CNOT)] = 0.43769;
    fractions[index_of(GateKind::H)] = 0.12463;
    fractions[index_of(GateKind::S)] = 5e-5;  // below the 0.01% cutoff
    std::string text = render_composition(fractions);
    CHECK(text.find("CNOT") < text.find("T "));
    CHECK(text.find("H") != std::string::npos);
    CHECK(text.find("S ") == std::string::npos);
}
