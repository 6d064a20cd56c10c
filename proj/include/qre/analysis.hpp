#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qre/bacon_shor.hpp"
#include "qre/core.hpp"
#include "qre/surface.hpp"

namespace qre {

enum class CodeChoice { BaconShor, Surface };

namespace analysis {

// Logical gate mix used to average per-operation metrics, normalized to 1.
struct GateMix {
    GateArray<double> weights{};

    void normalize();
    double sum() const;
    static GateMix from_algorithm(const AlgorithmSpec& alg);
};

struct CodeSweepEntry {
    bool feasible = false;
    int code_parameter = 0;
    double avg_logical_time_ns = 0.0;
    double qubits_per_logical = 0.0;
    double gates_per_logical = 0.0;
    double logical_error = 0.0;
};

struct SweepRow {
    double p = 0.0;
    CodeSweepEntry bacon_shor;
    CodeSweepEntry surface;
};

struct SweepConfig {
    double gate_time_ns = 1000.0;  // applied to all twelve kinds
    bacon_shor::Config bacon_shor;
    surface::Config surface;
    DistillationModel distillation;
};

std::vector<double> log_grid(double p_min, double p_max, int points);

// Per grid point, solve both codes for a fixed target logical error and
// evaluate mix-averaged per-logical-gate metrics. Points where a code is
// above threshold (or beyond its search cap) are flagged, not errors.
std::vector<SweepRow> sweep(const std::vector<double>& p_grid, double target_logical_error,
                            const GateMix& mix, const SweepConfig& cfg);

enum class SweepMetric { Time, Qubits, Gates };

std::string sweep_metric_name(SweepMetric m);

// Grid interval bracketing the point where the two codes trade places on a
// metric; degenerate when they tie exactly at a grid point.
struct CrossoverInterval {
    double lo = 0.0;
    double hi = 0.0;
};

std::optional<CrossoverInterval> find_crossover(const std::vector<SweepRow>& rows,
                                                SweepMetric metric);

struct ParameterMapEntry {
    bool bs_feasible = false;
    bool sc_feasible = false;
    int level = 0;     // 0: no error correction needed
    int distance = 0;
};

std::vector<std::vector<ParameterMapEntry>> parameter_map(const std::vector<double>& p_grid,
                                                          const std::vector<double>& target_grid,
                                                          const SweepConfig& cfg);

// Physical gate-kind fractions, summing to 1. The reporting cutoff (0.01%)
// is applied by the renderer, not here.
GateArray<double> gate_composition_logical(const AlgorithmSpec& alg);
GateArray<double> gate_composition(const AlgorithmSpec& alg, const TechnologySpec& tech,
                                   CodeChoice code, int code_parameter,
                                   const bacon_shor::Config& bs_cfg,
                                   const surface::Config& sc_cfg,
                                   const DistillationModel& model);

}  // namespace analysis
}  // namespace qre
