#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qre/core.hpp"
#include "qre/cost.hpp"
#include "qre/magic_state.hpp"

namespace qre {
namespace bacon_shor {

// Gates of one level-1 error-correction step (Steane-style syndrome
// extraction) and the gate sequence whose summed times give its duration.
struct ExtractionSchedule {
    GateArray<double> counts{};
    std::vector<GateKind> critical_path;

    double total_gates() const {
        double t = 0.0;
        for (double c : counts) t += c;
        return t;
    }

    void validate() const;
};

ExtractionSchedule default_schedule();

struct Config {
    double threshold = 2.02e-5;  // p_th; c = 1/p_th
    int tile_side = 7;           // each level multiplies qubits by tile_side^2
    int level_cap = 12;
    ExtractionSchedule schedule = default_schedule();

    // SWAP-based movement before a transversal two-qubit gate, applied per
    // concatenation level at the next lower level.
    GateArray<double> movement_swaps = default_movement();

    // Levels >= 2: the extraction is run twice per EC (counts), ancilla
    // blocks are shuttled between passes (extra lower-level SWAPs), and the
    // second pass overlaps the first except for a serial tail.
    double ec_repetitions = 2.0;
    double ec_transport_swaps = 40.0;
    double ec_duration_overlap = 1.2;

    static GateArray<double> default_movement() {
        GateArray<double> m{};
        m[index_of(GateKind::CNOT)] = 2.0;
        return m;
    }

    void validate() const;
};

Config load_config(const std::string& json_text);
Config load_config_file(const std::string& path);

// Smallest concatenation level l >= 0 with (p/p_th)^(2^l) * p_th <= target.
// Level 0 means the bare physical gate already meets the target.
int required_level_for_target(double p, double target, const Config& cfg);
int required_level(double p, double total_gates, double epsilon, const Config& cfg);

// Failure probability of one logical gate at level l; p itself at level 0.
double logical_error(double p, int level, const Config& cfg);

// tile_side^2 to the l (49^l by default). Exact in double up to level 9.
double qubits_per_logical(int level, const Config& cfg);

// Per-level cost tables. ops[k] is the full cost of one logical gate of
// kind k at the level; ec is the error-correction step at that level.
struct LevelCosts {
    GateArray<CostVector> ops{};
    CostVector ec;
};

// Levels 0..max_level; entry [0] holds bare physical gates (no EC).
std::vector<LevelCosts> build_cost_tables(const TechnologySpec& tech, const Config& cfg,
                                          int max_level);

CostVector ec_cost(int level, const TechnologySpec& tech, const Config& cfg);
CostVector gate_cost(GateKind kind, int level, const TechnologySpec& tech, const Config& cfg);

// Per-logical-operation costs at one level with the non-transversal S and T
// implemented by ancilla gadgets: counts carry the full expected distillation
// work per consumed state, durations carry the consumption latency (injection
// + one pipelined round + interaction circuit).
struct OpCosts {
    GateArray<CostVector> ops{};
    CostVector ec;
    int t_rounds = 0;
    int s_rounds = 0;
    CostVector t_sequence;  // full distillation sequence, factory sizing
    CostVector s_sequence;
};

OpCosts op_costs(int level, double p, const TechnologySpec& tech, const Config& cfg,
                 const DistillationModel& model);

ResourceEstimate estimate(const AlgorithmSpec& alg, const TechnologySpec& tech,
                          const EstimatorOptions& opts, const Config& cfg,
                          const DistillationModel& model);

}  // namespace bacon_shor
}  // namespace qre
