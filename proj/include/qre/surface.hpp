#pragma once

#include <cstdint>
#include <string>

#include "qre/core.hpp"
#include "qre/cost.hpp"
#include "qre/magic_state.hpp"

namespace qre {
namespace surface {

struct Config {
    double threshold = 1e-2;        // p_th
    double c1 = 0.13;               // logical error = C1 * (C2 p / p_th)^floor((d+1)/2)
    double c2 = 0.61;
    double qubits_per_tile_coeff = 129.0;  // K; qubits per tile = round(K d^2)
    int gates_per_cell_cycle = 6;   // one prep, four CNOTs, one measurement
    double h_factor = 2.0;          // logical H duration in EC units
    int distance_cap = 255;

    void validate() const;
};

Config load_config(const std::string& json_text);
Config load_config_file(const std::string& path);

// Smallest odd distance d >= 3 meeting the target; 0 when the bare physical
// gate already does.
int required_distance_for_target(double p, double target, const Config& cfg);
int required_distance(double p, double total_gates, double epsilon, const Config& cfg);

double logical_error(double p, int distance, const Config& cfg);

// One parallel syndrome-measurement round across the lattice.
double cycle_time_ns(const TechnologySpec& tech);

// A full error-correction step: every syndrome measured d times.
double ec_time_ns(int distance, const TechnologySpec& tech);

double smooth_rough_cnot_time_ns(int distance, const TechnologySpec& tech);

double logical_op_time_ns(GateKind kind, int distance, const TechnologySpec& tech,
                          const Config& cfg);

std::uint64_t qubits_per_tile(int distance, const Config& cfg);

// Logical tiles plus paired ancilla tiles plus distillation factory tiles.
std::uint64_t tile_count(const AlgorithmSpec& alg, std::uint64_t factory_tiles);

// Error-correction background: cycles * ancilla cells * gates per cell-cycle.
double total_gate_count(double total_qubits, double execution_time_ns,
                        const TechnologySpec& tech, const Config& cfg);

// Distillation circuits in this code context: one round is a braided CNOT
// into the candidate state, a check measurement, and an EC step; injection
// teleports a physical state into the code.
DistillationContext distillation_context(int distance, const TechnologySpec& tech,
                                         const Config& cfg);

ResourceEstimate estimate(const AlgorithmSpec& alg, const TechnologySpec& tech,
                          const EstimatorOptions& opts, const Config& cfg,
                          const DistillationModel& model);

}  // namespace surface
}  // namespace qre
