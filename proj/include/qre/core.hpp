#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qre/cost.hpp"
#include "qre/errors.hpp"
#include "qre/gates.hpp"

namespace qre {

// Physical gate times and error rates for one hardware platform.
struct TechnologySpec {
    std::string name;
    GateArray<double> gate_time_ns{};          // all twelve kinds, > 0
    double worst_gate_error = 0.0;             // p, in (0,1)
    std::optional<double> memory_error_per_ns; // idle-qubit error rate, >= 0

    double time(GateKind k) const { return gate_time_ns[index_of(k)]; }

    double mean_gate_time_ns() const {
        double t = 0.0;
        for (double g : gate_time_ns) t += g;
        return t / static_cast<double>(kGateKindCount);
    }

    // Effective physical error rate. When requested and the platform reports
    // a memory error rate, idle decay over an average gate slot is folded in.
    double effective_gate_error(bool include_memory_error) const {
        double p = worst_gate_error;
        if (include_memory_error && memory_error_per_ns)
            p += *memory_error_per_ns * mean_gate_time_ns();
        return p;
    }
};

// Logical-level description of one algorithm: qubits, gate counts, and the
// average number of gates of each kind that run concurrently.
struct AlgorithmSpec {
    std::string name;
    std::uint64_t logical_qubits = 0;
    GateArray<double> gate_counts{};   // nonnegative integers
    GateArray<double> parallelism{};   // >= 1, defaults to 1

    double count(GateKind k) const { return gate_counts[index_of(k)]; }
    double parallel(GateKind k) const { return parallelism[index_of(k)]; }
};

struct EstimatorOptions {
    double target_failure = 0.5;                      // epsilon, in (0,1)
    std::optional<double> target_logical_error;       // sweep mode: replaces eps/N
    bool include_memory_error = false;

    // Per-gate error budget the code solver must reach.
    double per_gate_target(double total_logical_gates) const {
        if (target_logical_error) return *target_logical_error;
        return target_failure / total_logical_gates;
    }
};

// The nine reported quantities for one (algorithm, technology, code) triple.
struct ResourceEstimate {
    double execution_time_ns = 0.0;
    double total_physical_qubits = 0.0;
    double total_physical_gates = 0.0;   // may exceed integer range; exact as a sum of doubles
    GateKind dominant_gate = GateKind::CNOT;
    int code_parameter = 0;              // concatenation level or code distance
    double logical_gate_error = 0.0;
    double logical_gate_time_ns = 0.0;
    double qubits_per_logical = 0.0;
    double gates_per_logical = 0.0;
};

// Loaders for the JSON spec documents. Unknown keys are rejected so a typo
// cannot silently drop a field.
TechnologySpec load_technology(const std::string& json_text);
TechnologySpec load_technology_file(const std::string& path);
AlgorithmSpec load_algorithm(const std::string& json_text);
AlgorithmSpec load_algorithm_file(const std::string& path);

double total_logical_gates(const AlgorithmSpec& alg);

// Toffoli -> {7 CNOT, 2 H, 7 T} per instance; the T entry aggregates T and
// its adjoint.
GateArray<double> decompose_toffoli(double toffoli_count);

}  // namespace qre
