#pragma once

#include <cstdint>
#include <vector>

#include "qre/cost.hpp"
#include "qre/errors.hpp"

namespace qre {

// The two ancilla species consumed by non-transversal gates: |+i> for S and
// T|+> for T.
enum class AncillaKind { S, T };

// One distillation round maps the state error eps -> a * eps^k.
struct RoundMap {
    double prefactor = 0.0;
    double exponent = 0.0;

    double apply(double eps) const;
};

struct DistillationModel {
    // Injected-state infidelity: the injection circuit is not fault tolerant,
    // so the encoded state never starts cleaner than a fixed floor.
    double injection_error_factor = 1.0;
    double injection_error_floor = 1e-3;
    RoundMap s_round{7.0, 2.0};    // 7-to-1 Steane-style distillation
    RoundMap t_round{35.0, 3.0};   // 15-to-1 distillation
    int max_rounds = 10;

    const RoundMap& round_map(AncillaKind kind) const {
        return kind == AncillaKind::S ? s_round : t_round;
    }

    double injected_error(double p) const;
};

// State error after each successful round, starting at the injected error.
// The first round re-establishes the injected state; suppression applies
// from the second round on. entry [r] is the error after r rounds.
std::vector<double> error_sequence(AncillaKind kind, double p, int rounds,
                                   const DistillationModel& model);

// Smallest number of successful rounds leaving the state error at or below
// `target`. Zero when the raw physical state already meets the target.
int required_rounds(AncillaKind kind, double p, double target,
                    const DistillationModel& model);

// Per-round circuit costs in the ambient code context. The code estimators
// fill these in with their own logical gate costs.
struct DistillationContext {
    CostVector injection;  // one injection attempt
    CostVector round;      // one distillation round
};

// Expected cost of producing one distilled state: injection plus
// rounds * round cost, scaled by a uniform expected-attempts factor
// 1/(1 - eps0) so the round-cost term stays exactly linear in rounds.
CostVector distillation_cost(AncillaKind kind, int rounds, double p,
                             const DistillationModel& model,
                             const DistillationContext& ctx);

// Factories needed so steady-state production matches consumption.
std::uint64_t factory_count(double gate_rate_per_ns, double factory_period_ns);

// Logical blocks occupied by one factory: the working set of a pipelined
// n-to-1 cascade holding two tree stages plus the output (n^2 + n + 1).
std::uint64_t factory_footprint_blocks(AncillaKind kind);

}  // namespace qre
