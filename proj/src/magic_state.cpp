#include "qre/magic_state.hpp"

#include <cmath>
#include <string>

namespace qre {

double RoundMap::apply(double eps) const {
    return prefactor * std::pow(eps, exponent);
}

double DistillationModel::injected_error(double p) const {
    return std::max(injection_error_factor * p, injection_error_floor);
}

std::vector<double> error_sequence(AncillaKind kind, double p, int rounds,
                                   const DistillationModel& model) {
    const RoundMap& map = model.round_map(kind);
    std::vector<double> seq;
    seq.reserve(static_cast<std::size_t>(rounds) + 1);
    seq.push_back(model.injected_error(p));
    for (int r = 1; r <= rounds; ++r) {
        // Round 1 outputs the injected state; later rounds suppress.
        seq.push_back(r == 1 ? seq.back() : map.apply(seq.back()));
    }
    return seq;
}

int required_rounds(AncillaKind kind, double p, double target,
                    const DistillationModel& model) {
    if (target >= p) return 0;

    const RoundMap& map = model.round_map(kind);
    double eps = model.injected_error(p);
    for (int r = 1; r <= model.max_rounds; ++r) {
        double next = (r == 1) ? eps : map.apply(eps);
        if (r > 1 && next >= eps)
            throw DistillationDiverges(
                "distillation map does not contract at error " + std::to_string(eps));
        eps = next;
        if (eps <= target) return r;
    }
    throw RoundCapExceeded("target " + std::to_string(target) + " not reached within " +
                           std::to_string(model.max_rounds) + " rounds");
}

CostVector distillation_cost(AncillaKind kind, int rounds, double p,
                             const DistillationModel& model,
                             const DistillationContext& ctx) {
    if (rounds == 0) return ctx.injection;
    double eps0 = model.injected_error(p);
    double attempts = 1.0 / (1.0 - eps0);
    return attempts * (ctx.injection + static_cast<double>(rounds) * ctx.round);
}

std::uint64_t factory_count(double gate_rate_per_ns, double factory_period_ns) {
    double demand = gate_rate_per_ns * factory_period_ns;
    if (demand <= 0.0) return 0;
    return static_cast<std::uint64_t>(std::ceil(demand));
}

std::uint64_t factory_footprint_blocks(AncillaKind kind) {
    std::uint64_t n = (kind == AncillaKind::S) ? 7 : 15;
    return n * n + n + 1;
}

}  // namespace qre
