#include "qre/analysis.hpp"

#include <cmath>

namespace qre {
namespace analysis {

void GateMix::normalize() {
    double s = sum();
    if (!(s > 0.0)) throw InvalidValue("gate mix must have positive total weight");
    for (double& w : weights) w /= s;
}

double GateMix::sum() const {
    double s = 0.0;
    for (double w : weights) s += w;
    return s;
}

GateMix GateMix::from_algorithm(const AlgorithmSpec& alg) {
    GateMix mix;
    mix.weights = alg.gate_counts;
    mix.normalize();
    return mix;
}

std::vector<double> log_grid(double p_min, double p_max, int points) {
    if (!(p_min > 0.0) || !(p_max > p_min)) throw InvalidValue("need 0 < p_min < p_max");
    if (points < 1) throw InvalidValue("need at least one grid point");
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    if (points == 1) {
        grid.push_back(p_min);
        return grid;
    }
    double lo = std::log10(p_min);
    double hi = std::log10(p_max);
    for (int i = 0; i < points; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(points - 1);
        grid.push_back(std::pow(10.0, lo + t * (hi - lo)));
    }
    return grid;
}

namespace {

TechnologySpec abstract_technology(double gate_time_ns, double p) {
    TechnologySpec tech;
    tech.name = "abstract";
    tech.gate_time_ns.fill(gate_time_ns);
    tech.worst_gate_error = p;
    return tech;
}

CodeSweepEntry eval_bacon_shor(double p, double target, const GateMix& mix,
                               const SweepConfig& cfg) {
    CodeSweepEntry e;
    int level;
    try {
        level = bacon_shor::required_level_for_target(p, target, cfg.bacon_shor);
    } catch (const EstimateError&) {
        return e;  // infeasible: no numeric metrics
    }
    e.feasible = true;
    e.code_parameter = level;
    e.logical_error = bacon_shor::logical_error(p, level, cfg.bacon_shor);
    e.qubits_per_logical = bacon_shor::qubits_per_logical(level, cfg.bacon_shor);

    TechnologySpec tech = abstract_technology(cfg.gate_time_ns, p);
    auto costs = bacon_shor::op_costs(level, p, tech, cfg.bacon_shor, cfg.distillation);
    double time = 0.0;
    double gates = 0.0;
    for (std::size_t i = 0; i < kGateKindCount; ++i) {
        time += mix.weights[i] * costs.ops[i].duration_ns;
        gates += mix.weights[i] * costs.ops[i].total_gates();
    }
    e.avg_logical_time_ns = time;
    e.gates_per_logical = gates;
    return e;
}

CodeSweepEntry eval_surface(double p, double target, const GateMix& mix,
                            const SweepConfig& cfg) {
    CodeSweepEntry e;
    int d;
    try {
        d = surface::required_distance_for_target(p, target, cfg.surface);
    } catch (const EstimateError&) {
        return e;
    }
    e.feasible = true;
    e.code_parameter = d;
    TechnologySpec tech = abstract_technology(cfg.gate_time_ns, p);
    if (d == 0) {
        e.logical_error = p;
        e.qubits_per_logical = 1.0;
        e.gates_per_logical = 1.0;
        e.avg_logical_time_ns = cfg.gate_time_ns;
        return e;
    }
    e.logical_error = surface::logical_error(p, d, cfg.surface);
    e.qubits_per_logical = static_cast<double>(surface::qubits_per_tile(d, cfg.surface));
    e.gates_per_logical = static_cast<double>(d) * e.qubits_per_logical / 2.0 *
                          static_cast<double>(cfg.surface.gates_per_cell_cycle);
    double time = 0.0;
    for (std::size_t i = 0; i < kGateKindCount; ++i)
        time += mix.weights[i] *
                surface::logical_op_time_ns(kAllGateKinds[i], d, tech, cfg.surface);
    e.avg_logical_time_ns = time;
    return e;
}

double metric_of(const CodeSweepEntry& e, SweepMetric m) {
    switch (m) {
        case SweepMetric::Time: return e.avg_logical_time_ns;
        case SweepMetric::Qubits: return e.qubits_per_logical;
        case SweepMetric::Gates: return e.gates_per_logical;
    }
    return 0.0;
}

}  // namespace

std::vector<SweepRow> sweep(const std::vector<double>& p_grid, double target_logical_error,
                            const GateMix& mix, const SweepConfig& cfg) {
    if (p_grid.empty()) throw InvalidValue("sweep grid is empty");
    std::vector<SweepRow> rows;
    rows.reserve(p_grid.size());
    for (double p : p_grid) {
        SweepRow row;
        row.p = p;
        row.bacon_shor = eval_bacon_shor(p, target_logical_error, mix, cfg);
        row.surface = eval_surface(p, target_logical_error, mix, cfg);
        rows.push_back(row);
    }
    return rows;
}

std::string sweep_metric_name(SweepMetric m) {
    switch (m) {
        case SweepMetric::Time: return "time";
        case SweepMetric::Qubits: return "qubits";
        case SweepMetric::Gates: return "gates";
    }
    return "unknown";
}

std::optional<CrossoverInterval> find_crossover(const std::vector<SweepRow>& rows,
                                                SweepMetric metric) {
    // Rows where neither code applies any encoding carry no comparison.
    auto comparable = [](const SweepRow& r) {
        return r.bacon_shor.feasible && r.surface.feasible &&
               (r.bacon_shor.code_parameter > 0 || r.surface.code_parameter > 0);
    };
    std::size_t mutual = 0;
    for (const SweepRow& r : rows)
        if (comparable(r)) ++mutual;
    if (mutual < 2) throw InsufficientData("need at least two rows where both codes are feasible");

    auto diff = [&](const SweepRow& r) {
        return metric_of(r.bacon_shor, metric) - metric_of(r.surface, metric);
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!comparable(rows[i])) continue;
        double d0 = diff(rows[i]);
        if (d0 == 0.0) return CrossoverInterval{rows[i].p, rows[i].p};
        if (i + 1 >= rows.size()) break;
        if (!comparable(rows[i + 1])) continue;
        double d1 = diff(rows[i + 1]);
        if (d1 == 0.0) return CrossoverInterval{rows[i + 1].p, rows[i + 1].p};
        if ((d0 < 0.0) != (d1 < 0.0)) return CrossoverInterval{rows[i].p, rows[i + 1].p};
    }
    return std::nullopt;
}

std::vector<std::vector<ParameterMapEntry>> parameter_map(const std::vector<double>& p_grid,
                                                          const std::vector<double>& target_grid,
                                                          const SweepConfig& cfg) {
    if (p_grid.empty() || target_grid.empty()) throw InvalidValue("parameter map grids are empty");
    std::vector<std::vector<ParameterMapEntry>> map;
    map.reserve(p_grid.size());
    for (double p : p_grid) {
        std::vector<ParameterMapEntry> row;
        row.reserve(target_grid.size());
        for (double target : target_grid) {
            ParameterMapEntry e;
            try {
                e.level = bacon_shor::required_level_for_target(p, target, cfg.bacon_shor);
                e.bs_feasible = true;
            } catch (const EstimateError&) {
            }
            try {
                e.distance = surface::required_distance_for_target(p, target, cfg.surface);
                e.sc_feasible = true;
            } catch (const EstimateError&) {
            }
            row.push_back(e);
        }
        map.push_back(std::move(row));
    }
    return map;
}

GateArray<double> gate_composition_logical(const AlgorithmSpec& alg) {
    GateMix mix = GateMix::from_algorithm(alg);
    return mix.weights;
}

GateArray<double> gate_composition(const AlgorithmSpec& alg, const TechnologySpec& tech,
                                   CodeChoice code, int code_parameter,
                                   const bacon_shor::Config& bs_cfg,
                                   const surface::Config& sc_cfg,
                                   const DistillationModel& model) {
    GateArray<double> totals{};
    if (code == CodeChoice::Surface) {
        // Error-correction background: the cell-cycle circuit dominates.
        (void)code_parameter;
        totals[index_of(GateKind::PrepZero)] = 1.0;
        totals[index_of(GateKind::CNOT)] = 4.0;
        totals[index_of(GateKind::MeasX)] = 1.0;
    } else {
        double p = tech.worst_gate_error;
        auto costs = bacon_shor::op_costs(code_parameter, p, tech, bs_cfg, model);
        for (std::size_t k = 0; k < kGateKindCount; ++k) {
            double n = alg.gate_counts[k];
            if (n <= 0.0) continue;
            for (std::size_t j = 0; j < kGateKindCount; ++j)
                totals[j] += n * costs.ops[k].counts[j];
        }
        (void)sc_cfg;
    }
    double sum = 0.0;
    for (double t : totals) sum += t;
    if (!(sum > 0.0)) throw InvalidValue("composition context produced no gates");
    for (double& t : totals) t /= sum;
    return totals;
}

}  // namespace analysis
}  // namespace qre
