#include "qre/surface.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qre {
namespace surface {

using nlohmann::json;

void Config::validate() const {
    if (!(threshold > 0.0)) throw InvalidValue("threshold must be > 0");
    if (!(c1 > 0.0) || !(c2 > 0.0)) throw InvalidValue("C1 and C2 must be > 0");
    if (!(qubits_per_tile_coeff > 0.0)) throw InvalidValue("K must be > 0");
    if (gates_per_cell_cycle < 1) throw InvalidValue("gates_per_cell_cycle must be >= 1");
    if (!(h_factor > 0.0)) throw InvalidValue("h_factor must be > 0");
    if (distance_cap < 3) throw InvalidValue("distance_cap must be >= 3");
}

Config load_config(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw SpecError("surface config must be a JSON object");
    Config cfg;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        if (key == "p_th") cfg.threshold = it.value().get<double>();
        else if (key == "C1") cfg.c1 = it.value().get<double>();
        else if (key == "C2") cfg.c2 = it.value().get<double>();
        else if (key == "K") cfg.qubits_per_tile_coeff = it.value().get<double>();
        else if (key == "gates_per_cell_cycle") cfg.gates_per_cell_cycle = it.value().get<int>();
        else if (key == "h_factor") cfg.h_factor = it.value().get<double>();
        else if (key == "distance_cap") cfg.distance_cap = it.value().get<int>();
        else throw InvalidValue("unknown key \"" + key + "\" in surface config");
    }
    cfg.validate();
    return cfg;
}

Config load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_config(ss.str());
}

int required_distance_for_target(double p, double target, const Config& cfg) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidValue("physical error rate must lie in (0,1)");
    if (p <= target) return 0;
    if (p >= cfg.threshold)
        throw AboveThreshold("physical error rate " + std::to_string(p) +
                             " is at or above the threshold " + std::to_string(cfg.threshold));
    const double base = cfg.c2 * p / cfg.threshold;
    if (base >= 1.0)
        throw AboveThreshold("C2 * p / p_th >= 1: the distance inequality has no solution");
    for (int d = 3; d <= cfg.distance_cap; d += 2) {
        if (logical_error(p, d, cfg) <= target) return d;
    }
    throw DistanceCapExceeded("no code distance up to " + std::to_string(cfg.distance_cap) +
                              " reaches per-gate error " + std::to_string(target));
}

int required_distance(double p, double total_gates, double epsilon, const Config& cfg) {
    if (!(total_gates >= 1.0)) throw InvalidValue("total gate count must be >= 1");
    return required_distance_for_target(p, epsilon / total_gates, cfg);
}

double logical_error(double p, int distance, const Config& cfg) {
    double exponent = std::floor((distance + 1) / 2.0);
    return cfg.c1 * std::pow(cfg.c2 * p / cfg.threshold, exponent);
}

double cycle_time_ns(const TechnologySpec& tech) {
    return tech.time(GateKind::PrepZero) + 4.0 * tech.time(GateKind::CNOT) +
           tech.time(GateKind::MeasX);
}

double ec_time_ns(int distance, const TechnologySpec& tech) {
    return static_cast<double>(distance) * cycle_time_ns(tech);
}

double smooth_rough_cnot_time_ns(int distance, const TechnologySpec& tech) {
    return 4.0 * ec_time_ns(distance, tech);
}

double logical_op_time_ns(GateKind kind, int distance, const TechnologySpec& tech,
                          const Config& cfg) {
    const double ec = ec_time_ns(distance, tech);
    switch (kind) {
        case GateKind::CNOT:
            // Three braided smooth-rough CNOTs, the parallel measurements,
            // and a final EC.
            return 3.0 * smooth_rough_cnot_time_ns(distance, tech) +
                   tech.time(GateKind::MeasX) + ec;
        case GateKind::SWAP:
            return 3.0 * logical_op_time_ns(GateKind::CNOT, distance, tech, cfg);
        case GateKind::H:
            return cfg.h_factor * ec;
        case GateKind::MeasX:
            return tech.time(GateKind::MeasX) + ec;
        case GateKind::MeasZ:
            return tech.time(GateKind::MeasZ) + ec;
        case GateKind::PrepPlus:
        case GateKind::PrepZero:
        case GateKind::X:
        case GateKind::Y:
        case GateKind::Z:
            return ec;
        case GateKind::S:
            return logical_op_time_ns(GateKind::CNOT, distance, tech, cfg) +
                   logical_op_time_ns(GateKind::MeasZ, distance, tech, cfg) + ec;
        case GateKind::T:
            return logical_op_time_ns(GateKind::CNOT, distance, tech, cfg) +
                   logical_op_time_ns(GateKind::MeasZ, distance, tech, cfg) +
                   0.5 * logical_op_time_ns(GateKind::S, distance, tech, cfg);
    }
    return ec;
}

std::uint64_t qubits_per_tile(int distance, const Config& cfg) {
    double d = static_cast<double>(distance);
    return static_cast<std::uint64_t>(std::llround(cfg.qubits_per_tile_coeff * d * d));
}

std::uint64_t tile_count(const AlgorithmSpec& alg, std::uint64_t factory_tiles) {
    return 2 * alg.logical_qubits + factory_tiles;
}

double total_gate_count(double total_qubits, double execution_time_ns,
                        const TechnologySpec& tech, const Config& cfg) {
    double cycles = execution_time_ns / cycle_time_ns(tech);
    double cells = total_qubits / 2.0;  // one syndrome ancilla per data qubit
    return cycles * cells * static_cast<double>(cfg.gates_per_cell_cycle);
}

DistillationContext distillation_context(int distance, const TechnologySpec& tech,
                                         const Config& cfg) {
    double cnot_ss = logical_op_time_ns(GateKind::CNOT, distance, tech, cfg);
    DistillationContext ctx;
    ctx.round.counts[index_of(GateKind::CNOT)] = 1.0;
    ctx.round.counts[index_of(GateKind::MeasX)] = 1.0;
    ctx.round.duration_ns = cnot_ss + tech.time(GateKind::MeasX) + ec_time_ns(distance, tech);
    ctx.injection.counts[index_of(GateKind::CNOT)] = 2.0;
    ctx.injection.counts[index_of(GateKind::MeasZ)] = 1.0;
    ctx.injection.counts[index_of(GateKind::PrepPlus)] = 1.0;
    ctx.injection.duration_ns = 2.0 * cnot_ss +
                                logical_op_time_ns(GateKind::MeasZ, distance, tech, cfg) +
                                logical_op_time_ns(GateKind::PrepPlus, distance, tech, cfg);
    return ctx;
}

ResourceEstimate estimate(const AlgorithmSpec& alg, const TechnologySpec& tech,
                          const EstimatorOptions& opts, const Config& cfg,
                          const DistillationModel& model) {
    const double p = tech.effective_gate_error(opts.include_memory_error);
    const double total_gates = total_logical_gates(alg);
    const int d = required_distance_for_target(p, opts.per_gate_target(total_gates), cfg);

    ResourceEstimate est;
    est.code_parameter = d;
    est.logical_gate_error = d == 0 ? p : logical_error(p, d, cfg);

    if (d == 0) {
        double exec_ns = 0.0;
        GateArray<double> counts{};
        std::size_t dominant = 0;
        for (GateKind k : kAllGateKinds) {
            double n = alg.count(k);
            if (n <= 0.0) continue;
            exec_ns += n / alg.parallel(k) * tech.time(k);
            counts[index_of(k)] += n;
            if (counts[index_of(k)] > counts[dominant]) dominant = index_of(k);
        }
        est.execution_time_ns = exec_ns;
        est.total_physical_qubits = static_cast<double>(alg.logical_qubits);
        est.total_physical_gates = total_gates;
        est.dominant_gate = kAllGateKinds[dominant];
        est.logical_gate_time_ns = tech.mean_gate_time_ns();
        est.qubits_per_logical = 1.0;
        est.gates_per_logical = 1.0;
        return est;
    }

    double exec_ns = 0.0;
    for (GateKind k : kAllGateKinds) {
        double n = alg.count(k);
        if (n <= 0.0) continue;
        exec_ns += n / alg.parallel(k) * logical_op_time_ns(k, d, tech, cfg);
    }
    est.execution_time_ns = exec_ns;
    est.logical_gate_time_ns = cycle_time_ns(tech);
    est.qubits_per_logical = static_cast<double>(qubits_per_tile(d, cfg));

    // One EC step on one tile: d cycles over the tile's ancilla cells.
    double cells_per_tile = est.qubits_per_logical / 2.0;
    est.gates_per_logical =
        static_cast<double>(d) * cells_per_tile * static_cast<double>(cfg.gates_per_cell_cycle);

    // Factory sizing: ancilla preparation runs offline, so only the steady
    // production rate matters for floor space.
    std::uint64_t factory_tiles = 0;
    if (exec_ns > 0.0) {
        DistillationContext ctx = distillation_context(d, tech, cfg);
        double target = est.logical_gate_error;
        int t_rounds = required_rounds(AncillaKind::T, p, target, model);
        int s_rounds = required_rounds(AncillaKind::S, p, target, model);
        double t_period = distillation_cost(AncillaKind::T, t_rounds, p, model, ctx).duration_ns;
        double s_period = distillation_cost(AncillaKind::S, s_rounds, p, model, ctx).duration_ns;
        double t_rate = alg.count(GateKind::T) / exec_ns;
        double s_rate = (alg.count(GateKind::S) + 0.5 * alg.count(GateKind::T)) / exec_ns;
        factory_tiles = factory_count(t_rate, t_period) * factory_footprint_blocks(AncillaKind::T) +
                        factory_count(s_rate, s_period) * factory_footprint_blocks(AncillaKind::S);
    }

    std::uint64_t tiles = tile_count(alg, factory_tiles);
    est.total_physical_qubits =
        static_cast<double>(tiles) * static_cast<double>(qubits_per_tile(d, cfg));

    // EC background plus the small braiding refinement.
    double background = total_gate_count(est.total_physical_qubits, exec_ns, tech, cfg);
    double braiding_extras = alg.count(GateKind::CNOT) *
                             static_cast<double>(cfg.gates_per_cell_cycle) *
                             static_cast<double>(d);
    est.total_physical_gates = background + braiding_extras;

    // Cell-cycle composition: four of the six gates are CNOTs.
    est.dominant_gate = GateKind::CNOT;
    return est;
}

}  // namespace surface
}  // namespace qre
