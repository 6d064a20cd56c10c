#include "qre/bacon_shor.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qre {
namespace bacon_shor {

using nlohmann::json;

namespace {

constexpr GateKind kTransversal[] = {
    GateKind::CNOT, GateKind::SWAP, GateKind::H,     GateKind::PrepPlus,
    GateKind::PrepZero, GateKind::MeasX, GateKind::MeasZ, GateKind::X,
    GateKind::Y,    GateKind::Z,
};

bool is_transversal(GateKind k) { return k != GateKind::S && k != GateKind::T; }

}  // namespace

ExtractionSchedule default_schedule() {
    ExtractionSchedule s;
    auto set = [&](GateKind k, double n) { s.counts[index_of(k)] = n; };
    set(GateKind::PrepZero, 8);
    set(GateKind::PrepPlus, 8);
    set(GateKind::CNOT, 20);
    set(GateKind::MeasX, 8);
    set(GateKind::MeasZ, 8);
    set(GateKind::SWAP, 20);
    set(GateKind::X, 4);
    set(GateKind::Z, 3);
    s.critical_path = {GateKind::PrepZero, GateKind::CNOT, GateKind::CNOT,
                       GateKind::CNOT,     GateKind::CNOT, GateKind::MeasX,
                       GateKind::MeasZ,    GateKind::X,    GateKind::Z,
                       GateKind::SWAP,     GateKind::SWAP};
    return s;
}

void ExtractionSchedule::validate() const {
    if (total_gates() <= 0.0) throw InvalidValue("extraction schedule is empty");
    for (double c : counts)
        if (c < 0.0) throw InvalidValue("extraction schedule counts must be >= 0");
    GateArray<double> multiplicity{};
    for (GateKind k : critical_path) multiplicity[index_of(k)] += 1.0;
    for (std::size_t i = 0; i < kGateKindCount; ++i)
        if (multiplicity[i] > counts[i])
            throw InvalidValue("critical path uses more " +
                               std::string(gate_kind_name(kAllGateKinds[i])) +
                               " gates than the schedule provides");
}

void Config::validate() const {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw InvalidValue("threshold must lie in (0,1)");
    if (tile_side < 3) throw InvalidValue("tile_side must be >= 3");
    if (level_cap < 1) throw InvalidValue("level_cap must be >= 1");
    if (ec_repetitions < 1.0) throw InvalidValue("ec_repetitions must be >= 1");
    if (ec_transport_swaps < 0.0) throw InvalidValue("ec_transport_swaps must be >= 0");
    if (ec_duration_overlap < 1.0) throw InvalidValue("ec_duration_overlap must be >= 1");
    schedule.validate();
}

Config load_config(const std::string& json_text) {
    json doc = json::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw SpecError("bacon-shor config must be a JSON object");

    Config cfg;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        if (key == "p_th") cfg.threshold = it.value().get<double>();
        else if (key == "tile_side") cfg.tile_side = it.value().get<int>();
        else if (key == "level_cap") cfg.level_cap = it.value().get<int>();
        else if (key == "ec_repetitions") cfg.ec_repetitions = it.value().get<double>();
        else if (key == "ec_transport_swaps") cfg.ec_transport_swaps = it.value().get<double>();
        else if (key == "ec_duration_overlap") cfg.ec_duration_overlap = it.value().get<double>();
        else if (key == "movement_overhead") {
            cfg.movement_swaps = GateArray<double>{};
            for (auto mv = it.value().begin(); mv != it.value().end(); ++mv) {
                auto kind = parse_gate_kind(mv.key());
                if (!kind) throw InvalidValue("unknown gate kind in movement_overhead");
                cfg.movement_swaps[index_of(*kind)] = mv.value().get<double>();
            }
        } else if (key == "ec_schedule") {
            const json& sched = it.value();
            cfg.schedule.counts = GateArray<double>{};
            for (auto c = sched.at("counts").begin(); c != sched.at("counts").end(); ++c) {
                auto kind = parse_gate_kind(c.key());
                if (!kind) throw InvalidValue("unknown gate kind in ec_schedule counts");
                cfg.schedule.counts[index_of(*kind)] = c.value().get<double>();
            }
            cfg.schedule.critical_path.clear();
            for (const auto& g : sched.at("critical_path")) {
                auto kind = parse_gate_kind(g.get<std::string>());
                if (!kind) throw InvalidValue("unknown gate kind in ec_schedule critical_path");
                cfg.schedule.critical_path.push_back(*kind);
            }
        } else {
            throw InvalidValue("unknown key \"" + key + "\" in bacon-shor config");
        }
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

int required_level_for_target(double p, double target, const Config& cfg) {
    if (!(p > 0.0 && p < 1.0)) throw InvalidValue("physical error rate must lie in (0,1)");
    if (p <= target) return 0;
    if (p >= cfg.threshold)
        throw AboveThreshold("physical error rate " + std::to_string(p) +
                             " is at or above the threshold " + std::to_string(cfg.threshold));
    // l satisfies 2^l * ln(p/p_th) <= ln(target) - ln(p_th); compare in log
    // space so deep levels cannot underflow.
    const double log_ratio = std::log(p / cfg.threshold);  // < 0 below threshold
    const double bound = std::log(target) - std::log(cfg.threshold);
    for (int level = 1; level <= cfg.level_cap; ++level) {
        if (std::ldexp(log_ratio, level) <= bound) return level;
    }
    throw LevelCapExceeded("no concatenation level up to " + std::to_string(cfg.level_cap) +
                           " reaches per-gate error " + std::to_string(target));
}

int required_level(double p, double total_gates, double epsilon, const Config& cfg) {
    if (!(total_gates >= 1.0)) throw InvalidValue("total gate count must be >= 1");
    return required_level_for_target(p, epsilon / total_gates, cfg);
}

double logical_error(double p, int level, const Config& cfg) {
    if (level <= 0) return p;
    return std::pow(p / cfg.threshold, std::ldexp(1.0, level)) * cfg.threshold;
}

double qubits_per_logical(int level, const Config& cfg) {
    double per_level = static_cast<double>(cfg.tile_side) * static_cast<double>(cfg.tile_side);
    return std::pow(per_level, static_cast<double>(level));
}

std::vector<LevelCosts> build_cost_tables(const TechnologySpec& tech, const Config& cfg,
                                          int max_level) {
    std::vector<LevelCosts> levels(static_cast<std::size_t>(max_level) + 1);

    for (GateKind k : kAllGateKinds)
        levels[0].ops[index_of(k)] = CostVector::single(k, tech.time(k));

    const std::size_t swap_i = index_of(GateKind::SWAP);
    for (int m = 1; m <= max_level; ++m) {
        const LevelCosts& below = levels[static_cast<std::size_t>(m - 1)];
        LevelCosts& cur = levels[static_cast<std::size_t>(m)];

        CostVector ec;
        for (std::size_t i = 0; i < kGateKindCount; ++i) {
            double n = cfg.schedule.counts[i];
            if (n > 0.0)
                for (std::size_t j = 0; j < kGateKindCount; ++j)
                    ec.counts[j] += n * below.ops[i].counts[j];
        }
        double path_ns = 0.0;
        for (GateKind g : cfg.schedule.critical_path) path_ns += below.ops[index_of(g)].duration_ns;
        if (m >= 2) {
            for (std::size_t j = 0; j < kGateKindCount; ++j) {
                ec.counts[j] = cfg.ec_repetitions * ec.counts[j] +
                               cfg.ec_transport_swaps * below.ops[swap_i].counts[j];
            }
            path_ns *= cfg.ec_duration_overlap;
        }
        ec.duration_ns = path_ns;
        cur.ec = ec;

        for (GateKind k : kAllGateKinds) {
            if (!is_transversal(k)) continue;  // S and T come from ancilla gadgets
            std::size_t i = index_of(k);
            CostVector op;
            for (std::size_t j = 0; j < kGateKindCount; ++j)
                op.counts[j] = 9.0 * below.ops[i].counts[j] + ec.counts[j];
            op.duration_ns = below.ops[i].duration_ns + ec.duration_ns;
            double moves = cfg.movement_swaps[i];
            if (moves > 0.0) {
                for (std::size_t j = 0; j < kGateKindCount; ++j)
                    op.counts[j] += moves * below.ops[swap_i].counts[j];
                op.duration_ns += moves * below.ops[swap_i].duration_ns;
            }
            cur.ops[i] = op;
        }
    }
    return levels;
}

CostVector ec_cost(int level, const TechnologySpec& tech, const Config& cfg) {
    if (level < 1) throw InvalidValue("ec_cost needs level >= 1");
    return build_cost_tables(tech, cfg, level).back().ec;
}

CostVector gate_cost(GateKind kind, int level, const TechnologySpec& tech, const Config& cfg) {
    if (!is_transversal(kind)) throw NonTransversal(kind);
    if (level < 0) throw InvalidValue("gate_cost needs level >= 0");
    return build_cost_tables(tech, cfg, level).back().ops[index_of(kind)];
}

OpCosts op_costs(int level, double p, const TechnologySpec& tech, const Config& cfg,
                 const DistillationModel& model) {
    OpCosts out;
    if (level == 0) {
        for (GateKind k : kAllGateKinds)
            out.ops[index_of(k)] = CostVector::single(k, tech.time(k));
        return out;
    }

    auto tables = build_cost_tables(tech, cfg, level);
    const LevelCosts& lv = tables.back();
    out.ec = lv.ec;
    for (GateKind k : kTransversal) out.ops[index_of(k)] = lv.ops[index_of(k)];

    const CostVector& cnot = lv.ops[index_of(GateKind::CNOT)];
    const CostVector& meas_z = lv.ops[index_of(GateKind::MeasZ)];
    const CostVector& prep_plus = lv.ops[index_of(GateKind::PrepPlus)];
    const CostVector& pauli_z = lv.ops[index_of(GateKind::Z)];

    // Interaction gadgets: teleported gate plus the probabilistic correction.
    CostVector inter_s = cnot + meas_z + 0.5 * pauli_z;
    CostVector inter_t = cnot + meas_z + 0.5 * inter_s;

    // One distillation round: a logical CNOT into the candidate state, a
    // physical check measurement, then an EC step.
    DistillationContext ctx;
    ctx.round = cnot;
    ctx.round.counts[index_of(GateKind::MeasX)] += 1.0;
    ctx.round.duration_ns += tech.time(GateKind::MeasX);
    ctx.round += lv.ec;
    ctx.injection = 2.0 * cnot + meas_z + prep_plus;

    double target = logical_error(p, level, cfg);
    out.t_rounds = required_rounds(AncillaKind::T, p, target, model);
    out.s_rounds = required_rounds(AncillaKind::S, p, target, model);
    out.t_sequence = distillation_cost(AncillaKind::T, out.t_rounds, p, model, ctx);
    out.s_sequence = distillation_cost(AncillaKind::S, out.s_rounds, p, model, ctx);

    // Consumed-state latency: factories pipeline the rounds, so a consumer
    // sees the injection, the final round, and the interaction circuit.
    CostVector t_op = inter_t + out.t_sequence;
    t_op.duration_ns = ctx.injection.duration_ns + ctx.round.duration_ns + inter_t.duration_ns;
    CostVector s_op = inter_s + out.s_sequence;
    s_op.duration_ns = ctx.injection.duration_ns + ctx.round.duration_ns + inter_s.duration_ns;
    out.ops[index_of(GateKind::T)] = t_op;
    out.ops[index_of(GateKind::S)] = s_op;
    return out;
}

ResourceEstimate estimate(const AlgorithmSpec& alg, const TechnologySpec& tech,
                          const EstimatorOptions& opts, const Config& cfg,
                          const DistillationModel& model) {
    const double p = tech.effective_gate_error(opts.include_memory_error);
    const double total_gates = total_logical_gates(alg);
    const int level = required_level_for_target(p, opts.per_gate_target(total_gates), cfg);
    const OpCosts costs = op_costs(level, p, tech, cfg, model);

    ResourceEstimate est;
    est.code_parameter = level;
    est.logical_gate_error = logical_error(p, level, cfg);
    est.qubits_per_logical = qubits_per_logical(level, cfg);
    est.gates_per_logical = level == 0 ? 1.0 : costs.ec.total_gates();
    est.logical_gate_time_ns = level == 0 ? tech.mean_gate_time_ns() : costs.ec.duration_ns;

    GateArray<double> physical{};
    double exec_ns = 0.0;
    for (GateKind k : kAllGateKinds) {
        double n = alg.count(k);
        if (n <= 0.0) continue;
        const CostVector& op = costs.ops[index_of(k)];
        exec_ns += n / alg.parallel(k) * op.duration_ns;
        for (std::size_t j = 0; j < kGateKindCount; ++j) physical[j] += n * op.counts[j];
    }
    est.execution_time_ns = exec_ns;

    double gates = 0.0;
    std::size_t dominant = 0;
    for (std::size_t j = 0; j < kGateKindCount; ++j) {
        gates += physical[j];
        if (physical[j] > physical[dominant]) dominant = j;
    }
    est.total_physical_gates = gates;
    est.dominant_gate = kAllGateKinds[dominant];

    double qubits = static_cast<double>(alg.logical_qubits) * est.qubits_per_logical;
    if (level >= 1 && exec_ns > 0.0) {
        double t_rate = alg.count(GateKind::T) / exec_ns;
        double s_rate = (alg.count(GateKind::S) + 0.5 * alg.count(GateKind::T)) / exec_ns;
        auto t_factories = factory_count(t_rate, costs.t_sequence.duration_ns);
        auto s_factories = factory_count(s_rate, costs.s_sequence.duration_ns);
        double factory_blocks =
            static_cast<double>(t_factories * factory_footprint_blocks(AncillaKind::T) +
                                s_factories * factory_footprint_blocks(AncillaKind::S));
        qubits += factory_blocks * est.qubits_per_logical;
    }
    est.total_physical_qubits = qubits;
    return est;
}

}  // namespace bacon_shor
}  // namespace qre
