#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qre/analysis.hpp"
#include "qre/bacon_shor.hpp"
#include "qre/core.hpp"
#include "qre/report.hpp"
#include "qre/surface.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;

// Bare spec names resolve against QEC_SPECS_DIR, then the bundled specs/.
std::string resolve_spec_path(const std::string& arg) {
    if (fs::exists(arg)) return arg;
    if (const char* dir = std::getenv("QEC_SPECS_DIR")) {
        fs::path candidate = fs::path(dir) / arg;
        if (fs::exists(candidate)) return candidate.string();
    }
    fs::path bundled = fs::path("specs") / arg;
    if (fs::exists(bundled)) return bundled.string();
    return arg;
}

struct CodeConfigs {
    qre::bacon_shor::Config bacon_shor;
    qre::surface::Config surface;
    qre::DistillationModel distillation;
};

qre::DistillationModel load_distillation_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw qre::SpecError("cannot open file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw qre::SpecError("magic-state config must be a JSON object");
    qre::DistillationModel model;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string& key = it.key();
        if (key == "injection_error_factor") model.injection_error_factor = it.value().get<double>();
        else if (key == "injection_error_floor") model.injection_error_floor = it.value().get<double>();
        else if (key == "max_rounds") model.max_rounds = it.value().get<int>();
        else if (key == "s_round" || key == "t_round") {
            qre::RoundMap rm{it.value().at("a").get<double>(), it.value().at("k").get<double>()};
            (key == "s_round" ? model.s_round : model.t_round) = rm;
        } else {
            throw qre::InvalidValue("unknown key \"" + key + "\" in magic-state config");
        }
    }
    return model;
}

// Overrides: explicit flag first, then codes/<name>.json next to the cwd.
CodeConfigs load_code_configs(const std::string& bs_path, const std::string& sc_path,
                              const std::string& ms_path) {
    CodeConfigs cfg;
    auto pick = [](const std::string& flag, const char* bundled) -> std::string {
        if (!flag.empty()) return flag;
        if (fs::exists(bundled)) return bundled;
        return {};
    };
    std::string bs = pick(bs_path, "codes/bacon_shor.json");
    if (!bs.empty()) cfg.bacon_shor = qre::bacon_shor::load_config_file(bs);
    std::string sc = pick(sc_path, "codes/surface.json");
    if (!sc.empty()) cfg.surface = qre::surface::load_config_file(sc);
    std::string ms = pick(ms_path, "codes/magic_state.json");
    if (!ms.empty()) cfg.distillation = load_distillation_config(ms);
    return cfg;
}

void write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw qre::SpecError("cannot write output file: " + output_path);
    out << text;
}

int run_estimate(const std::string& tech_path, const std::string& alg_path,
                 const std::string& code, const std::string& out_format,
                 const std::string& output_path, double epsilon, bool include_memory,
                 const CodeConfigs& cfg) {
    qre::TechnologySpec tech = qre::load_technology_file(resolve_spec_path(tech_path));
    qre::AlgorithmSpec alg = qre::load_algorithm_file(resolve_spec_path(alg_path));

    qre::EstimatorOptions opts;
    opts.target_failure = epsilon;
    opts.include_memory_error = include_memory;

    qre::report::ReportDocument doc;
    doc.algorithm = alg.name;
    doc.technology = tech.name;
    doc.code = code;
    doc.epsilon = epsilon;
    doc.include_memory_error = include_memory;

    int exit_code = kExitOk;
    try {
        if (code == "bacon-shor")
            doc.estimate = qre::bacon_shor::estimate(alg, tech, opts, cfg.bacon_shor,
                                                     cfg.distillation);
        else
            doc.estimate = qre::surface::estimate(alg, tech, opts, cfg.surface,
                                                  cfg.distillation);
        doc.feasible = true;
    } catch (const qre::EstimateError& e) {
        doc.feasible = false;
        doc.infeasible_reason = e.what();
        exit_code = kExitInfeasible;
    }

    std::string text;
    if (out_format == "table") text = qre::report::render_table(doc);
    else if (out_format == "csv") text = qre::report::render_csv(doc);
    else text = qre::report::render_json(doc);
    write_output(text, output_path);
    return exit_code;
}

int run_sweep(double p_min, double p_max, int points, double target, double gate_time_ns,
              const std::string& mix_path, const std::string& out_format,
              const std::string& output_path, const CodeConfigs& code_cfg) {
    if (!(p_min < p_max)) throw qre::InvalidValue("--p-min must be below --p-max");

    qre::analysis::SweepConfig cfg;
    cfg.gate_time_ns = gate_time_ns;
    cfg.bacon_shor = code_cfg.bacon_shor;
    cfg.surface = code_cfg.surface;
    cfg.distillation = code_cfg.distillation;

    qre::analysis::GateMix mix;
    if (!mix_path.empty()) {
        mix = qre::analysis::GateMix::from_algorithm(
            qre::load_algorithm_file(resolve_spec_path(mix_path)));
    } else {
        mix = qre::analysis::GateMix::from_algorithm(
            qre::load_algorithm_file(resolve_spec_path("shor1024.json")));
    }

    auto grid = qre::analysis::log_grid(p_min, p_max, points);
    auto rows = qre::analysis::sweep(grid, target, mix, cfg);

    std::string text = out_format == "json" ? qre::report::render_sweep_json(rows)
                                            : qre::report::render_sweep_csv(rows, cfg);
    write_output(text, output_path);
    return kExitOk;
}

int run_composition(const std::string& tech_path, const std::string& alg_path,
                    const std::string& code, bool logical, double epsilon,
                    bool include_memory, const std::string& output_path,
                    const CodeConfigs& cfg) {
    qre::AlgorithmSpec alg = qre::load_algorithm_file(resolve_spec_path(alg_path));
    if (logical) {
        write_output(qre::report::render_composition(
                         qre::analysis::gate_composition_logical(alg)),
                     output_path);
        return kExitOk;
    }
    qre::TechnologySpec tech = qre::load_technology_file(resolve_spec_path(tech_path));
    double p = tech.effective_gate_error(include_memory);
    double n = qre::total_logical_gates(alg);
    try {
        qre::CodeChoice choice =
            code == "bacon-shor" ? qre::CodeChoice::BaconShor : qre::CodeChoice::Surface;
        int parameter =
            choice == qre::CodeChoice::BaconShor
                ? qre::bacon_shor::required_level(p, n, epsilon, cfg.bacon_shor)
                : qre::surface::required_distance(p, n, epsilon, cfg.surface);
        auto fractions = qre::analysis::gate_composition(alg, tech, choice, parameter,
                                                         cfg.bacon_shor, cfg.surface,
                                                         cfg.distillation);
        write_output(qre::report::render_composition(fractions), output_path);
    } catch (const qre::EstimateError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fault-tolerance overhead estimator for concatenated and surface codes"};
    app.require_subcommand(1);

    std::string bs_cfg_path, sc_cfg_path, ms_cfg_path;
    app.add_option("--bacon-shor-config", bs_cfg_path, "Bacon-Shor config override (JSON)");
    app.add_option("--surface-config", sc_cfg_path, "Surface-code config override (JSON)");
    app.add_option("--magic-state-config", ms_cfg_path, "Distillation model override (JSON)");

    auto* est = app.add_subcommand("estimate", "Estimate resources for one run");
    std::string tech_path, alg_path, code = "surface", out_format = "table", output_path;
    double epsilon = 0.5;
    bool include_memory = false;
    est->add_option("--tech", tech_path, "Technology spec file")->required();
    est->add_option("--alg", alg_path, "Algorithm spec file")->required();
    est->add_option("--code", code, "Error-correcting code")
        ->check(CLI::IsMember({"bacon-shor", "surface"}));
    est->add_option("--out", out_format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    est->add_option("--output", output_path, "Write output to a file");
    est->add_option("--epsilon", epsilon, "Target overall failure probability");
    est->add_flag("--include-memory-error", include_memory,
                  "Fold the idle-qubit error rate into the gate error");

    auto* swp = app.add_subcommand("sweep", "Sweep the physical error rate");
    double p_min = 1e-10, p_max = 1e-2, target = 1e-10, gate_time_ns = 1000.0;
    int points = 33;
    std::string mix_path, sweep_format = "csv", sweep_output;
    swp->add_option("--p-min", p_min, "Lowest physical error rate");
    swp->add_option("--p-max", p_max, "Highest physical error rate");
    swp->add_option("--points", points, "Grid points (log-uniform)")->check(CLI::PositiveNumber);
    swp->add_option("--target", target, "Target logical error per gate");
    swp->add_option("--gate-time-ns", gate_time_ns, "Uniform physical gate time");
    swp->add_option("--mix", mix_path, "Algorithm file supplying the gate mix");
    swp->add_option("--out", sweep_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    swp->add_option("--output", sweep_output, "Write output to a file");

    auto* cmp = app.add_subcommand("composition", "Physical gate-kind breakdown");
    std::string cmp_tech, cmp_alg, cmp_code = "surface", cmp_output;
    double cmp_epsilon = 0.5;
    bool cmp_logical = false, cmp_memory = false;
    cmp->add_option("--tech", cmp_tech, "Technology spec file");
    cmp->add_option("--alg", cmp_alg, "Algorithm spec file")->required();
    cmp->add_option("--code", cmp_code, "Error-correcting code")
        ->check(CLI::IsMember({"bacon-shor", "surface"}));
    cmp->add_flag("--logical", cmp_logical, "Unencoded logical-circuit mix");
    cmp->add_option("--epsilon", cmp_epsilon, "Target overall failure probability");
    cmp->add_flag("--include-memory-error", cmp_memory,
                  "Fold the idle-qubit error rate into the gate error");
    cmp->add_option("--output", cmp_output, "Write output to a file");

    CLI11_PARSE(app, argc, argv);

    try {
        CodeConfigs cfg = load_code_configs(bs_cfg_path, sc_cfg_path, ms_cfg_path);
        if (est->parsed())
            return run_estimate(tech_path, alg_path, code, out_format, output_path, epsilon,
                                include_memory, cfg);
        if (swp->parsed())
            return run_sweep(p_min, p_max, points, target, gate_time_ns, mix_path,
                             sweep_format, sweep_output, cfg);
        if (cmp->parsed()) {
            if (!cmp_logical && cmp_tech.empty()) {
                std::cerr << "error: --tech is required unless --logical is given\n";
                return kExitInputError;
            }
            return run_composition(cmp_tech, cmp_alg, cmp_code, cmp_logical, cmp_epsilon,
                                   cmp_memory, cmp_output, cfg);
        }
    } catch (const qre::SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
