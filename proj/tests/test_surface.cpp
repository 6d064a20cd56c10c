#include <doctest.h>

#include <cmath>
#include <random>

#include "qre/surface.hpp"
#include "test_helpers.hpp"

using namespace qre;
using namespace qre::surface;

namespace {

const double kShorGates = 2.696e9;

// Independent oracle: scan odd distances against the inequality directly.
int oracle_distance(double p, double target, const Config& cfg) {
    if (p <= target) return 0;
    if (p >= cfg.threshold || cfg.c2 * p / cfg.threshold >= 1.0) return -2;
    for (int d = 3; d <= cfg.distance_cap; d += 2) {
        double err = cfg.c1 * std::pow(cfg.c2 * p / cfg.threshold,
                                       std::floor((d + 1) / 2.0));
        if (err <= target) return d;
    }
    return -1;
}

}  // namespace

TEST_CASE("required_distance reproduces the reference distances") {
    Config cfg;
    CHECK(required_distance(1e-5, kShorGates, 0.5, cfg) == 5);
    CHECK(required_distance(3.19e-9, kShorGates, 0.5, cfg) == 3);
    CHECK(required_distance(1.47e-3, kShorGates, 0.5, cfg) == 17);
    CHECK(required_distance(1e-12, 100, 0.5, cfg) == 0);
    CHECK_THROWS_AS(required_distance(1e-2, kShorGates, 0.5, cfg), AboveThreshold);
}

TEST_CASE("required_distance matches the brute-force oracle, odd only") {
    Config cfg;
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> logp(-10.0, -2.1);
    std::uniform_real_distribution<double> logt(-14.0, -6.0);
    for (int trial = 0; trial < 300; ++trial) {
        double p = std::pow(10.0, logp(rng));
        double t = std::pow(10.0, logt(rng));
        int expected = oracle_distance(p, t, cfg);
        if (expected == -2) {
            CHECK_THROWS_AS(required_distance_for_target(p, t, cfg), AboveThreshold);
            continue;
        }
        int d = required_distance_for_target(p, t, cfg);
        CHECK(d == expected);
        if (d > 0) CHECK(d % 2 == 1);
        if (d > 0) CHECK(d >= 3);
        // minimality
        if (d > 0) CHECK(logical_error(p, d, cfg) <= t);
        if (d >= 5) CHECK(logical_error(p, d - 2, cfg) > t);
    }
}

TEST_CASE("required_distance is nondecreasing in p and in N") {
    Config cfg;
    for (double p : {1e-8, 1e-6, 1e-4, 1e-3}) {
        for (double n : {1e6, 1e9, 1e12}) {
            int d = required_distance(p, n, 0.5, cfg);
            CHECK(required_distance(std::min(p * 2.0, 9e-3), n, 0.5, cfg) >= d);
            CHECK(required_distance(p, n * 100.0, 0.5, cfg) >= d);
        }
    }
}

TEST_CASE("logical_error matches the reference values") {
    Config cfg;
    CHECK(test::sig3(logical_error(1e-5, 5, cfg), 2.95e-11));
    CHECK(test::sig3(logical_error(3.19e-9, 3, cfg), 4.92e-15));
    CHECK(test::sig2(logical_error(1.47e-3, 17, cfg), 4.99e-11));
}

TEST_CASE("cycle_time follows the syndrome circuit") {
    CHECK(cycle_time_ns(test::load_tech("superconductors.json")) == 210.0);
    CHECK(cycle_time_ns(test::load_tech("ion_traps.json")) == 596000.0);
    CHECK(test::sig3(cycle_time_ns(test::load_tech("neutral_atoms.json")), 1.29e5));
}

TEST_CASE("ec_time is d syndrome cycles") {
    TechnologySpec sup = test::load_tech("superconductors.json");
    TechnologySpec ion = test::load_tech("ion_traps.json");
    CHECK(ec_time_ns(5, sup) == doctest::Approx(1050.0));
    CHECK(ec_time_ns(3, ion) == doctest::Approx(1.788e6));
    for (int d : {3, 5, 9, 17})
        CHECK(ec_time_ns(d, sup) == doctest::Approx(d * cycle_time_ns(sup)));
}

TEST_CASE("logical operation times") {
    Config cfg;
    TechnologySpec sup = test::load_tech("superconductors.json");
    TechnologySpec ion = test::load_tech("ion_traps.json");
    CHECK(logical_op_time_ns(GateKind::CNOT, 5, sup, cfg) == doctest::Approx(13666.0));
    CHECK(logical_op_time_ns(GateKind::MeasZ, 3, ion, cfg) ==
          doctest::Approx(100000.0 + 1.788e6));
    CHECK(smooth_rough_cnot_time_ns(5, sup) == doctest::Approx(4.0 * 1050.0));
    for (int d : {3, 5, 17})
        CHECK(logical_op_time_ns(GateKind::CNOT, d, sup, cfg) > 12.0 * ec_time_ns(d, sup));
}

TEST_CASE("qubits per tile at the reference distances") {
    Config cfg;
    CHECK(qubits_per_tile(3, cfg) == 1161);
    CHECK(qubits_per_tile(5, cfg) == 3225);
    CHECK(qubits_per_tile(17, cfg) == 37281);
}

TEST_CASE("tile_count adds ancilla and factory tiles") {
    AlgorithmSpec shor = test::load_shor();
    CHECK(tile_count(shor, 0) == 12288);
    CHECK(tile_count(shor, 1861) == 14149);
    AlgorithmSpec one;
    one.logical_qubits = 1;
    one.gate_counts[index_of(GateKind::X)] = 1.0;
    CHECK(tile_count(one, 0) == 2);
}

TEST_CASE("total_gate_count reproduces the reference totals from table inputs") {
    Config cfg;
    CHECK(test::close_rel(total_gate_count(4.57e7, 10.81 * test::kHour,
                                           test::load_tech("superconductors.json"), cfg),
                          2.55e19, 0.05));
    CHECK(test::close_rel(total_gate_count(1.44e8, 2.22 * test::kYear,
                                           test::load_tech("ion_traps.json"), cfg),
                          5.10e19, 0.05));
    CHECK(test::close_rel(total_gate_count(5.29e8, 2.62 * test::kYear,
                                           test::load_tech("neutral_atoms.json"), cfg),
                          1.02e21, 0.05));
}

TEST_CASE("total_gate_count is exactly multiplicative") {
    Config cfg;
    TechnologySpec sup = test::load_tech("superconductors.json");
    double base = total_gate_count(1e7, 1e12, sup, cfg);
    CHECK(total_gate_count(2e7, 1e12, sup, cfg) == doctest::Approx(2.0 * base));
    CHECK(total_gate_count(1e7, 2e12, sup, cfg) == doctest::Approx(2.0 * base));
}

TEST_CASE("gate times scale every logical op time linearly") {
    Config cfg;
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> scale_dist(0.3, 5.0);
    TechnologySpec base = test::load_tech("neutral_atoms.json");
    for (int trial = 0; trial < 20; ++trial) {
        double alpha = scale_dist(rng);
        TechnologySpec scaled = base;
        for (double& t : scaled.gate_time_ns) t *= alpha;
        for (GateKind k : kAllGateKinds) {
            double t0 = logical_op_time_ns(k, 7, base, cfg);
            double t1 = logical_op_time_ns(k, 7, scaled, cfg);
            CHECK(t1 == doctest::Approx(alpha * t0));
        }
        CHECK(cycle_time_ns(scaled) == doctest::Approx(alpha * cycle_time_ns(base)));
    }
}

TEST_CASE("distillation round in the surface context") {
    Config cfg;
    TechnologySpec sup = test::load_tech("superconductors.json");
    DistillationContext ctx = distillation_context(5, sup, cfg);
    // braided CNOT + physical measurement + one EC
    CHECK(ctx.round.duration_ns == doctest::Approx(13666.0 + 16.0 + 1050.0));
    CHECK(ctx.injection.duration_ns == doctest::Approx(2.0 * 13666.0 + 1060.0 + 1050.0));

    DistillationModel model;
    CostVector three = distillation_cost(AncillaKind::T, 3, 1e-5, model, ctx);
    double attempts = 1.0 / (1.0 - model.injected_error(1e-5));
    CHECK(three.duration_ns ==
          doctest::Approx(attempts * (ctx.injection.duration_ns + 3.0 * ctx.round.duration_ns)));
}

TEST_CASE("estimate: superconductors") {
    Config cfg;
    DistillationModel model;
    EstimatorOptions opts;
    ResourceEstimate est = estimate(test::load_shor(), test::load_tech("superconductors.json"),
                                    opts, cfg, model);
    CHECK(est.code_parameter == 5);
    CHECK(test::within_factor(est.execution_time_ns, 10.81 * test::kHour, 2.0));
    CHECK(test::close_rel(est.total_physical_qubits, 4.57e7, 0.25));
    CHECK(est.dominant_gate == GateKind::CNOT);
    CHECK(est.logical_gate_time_ns == 210.0);
    CHECK(est.qubits_per_logical == 3225.0);
}

TEST_CASE("estimate: ion traps") {
    Config cfg;
    DistillationModel model;
    EstimatorOptions opts;
    ResourceEstimate est =
        estimate(test::load_shor(), test::load_tech("ion_traps.json"), opts, cfg, model);
    CHECK(est.code_parameter == 3);
    CHECK(test::within_factor(est.execution_time_ns, 2.22 * test::kYear, 2.0));
    // documented exclusion: the reference 1.44e8 exceeds any throughput-sized
    // factory model; stay within an order of magnitude
    CHECK(test::within_factor(est.total_physical_qubits, 1.44e8, 10.0));
    CHECK(est.dominant_gate == GateKind::CNOT);
}

TEST_CASE("estimate without encoding uses bare physical gates") {
    Config cfg;
    DistillationModel model;
    EstimatorOptions opts;
    TechnologySpec tech = test::uniform_tech(100.0, 1e-12);
    AlgorithmSpec alg;
    alg.name = "tiny";
    alg.logical_qubits = 2;
    alg.parallelism.fill(1.0);
    alg.gate_counts[index_of(GateKind::H)] = 4.0;
    ResourceEstimate est = estimate(alg, tech, opts, cfg, model);
    CHECK(est.code_parameter == 0);
    CHECK(est.execution_time_ns == 400.0);
    CHECK(est.total_physical_qubits == 2.0);
    CHECK(est.total_physical_gates == 4.0);
}

TEST_CASE("estimate: neutral atoms") {
    Config cfg;
    DistillationModel model;
    EstimatorOptions opts;
    ResourceEstimate est =
        estimate(test::load_shor(), test::load_tech("neutral_atoms.json"), opts, cfg, model);
    CHECK(est.code_parameter == 17);
    CHECK(test::within_factor(est.execution_time_ns, 2.62 * test::kYear, 2.0));
    CHECK(est.dominant_gate == GateKind::CNOT);
    CHECK(est.qubits_per_logical == 37281.0);
}
