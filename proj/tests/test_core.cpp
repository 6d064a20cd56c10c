#include <doctest.h>

#include <random>

#include "qre/core.hpp"
#include "test_helpers.hpp"

using namespace qre;

TEST_CASE("technology loader accepts the bundled platforms") {
    TechnologySpec sup = test::load_tech("superconductors.json");
    CHECK(sup.name == "Superconductors");
    CHECK(sup.time(GateKind::CNOT) == 22.0);
    CHECK(sup.time(GateKind::PrepZero) == 106.0);
    CHECK(sup.worst_gate_error == doctest::Approx(1e-5));
    CHECK(sup.memory_error_per_ns.has_value());

    TechnologySpec ion = test::load_tech("ion_traps.json");
    CHECK(ion.time(GateKind::CNOT) == 120000.0);
    CHECK(ion.memory_error_per_ns.has_value());
    CHECK(*ion.memory_error_per_ns == doctest::Approx(2.52e-12));

    TechnologySpec na = test::load_tech("neutral_atoms.json");
    CHECK_FALSE(na.memory_error_per_ns.has_value());
    CHECK(na.worst_gate_error == doctest::Approx(1.47e-3));
}

TEST_CASE("technology loader rejects malformed documents") {
    const char* missing_swap = R"({
      "name": "x",
      "gate_times_ns": {"CNOT": 1, "H": 1, "PrepPlus": 1, "PrepZero": 1,
                        "MeasX": 1, "MeasZ": 1, "X": 1, "Y": 1, "Z": 1, "S": 1, "T": 1},
      "worst_gate_error": 1e-5
    })";
    CHECK_THROWS_AS(load_technology(missing_swap), MissingGate);
    try {
        load_technology(missing_swap);
    } catch (const MissingGate& e) {
        CHECK(e.kind() == GateKind::SWAP);
        CHECK(std::string(e.what()).find("SWAP") != std::string::npos);
    }

    const char* base = R"({
      "name": "x",
      "gate_times_ns": {"CNOT": %s, "SWAP": 1, "H": 1, "PrepPlus": 1, "PrepZero": 1,
                        "MeasX": 1, "MeasZ": 1, "X": 1, "Y": 1, "Z": 1, "S": 1, "T": 1},
      "worst_gate_error": %s%s
    })";
    auto doc = [&](const char* cnot, const char* err, const char* extra) {
        char buf[1024];
        std::snprintf(buf, sizeof(buf), base, cnot, err, extra);
        return std::string(buf);
    };
    CHECK_THROWS_AS(load_technology(doc("0", "1e-5", "")), InvalidValue);
    CHECK_THROWS_AS(load_technology(doc("-3", "1e-5", "")), InvalidValue);
    CHECK_THROWS_AS(load_technology(doc("1", "0", "")), InvalidValue);
    CHECK_THROWS_AS(load_technology(doc("1", "1.5", "")), InvalidValue);
    CHECK_THROWS_AS(load_technology(doc("1", "1e-5", ", \"bogus\": 1")), InvalidValue);
    CHECK_THROWS_AS(load_technology(doc("1", "1e-5", ", \"memory_error_per_ns\": -1")),
                    InvalidValue);
    CHECK_THROWS_AS(load_technology("not json"), SpecError);
}

TEST_CASE("algorithm loader accepts shor1024 and validates inputs") {
    AlgorithmSpec shor = test::load_shor();
    CHECK(shor.logical_qubits == 6144);
    CHECK(shor.count(GateKind::CNOT) == 1.18e9);
    CHECK(shor.count(GateKind::H) == 3.36e8);
    CHECK(shor.count(GateKind::T) == 1.18e9);
    CHECK(shor.parallel(GateKind::T) == doctest::Approx(2.33));
    CHECK(shor.parallel(GateKind::CNOT) == 1.0);  // defaults to 1 when absent

    CHECK_THROWS_AS(load_algorithm(R"({"name":"x","logical_qubits":0,"gate_counts":{"X":1}})"),
                    InvalidValue);
    CHECK_THROWS_AS(load_algorithm(R"({"name":"x","logical_qubits":1,"gate_counts":{"X":-2}})"),
                    InvalidValue);
    CHECK_THROWS_AS(load_algorithm(R"({"name":"x","logical_qubits":1,"gate_counts":{"X":0}})"),
                    InvalidValue);  // all counts zero
    CHECK_THROWS_AS(
        load_algorithm(
            R"({"name":"x","logical_qubits":1,"gate_counts":{"X":1},"parallelism":{"X":0.5}})"),
        InvalidValue);
    CHECK_THROWS_AS(load_algorithm(R"({"name":"x","logical_qubits":1,"gate_counts":{"Q":1}})"),
                    InvalidValue);
}

TEST_CASE("total_logical_gates sums the table counts") {
    AlgorithmSpec shor = test::load_shor();
    CHECK(total_logical_gates(shor) == doctest::Approx(2.696e9));

    AlgorithmSpec single;
    single.logical_qubits = 1;
    single.gate_counts[index_of(GateKind::X)] = 1.0;
    CHECK(total_logical_gates(single) == 1.0);
}

TEST_CASE("total_logical_gates is additive over disjoint count maps") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(0, 1000);
    for (int trial = 0; trial < 50; ++trial) {
        AlgorithmSpec a, b, both;
        a.logical_qubits = b.logical_qubits = both.logical_qubits = 1;
        for (std::size_t i = 0; i < kGateKindCount; ++i) {
            double v = dist(rng);
            if (i % 2 == 0)
                a.gate_counts[i] = v;
            else
                b.gate_counts[i] = v;
            both.gate_counts[i] = v;
        }
        CHECK(total_logical_gates(a) + total_logical_gates(b) ==
              doctest::Approx(total_logical_gates(both)));
    }
}

TEST_CASE("toffoli decomposition matches the table ratios") {
    auto big = decompose_toffoli(1.68e8);
    CHECK(big[index_of(GateKind::CNOT)] == doctest::Approx(1.176e9));
    CHECK(big[index_of(GateKind::H)] == doctest::Approx(3.36e8));
    CHECK(big[index_of(GateKind::T)] == doctest::Approx(1.176e9));

    auto zero = decompose_toffoli(0.0);
    for (double v : zero) CHECK(v == 0.0);

    auto one = decompose_toffoli(1.0);
    CHECK(one[index_of(GateKind::CNOT)] == 7.0);
    CHECK(one[index_of(GateKind::H)] == 2.0);
    CHECK(one[index_of(GateKind::T)] == 7.0);
}

TEST_CASE("toffoli decomposition is linear") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dist(0, 100000);
    for (int trial = 0; trial < 50; ++trial) {
        double a = dist(rng), b = dist(rng);
        auto da = decompose_toffoli(a);
        auto db = decompose_toffoli(b);
        auto dab = decompose_toffoli(a + b);
        for (std::size_t i = 0; i < kGateKindCount; ++i)
            CHECK(da[i] + db[i] == doctest::Approx(dab[i]));
    }
}

TEST_CASE("cost vectors compose additively and in parallel") {
    CostVector a = CostVector::single(GateKind::CNOT, 20.0);
    CostVector b = CostVector::single(GateKind::SWAP, 50.0);
    CostVector seq = a + b;
    CHECK(seq.counts[index_of(GateKind::CNOT)] == 1.0);
    CHECK(seq.counts[index_of(GateKind::SWAP)] == 1.0);
    CHECK(seq.duration_ns == 70.0);
    CostVector par = a.parallel_with(b);
    CHECK(par.duration_ns == 50.0);
    CHECK(par.total_gates() == 2.0);
}

TEST_CASE("memory error folds into p only when requested") {
    TechnologySpec ion = test::load_tech("ion_traps.json");
    CHECK(ion.effective_gate_error(false) == doctest::Approx(3.19e-9));
    double with_memory = ion.effective_gate_error(true);
    CHECK(with_memory > 3.19e-9);
    CHECK(with_memory == doctest::Approx(3.19e-9 + 2.52e-12 * ion.mean_gate_time_ns()));

    TechnologySpec na = test::load_tech("neutral_atoms.json");
    CHECK(na.effective_gate_error(true) == na.effective_gate_error(false));
}
