#include "qre/core.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qre {

using nlohmann::json;

namespace {

json parse_document(const std::string& text) {
    json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw SpecError("document is not valid JSON");
    if (!doc.is_object()) throw SpecError("document root must be a JSON object");
    return doc;
}

void reject_unknown_keys(const json& obj, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (auto a : allowed)
            if (it.key() == a) { known = true; break; }
        if (!known) throw InvalidValue("unknown key \"" + it.key() + "\" in " + where);
    }
}

double require_number(const json& obj, const std::string& key) {
    if (!obj.contains(key)) throw InvalidValue("missing key \"" + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_number()) throw InvalidValue("key \"" + key + "\" must be a number");
    return v.get<double>();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TechnologySpec load_technology(const std::string& json_text) {
    json doc = parse_document(json_text);
    reject_unknown_keys(doc, {"name", "gate_times_ns", "worst_gate_error", "memory_error_per_ns"},
                        "technology document");

    TechnologySpec spec;
    if (!doc.contains("name") || !doc.at("name").is_string())
        throw InvalidValue("technology document needs a string \"name\"");
    spec.name = doc.at("name").get<std::string>();

    if (!doc.contains("gate_times_ns") || !doc.at("gate_times_ns").is_object())
        throw InvalidValue("technology document needs a \"gate_times_ns\" object");
    const json& times = doc.at("gate_times_ns");
    for (auto it = times.begin(); it != times.end(); ++it) {
        if (!parse_gate_kind(it.key()))
            throw InvalidValue("unknown gate kind \"" + it.key() + "\" in gate_times_ns");
    }
    for (GateKind k : kAllGateKinds) {
        std::string key(gate_kind_name(k));
        if (!times.contains(key)) throw MissingGate(k);
        if (!times.at(key).is_number())
            throw InvalidValue("gate time for " + key + " must be a number");
        double t = times.at(key).get<double>();
        if (!(t > 0.0) || !std::isfinite(t))
            throw InvalidValue("gate time for " + key + " must be positive");
        spec.gate_time_ns[index_of(k)] = t;
    }

    double p = require_number(doc, "worst_gate_error");
    if (!(p > 0.0 && p < 1.0))
        throw InvalidValue("worst_gate_error must lie in (0,1)");
    spec.worst_gate_error = p;

    if (doc.contains("memory_error_per_ns")) {
        double m = require_number(doc, "memory_error_per_ns");
        if (!(m >= 0.0) || !std::isfinite(m))
            throw InvalidValue("memory_error_per_ns must be >= 0");
        spec.memory_error_per_ns = m;
    }
    return spec;
}

TechnologySpec load_technology_file(const std::string& path) {
    return load_technology(read_file(path));
}

AlgorithmSpec load_algorithm(const std::string& json_text) {
    json doc = parse_document(json_text);
    reject_unknown_keys(doc, {"name", "logical_qubits", "gate_counts", "parallelism"},
                        "algorithm document");

    AlgorithmSpec spec;
    if (!doc.contains("name") || !doc.at("name").is_string())
        throw InvalidValue("algorithm document needs a string \"name\"");
    spec.name = doc.at("name").get<std::string>();

    double n = require_number(doc, "logical_qubits");
    if (!(n >= 1.0) || n != std::floor(n))
        throw InvalidValue("logical_qubits must be a positive integer");
    spec.logical_qubits = static_cast<std::uint64_t>(n);

    spec.parallelism.fill(1.0);

    if (!doc.contains("gate_counts") || !doc.at("gate_counts").is_object())
        throw InvalidValue("algorithm document needs a \"gate_counts\" object");
    for (auto it = doc.at("gate_counts").begin(); it != doc.at("gate_counts").end(); ++it) {
        auto kind = parse_gate_kind(it.key());
        if (!kind) throw InvalidValue("unknown gate kind \"" + it.key() + "\" in gate_counts");
        if (!it.value().is_number())
            throw InvalidValue("gate count for " + it.key() + " must be a number");
        double c = it.value().get<double>();
        if (!(c >= 0.0) || c != std::floor(c))
            throw InvalidValue("gate count for " + it.key() + " must be a nonnegative integer");
        spec.gate_counts[index_of(*kind)] = c;
    }

    if (doc.contains("parallelism")) {
        if (!doc.at("parallelism").is_object())
            throw InvalidValue("\"parallelism\" must be an object");
        for (auto it = doc.at("parallelism").begin(); it != doc.at("parallelism").end(); ++it) {
            auto kind = parse_gate_kind(it.key());
            if (!kind) throw InvalidValue("unknown gate kind \"" + it.key() + "\" in parallelism");
            if (!it.value().is_number())
                throw InvalidValue("parallelism for " + it.key() + " must be a number");
            double f = it.value().get<double>();
            if (!(f >= 1.0)) throw InvalidValue("parallelism for " + it.key() + " must be >= 1");
            spec.parallelism[index_of(*kind)] = f;
        }
    }

    if (total_logical_gates(spec) <= 0.0)
        throw InvalidValue("algorithm must contain at least one gate");
    return spec;
}

AlgorithmSpec load_algorithm_file(const std::string& path) {
    return load_algorithm(read_file(path));
}

double total_logical_gates(const AlgorithmSpec& alg) {
    double total = 0.0;
    for (double c : alg.gate_counts) total += c;
    return total;
}

GateArray<double> decompose_toffoli(double toffoli_count) {
    GateArray<double> out{};
    out[index_of(GateKind::CNOT)] = 7.0 * toffoli_count;
    out[index_of(GateKind::H)] = 2.0 * toffoli_count;
    out[index_of(GateKind::T)] = 7.0 * toffoli_count;
    return out;
}

}  // namespace qre
