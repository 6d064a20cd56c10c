#include "qre/gates.hpp"

namespace qre {

namespace {
constexpr std::array<std::string_view, kGateKindCount> kNames = {
    "CNOT", "SWAP", "H", "PrepPlus", "PrepZero", "MeasX",
    "MeasZ", "X", "Y", "Z", "S", "T",
};
}  // namespace

std::string_view gate_kind_name(GateKind k) { return kNames[index_of(k)]; }

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (std::size_t i = 0; i < kGateKindCount; ++i)
        if (kNames[i] == name) return kAllGateKinds[i];
    return std::nullopt;
}

}  // namespace qre
