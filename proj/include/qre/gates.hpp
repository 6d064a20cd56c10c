#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace qre {

// The full physical gate alphabet. Every gate-time table and cost vector is
// keyed by exactly these twelve kinds.
enum class GateKind : int {
    CNOT = 0,
    SWAP,
    H,
    PrepPlus,
    PrepZero,
    MeasX,
    MeasZ,
    X,
    Y,
    Z,
    S,
    T,
};

inline constexpr std::size_t kGateKindCount = 12;

inline constexpr std::array<GateKind, kGateKindCount> kAllGateKinds = {
    GateKind::CNOT, GateKind::SWAP, GateKind::H,     GateKind::PrepPlus,
    GateKind::PrepZero, GateKind::MeasX, GateKind::MeasZ, GateKind::X,
    GateKind::Y,    GateKind::Z,    GateKind::S,     GateKind::T,
};

inline constexpr std::size_t index_of(GateKind k) {
    return static_cast<std::size_t>(k);
}

std::string_view gate_kind_name(GateKind k);
std::optional<GateKind> parse_gate_kind(std::string_view name);

// Map keyed by GateKind, dense over the full alphabet.
template <typename T>
using GateArray = std::array<T, kGateKindCount>;

}  // namespace qre
