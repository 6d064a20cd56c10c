#pragma once

#include <cstddef>

#include "qre/gates.hpp"

namespace qre {

// Multiset of physical gate counts plus a critical-path duration.
// Counts are stored as doubles: high concatenation levels push totals past
// the integer range, and expected-attempt scaling makes them fractional.
struct CostVector {
    GateArray<double> counts{};
    double duration_ns = 0.0;

    double total_gates() const {
        double t = 0.0;
        for (double c : counts) t += c;
        return t;
    }

    // Combine gate multisets; sequential composition also sums durations.
    CostVector& operator+=(const CostVector& o) {
        for (std::size_t i = 0; i < kGateKindCount; ++i) counts[i] += o.counts[i];
        duration_ns += o.duration_ns;
        return *this;
    }

    friend CostVector operator+(CostVector a, const CostVector& b) { return a += b; }

    CostVector& operator*=(double f) {
        for (double& c : counts) c *= f;
        duration_ns *= f;
        return *this;
    }

    friend CostVector operator*(CostVector a, double f) { return a *= f; }
    friend CostVector operator*(double f, CostVector a) { return a *= f; }

    // Parallel composition: counts add, duration is the longest branch.
    CostVector parallel_with(const CostVector& o) const {
        CostVector r = *this;
        for (std::size_t i = 0; i < kGateKindCount; ++i) r.counts[i] += o.counts[i];
        if (o.duration_ns > r.duration_ns) r.duration_ns = o.duration_ns;
        return r;
    }

    static CostVector single(GateKind k, double duration_ns) {
        CostVector c;
        c.counts[index_of(k)] = 1.0;
        c.duration_ns = duration_ns;
        return c;
    }
};

}  // namespace qre
