#pragma once

#include <cstdint>
#include <vector>

#include "thetasum/rootsys.hpp"

namespace thetasum {

/// The Weyl orbit of a dominant weight, i.e. one orbit-sum basis vector We_mu.
struct OrbitSum {
    RootSystemKind kind;
    Weight dominant_rep;
    /// Full orbit, sorted lexicographically on canonical coordinates.
    std::vector<Weight> elements;

    std::size_t size() const { return elements.size(); }
};

struct Projection {
    Weight dominant;
    /// Number of simple reflections applied.
    std::int64_t length = 0;
};

/// s_i(w) = w - <w, alpha_i^vee> alpha_i with 1 <= i <= rank.
Weight simple_reflection(const RootSystem& rs, int i, const Weight& w);

/// Moves `w` into the dominant chamber by reflecting at the first negative label.
Projection dominant_projection(const RootSystem& rs, const Weight& w);

/// Breadth-first closure of a dominant weight under simple reflections.
/// Throws InvalidArgument for non-dominant input and ResourceLimitExceeded past `limits.orbit_cap`.
OrbitSum orbit(const RootSystem& rs, const Weight& dominant, const Limits& limits = default_limits());

/// |W|, computed as the orbit size of rho when that fits under the cap.
/// For SpC and SlA the closed forms 2^n n! and (2n)! are cross-checked; past
/// the cap they are returned directly. E6 is always enumerated.
BigInt weyl_group_order(const RootSystem& rs, const Limits& limits = default_limits());

namespace labels {

// Label-space primitives shared by the character ring code.

inline bool is_dominant(const Coords& a) {
    for (auto x : a)
        if (x < 0) return false;
    return true;
}

inline void reflect(const RootSystem& rs, std::size_t i, Coords& a) {
    const std::int64_t k = a[i];
    if (k == 0) return;
    const auto& row = rs.cartan()[i];
    for (std::size_t j = 0; j < a.size(); ++j) a[j] -= k * row[j];
}

/// Returns the dominant label vector in the orbit of `a`; `steps` counts reflections.
Coords dominant(const RootSystem& rs, Coords a, std::int64_t* steps = nullptr);

/// Orbit of the dominant label vector `a`, unsorted.
std::vector<Coords> orbit(const RootSystem& rs, const Coords& a, std::uint64_t cap);

}  // namespace labels

}  // namespace thetasum
