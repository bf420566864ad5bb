#include "thetasum/weyl.hpp"

#include <algorithm>
#include <unordered_set>

namespace thetasum {

namespace labels {

Coords dominant(const RootSystem& rs, Coords a, std::int64_t* steps) {
    std::int64_t count = 0;
    for (;;) {
        auto it = std::find_if(a.begin(), a.end(), [](std::int64_t x) { return x < 0; });
        if (it == a.end()) break;
        reflect(rs, static_cast<std::size_t>(it - a.begin()), a);
        ++count;
    }
    if (steps) *steps = count;
    return a;
}

std::vector<Coords> orbit(const RootSystem& rs, const Coords& a, std::uint64_t cap) {
    std::unordered_set<Coords, CoordsHash> seen{a};
    std::vector<Coords> out{a};
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (out[head][i] == 0) continue;
            Coords next = out[head];
            reflect(rs, i, next);
            if (seen.insert(next).second) {
                out.push_back(std::move(next));
                if (out.size() > cap) {
                    throw ResourceLimitExceeded("Weyl orbit exceeds cap of " + std::to_string(cap) + " elements");
                }
            }
        }
    }
    return out;
}

}  // namespace labels

Weight simple_reflection(const RootSystem& rs, int i, const Weight& w) {
    rs.check(w);
    if (i < 1 || i > rs.rank()) {
        throw InvalidArgument("simple reflection index " + std::to_string(i) + " out of range 1.." +
                              std::to_string(rs.rank()));
    }
    Coords a = rs.dynkin(w);
    labels::reflect(rs, static_cast<std::size_t>(i - 1), a);
    return rs.from_dynkin(a);
}

Projection dominant_projection(const RootSystem& rs, const Weight& w) {
    rs.check(w);
    std::int64_t steps = 0;
    Coords a = labels::dominant(rs, rs.dynkin(w), &steps);
    return {rs.from_dynkin(a), steps};
}

OrbitSum orbit(const RootSystem& rs, const Weight& dominant, const Limits& limits) {
    rs.check(dominant);
    const Coords a = rs.dynkin(dominant);
    if (!labels::is_dominant(a)) {
        throw InvalidArgument("orbit requires a dominant weight, got " + to_string(dominant));
    }
    auto elems = labels::orbit(rs, a, limits.orbit_cap);
    OrbitSum out{rs.kind(), dominant, {}};
    out.elements.reserve(elems.size());
    for (auto& e : elems) out.elements.push_back(rs.from_dynkin(e));
    std::sort(out.elements.begin(), out.elements.end());
    return out;
}

BigInt weyl_group_order(const RootSystem& rs, const Limits& limits) {
    const int n = rs.kind().n;
    BigInt closed = 1;
    switch (rs.kind().family) {
        case Family::SpC:
            for (int k = 1; k <= n; ++k) closed *= 2 * k;
            break;
        case Family::SlA:
            for (int k = 1; k <= 2 * n; ++k) closed *= k;
            break;
        case Family::E6:
            closed = 0;
            break;
    }
    if (closed != 0 && closed > limits.orbit_cap) return closed;
    const Coords rho = rs.dynkin(rs.rho());
    BigInt counted = labels::orbit(rs, rho, limits.orbit_cap).size();
    if (closed != 0 && counted != closed) {
        throw InternalError("Weyl group order mismatch for " + to_string(rs.kind()));
    }
    return counted;
}

}  // namespace thetasum
