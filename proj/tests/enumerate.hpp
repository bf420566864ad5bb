#pragma once

#include <functional>
#include <vector>

#include "thetasum/partition.hpp"
#include "thetasum/rootsys.hpp"

namespace thetasum::testing {

// Weakly decreasing sequences of length `parts` with entries >= 0 summing to `total`.
inline void for_each_partition(std::int64_t total, std::size_t parts, const std::function<void(const Partition&)>& f) {
    Partition cur(parts, 0);
    std::function<void(std::size_t, std::int64_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left, std::int64_t cap) {
        if (i == parts) {
            if (left == 0) f(cur);
            return;
        }
        for (std::int64_t v = std::min(left, cap); v >= 0; --v) {
            cur[i] = v;
            rec(i + 1, left - v, v);
        }
        cur[i] = 0;
    };
    rec(0, total, total);
}

// Dominant C_n weights of degree d.
inline std::vector<Weight> hyp_weights(int n, std::int64_t d) {
    std::vector<Weight> out;
    const auto kind = RootSystemKind::sp(n);
    for_each_partition(d, static_cast<std::size_t>(n), [&](const Partition& p) { out.push_back({kind, p}); });
    return out;
}

// Dominant SL_{2n} weights (a | -b) with |a| + |b| = d.
inline std::vector<Weight> sl_weights(int n, std::int64_t d) {
    std::vector<Weight> out;
    const RootSystem& rs = shared_root_system(RootSystemKind::sl(n));
    const std::size_t un = static_cast<std::size_t>(n);
    for (std::int64_t dp = 0; dp <= d; ++dp) {
        for_each_partition(dp, un, [&](const Partition& a) {
            // b has a zero entry; pick its nonzero parts as a partition of length n - 1.
            for_each_partition(d - dp, un - 1, [&](const Partition& bdec) {
                Partition b(un, 0);
                for (std::size_t i = 0; i + 1 < un; ++i) b[un - 1 - i] = bdec[i];
                out.push_back(join_sl(rs, a, b));
            });
        });
    }
    return out;
}

}  // namespace thetasum::testing
