#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thetasum/rootsys.hpp"

namespace thetasum {

/// Whether mu <= lambda, with the simple-root coefficients of lambda - mu when so.
struct DominanceWitness {
    bool comparable = false;
    Coords root_coefficients;
};

/// All Dynkin labels nonnegative.
bool is_dominant(const RootSystem& rs, const Weight& w);

/// Tests mu <= lambda, i.e. lambda - mu is a nonnegative integer combination of simple roots.
DominanceWitness dominance_compare(const RootSystem& rs, const Weight& lambda, const Weight& mu);

inline bool dominates(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    return dominance_compare(rs, lambda, mu).comparable;
}

Weight add(const RootSystem& rs, const Weight& a, const Weight& b);
Weight subtract(const RootSystem& rs, const Weight& a, const Weight& b);
Weight scale(const RootSystem& rs, std::int64_t k, const Weight& a);

struct ReductionStep {
    Weight subtracted;
    std::string rule;
};

struct ReductionTrace {
    Weight start;
    std::vector<ReductionStep> steps;
    Weight result;
};

/// Replays the steps from `trace.start`; returns the final weight.
Weight replay(const RootSystem& rs, const ReductionTrace& trace);

/// C_n: finds mu <= lambda with length(mu) = min(degree(lambda), n) by moving one
/// box at a time from the last part >= 2 into the first empty row.
ReductionTrace reduce_hyp(int n, const Weight& lambda);

/// SL_{2n}: finds mu <= lambda with length(mu) = min(degree(lambda), n), or
/// length(mu) = degree(mu) = n - 1.
ReductionTrace reduce_nonhyp(int n, const Weight& lambda);

/// E6: reduces a nonzero dominant weight to one of w1, w2, w6 using the fixed
/// relation list. Every step is certified with dominance_compare.
ReductionTrace reduce_e6(const Weight& lambda);

/// One dominance relation big >= small used by reduce_e6, in Dynkin labels.
struct E6Relation {
    Coords big;
    Coords small;
    std::string rule;
};
const std::vector<E6Relation>& e6_relations();

enum class OracleStatus { found, none, budget_exhausted };

struct OracleResult {
    OracleStatus status = OracleStatus::none;
    std::optional<Weight> weight;
    std::uint64_t visited = 0;
};

/// Every dominant mu <= lambda, sorted. Candidates are the dominant label vectors whose
/// height does not exceed that of lambda, filtered through dominance_compare.
/// Throws ResourceLimitExceeded when more than `budget` candidates are visited.
std::vector<Weight> dominance_ideal(const RootSystem& rs, const Weight& lambda, std::uint64_t budget);

/// Exhaustive search of the dominance ideal of lambda for a weight satisfying `pred`.
OracleResult brute_force_reduce(const RootSystem& rs, const Weight& lambda,
                                const std::function<bool(const Weight&)>& pred, std::uint64_t budget);

}  // namespace thetasum
