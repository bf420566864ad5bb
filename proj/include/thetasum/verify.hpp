#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetasum/rootsys.hpp"

namespace thetasum {

/// Optional bounds for the verification suites; unset fields take per-suite defaults.
struct SuiteBounds {
    std::optional<int> max_n;
    std::optional<int> max_degree;
    std::optional<int> max_label_sum;
    std::optional<int> samples;
    std::optional<int> min_genus;
    std::optional<int> max_genus;
    std::optional<RootSystemKind> system;
    std::optional<std::string> golden_dir;
    std::uint64_t seed = 20240601;
};

struct SuiteResult {
    std::string suite;
    std::string statement;
    std::uint64_t tested = 0;
    std::uint64_t failures = 0;
    /// At most `max_reported` witnesses are kept; `failures` counts all of them.
    std::vector<nlohmann::json> counterexamples;
    double wall_time_ms = 0;

    static constexpr std::size_t max_reported = 20;
    void fail(nlohmann::json witness);
};

/// lemma32, lemma42, lemma52, remark26, lambda-axioms, alt-decomp, adams-factor,
/// dims-e6, classify-golden, support-dim, char-oracle.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite name.
SuiteResult run_verification_suite(const std::string& name, const SuiteBounds& bounds, const Limits& limits = default_limits());

nlohmann::json to_json(const SuiteResult& r);

/// Dominant weights of degree exactly d: partitions for C_n, (a | -b) splits for SL_{2n},
/// Dynkin-label sum for E6. Sorted.
std::vector<Weight> dominant_weights_of_degree(const RootSystem& rs, int d);

}  // namespace thetasum
