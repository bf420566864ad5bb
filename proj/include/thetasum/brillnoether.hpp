#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thetasum/dominance.hpp"
#include "thetasum/partition.hpp"

namespace thetasum {

enum class CaseType { hyperelliptic, nonhyperelliptic, cubic_threefold };

/// Which principally polarized abelian variety: the Jacobian of a (non)hyperelliptic
/// curve of genus g, or the intermediate Jacobian of a smooth cubic threefold.
struct CaseSpec {
    CaseType type = CaseType::hyperelliptic;
    int g = 0;  // 5 for the cubic threefold

    static CaseSpec hyperelliptic(int g);
    static CaseSpec nonhyperelliptic(int g);
    static CaseSpec cubic_threefold() { return {CaseType::cubic_threefold, 5}; }

    /// g - 1 for curves; unused for the threefold.
    int n() const { return g - 1; }
    int theta_dim() const { return g - 1; }
    RootSystemKind system() const;

    bool operator==(const CaseSpec&) const = default;
};

/// "hyperelliptic", "nonhyperelliptic", "cubic-threefold".
std::string to_string(CaseType t);
CaseType parse_case_type(std::string_view text);
/// Builds a case from its name; curve cases need a genus.
CaseSpec make_case(std::string_view name, std::optional<int> genus);

/// Symbolic subvariety of the (intermediate) Jacobian.
struct SupportExpr {
    enum class Shape { point, wd, diff, fano_s, theta, general_w, unknown };

    Shape shape = Shape::unknown;
    std::int64_t a = 0;  // wd: d; diff: W_a - W_b
    std::int64_t b = 0;
    int sign = 1;  // fano_s
    Coords mu;     // general_w
    std::optional<std::int64_t> dim;
    bool translate_marker = false;

    static SupportExpr point();
    static SupportExpr wd(std::int64_t d);
    /// W_a - W_b; (a, 0) becomes wd(a) and (0, 0) becomes point().
    static SupportExpr diff(std::int64_t a, std::int64_t b);
    static SupportExpr fano(int sign);
    static SupportExpr theta(std::int64_t dim);
    static SupportExpr general(Coords mu, std::int64_t dim);
    static SupportExpr unknown();

    SupportExpr translated() const {
        SupportExpr s = *this;
        s.translate_marker = true;
        return s;
    }

    bool operator==(const SupportExpr&) const = default;
};

/// "pt", "W_2", "-W_3", "W_1 - W_2", "S", "-S", "Theta", "W(2,1,0)", "Unknown".
std::string to_string(const SupportExpr& s);

/// The subvariety whose conormal variety is the component attached to the orbit of mu.
SupportExpr support_of_orbit(const CaseSpec& c, const Weight& mu);

/// max{l(mu) : mu <= lambda} via reduce_hyp, certified against min{d(lambda), g - 1}.
std::int64_t support_dim_hyp(int g, const Weight& lambda);

/// The lower bound min{d(lambda), g - 2}, certified by a reduce_nonhyp witness.
std::int64_t support_dim_nonhyp_bound(int g, const Weight& lambda);

struct SummandPair {
    SupportExpr x;
    SupportExpr y;
    std::string provenance;
};

struct ExcludedCandidate {
    std::int64_t dim_x = 0;
    std::int64_t dim_y = 0;
    std::string x;
    std::string y;
    std::string reason;
};

struct ClassificationReport {
    CaseSpec spec;
    std::vector<SummandPair> pairs;
    std::vector<ExcludedCandidate> excluded;
};

/// All decompositions Theta = X + Y into positive-dimensional summands, up to translation.
ClassificationReport classify_summands(const CaseSpec& c, const Limits& limits = default_limits());

nlohmann::json to_json(const SupportExpr& s);
nlohmann::json to_json(const ClassificationReport& r);

}  // namespace thetasum
