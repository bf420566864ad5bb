#include "thetasum/brillnoether.hpp"

#include <algorithm>

#include "thetasum/charring.hpp"

namespace thetasum {

CaseSpec CaseSpec::hyperelliptic(int g) {
    if (g < 2) throw InvalidArgument("curve cases need genus g >= 2");
    return {CaseType::hyperelliptic, g};
}

CaseSpec CaseSpec::nonhyperelliptic(int g) {
    if (g < 2) throw InvalidArgument("curve cases need genus g >= 2");
    return {CaseType::nonhyperelliptic, g};
}

RootSystemKind CaseSpec::system() const {
    switch (type) {
        case CaseType::hyperelliptic: return RootSystemKind::sp(n());
        case CaseType::nonhyperelliptic: return RootSystemKind::sl(n());
        case CaseType::cubic_threefold: return RootSystemKind::e6();
    }
    throw InternalError("unknown case type");
}

std::string to_string(CaseType t) {
    switch (t) {
        case CaseType::hyperelliptic: return "hyperelliptic";
        case CaseType::nonhyperelliptic: return "nonhyperelliptic";
        case CaseType::cubic_threefold: return "cubic-threefold";
    }
    return "?";
}

CaseType parse_case_type(std::string_view text) {
    if (text == "hyperelliptic") return CaseType::hyperelliptic;
    if (text == "nonhyperelliptic" || text == "non-hyperelliptic") return CaseType::nonhyperelliptic;
    if (text == "cubic-threefold" || text == "cubic") return CaseType::cubic_threefold;
    throw InvalidArgument("unknown case '" + std::string(text) + "' (expected hyperelliptic, nonhyperelliptic or cubic-threefold)");
}

CaseSpec make_case(std::string_view name, std::optional<int> genus) {
    switch (parse_case_type(name)) {
        case CaseType::hyperelliptic:
            if (!genus) throw InvalidArgument("the hyperelliptic case needs --genus");
            return CaseSpec::hyperelliptic(*genus);
        case CaseType::nonhyperelliptic:
            if (!genus) throw InvalidArgument("the nonhyperelliptic case needs --genus");
            return CaseSpec::nonhyperelliptic(*genus);
        case CaseType::cubic_threefold:
            if (genus && *genus != 5) throw InvalidArgument("the cubic threefold case has dimension 5; drop --genus");
            return CaseSpec::cubic_threefold();
    }
    throw InternalError("unknown case type");
}

SupportExpr SupportExpr::point() {
    SupportExpr s;
    s.shape = Shape::point;
    s.dim = 0;
    return s;
}

SupportExpr SupportExpr::wd(std::int64_t d) {
    if (d < 0) throw InvalidArgument("W_d needs d >= 0");
    if (d == 0) return point();
    SupportExpr s;
    s.shape = Shape::wd;
    s.a = d;
    s.dim = d;
    return s;
}

SupportExpr SupportExpr::diff(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw InvalidArgument("W_a - W_b needs a, b >= 0");
    if (b == 0) return wd(a);
    SupportExpr s;
    s.shape = Shape::diff;
    s.a = a;
    s.b = b;
    s.dim = a + b;
    return s;
}

SupportExpr SupportExpr::fano(int sign) {
    SupportExpr s;
    s.shape = Shape::fano_s;
    s.sign = sign >= 0 ? 1 : -1;
    s.dim = 2;
    return s;
}

SupportExpr SupportExpr::theta(std::int64_t dim) {
    SupportExpr s;
    s.shape = Shape::theta;
    s.dim = dim;
    return s;
}

SupportExpr SupportExpr::general(Coords mu, std::int64_t dim) {
    SupportExpr s;
    s.shape = Shape::general_w;
    s.mu = std::move(mu);
    s.dim = dim;
    return s;
}

SupportExpr SupportExpr::unknown() { return SupportExpr{}; }

std::string to_string(const SupportExpr& s) {
    switch (s.shape) {
        case SupportExpr::Shape::point: return "pt";
        case SupportExpr::Shape::wd: return "W_" + std::to_string(s.a);
        case SupportExpr::Shape::diff:
            if (s.a == 0) return "-W_" + std::to_string(s.b);
            return "W_" + std::to_string(s.a) + " - W_" + std::to_string(s.b);
        case SupportExpr::Shape::fano_s: return s.sign > 0 ? "S" : "-S";
        case SupportExpr::Shape::theta: return "Theta";
        case SupportExpr::Shape::general_w: return "W" + to_string(s.mu);
        case SupportExpr::Shape::unknown: return "Unknown";
    }
    return "?";
}

namespace {

const RootSystem& case_system(const CaseSpec& c, const Weight& mu) {
    const RootSystem& rs = shared_root_system(c.system());
    rs.check(mu);
    if (!is_dominant(rs, mu)) throw InvalidArgument("expected a dominant weight, got " + to_string(mu));
    return rs;
}

bool zero_one(const Partition& p) {
    return std::all_of(p.begin(), p.end(), [](std::int64_t x) { return x == 0 || x == 1; });
}

}  // namespace

SupportExpr support_of_orbit(const CaseSpec& c, const Weight& mu) {
    const RootSystem& rs = case_system(c, mu);
    switch (c.type) {
        case CaseType::hyperelliptic: {
            const auto dl = degree_length_hyp(mu);
            if (dl.length == 0) return SupportExpr::point();
            if (zero_one(mu.coords)) return SupportExpr::wd(dl.length);
            return SupportExpr::general(mu.coords, dl.length);
        }
        case CaseType::nonhyperelliptic: {
            const auto s = split_sl(rs, mu);
            // Beyond length g - 1 the image is not described.
            if (s.length() >= c.g) return SupportExpr::unknown();
            if (s.length() == 0) return SupportExpr::point();
            if (zero_one(s.plus) && zero_one(s.minus)) return SupportExpr::diff(s.degree_plus, s.degree_minus);
            return SupportExpr::general(mu.coords, s.length());
        }
        case CaseType::cubic_threefold: {
            const Coords a = rs.dynkin(mu);
            if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) return SupportExpr::point();
            if (a == Coords{1, 0, 0, 0, 0, 0}) return SupportExpr::fano(1);
            if (a == Coords{0, 0, 0, 0, 0, 1}) return SupportExpr::fano(-1);
            if (a == Coords{0, 1, 0, 0, 0, 0}) return SupportExpr::theta(c.theta_dim());
            return SupportExpr::unknown();
        }
    }
    throw InternalError("unknown case type");
}

std::int64_t support_dim_hyp(int g, const Weight& lambda) {
    const CaseSpec c = CaseSpec::hyperelliptic(g);
    case_system(c, lambda);
    const auto trace = reduce_hyp(c.n(), lambda);
    const std::int64_t found = degree_length_hyp(trace.result).length;
    const std::int64_t closed = std::min<std::int64_t>(degree_length_hyp(lambda).degree, g - 1);
    if (found != closed) {
        throw InternalError("support dimension " + std::to_string(found) + " differs from min{d, g-1} = " +
                            std::to_string(closed) + " at " + to_string(lambda));
    }
    return found;
}

std::int64_t support_dim_nonhyp_bound(int g, const Weight& lambda) {
    const CaseSpec c = CaseSpec::nonhyperelliptic(g);
    const RootSystem& rs = case_system(c, lambda);
    const std::int64_t d = split_sl(rs, lambda).degree();
    const std::int64_t bound = std::min<std::int64_t>(d, g - 2);
    const auto trace = reduce_nonhyp(c.n(), lambda);
    const std::int64_t len = split_sl(rs, trace.result).length();
    // The witness support W(mu) has dimension l(mu) as long as l(mu) < g.
    if (len < bound || len >= g) {
        throw InternalError("witness " + to_string(trace.result) + " of length " + std::to_string(len) +
                            " does not certify the bound " + std::to_string(bound));
    }
    return bound;
}

namespace {

Weight fundamental_sl(const RootSystem& rs, int k) {
    Coords w(static_cast<std::size_t>(rs.ambient_dim()), 0);
    for (int i = 0; i < k; ++i) w[static_cast<std::size_t>(i)] = 1;
    return rs.weight(std::move(w));
}

// Theta = W_c - W_{g-1-c} + z is possible only if w_{g-1} and w_c + w_{g-1+c} share a Weyl orbit.
bool theta_as_difference(int g, int c) {
    const RootSystem& rs = shared_root_system(RootSystemKind::sl(g - 1));
    const Weight theta = fundamental_sl(rs, g - 1);
    const Weight other = add(rs, fundamental_sl(rs, c), fundamental_sl(rs, g - 1 + c));
    return theta == other;
}

void hyperelliptic_pairs(ClassificationReport& r) {
    const CaseSpec& c = r.spec;
    const RootSystem& rs = shared_root_system(c.system());
    for (int d = 1; d + 1 <= c.g - 1; ++d) {
        const int e = c.g - 1 - d;
        // A summand of dimension d < g - 1 has support W_d, witnessed at w_d.
        for (int k : {d, e}) {
            const Weight w = rs.fundamental_weights()[static_cast<std::size_t>(k - 1)];
            if (support_dim_hyp(c.g, w) != k || support_of_orbit(c, w) != SupportExpr::wd(k)) {
                throw InternalError("hyperelliptic support of w_" + std::to_string(k) + " is not W_" + std::to_string(k));
            }
        }
        r.pairs.push_back({SupportExpr::wd(d).translated(), SupportExpr::wd(e).translated(),
                           "support dimension is min{d, g-1}, so a summand of dimension d < g-1 is a translate of W_d"});
    }
}

void nonhyperelliptic_pairs(ClassificationReport& r) {
    const CaseSpec& c = r.spec;
    for (int d = 1; d + 1 <= c.g - 1; ++d) {
        const int e = c.g - 1 - d;
        if (d == 1 || e == 1) {
            const std::string why = "curve summand: covered by the known characterization of curve summands, not derived here";
            r.pairs.push_back({SupportExpr::wd(d).translated(), SupportExpr::wd(e).translated(), why});
            r.pairs.push_back({SupportExpr::diff(0, d).translated(), SupportExpr::diff(0, e).translated(), why});
            continue;
        }
        std::vector<SummandPair> kept;
        for (int a = 0; a <= d; ++a) {
            for (int b = 0; b <= e; ++b) {
                const SupportExpr x = SupportExpr::diff(a, d - a).translated();
                const SupportExpr y = SupportExpr::diff(b, e - b).translated();
                if (theta_as_difference(c.g, a + b)) {
                    kept.push_back({x, y,
                                    "summands of dimension < g-2 are translates of W_a - W_(d-a); w_(g-1) and "
                                    "w_c + w_(g-1+c) share a Weyl orbit only for c = a+b in {0, g-1}"});
                } else {
                    r.excluded.push_back({d, e, to_string(x), to_string(y),
                                          "w_" + std::to_string(c.g - 1) + " and w_" + std::to_string(a + b) + " + w_" +
                                              std::to_string(c.g - 1 + a + b) + " lie in different Weyl orbits"});
                }
            }
        }
        // Positive pair before its sign flip.
        std::reverse(kept.begin(), kept.end());
        for (auto& p : kept) r.pairs.push_back(std::move(p));
    }
}

void cubic_pairs(ClassificationReport& r, const Limits& limits) {
    const CaseSpec& c = r.spec;
    const RootSystem& rs = shared_root_system(c.system());
    const auto& fw = rs.fundamental_weights();
    const Weight w1 = fw[0], w2 = fw[1], w6 = fw[5];
    // Every nonzero dominant weight dominates one of w1, w2, w6.
    for (const Weight& w : {w1, w2, w6}) {
        if (reduce_e6(w).result != w) throw InternalError("reduce_e6 moved a minimal weight");
    }
    for (int d = 1; d <= 3; ++d) {
        if (d == 2) continue;
        r.excluded.push_back({d, c.theta_dim() - d, "*", "*",
                              "every nonzero dominant weight dominates w1, w2 or w6, so every summand has dimension >= 2"});
    }
    const std::vector<std::pair<int, Weight>> fano = {{1, w1}, {-1, w6}};
    for (auto& [sx, wx] : fano) {
        for (auto& [sy, wy] : fano) {
            const auto prod = tensor_decompose(rs, wx, wy, limits);
            const bool theta = prod.coeffs.count(w2) > 0;
            const SupportExpr x = SupportExpr::fano(sx).translated(), y = SupportExpr::fano(sy).translated();
            if (theta) {
                r.pairs.push_back({x, y,
                                   "summands of dimension 2 are translates of S or -S; V_w2 occurs in V_w1 (x) V_w6 "
                                   "but not in V_w1 (x) V_w1 or V_w6 (x) V_w6"});
            } else {
                r.excluded.push_back({2, 2, to_string(x), to_string(y), "V_w2 does not occur in the tensor product of the two summands"});
            }
        }
    }
}

}  // namespace

ClassificationReport classify_summands(const CaseSpec& c, const Limits& limits) {
    ClassificationReport r{c, {}, {}};
    switch (c.type) {
        case CaseType::hyperelliptic: hyperelliptic_pairs(r); break;
        case CaseType::nonhyperelliptic: nonhyperelliptic_pairs(r); break;
        case CaseType::cubic_threefold: cubic_pairs(r, limits); break;
    }
    for (auto& p : r.pairs) {
        if (!p.x.dim || !p.y.dim || *p.x.dim < 1 || *p.y.dim < 1 || *p.x.dim + *p.y.dim != c.theta_dim()) {
            throw InternalError("summand dimensions do not add up to the theta divisor");
        }
    }
    return r;
}

nlohmann::json to_json(const SupportExpr& s) {
    nlohmann::json j{{"expr", to_string(s)}, {"up_to_translation", s.translate_marker}};
    j["dim"] = s.dim ? nlohmann::json(*s.dim) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["case"] = to_string(r.spec.type);
    if (r.spec.type != CaseType::cubic_threefold) j["genus"] = r.spec.g;
    j["theta_dim"] = r.spec.theta_dim();
    j["pairs"] = nlohmann::json::array();
    for (auto& p : r.pairs) {
        j["pairs"].push_back({{"x", to_string(p.x)},
                              {"y", to_string(p.y)},
                              {"dims", {*p.x.dim, *p.y.dim}},
                              {"up_to_translation", p.x.translate_marker && p.y.translate_marker},
                              {"provenance", p.provenance}});
    }
    j["excluded"] = nlohmann::json::array();
    for (auto& e : r.excluded) {
        j["excluded"].push_back({{"x", e.x}, {"y", e.y}, {"dims", {e.dim_x, e.dim_y}}, {"reason", e.reason}});
    }
    return j;
}

}  // namespace thetasum
