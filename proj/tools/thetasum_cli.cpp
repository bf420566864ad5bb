#include <charconv>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetasum/brillnoether.hpp"
#include "thetasum/charring.hpp"
#include "thetasum/dominance.hpp"
#include "thetasum/lambdaring.hpp"
#include "thetasum/verify.hpp"
#include "thetasum/weyl.hpp"

using namespace thetasum;
using nlohmann::json;

namespace {

enum Exit { ok = 0, user_error = 1, resource_cap = 2, verification_failed = 3, internal_error = 4 };

struct Options {
    std::string system;
    std::string format = "text";
    std::optional<std::uint64_t> cap;
    std::string basis = "auto";

    std::string weight, lambda, mu;
    std::string case_name;
    std::optional<int> genus;
    std::int64_t power = 2;
    bool virtual_lambda = false;
    std::string method = "freudenthal";

    std::string suite;
    SuiteBounds bounds;
    std::string bounds_system;
};

Limits limits_of(const Options& o) { return o.cap ? Limits::uniform(*o.cap) : default_limits(); }

const RootSystem& system_of(const Options& o) {
    if (o.system.empty()) throw InvalidArgument("missing --system (C<n>, SL<2n>, A<2n-1> or E6)");
    return shared_root_system(parse_kind(o.system));
}

/// A case fixes the system; an explicit --system must agree with it.
CaseSpec case_of(const Options& o) {
    if (o.case_name.empty()) throw InvalidArgument("missing --case (hyperelliptic, nonhyperelliptic or cubic-threefold)");
    CaseSpec c = make_case(o.case_name, o.genus);
    if (!o.system.empty() && parse_kind(o.system) != c.system()) {
        throw InvalidArgument("basis/system mismatch: case " + to_string(c.type) + " lives on " + to_string(c.system()) +
                              ", not " + o.system);
    }
    return c;
}

Coords parse_ints(const std::string& text, const char* flag) {
    if (text.empty()) throw InvalidArgument(std::string("missing ") + flag);
    Coords out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        std::string_view item(text.data() + pos, end - pos);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw InvalidArgument(std::string("malformed weight vector for ") + flag + ": '" + text +
                                  "' (expected comma-separated integers)");
        }
        out.push_back(v);
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

Weight parse_weight(const RootSystem& rs, const Options& o, const std::string& text, const char* flag) {
    Coords v = parse_ints(text, flag);
    Basis basis = o.basis == "auto" ? (rs.kind().family == Family::E6 ? Basis::dynkin : Basis::epsilon) : parse_basis(o.basis);
    const std::string sys = to_string(rs.kind());
    switch (basis) {
        case Basis::epsilon:
            if (rs.kind().family == Family::E6) throw InvalidArgument("basis/system mismatch: E6 has no epsilon basis; use --basis dynkin");
            if (static_cast<int>(v.size()) != rs.ambient_dim()) {
                throw InvalidArgument("basis/system mismatch: " + sys + " takes " + std::to_string(rs.ambient_dim()) +
                                      " epsilon coordinates, got " + std::to_string(v.size()));
            }
            return rs.weight(std::move(v));
        case Basis::dynkin:
            if (static_cast<int>(v.size()) != rs.rank()) {
                throw InvalidArgument("basis/system mismatch: " + sys + " takes " + std::to_string(rs.rank()) +
                                      " Dynkin labels, got " + std::to_string(v.size()));
            }
            return rs.from_dynkin(v);
        case Basis::root:
            break;
    }
    throw InvalidArgument("basis/system mismatch: weights are given in the epsilon or dynkin basis");
}

Weight parse_dominant(const RootSystem& rs, const Options& o, const std::string& text, const char* flag) {
    Weight w = parse_weight(rs, o, text, flag);
    if (!is_dominant(rs, w)) throw InvalidArgument(std::string(flag) + " " + to_string(w) + " is not dominant");
    return w;
}

json weight_json(const RootSystem& rs, const Weight& w) {
    return {{"coords", w.coords}, {"dynkin", rs.dynkin(w)}};
}

std::string terms_text(const std::map<Weight, BigInt>& terms) {
    std::ostringstream out;
    for (auto& [w, c] : terms) out << to_string(w) << "  " << c << "\n";
    return out.str();
}

struct Output {
    json payload;
    std::string text;
    int code = ok;
};

Output cmd_orbit(const Options& o) {
    const RootSystem& rs = system_of(o);
    const Weight w = parse_weight(rs, o, o.weight, "--weight");
    const auto orb = orbit(rs, dominant_projection(rs, w).dominant, limits_of(o));
    Output out;
    out.payload = {{"system", to_string(rs.kind())}, {"dominant", weight_json(rs, orb.dominant_rep)}, {"size", orb.size()}};
    json elems = json::array();
    std::ostringstream text;
    text << "orbit of " << to_string(orb.dominant_rep) << ", size " << orb.size() << "\n";
    for (auto& e : orb.elements) {
        elems.push_back(e.coords);
        text << to_string(e) << "\n";
    }
    out.payload["elements"] = elems;
    out.text = text.str();
    return out;
}

Output cmd_dominance(const Options& o) {
    const RootSystem& rs = system_of(o);
    const Weight lam = parse_weight(rs, o, o.lambda, "--lambda");
    const Weight mu = parse_weight(rs, o, o.mu, "--mu");
    const auto down = dominance_compare(rs, lam, mu);
    const auto up = dominance_compare(rs, mu, lam);
    std::string relation = "incomparable";
    if (down.comparable && up.comparable) {
        relation = "equal";
    } else if (down.comparable) {
        relation = "mu <= lambda";
    } else if (up.comparable) {
        relation = "lambda <= mu";
    }
    Output out;
    out.payload = {{"system", to_string(rs.kind())},
                   {"lambda", weight_json(rs, lam)},
                   {"mu", weight_json(rs, mu)},
                   {"relation", relation}};
    if (down.comparable) out.payload["root_coefficients"] = down.root_coefficients;
    if (!down.comparable && up.comparable) out.payload["root_coefficients"] = up.root_coefficients;
    out.text = relation + "\n";
    return out;
}

Output cmd_reduce(const Options& o) {
    const CaseSpec c = case_of(o);
    const RootSystem& rs = shared_root_system(c.system());
    const Weight lam = parse_dominant(rs, o, o.weight, "--weight");
    ReductionTrace t;
    switch (c.type) {
        case CaseType::hyperelliptic: t = reduce_hyp(c.n(), lam); break;
        case CaseType::nonhyperelliptic: t = reduce_nonhyp(c.n(), lam); break;
        case CaseType::cubic_threefold: t = reduce_e6(lam); break;
    }
    Output out;
    json steps = json::array();
    std::ostringstream text;
    text << to_string(t.start) << "\n";
    Weight cur = t.start;
    for (auto& s : t.steps) {
        cur = subtract(rs, cur, s.subtracted);
        steps.push_back({{"rule", s.rule}, {"subtracted", s.subtracted.coords}, {"weight", cur.coords}});
        text << "  - " << to_string(s.subtracted) << "  [" << s.rule << "]  -> " << to_string(cur) << "\n";
    }
    text << "result " << to_string(t.result) << "\n";
    out.payload = {{"case", to_string(c.type)},
                   {"system", to_string(rs.kind())},
                   {"start", weight_json(rs, t.start)},
                   {"steps", steps},
                   {"result", weight_json(rs, t.result)}};
    if (c.type != CaseType::cubic_threefold) out.payload["genus"] = c.g;
    out.text = text.str();
    return out;
}

Output cmd_char(const Options& o) {
    const RootSystem& rs = system_of(o);
    const Weight lam = parse_dominant(rs, o, o.weight, "--weight");
    CharElem ch(rs.kind());
    if (o.method == "freudenthal") {
        ch = freudenthal_character(rs, lam, limits_of(o));
    } else if (o.method == "weyl") {
        ch = weyl_character_direct(rs, lam, limits_of(o));
    } else {
        throw InvalidArgument("unknown --method '" + o.method + "' (expected freudenthal or weyl)");
    }
    Output out;
    out.payload = {{"system", to_string(rs.kind())},
                   {"highest_weight", weight_json(rs, lam)},
                   {"dimension", coeff_to_json(dimension(ch, limits_of(o)))},
                   {"multiplicities", to_json(ch)}};
    out.text = terms_text(ch.coeffs());
    return out;
}

Output cmd_dim(const Options& o) {
    const RootSystem& rs = system_of(o);
    const Weight lam = parse_dominant(rs, o, o.weight, "--weight");
    const BigInt d = weyl_dimension(rs, lam);
    Output out;
    out.payload = {{"system", to_string(rs.kind())}, {"highest_weight", weight_json(rs, lam)}, {"dimension", coeff_to_json(d)}};
    out.text = d.str() + "\n";
    return out;
}

Output cmd_tensor(const Options& o) {
    const RootSystem& rs = system_of(o);
    const Weight lam = parse_dominant(rs, o, o.lambda, "--lambda");
    const Weight mu = parse_dominant(rs, o, o.mu, "--mu");
    const auto dec = tensor_decompose(rs, lam, mu, limits_of(o));
    Output out;
    out.payload = {{"system", to_string(rs.kind())},
                   {"lambda", weight_json(rs, lam)},
                   {"mu", weight_json(rs, mu)},
                   {"decomposition", to_json(dec)}};
    out.text = terms_text(dec.coeffs);
    return out;
}

Output character_payload(const RootSystem& rs, const Weight& lam, const CharElem& x, const Limits& limits) {
    const auto dec = decompose_into_irreducibles(x, limits);
    Output out;
    out.payload = {{"system", to_string(rs.kind())},
                   {"highest_weight", weight_json(rs, lam)},
                   {"character", to_json(x)},
                   {"decomposition", to_json(dec)},
                   {"dimension", coeff_to_json(dimension(x, limits))}};
    out.text = terms_text(dec.coeffs);
    return out;
}

Output cmd_lambda(const Options& o) {
    const RootSystem& rs = system_of(o);
    const Weight lam = parse_dominant(rs, o, o.weight, "--weight");
    const Limits limits = limits_of(o);
    const CharElem x = freudenthal_character(rs, lam, limits);
    const CharElem y = o.virtual_lambda ? lambda_power_virtual(o.power, x, limits) : lambda_power_effective(o.power, x, limits);
    Output out = character_payload(rs, lam, y, limits);
    out.payload["power"] = o.power;
    return out;
}

Output cmd_adams(const Options& o) {
    const RootSystem& rs = system_of(o);
    const Weight lam = parse_dominant(rs, o, o.weight, "--weight");
    const Limits limits = limits_of(o);
    const CharElem x = freudenthal_character(rs, lam, limits);
    Output out = character_payload(rs, lam, adams(o.power, x), limits);
    out.payload["power"] = o.power;
    out.payload["factors_through_root_lattice"] = factors_through_root_lattice(o.power, x, limits);
    return out;
}

Output cmd_support(const Options& o) {
    const CaseSpec c = case_of(o);
    const RootSystem& rs = shared_root_system(c.system());
    const Weight mu = parse_dominant(rs, o, o.weight, "--weight");
    const SupportExpr s = support_of_orbit(c, mu);
    Output out;
    out.payload = {{"case", to_string(c.type)}, {"weight", weight_json(rs, mu)}, {"support", to_json(s)}};
    if (c.type != CaseType::cubic_threefold) out.payload["genus"] = c.g;
    std::ostringstream text;
    text << to_string(s) << "\n";
    if (c.type == CaseType::hyperelliptic) {
        const auto d = support_dim_hyp(c.g, mu);
        out.payload["max_support_dim"] = d;
        text << "max support dimension below this weight: " << d << "\n";
    } else if (c.type == CaseType::nonhyperelliptic) {
        const auto d = support_dim_nonhyp_bound(c.g, mu);
        out.payload["support_dim_lower_bound"] = d;
        text << "support dimension below this weight is at least " << d << "\n";
    }
    out.text = text.str();
    return out;
}

Output cmd_classify(const Options& o) {
    const CaseSpec c = case_of(o);
    const auto report = classify_summands(c, limits_of(o));
    Output out;
    out.payload = to_json(report);
    std::ostringstream text;
    for (auto& p : report.pairs) text << to_string(p.x) << " + " << to_string(p.y) << "    " << p.provenance << "\n";
    for (auto& e : report.excluded) text << "excluded " << e.x << " + " << e.y << ": " << e.reason << "\n";
    out.text = text.str();
    return out;
}

Output cmd_verify(const Options& o) {
    if (o.suite.empty()) throw InvalidArgument("missing --suite (a suite name or 'all')");
    SuiteBounds b = o.bounds;
    if (!o.system.empty()) b.system = parse_kind(o.system);
    std::vector<std::string> names = o.suite == "all" ? suite_names() : std::vector<std::string>{o.suite};
    Output out;
    json results = json::array();
    std::ostringstream text;
    for (auto& name : names) {
        const auto r = run_verification_suite(name, b, limits_of(o));
        results.push_back(to_json(r));
        text << (r.failures == 0 ? "PASS " : "FAIL ") << name << ": " << r.statement << " (tested " << r.tested
             << ", failures " << r.failures << ", " << static_cast<std::int64_t>(r.wall_time_ms) << " ms)\n";
        for (auto& w : r.counterexamples) text << "  counterexample " << w.dump() << "\n";
        if (r.failures != 0) {
            std::cerr << "error: counterexample found in suite " << name << "\n";
            out.code = verification_failed;
        }
    }
    out.payload = names.size() == 1 ? results.front() : results;
    out.text = text.str();
    return out;
}

void add_weight(CLI::App* cmd, Options& o, bool with_basis_note = true) {
    cmd->add_option("--weight", o.weight, with_basis_note ? "Comma-separated weight coordinates" : "Weight");
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact root-system, character and lambda-ring computations for theta-divisor summands"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();
    app.add_option("--system", o.system, "Root system: C<n>, SL<2n>, A<2n-1> or E6");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cap", o.cap, "Shared cap on orbit size, work and group order");
    app.add_option("--basis", o.basis, "Basis for weight input")->check(CLI::IsMember({"auto", "epsilon", "dynkin"}));

    std::vector<std::pair<CLI::App*, Output (*)(const Options&)>> commands;
    auto sub = [&](const char* name, const char* help, Output (*fn)(const Options&)) {
        CLI::App* cmd = app.add_subcommand(name, help);
        cmd->fallthrough();
        commands.emplace_back(cmd, fn);
        return cmd;
    };

    add_weight(sub("orbit", "Weyl orbit of a weight", cmd_orbit), o);
    {
        auto* cmd = sub("dominance", "Compare two weights in the dominance order", cmd_dominance);
        cmd->add_option("--lambda", o.lambda, "First weight");
        cmd->add_option("--mu", o.mu, "Second weight");
    }
    for (auto [name, help, fn] : {std::tuple{"reduce", "Reduce a dominant weight to a short one below it", cmd_reduce},
                                  std::tuple{"support", "Support of the component attached to a weight orbit", cmd_support}}) {
        auto* cmd = sub(name, help, fn);
        cmd->add_option("--case", o.case_name, "hyperelliptic, nonhyperelliptic or cubic-threefold");
        cmd->add_option("--genus", o.genus, "Genus of the curve");
        add_weight(cmd, o);
    }
    {
        auto* cmd = sub("char", "Weight multiplicities of an irreducible representation", cmd_char);
        add_weight(cmd, o);
        cmd->add_option("--method", o.method, "freudenthal or weyl");
    }
    add_weight(sub("dim", "Dimension of an irreducible representation", cmd_dim), o);
    {
        auto* cmd = sub("tensor", "Decompose a tensor product of irreducibles", cmd_tensor);
        cmd->add_option("--lambda", o.lambda, "First highest weight");
        cmd->add_option("--mu", o.mu, "Second highest weight");
    }
    {
        auto* cmd = sub("lambda", "Exterior power of an irreducible representation", cmd_lambda);
        add_weight(cmd, o);
        cmd->add_option("--power", o.power, "Exponent n");
        cmd->add_flag("--virtual", o.virtual_lambda, "Use Newton's identities instead of the direct expansion");
    }
    {
        auto* cmd = sub("adams", "Adams operation on an irreducible character", cmd_adams);
        add_weight(cmd, o);
        cmd->add_option("--power", o.power, "Exponent n");
    }
    {
        auto* cmd = sub("classify", "Classify the decompositions of the theta divisor", cmd_classify);
        cmd->add_option("--case", o.case_name, "hyperelliptic, nonhyperelliptic or cubic-threefold");
        cmd->add_option("--genus", o.genus, "Genus of the curve");
    }
    {
        auto* cmd = sub("verify", "Run a bounded verification suite", cmd_verify);
        cmd->add_option("--suite", o.suite, "Suite name or 'all'");
        cmd->add_option("--max-n", o.bounds.max_n, "Largest rank parameter n");
        cmd->add_option("--max-degree", o.bounds.max_degree, "Largest weight degree");
        cmd->add_option("--max-label-sum", o.bounds.max_label_sum, "Largest E6 Dynkin-label sum");
        cmd->add_option("--samples", o.bounds.samples, "Random samples per system");
        cmd->add_option("--min-genus", o.bounds.min_genus, "Smallest genus");
        cmd->add_option("--max-genus", o.bounds.max_genus, "Largest genus");
        cmd->add_option("--golden-dir", o.bounds.golden_dir, "Directory of classification JSON files to compare byte for byte");
        cmd->add_option("--seed", o.bounds.seed, "Random seed");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (app.get_subcommands().empty() && argc > 1) {
            for (int i = 1; i < argc; ++i) {
                const std::string arg = argv[i];
                if (arg.rfind("-", 0) == 0) {
                    if (arg.find('=') == std::string::npos) ++i;
                    continue;
                }
                std::cerr << "error: unknown subcommand '" << arg << "'\n";
                return user_error;
            }
        }
        std::cerr << "error: " << e.what() << "\n";
        return user_error;
    }

    try {
        for (auto& [cmd, fn] : commands) {
            if (!cmd->parsed()) continue;
            Output out = fn(o);
            if (o.format == "json") {
                std::cout << out.payload.dump(2) << "\n";
            } else {
                std::cout << out.text;
            }
            return out.code;
        }
        throw InternalError("no subcommand dispatched");
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return user_error;
    } catch (const ResourceLimitExceeded& e) {
        std::cerr << "error: resource cap reached: " << e.what() << "\n";
        return resource_cap;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal_error;
    }
}
