#include "thetasum/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "thetasum/brillnoether.hpp"
#include "thetasum/charring.hpp"
#include "thetasum/lambdaring.hpp"
#include "thetasum/weyl.hpp"

namespace thetasum {

void SuiteResult::fail(nlohmann::json witness) {
    ++failures;
    if (counterexamples.size() < max_reported) counterexamples.push_back(std::move(witness));
}

nlohmann::json to_json(const SuiteResult& r) {
    return {{"suite", r.suite},
            {"statement", r.statement},
            {"tested", r.tested},
            {"failures", r.failures},
            {"counterexamples", r.counterexamples},
            {"wall_time_ms", r.wall_time_ms}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"lemma32",  "lemma42",      "lemma52",         "remark26",
                                                   "lambda-axioms", "alt-decomp", "adams-factor", "dims-e6",
                                                   "classify-golden", "support-dim", "char-oracle"};
    return names;
}

namespace {

void partitions(std::int64_t total, std::size_t parts, std::int64_t cap, Partition& cur, std::vector<Partition>& out) {
    if (cur.size() == parts) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (std::int64_t v = std::min(total, cap); v >= 0; --v) {
        cur.push_back(v);
        partitions(total - v, parts, v, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> partitions(std::int64_t total, std::size_t parts) {
    std::vector<Partition> out;
    Partition cur;
    partitions(total, parts, total, cur, out);
    return out;
}

void compositions(std::int64_t total, std::size_t parts, Coords& cur, std::vector<Coords>& out) {
    if (cur.size() + 1 == parts) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (std::int64_t v = 0; v <= total; ++v) {
        cur.push_back(v);
        compositions(total - v, parts, cur, out);
        cur.pop_back();
    }
}

nlohmann::json wj(const Weight& w) { return w.coords; }

}  // namespace

std::vector<Weight> dominant_weights_of_degree(const RootSystem& rs, int d) {
    if (d < 0) return {};
    std::vector<Weight> out;
    const std::size_t n = static_cast<std::size_t>(rs.kind().n);
    switch (rs.kind().family) {
        case Family::SpC:
            for (auto& p : partitions(d, n)) out.push_back(rs.weight(p));
            break;
        case Family::SlA:
            for (int dp = 0; dp <= d; ++dp) {
                for (auto& a : partitions(dp, n)) {
                    for (auto& bdec : partitions(d - dp, n - 1)) {
                        Partition b(n, 0);
                        for (std::size_t i = 0; i + 1 < n; ++i) b[n - 1 - i] = bdec[i];
                        out.push_back(join_sl(rs, a, b));
                    }
                }
            }
            break;
        case Family::E6: {
            std::vector<Coords> labs;
            Coords cur;
            compositions(d, 6, cur, labs);
            for (auto& l : labs) out.push_back(rs.from_dynkin(l));
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<RootSystemKind> systems_or(const SuiteBounds& b, std::vector<RootSystemKind> fallback) {
    if (b.system) return {*b.system};
    return fallback;
}

constexpr std::uint64_t oracle_budget = 50'000'000;

void suite_lemma32(const SuiteBounds& b, SuiteResult& r) {
    r.statement = "hyperelliptic length lemma: every dominant lambda of C_n dominates some mu with l(mu) = min{d(lambda), n}";
    const int max_n = b.max_n.value_or(6), max_d = b.max_degree.value_or(12);
    for (int n = 1; n <= max_n; ++n) {
        const RootSystem& rs = shared_root_system(RootSystemKind::sp(n));
        for (int d = 0; d <= max_d; ++d) {
            const std::int64_t target = std::min(d, n);
            auto pred = [&](const Weight& mu) { return degree_length_hyp(mu).length == target; };
            for (auto& lam : dominant_weights_of_degree(rs, d)) {
                ++r.tested;
                const auto t = reduce_hyp(n, lam);
                const bool ok = pred(t.result) && dominates(rs, lam, t.result) && replay(rs, t) == t.result;
                const auto oracle = brute_force_reduce(rs, lam, pred, oracle_budget);
                if (!ok || oracle.status != OracleStatus::found) {
                    r.fail({{"n", n}, {"lambda", wj(lam)}, {"result", wj(t.result)}, {"oracle_found", oracle.status == OracleStatus::found}});
                }
            }
        }
    }
}

void suite_lemma42(const SuiteBounds& b, SuiteResult& r) {
    r.statement = "nonhyperelliptic length lemma: every dominant lambda of SL_2n dominates some mu with "
                  "l(mu) = min{d(lambda), n} or l(mu) = d(mu) = n-1";
    const int max_n = b.max_n.value_or(5), max_d = b.max_degree.value_or(10);
    for (int n = 1; n <= max_n; ++n) {
        const RootSystem& rs = shared_root_system(RootSystemKind::sl(n));
        for (int d = 0; d <= max_d; ++d) {
            for (auto& lam : dominant_weights_of_degree(rs, d)) {
                ++r.tested;
                const auto t = reduce_nonhyp(n, lam);
                const auto s = split_sl(rs, t.result);
                const bool shape = s.length() == std::min(d, n) || (s.length() == s.degree() && s.degree() == n - 1);
                if (!shape || !dominates(rs, lam, t.result) || replay(rs, t) != t.result) {
                    r.fail({{"n", n}, {"lambda", wj(lam)}, {"result", wj(t.result)}});
                }
            }
        }
    }
}

void suite_lemma52(const SuiteBounds& b, SuiteResult& r) {
    r.statement = "E6 lemma: every nonzero dominant lambda dominates w1, w2 or w6, reached by certified relations";
    const RootSystem& rs = shared_root_system(RootSystemKind::e6());
    const auto& fw = rs.fundamental_weights();
    const int max_sum = b.max_label_sum.value_or(5);
    for (int s = 1; s <= max_sum; ++s) {
        for (auto& lam : dominant_weights_of_degree(rs, s)) {
            ++r.tested;
            const auto t = reduce_e6(lam);
            bool ok = t.result == fw[0] || t.result == fw[1] || t.result == fw[5];
            Weight cur = lam;
            for (auto& step : t.steps) {
                Weight next = subtract(rs, cur, step.subtracted);
                ok = ok && is_dominant(rs, next) && dominates(rs, cur, next);
                cur = std::move(next);
            }
            ok = ok && cur == t.result;
            if (!ok) r.fail({{"lambda", rs.dynkin(lam)}, {"result", rs.dynkin(t.result)}});
        }
    }
}

void suite_remark26(const SuiteBounds& b, SuiteResult& r, const Limits& limits) {
    r.statement = "multiplicity positivity: m_lambda(mu) > 0 exactly when mu <= lambda";
    const int max_d = b.max_degree.value_or(6);
    for (auto kind : systems_or(b, {RootSystemKind::sp(2), RootSystemKind::sp(3), RootSystemKind::sl(2), RootSystemKind::e6()})) {
        const RootSystem& rs = shared_root_system(kind);
        std::vector<Weight> lambdas, hull;
        if (kind.family == Family::E6) {
            lambdas = {rs.fundamental_weights()[0], rs.fundamental_weights()[1], rs.fundamental_weights()[5]};
            for (int s = 0; s <= 3; ++s)
                for (auto& w : dominant_weights_of_degree(rs, s)) hull.push_back(w);
        } else {
            for (int d = 0; d <= max_d; ++d)
                for (auto& w : dominant_weights_of_degree(rs, d)) lambdas.push_back(w);
            hull = lambdas;
        }
        for (auto& lam : lambdas) {
            const CharElem ch = freudenthal_character(rs, lam, limits);
            std::set<Weight> candidates(hull.begin(), hull.end());
            for (auto& [mu, _] : ch.coeffs()) candidates.insert(mu);
            for (auto& mu : candidates) {
                ++r.tested;
                if ((ch.coeff(mu) > 0) != dominates(rs, lam, mu)) {
                    r.fail({{"system", to_string(kind)}, {"lambda", wj(lam)}, {"mu", wj(mu)}, {"multiplicity", coeff_to_json(ch.coeff(mu))}});
                }
            }
        }
    }
}

struct LambdaMemo {
    const Limits& limits;
    std::map<std::string, std::vector<CharElem>> effective;

    const std::vector<CharElem>& powers(const CharElem& x, int top) {
        const std::string key = to_json(x).dump();
        auto it = effective.find(key);
        if (it != effective.end() && static_cast<int>(it->second.size()) > top) return it->second;
        std::vector<CharElem> out;
        for (int k = 0; k <= top; ++k) out.push_back(lambda_power_effective(k, x, limits));
        return effective[key] = std::move(out);
    }
};

void suite_lambda_axioms(const SuiteBounds& b, SuiteResult& r, const Limits& limits) {
    r.statement = "lambda-ring axioms and Adams laws on random effective characters";
    const int samples = b.samples.value_or(200);
    constexpr int top = 4;
    std::mt19937_64 rng(b.seed);
    for (auto kind : systems_or(b, {RootSystemKind::sp(2), RootSystemKind::sp(3), RootSystemKind::sl(2), RootSystemKind::e6()})) {
        const RootSystem& rs = shared_root_system(kind);
        const CharElem one = CharElem::one(kind);
        std::vector<Weight> keys;
        if (kind.family == Family::E6) {
            keys = {rs.from_dynkin(Coords(6, 0)), rs.fundamental_weights()[0], rs.fundamental_weights()[5]};
        } else {
            for (int d = 0; d <= 2; ++d)
                for (auto& w : dominant_weights_of_degree(rs, d)) keys.push_back(w);
        }
        auto random_char = [&] {
            CharElem x(kind);
            std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
            std::uniform_int_distribution<int> coeff(1, kind.family == Family::E6 ? 1 : 2);
            const int terms = kind.family == Family::E6 ? 1 : 1 + static_cast<int>(rng() % 2);
            for (int t = 0; t < terms; ++t) x.add_term(keys[pick(rng)], coeff(rng));
            return x;
        };
        auto check = [&](bool ok, const char* what, const CharElem& x) {
            ++r.tested;
            if (!ok) r.fail({{"system", to_string(kind)}, {"identity", what}, {"x", to_json(x)}});
        };

        LambdaMemo memo{limits, {}};
        for (int n = 2; n <= top; ++n) check(lambda_power_virtual(n, one, limits).is_zero(), "lambda^n(1) = 0", one);
        for (int s = 0; s < samples; ++s) {
            const CharElem x = random_char(), y = random_char();
            const auto& lx = memo.powers(x, top);
            const auto& ly = memo.powers(y, top);
            const auto& lxy = memo.powers(x + y, top);
            check(lx[0] == one, "lambda^0 = 1", x);
            check(lx[1] == x, "lambda^1 = id", x);
            for (int n = 2; n <= top; ++n) {
                CharElem conv(kind);
                for (int i = 0; i <= n; ++i) conv += multiply(lx[static_cast<std::size_t>(i)], ly[static_cast<std::size_t>(n - i)], limits);
                check(lxy[static_cast<std::size_t>(n)] == conv, "lambda^n(x+y) = sum lambda^i(x) lambda^(n-i)(y)", x + y);
            }
            for (int n = 2; n <= top; ++n) {
                check(lambda_power_virtual(n, x, limits) == lx[static_cast<std::size_t>(n)], "virtual = effective", x);
            }
            const CharElem xy = multiply(x, y, limits);
            for (int n : {2, 3}) check(adams(n, xy) == multiply(adams(n, x), adams(n, y), limits), "Psi^n(xy) = Psi^n(x) Psi^n(y)", x);
            check(adams(2, x + y) == adams(2, x) + adams(2, y), "Psi^n additive", x);
            check(adams(2, adams(3, x)) == adams(6, x), "Psi^2 Psi^3 = Psi^6", x);
            check(adams(3, adams(2, x)) == adams(6, x), "Psi^3 Psi^2 = Psi^6", x);
        }
    }
}

void suite_alt_decomp(const SuiteBounds& b, SuiteResult& r, const Limits& limits) {
    r.statement = "alternating powers of the standard representation: sum of V_w(d-2i) for C_n, V_wd for SL_2n";
    const int max_sp = b.max_n.value_or(5), max_sl = std::min(b.max_n.value_or(3), 3);
    for (int n = 1; n <= max_sp; ++n) {
        const RootSystem& rs = shared_root_system(RootSystemKind::sp(n));
        const CharElem std_rep = CharElem::orbit_sum(rs, rs.fundamental_weights()[0]);
        for (int d = 0; d <= n; ++d) {
            ++r.tested;
            IrrDecomposition expect{rs.kind(), {}};
            for (int i = 0; 2 * i <= d; ++i) {
                const int k = d - 2 * i;
                expect.coeffs.emplace(k == 0 ? rs.from_dynkin(Coords(n, 0)) : rs.fundamental_weights()[static_cast<std::size_t>(k - 1)], 1);
            }
            const auto got = decompose_into_irreducibles(lambda_power_effective(d, std_rep, limits), limits);
            if (got != expect) r.fail({{"system", to_string(rs.kind())}, {"d", d}, {"decomposition", to_json(got)}});
        }
    }
    for (int n = 1; n <= max_sl; ++n) {
        const RootSystem& rs = shared_root_system(RootSystemKind::sl(n));
        const CharElem std_rep = CharElem::orbit_sum(rs, rs.fundamental_weights()[0]);
        for (int d = 1; d <= 2 * n - 1; ++d) {
            ++r.tested;
            const Weight wd = rs.fundamental_weights()[static_cast<std::size_t>(d - 1)];
            const CharElem got = lambda_power_effective(d, std_rep, limits);
            if (got != freudenthal_character(rs, wd, limits)) r.fail({{"system", to_string(rs.kind())}, {"d", d}, {"character", to_json(got)}});
        }
    }
}

void suite_adams_factor(const SuiteBounds& b, SuiteResult& r, const Limits& limits) {
    r.statement = "Adams operations Psi^n factor through the root lattice when the fundamental group exponent divides n";
    std::vector<RootSystemKind> kinds;
    if (b.system) {
        kinds = {*b.system};
    } else {
        for (int n = 1; n <= b.max_n.value_or(4); ++n) kinds.push_back(RootSystemKind::sp(n));
        for (int n = 1; n <= std::min(b.max_n.value_or(3), 3); ++n) kinds.push_back(RootSystemKind::sl(n));
        kinds.push_back(RootSystemKind::e6());
    }
    for (auto kind : kinds) {
        const RootSystem& rs = shared_root_system(kind);
        const std::int64_t m = rs.fundamental_group_exponent();
        for (std::size_t i = 0; i < rs.fundamental_weights().size(); ++i) {
            const CharElem x = freudenthal_character(rs, rs.fundamental_weights()[i], limits);
            for (std::int64_t k : {m, 2 * m}) {
                ++r.tested;
                if (!factors_through_root_lattice(k, x, limits)) {
                    r.fail({{"system", to_string(kind)}, {"fundamental", i + 1}, {"n", k}, {"expected", true}});
                }
            }
        }
        ++r.tested;
        const CharElem std_rep = freudenthal_character(rs, rs.fundamental_weights()[0], limits);
        if (factors_through_root_lattice(1, std_rep, limits)) {
            r.fail({{"system", to_string(kind)}, {"fundamental", 1}, {"n", 1}, {"expected", false}});
        }
    }
}

void suite_dims_e6(SuiteResult& r) {
    r.statement = "E6 dimensions: 27 for w1 and w6, 78 for w2";
    const RootSystem& rs = shared_root_system(RootSystemKind::e6());
    const std::vector<std::pair<std::size_t, int>> expect = {{0, 27}, {5, 27}, {1, 78}};
    for (auto [i, dim] : expect) {
        ++r.tested;
        const BigInt got = weyl_dimension(rs, rs.fundamental_weights()[i]);
        if (got != dim) r.fail({{"fundamental", i + 1}, {"expected", dim}, {"got", coeff_to_json(got)}});
    }
}

std::string golden_name(const CaseSpec& c) {
    if (c.type == CaseType::cubic_threefold) return "cubic-threefold";
    return to_string(c.type) + "-g" + std::to_string(c.g);
}

void suite_classify_golden(const SuiteBounds& b, SuiteResult& r, const Limits& limits) {
    r.statement = "classification of theta-divisor summands: W_d + W_(g-1-d), its sign flip, and S + (-S)";
    std::vector<std::pair<CaseSpec, std::set<std::pair<std::string, std::string>>>> cases;
    const int lo = b.min_genus.value_or(3), hi = b.max_genus.value_or(8);
    for (int g = std::max(lo, 3); g <= hi; ++g) {
        std::set<std::pair<std::string, std::string>> hyp, non;
        for (int d = 1; d <= g - 2; ++d) {
            const std::string x = "W_" + std::to_string(d), y = "W_" + std::to_string(g - 1 - d);
            hyp.emplace(x, y);
            non.emplace(x, y);
            non.emplace("-" + x, "-" + y);
        }
        cases.emplace_back(CaseSpec::hyperelliptic(g), hyp);
        if (g >= 4) cases.emplace_back(CaseSpec::nonhyperelliptic(g), non);
    }
    cases.emplace_back(CaseSpec::cubic_threefold(), std::set<std::pair<std::string, std::string>>{{"S", "-S"}, {"-S", "S"}});
    for (auto& [c, expect] : cases) {
        ++r.tested;
        const auto report = classify_summands(c, limits);
        std::set<std::pair<std::string, std::string>> got;
        for (auto& p : report.pairs) got.emplace(to_string(p.x), to_string(p.y));
        const std::string text = to_json(report).dump(2) + "\n";
        bool ok = got == expect && got.size() == report.pairs.size();
        if (b.golden_dir) {
            std::ifstream in(*b.golden_dir + "/" + golden_name(c) + ".json", std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            ok = ok && in.good() && ss.str() == text;
        }
        if (!ok) r.fail({{"case", golden_name(c)}, {"report", to_json(report)}});
    }
}

void suite_support_dim(const SuiteBounds& b, SuiteResult& r, const Limits& limits) {
    r.statement = "hyperelliptic support dimension: max{l(mu) : mu <= lambda} = min{d(lambda), g-1}";
    const int lo = b.min_genus.value_or(2), hi = b.max_genus.value_or(7), max_d = b.max_degree.value_or(12);
    for (int g = std::max(lo, 2); g <= hi; ++g) {
        const RootSystem& rs = shared_root_system(RootSystemKind::sp(g - 1));
        for (int d = 0; d <= max_d; ++d) {
            for (auto& lam : dominant_weights_of_degree(rs, d)) {
                ++r.tested;
                std::int64_t best = 0;
                for (auto& mu : dominance_ideal(rs, lam, limits.work_cap)) best = std::max(best, degree_length_hyp(mu).length);
                const std::int64_t closed = std::min(d, g - 1);
                if (best != closed || support_dim_hyp(g, lam) != closed) {
                    r.fail({{"g", g}, {"lambda", wj(lam)}, {"max_length", best}, {"expected", closed}});
                }
            }
        }
    }
}

void suite_char_oracle(const SuiteBounds& b, SuiteResult& r, const Limits& limits) {
    r.statement = "Freudenthal multiplicities agree with the Weyl character formula";
    const int max_d = b.max_degree.value_or(6);
    for (auto kind : systems_or(b, {RootSystemKind::sp(2), RootSystemKind::sp(3), RootSystemKind::sl(2)})) {
        const RootSystem& rs = shared_root_system(kind);
        for (int d = 0; d <= max_d; ++d) {
            for (auto& lam : dominant_weights_of_degree(rs, d)) {
                ++r.tested;
                const CharElem f = freudenthal_character(rs, lam, limits);
                if (f != weyl_character_direct(rs, lam, limits) || dimension(f, limits) != weyl_dimension(rs, lam)) {
                    r.fail({{"system", to_string(kind)}, {"lambda", wj(lam)}});
                }
            }
        }
    }
}

}  // namespace

SuiteResult run_verification_suite(const std::string& name, const SuiteBounds& bounds, const Limits& limits) {
    SuiteResult r;
    r.suite = name;
    const auto start = std::chrono::steady_clock::now();
    if (name == "lemma32") {
        suite_lemma32(bounds, r);
    } else if (name == "lemma42") {
        suite_lemma42(bounds, r);
    } else if (name == "lemma52") {
        suite_lemma52(bounds, r);
    } else if (name == "remark26") {
        suite_remark26(bounds, r, limits);
    } else if (name == "lambda-axioms") {
        suite_lambda_axioms(bounds, r, limits);
    } else if (name == "alt-decomp") {
        suite_alt_decomp(bounds, r, limits);
    } else if (name == "adams-factor") {
        suite_adams_factor(bounds, r, limits);
    } else if (name == "dims-e6") {
        suite_dims_e6(r);
    } else if (name == "classify-golden") {
        suite_classify_golden(bounds, r, limits);
    } else if (name == "support-dim") {
        suite_support_dim(bounds, r, limits);
    } else if (name == "char-oracle") {
        suite_char_oracle(bounds, r, limits);
    } else {
        std::string known;
        for (auto& s : suite_names()) known += (known.empty() ? "" : ", ") + s;
        throw InvalidArgument("unknown suite '" + name + "' (known: " + known + ")");
    }
    r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace thetasum
