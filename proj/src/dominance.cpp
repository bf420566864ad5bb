#include "thetasum/dominance.hpp"

#include <algorithm>

#include "thetasum/partition.hpp"
#include "thetasum/weyl.hpp"

namespace thetasum {

bool is_dominant(const RootSystem& rs, const Weight& w) {
    rs.check(w);
    return labels::is_dominant(rs.dynkin(w));
}

DominanceWitness dominance_compare(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    rs.check(lambda);
    rs.check(mu);
    Coords diff = rs.dynkin(lambda);
    const Coords m = rs.dynkin(mu);
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= m[i];
    Coords c = rs.root_numerators(diff);
    const auto den = rs.root_denominator();
    for (auto& x : c) {
        if (x < 0 || x % den != 0) return {false, {}};
        x /= den;
    }
    return {true, std::move(c)};
}

Weight add(const RootSystem& rs, const Weight& a, const Weight& b) {
    rs.check(a);
    rs.check(b);
    Coords c = a.coords;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords[i];
    return rs.weight(std::move(c));
}

Weight subtract(const RootSystem& rs, const Weight& a, const Weight& b) {
    rs.check(a);
    rs.check(b);
    Coords c = a.coords;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords[i];
    return rs.weight(std::move(c));
}

Weight scale(const RootSystem& rs, std::int64_t k, const Weight& a) {
    rs.check(a);
    Coords c = a.coords;
    for (auto& x : c) x *= k;
    return rs.weight(std::move(c));
}

Weight replay(const RootSystem& rs, const ReductionTrace& trace) {
    Weight w = trace.start;
    for (auto& step : trace.steps) w = subtract(rs, w, step.subtracted);
    return w;
}

namespace {

std::string root_name(std::size_t i, std::size_t k) {
    return "e_" + std::to_string(i + 1) + "-e_" + std::to_string(k + 1);
}

void require_dominant(const RootSystem& rs, const Weight& w, const char* who) {
    if (!is_dominant(rs, w)) throw InvalidArgument(std::string(who) + " requires a dominant weight, got " + to_string(w));
}

void certify(const RootSystem& rs, const ReductionTrace& trace) {
    if (replay(rs, trace) != trace.result) throw InternalError("reduction trace does not replay to its result");
    if (!dominates(rs, trace.start, trace.result)) throw InternalError("reduction result is not below its start");
}

}  // namespace

ReductionTrace reduce_hyp(int n, const Weight& lambda) {
    const RootSystem& rs = shared_root_system(RootSystemKind::sp(n));
    require_dominant(rs, lambda, "reduce_hyp");
    ReductionTrace trace{lambda, {}, lambda};
    const auto start = degree_length_hyp(lambda);
    const std::int64_t target = std::min<std::int64_t>(start.degree, n);
    Coords cur = lambda.coords;
    for (;;) {
        std::int64_t len = std::count_if(cur.begin(), cur.end(), [](std::int64_t x) { return x != 0; });
        if (len >= target) break;
        // i = last part >= 2, k = first empty row.
        std::size_t i = 0;
        bool have = false;
        for (std::size_t j = 0; j < cur.size(); ++j)
            if (cur[j] >= 2) {
                i = j;
                have = true;
            }
        if (!have) throw InternalError("reduce_hyp: no part >= 2 below the target length");
        const std::size_t k = static_cast<std::size_t>(len);
        Coords root(cur.size(), 0);
        root[i] = 1;
        root[k] = -1;
        cur[i] -= 1;
        cur[k] += 1;
        trace.steps.push_back({rs.weight(root), "spread " + root_name(i, k)});
    }
    trace.result = rs.weight(cur);
    require_dominant(rs, trace.result, "reduce_hyp result");
    certify(rs, trace);
    return trace;
}

ReductionTrace reduce_nonhyp(int n, const Weight& lambda) {
    const RootSystem& rs = shared_root_system(RootSystemKind::sl(n));
    require_dominant(rs, lambda, "reduce_nonhyp");
    ReductionTrace trace{lambda, {}, lambda};
    const std::size_t un = static_cast<std::size_t>(n);
    const std::int64_t target = std::min<std::int64_t>(split_sl(rs, lambda).degree(), n);

    Weight cur = lambda;
    auto apply = [&](std::size_t pos_from, std::size_t pos_to, std::string rule) {
        Coords root(2 * un, 0);
        root[pos_from] += 1;
        root[pos_to] -= 1;
        Weight r = rs.weight(root);
        Weight next = subtract(rs, cur, r);
        if (!is_dominant(rs, next)) throw InternalError("reduce_nonhyp left the dominant chamber via " + rule);
        trace.steps.push_back({r, std::move(rule)});
        cur = std::move(next);
    };

    // Each move subtracts a positive root, so the loop terminates; the guard only
    // catches a broken move selection.
    const std::int64_t guard = 4 * (split_sl(rs, lambda).degree() + 2) * static_cast<std::int64_t>(2 * un);
    for (std::int64_t iter = 0;; ++iter) {
        if (iter > guard) throw InternalError("reduce_nonhyp did not terminate");
        const SlSplit s = split_sl(rs, cur);
        const std::int64_t len = s.length(), deg = s.degree();
        if (len == target) break;
        // A single positive root reaching the target length is taken first.
        bool hit = false;
        for (const Weight& root : rs.positive_roots()) {
            Weight next = subtract(rs, cur, root);
            if (is_dominant(rs, next) && split_sl(rs, next).length() == target) {
                trace.steps.push_back({root, "direct " + to_string(root.coords)});
                cur = std::move(next);
                hit = true;
                break;
            }
        }
        if (hit) break;
        if (len == deg && deg == n - 1) break;
        const auto& a = s.plus;
        const auto& b = s.minus;  // increasing, b[0] == 0
        if (len < target && len < deg) {
            std::int64_t zeros_b = std::count(b.begin(), b.end(), 0);
            bool a_big = std::any_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 2; });
            bool b_big = std::any_of(b.begin(), b.end(), [](std::int64_t x) { return x >= 2; });
            if (a_big && s.length_plus < n) {
                std::size_t i = 0;
                for (std::size_t j = 0; j < un; ++j)
                    if (a[j] >= 2) i = j;
                std::size_t k = static_cast<std::size_t>(s.length_plus);
                apply(i, k, "equalize plus " + root_name(i, k));
            } else if (b_big && zeros_b >= 2) {
                std::size_t i = static_cast<std::size_t>(zeros_b - 1);
                std::size_t k = static_cast<std::size_t>(std::find_if(b.begin(), b.end(), [](std::int64_t x) { return x >= 2; }) - b.begin());
                apply(un + i, un + k, "equalize minus " + root_name(un + i, un + k));
            } else if (b_big && s.length_plus == 0) {
                // (0 | -b) with a single zero in b: the move renormalizes and fills the plus block.
                std::size_t k = static_cast<std::size_t>(std::find_if(b.begin(), b.end(), [](std::int64_t x) { return x >= 2; }) - b.begin());
                apply(un, un + k, "wrap minus " + root_name(un, un + k));
            } else {
                throw InternalError("reduce_nonhyp: no raising move for " + to_string(cur));
            }
        } else if (len > target && s.length_plus > 0 && s.length_minus > 0) {
            std::size_t i = 0;
            for (std::size_t j = 0; j < un; ++j)
                if (a[j] == a[0]) i = j;
            std::size_t k = static_cast<std::size_t>(std::find(b.begin(), b.end(), b[un - 1]) - b.begin());
            apply(i, un + k, "mixed " + root_name(i, un + k));
        } else {
            throw InternalError("reduce_nonhyp stuck at " + to_string(cur));
        }
    }
    trace.result = cur;
    certify(rs, trace);
    return trace;
}

const std::vector<E6Relation>& e6_relations() {
    auto fw = [](std::initializer_list<std::pair<int, int>> terms) {
        Coords c(6, 0);
        for (auto [idx, mult] : terms) c[idx - 1] += mult;
        return c;
    };
    static const std::vector<E6Relation> rel = {
        {fw({{3, 1}}), fw({{6, 1}}), "w3 >= w6"},
        {fw({{4, 1}}), fw({{2, 1}}), "w4 >= w2"},
        {fw({{5, 1}}), fw({{1, 1}}), "w5 >= w1"},
        {fw({{2, 1}}), fw({}), "w2 >= 0"},
        {fw({{1, 1}, {6, 1}}), fw({}), "w1 + w6 >= 0"},
        {fw({{1, 2}}), fw({{6, 1}}), "2w1 >= w6"},
        {fw({{1, 3}}), fw({{2, 1}}), "3w1 >= w2"},
        {fw({{6, 2}}), fw({{1, 1}}), "2w6 >= w1"},
        {fw({{6, 3}}), fw({{2, 1}}), "3w6 >= w2"},
        // Used only when w1 + w6 >= 0 would land on 0.
        {fw({{1, 1}, {6, 1}}), fw({{2, 1}}), "w1 + w6 >= w2"},
    };
    return rel;
}

ReductionTrace reduce_e6(const Weight& lambda) {
    const RootSystem& rs = shared_root_system(RootSystemKind::e6());
    require_dominant(rs, lambda, "reduce_e6");
    if (std::all_of(lambda.coords.begin(), lambda.coords.end(), [](std::int64_t x) { return x == 0; })) {
        throw InvalidArgument("reduce_e6: the zero weight dominates none of w1, w2, w6");
    }
    const auto& rels = e6_relations();
    auto rule = [&](std::string_view name) -> const E6Relation& {
        for (auto& r : rels)
            if (r.rule == name) return r;
        throw InternalError("unknown E6 relation");
    };

    ReductionTrace trace{lambda, {}, lambda};
    Coords a = lambda.coords;
    auto apply = [&](const E6Relation& r) {
        Coords next = a;
        for (std::size_t i = 0; i < 6; ++i) next[i] += r.small[i] - r.big[i];
        Coords diff(6);
        for (std::size_t i = 0; i < 6; ++i) diff[i] = r.big[i] - r.small[i];
        const Weight before = rs.from_dynkin(a), after = rs.from_dynkin(next);
        if (!labels::is_dominant(next) || !dominates(rs, before, after)) {
            throw InternalError("E6 relation " + r.rule + " failed certification at " + to_string(before));
        }
        trace.steps.push_back({rs.from_dynkin(diff), r.rule});
        a = std::move(next);
    };

    while (a[2] > 0) apply(rule("w3 >= w6"));
    while (a[3] > 0) apply(rule("w4 >= w2"));
    while (a[4] > 0) apply(rule("w5 >= w1"));

    // Now a = b1 w1 + b2 w2 + b6 w6.
    while (a[0] > 0 && a[5] > 0) {
        if (a[0] == 1 && a[5] == 1 && a[1] == 0) {
            apply(rule("w1 + w6 >= w2"));
        } else {
            apply(rule("w1 + w6 >= 0"));
        }
    }
    while (a[1] > 0 && (a[0] + a[5] > 0 || a[1] > 1)) apply(rule("w2 >= 0"));

    // k w1 or k w6 with k >= 1: peel off three at a time, then finish by residue.
    for (auto [idx, other, two, three] : {std::tuple{0, 5, "2w1 >= w6", "3w1 >= w2"},
                                          std::tuple{5, 0, "2w6 >= w1", "3w6 >= w2"}}) {
        while (a[idx] > 3) {
            apply(rule(two));
            apply(rule("w1 + w6 >= 0"));
        }
        if (a[idx] == 3) apply(rule(three));
        if (a[idx] == 2) apply(rule(two));
        (void)other;
    }

    trace.result = rs.from_dynkin(a);
    const Coords w1{1, 0, 0, 0, 0, 0}, w2{0, 1, 0, 0, 0, 0}, w6{0, 0, 0, 0, 0, 1};
    if (a != w1 && a != w2 && a != w6) throw InternalError("reduce_e6 ended outside {w1, w2, w6}");
    certify(rs, trace);
    return trace;
}

namespace {

// Visits dominant label vectors with scaled height <= limit in lexicographic order.
template <class Visit>
bool enumerate_by_height(const Coords& heights, std::int64_t limit, Coords& cur, std::size_t idx,
                         std::uint64_t& visited, std::uint64_t budget, Visit&& visit) {
    if (idx == heights.size()) {
        if (++visited > budget) return false;
        return visit(cur);
    }
    for (std::int64_t v = 0; v * heights[idx] <= limit; ++v) {
        cur[idx] = v;
        if (!enumerate_by_height(heights, limit - v * heights[idx], cur, idx + 1, visited, budget, visit)) {
            cur[idx] = 0;
            return false;
        }
    }
    cur[idx] = 0;
    return true;
}

Coords fundamental_heights(const RootSystem& rs) {
    Coords h(static_cast<std::size_t>(rs.rank()));
    for (int i = 0; i < rs.rank(); ++i) {
        Coords e(static_cast<std::size_t>(rs.rank()), 0);
        e[i] = 1;
        auto c = rs.root_numerators(e);
        h[i] = 0;
        for (auto x : c) h[i] += x;
        if (h[i] <= 0) throw InternalError("nonpositive fundamental weight height");
    }
    return h;
}

std::int64_t scaled_height(const RootSystem& rs, const Coords& labels) {
    std::int64_t s = 0;
    for (auto x : rs.root_numerators(labels)) s += x;
    return s;
}

}  // namespace

std::vector<Weight> dominance_ideal(const RootSystem& rs, const Weight& lambda, std::uint64_t budget) {
    require_dominant(rs, lambda, "dominance_ideal");
    const Coords heights = fundamental_heights(rs);
    const std::int64_t limit = scaled_height(rs, rs.dynkin(lambda));
    std::vector<Weight> out;
    Coords cur(heights.size(), 0);
    std::uint64_t visited = 0;
    bool complete = enumerate_by_height(heights, limit, cur, 0, visited, budget, [&](const Coords& labels) {
        Weight mu = rs.from_dynkin(labels);
        if (dominates(rs, lambda, mu)) out.push_back(std::move(mu));
        return true;
    });
    if (!complete) throw ResourceLimitExceeded("dominance ideal enumeration exceeded its budget");
    std::sort(out.begin(), out.end());
    return out;
}

OracleResult brute_force_reduce(const RootSystem& rs, const Weight& lambda,
                                const std::function<bool(const Weight&)>& pred, std::uint64_t budget) {
    require_dominant(rs, lambda, "brute_force_reduce");
    const Coords heights = fundamental_heights(rs);
    const std::int64_t limit = scaled_height(rs, rs.dynkin(lambda));
    OracleResult result;
    Coords cur(heights.size(), 0);
    bool complete = enumerate_by_height(heights, limit, cur, 0, result.visited, budget, [&](const Coords& labels) {
        Weight mu = rs.from_dynkin(labels);
        if (dominates(rs, lambda, mu) && pred(mu)) {
            result.weight = std::move(mu);
            return false;
        }
        return true;
    });
    if (result.weight) {
        result.status = OracleStatus::found;
    } else {
        result.status = complete ? OracleStatus::none : OracleStatus::budget_exhausted;
    }
    return result;
}

}  // namespace thetasum
