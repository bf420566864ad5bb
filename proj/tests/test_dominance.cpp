#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "enumerate.hpp"
#include "thetasum/dominance.hpp"
#include "thetasum/partition.hpp"

using namespace thetasum;
using thetasum::testing::hyp_weights;
using thetasum::testing::sl_weights;

namespace {

// Closed-form dominance tests, independent of root-coordinate inversion.
bool dominates_closed_sp(const Coords& lam, const Coords& mu) {
    std::int64_t partial = 0;
    for (std::size_t k = 0; k < lam.size(); ++k) {
        partial += lam[k] - mu[k];
        if (k + 1 < lam.size() && partial < 0) return false;
    }
    return partial >= 0 && partial % 2 == 0;
}

bool dominates_closed_sl(Coords lam, const Coords& mu) {
    const std::int64_t m = static_cast<std::int64_t>(lam.size());
    std::int64_t total = 0;
    for (std::size_t i = 0; i < lam.size(); ++i) total += lam[i] - mu[i];
    if (total % m != 0) return false;
    for (auto& x : lam) x -= total / m;
    std::int64_t partial = 0;
    for (std::size_t k = 0; k < lam.size(); ++k) {
        partial += lam[k] - mu[k];
        if (partial < 0) return false;
    }
    return partial == 0;
}

Coords e6_labels(std::initializer_list<std::int64_t> l) { return Coords(l); }

}  // namespace

TEST_CASE("is_dominant examples") {
    const RootSystem& c3 = shared_root_system(RootSystemKind::sp(3));
    CHECK(is_dominant(c3, c3.weight({2, 2, 1})));
    CHECK_FALSE(is_dominant(c3, c3.weight({1, 2, 0})));
    const RootSystem& e6 = shared_root_system(RootSystemKind::e6());
    CHECK(is_dominant(e6, e6.from_dynkin({0, 1, 0, 0, 0, 0})));
}

TEST_CASE("dominance_compare examples") {
    const RootSystem& c2 = shared_root_system(RootSystemKind::sp(2));
    auto w = dominance_compare(c2, c2.weight({3, 0}), c2.weight({2, 1}));
    CHECK(w.comparable);
    CHECK(w.root_coefficients == Coords{1, 0});
    CHECK_FALSE(dominates(c2, c2.weight({2, 1}), c2.weight({3, 0})));
    CHECK_FALSE(dominates(c2, c2.weight({1, 0}), c2.weight({0, 0})));
    auto self = dominance_compare(c2, c2.weight({2, 1}), c2.weight({2, 1}));
    CHECK(self.comparable);
    CHECK(self.root_coefficients == Coords{0, 0});

    const RootSystem& e6 = shared_root_system(RootSystemKind::e6());
    CHECK(dominates(e6, e6.from_dynkin(e6_labels({0, 0, 1, 0, 0, 0})), e6.from_dynkin(e6_labels({0, 0, 0, 0, 0, 1}))));
    CHECK_FALSE(dominates(e6, e6.from_dynkin(e6_labels({1, 0, 0, 0, 0, 0})), e6.from_dynkin(e6_labels({0, 0, 0, 0, 0, 1}))));
    CHECK_THROWS_AS(dominance_compare(e6, e6.rho(), c2.rho()), InvalidArgument);
}

TEST_CASE("dominance agrees with closed forms") {
    for (int n = 1; n <= 4; ++n) {
        const RootSystem& rs = shared_root_system(RootSystemKind::sp(n));
        std::vector<Weight> ws;
        for (int d = 0; d <= 5; ++d)
            for (auto& w : hyp_weights(n, d)) ws.push_back(w);
        for (auto& l : ws)
            for (auto& m : ws) REQUIRE(dominates(rs, l, m) == dominates_closed_sp(l.coords, m.coords));
    }
    for (int n = 1; n <= 3; ++n) {
        const RootSystem& rs = shared_root_system(RootSystemKind::sl(n));
        std::vector<Weight> ws;
        for (int d = 0; d <= 5; ++d)
            for (auto& w : sl_weights(n, d)) ws.push_back(w);
        for (auto& l : ws)
            for (auto& m : ws) REQUIRE(dominates(rs, l, m) == dominates_closed_sl(l.coords, m.coords));
    }
}

TEST_CASE("dominance is a partial order on random triples") {
    std::mt19937 rng(7);
    for (auto kind : {RootSystemKind::sp(3), RootSystemKind::sl(2), RootSystemKind::e6()}) {
        const RootSystem& rs = shared_root_system(kind);
        std::uniform_int_distribution<std::int64_t> lab(0, 2);
        auto rnd = [&] {
            Coords a(rs.rank());
            for (auto& x : a) x = lab(rng);
            return rs.from_dynkin(a);
        };
        for (int t = 0; t < 2000; ++t) {
            Weight a = rnd(), b = rnd(), c = rnd();
            CHECK(dominates(rs, a, a));
            if (dominates(rs, a, b) && dominates(rs, b, a)) CHECK(a == b);
            if (dominates(rs, a, b) && dominates(rs, b, c)) CHECK(dominates(rs, a, c));
        }
    }
}

TEST_CASE("reduce_hyp examples") {
    const RootSystem& c2 = shared_root_system(RootSystemKind::sp(2));
    auto t = reduce_hyp(2, c2.weight({3, 0}));
    CHECK(t.result.coords == Coords{2, 1});
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].subtracted.coords == Coords{1, -1});
    CHECK(reduce_hyp(3, Weight{RootSystemKind::sp(3), {1, 1, 0}}).steps.empty());
    auto t4 = reduce_hyp(2, c2.weight({4, 0}));
    CHECK(degree_length_hyp(t4.result).length == 2);
    CHECK(dominates(c2, c2.weight({4, 0}), t4.result));
    CHECK(reduce_hyp(2, c2.weight({0, 0})).result.coords == Coords{0, 0});
}

TEST_CASE("reduce_hyp keeps the degree and adds one to the length per step") {
    for (int n = 1; n <= 5; ++n) {
        const RootSystem& rs = shared_root_system(RootSystemKind::sp(n));
        for (int d = 0; d <= 9; ++d) {
            for (auto& lam : hyp_weights(n, d)) {
                auto t = reduce_hyp(n, lam);
                Weight cur = t.start;
                auto prev = degree_length_hyp(cur);
                for (auto& s : t.steps) {
                    cur = subtract(rs, cur, s.subtracted);
                    REQUIRE(is_dominant(rs, cur));
                    auto now = degree_length_hyp(cur);
                    CHECK(now.degree == prev.degree);
                    CHECK(now.length == prev.length + 1);
                    prev = now;
                }
                CHECK(prev.length == std::min<std::int64_t>(d, n));
            }
        }
    }
}

TEST_CASE("reduce_nonhyp examples") {
    const RootSystem& sl4 = shared_root_system(RootSystemKind::sl(2));
    auto t0 = reduce_nonhyp(2, sl4.weight({1, 0, 0, -1}));
    CHECK(t0.steps.empty());
    auto t1 = reduce_nonhyp(2, sl4.weight({2, 2, 0, 0}));
    auto s1 = split_sl(sl4, t1.result);
    CHECK((s1.length() == 2 || (s1.length() == 1 && s1.degree() == 1)));
    CHECK(dominates(sl4, t1.start, t1.result));

    const RootSystem& sl6 = shared_root_system(RootSystemKind::sl(3));
    auto t2 = reduce_nonhyp(3, sl6.weight({2, 0, 0, 0, 0, -2}));
    CHECK(split_sl(sl6, t2.result).length() == 3);
}

TEST_CASE("reduce_nonhyp satisfies the disjunction and matches the oracle") {
    for (int n = 1; n <= 4; ++n) {
        const RootSystem& rs = shared_root_system(RootSystemKind::sl(n));
        for (int d = 0; d <= 7; ++d) {
            for (auto& lam : sl_weights(n, d)) {
                auto t = reduce_nonhyp(n, lam);
                CHECK(replay(rs, t) == t.result);
                const std::int64_t target = std::min<std::int64_t>(d, n);
                auto ok = [&](const Weight& mu) {
                    auto s = split_sl(rs, mu);
                    return s.length() == target || (s.length() == s.degree() && s.degree() == n - 1);
                };
                REQUIRE(ok(t.result));
                // The first disjunct alone: the oracle decides whether it is reachable.
                auto first = [&](const Weight& mu) { return split_sl(rs, mu).length() == target; };
                auto oracle = brute_force_reduce(rs, lam, first, 10'000'000);
                REQUIRE(oracle.status != OracleStatus::budget_exhausted);
                if (split_sl(rs, t.result).length() != target) {
                    INFO(to_string(lam), " -> ", to_string(t.result), " oracle ", (oracle.weight ? to_string(*oracle.weight) : std::string("-")));
                    CHECK(oracle.status == OracleStatus::none);
                }
            }
        }
    }
}

TEST_CASE("the first disjunct alone can fail") {
    // 2 w4 in SL6: length 2 < min(4, 3) but nothing below it has length 3.
    const RootSystem& sl6 = shared_root_system(RootSystemKind::sl(3));
    Weight lam = sl6.weight({0, 0, 0, 0, -2, -2});
    auto oracle = brute_force_reduce(sl6, lam, [&](const Weight& mu) { return split_sl(sl6, mu).length() == 3; }, 1'000'000);
    CHECK(oracle.status == OracleStatus::none);
    auto t = reduce_nonhyp(3, lam);
    auto s = split_sl(sl6, t.result);
    CHECK(s.length() == 2);
    CHECK(s.degree() == 2);
}

TEST_CASE("reduce_e6 examples") {
    const RootSystem& e6 = shared_root_system(RootSystemKind::e6());
    CHECK(reduce_e6(e6.from_dynkin({0, 0, 0, 1, 0, 0})).result == e6.from_dynkin({0, 1, 0, 0, 0, 0}));
    CHECK(reduce_e6(e6.from_dynkin({2, 0, 0, 0, 0, 0})).result == e6.from_dynkin({0, 0, 0, 0, 0, 1}));
    auto mixed = reduce_e6(e6.from_dynkin({1, 0, 0, 0, 0, 1}));
    CHECK(mixed.result == e6.from_dynkin({0, 1, 0, 0, 0, 0}));
    CHECK_THROWS_AS(reduce_e6(e6.from_dynkin({0, 0, 0, 0, 0, 0})), InvalidArgument);
    CHECK_THROWS_AS(reduce_e6(e6.from_dynkin({-1, 1, 0, 0, 0, 0})), InvalidArgument);
}

TEST_CASE("every E6 relation has a nonnegative integral witness") {
    const RootSystem& e6 = shared_root_system(RootSystemKind::e6());
    for (auto& r : e6_relations()) {
        auto w = dominance_compare(e6, e6.from_dynkin(r.big), e6.from_dynkin(r.small));
        INFO(r.rule);
        CHECK(w.comparable);
        CHECK(std::any_of(w.root_coefficients.begin(), w.root_coefficients.end(), [](auto x) { return x > 0; }));
    }
}

TEST_CASE("reduce_e6 over small label sums") {
    const RootSystem& e6 = shared_root_system(RootSystemKind::e6());
    const std::vector<Weight> targets = {e6.fundamental_weights()[0], e6.fundamental_weights()[1], e6.fundamental_weights()[5]};
    int count = 0;
    Coords a(6, 0);
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
        if (i == 6) {
            if (std::all_of(a.begin(), a.end(), [](auto x) { return x == 0; })) return;
            Weight lam = e6.from_dynkin(a);
            auto t = reduce_e6(lam);
            CHECK(std::find(targets.begin(), targets.end(), t.result) != targets.end());
            CHECK(replay(e6, t) == t.result);
            ++count;
            return;
        }
        for (std::int64_t v = 0; v <= left; ++v) {
            a[i] = v;
            rec(i + 1, left - v);
        }
        a[i] = 0;
    };
    rec(0, 4);
    CHECK(count == 209);
}

TEST_CASE("dominance ideal and oracle") {
    const RootSystem& c2 = shared_root_system(RootSystemKind::sp(2));
    auto ideal = dominance_ideal(c2, c2.weight({3, 0}), 100000);
    CHECK(ideal == std::vector<Weight>{c2.weight({1, 0}), c2.weight({2, 1}), c2.weight({3, 0})});
    auto r = brute_force_reduce(c2, c2.weight({3, 0}), [](const Weight& w) { return degree_length_hyp(w).length == 2; }, 100000);
    CHECK(r.status == OracleStatus::found);
    CHECK(r.weight->coords == Coords{2, 1});

    const RootSystem& e6 = shared_root_system(RootSystemKind::e6());
    auto w3 = e6.fundamental_weights()[2];
    auto hit = brute_force_reduce(e6, w3, [&](const Weight& w) {
        return w == e6.fundamental_weights()[0] || w == e6.fundamental_weights()[1] || w == e6.fundamental_weights()[5];
    }, 1000000);
    CHECK(hit.status == OracleStatus::found);
    CHECK(*hit.weight == e6.fundamental_weights()[5]);

    auto self = brute_force_reduce(e6, w3, [&](const Weight& w) { return w == w3; }, 1000000);
    CHECK(self.status == OracleStatus::found);
    auto starved = brute_force_reduce(e6, w3, [](const Weight&) { return false; }, 3);
    CHECK(starved.status == OracleStatus::budget_exhausted);
    CHECK_THROWS_AS(dominance_ideal(e6, w3, 3), ResourceLimitExceeded);
}
