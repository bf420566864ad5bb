#include "thetasum/lambdaring.hpp"

#include <unordered_map>

#include "thetasum/weyl.hpp"

namespace thetasum {

VirtualChar adams(std::int64_t n, const VirtualChar& x) {
    if (n < 1) throw InvalidArgument("Adams operations need n >= 1");
    const RootSystem& rs = x.system();
    VirtualChar out(x.kind());
    for (auto& [mu, c] : x.coeffs()) {
        Coords a = rs.dynkin(mu);
        for (auto& v : a) v *= n;
        out.add_term(rs.from_dynkin(a), c);
    }
    return out;
}

CharElem lambda_power_effective(std::int64_t n, const CharElem& x, const Limits& limits) {
    if (n < 0) throw InvalidArgument("lambda powers need n >= 0");
    if (!x.is_effective()) throw InvalidArgument("lambda_power_effective needs nonnegative coefficients");
    const RootSystem& rs = x.system();
    const std::size_t r = static_cast<std::size_t>(rs.rank());

    std::vector<std::pair<Coords, std::int64_t>> multiset;
    for (auto& [mu, c] : x.coeffs()) {
        const std::int64_t reps = to_int64(c);
        for (auto& w : labels::orbit(rs, rs.dynkin(mu), limits.orbit_cap)) multiset.emplace_back(std::move(w), reps);
    }

    // Coefficients of t^k in the product over the multiset of (1 + t e^w)^c.
    using Layer = std::unordered_map<Coords, BigInt, CoordsHash>;
    const std::size_t top = static_cast<std::size_t>(n);
    std::vector<Layer> e(top + 1);
    e[0][Coords(r, 0)] = 1;
    std::uint64_t work = 0;
    for (auto& [w, c] : multiset) {
        std::vector<Layer> next = e;
        for (std::size_t k = 1; k <= top; ++k) {
            BigInt binom = 1;
            for (std::int64_t j = 1; j <= c && static_cast<std::size_t>(j) <= k; ++j) {
                binom = binom * (c - j + 1) / j;
                for (auto& [key, coeff] : e[k - static_cast<std::size_t>(j)]) {
                    if (++work > limits.work_cap) throw ResourceLimitExceeded("lambda power expansion exceeds the work cap");
                    Coords shifted = key;
                    for (std::size_t i = 0; i < r; ++i) shifted[i] += j * w[i];
                    next[k][shifted] += binom * coeff;
                }
            }
        }
        e = std::move(next);
    }

    CharElem out(x.kind());
    for (auto& [key, coeff] : e[top])
        if (labels::is_dominant(key)) out.add_term(rs.from_dynkin(key), coeff);
    return out;
}

VirtualChar lambda_power_virtual(std::int64_t n, const VirtualChar& x, const Limits& limits) {
    if (n < 0) throw InvalidArgument("lambda powers need n >= 0");
    const VirtualChar one = VirtualChar::one(x.kind());
    std::vector<VirtualChar> psi;
    for (std::int64_t i = 1; i <= n; ++i) psi.push_back(adams(i, x));
    std::vector<VirtualChar> lam{one};
    for (std::int64_t k = 1; k <= n; ++k) {
        VirtualChar acc(x.kind());
        for (std::int64_t i = 1; i <= k; ++i) {
            VirtualChar term = multiply(lam[static_cast<std::size_t>(k - i)], psi[static_cast<std::size_t>(i - 1)], limits);
            if (i % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        lam.push_back(exact_divide(acc, k));
    }
    return lam.back();
}

std::int64_t congruence_class(const RootSystem& rs, const Weight& w) {
    rs.check(w);
    const std::int64_t m = rs.fundamental_group_exponent();
    std::int64_t v = 0;
    switch (rs.kind().family) {
        case Family::SpC:
        case Family::SlA:
            for (auto x : w.coords) v += x;
            break;
        case Family::E6: {
            const Coords& a = w.coords;
            v = a[0] - a[2] + a[4] - a[5];
            break;
        }
    }
    return ((v % m) + m) % m;
}

bool factors_through_root_lattice(std::int64_t n, const VirtualChar& x, const Limits& limits) {
    const RootSystem& rs = x.system();
    const VirtualChar scaled = adams(n, x);
    for (auto& [mu, _] : scaled.coeffs()) {
        for (auto& w : labels::orbit(rs, rs.dynkin(mu), limits.orbit_cap)) {
            if (congruence_class(rs, rs.from_dynkin(w)) != 0) return false;
        }
    }
    return true;
}

}  // namespace thetasum
