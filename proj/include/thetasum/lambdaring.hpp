#pragma once

#include <vector>

#include "thetasum/charring.hpp"

namespace thetasum {

using VirtualChar = CharElem;

/// Psi^n: every orbit key mu becomes n * mu.
VirtualChar adams(std::int64_t n, const VirtualChar& x);

/// n-th elementary symmetric function of the full weight multiset of an effective x.
CharElem lambda_power_effective(std::int64_t n, const CharElem& x, const Limits& limits = default_limits());

/// lambda^n from the Adams operations via n lambda^n = sum_{i=1}^{n} (-1)^{i-1} lambda^{n-i} Psi^i.
VirtualChar lambda_power_virtual(std::int64_t n, const VirtualChar& x, const Limits& limits = default_limits());

inline std::int64_t exact_divide(std::int64_t x, std::int64_t k) {
    if (k == 0 || x % k != 0) throw InternalError("non-integral Newton step");
    return x / k;
}

inline BigInt exact_divide(const BigInt& x, std::int64_t k) {
    if (k == 0 || x % k != 0) throw InternalError("non-integral Newton step");
    return x / k;
}

/// Newton identities on abstract ring elements. values[k-1] holds the k-th operation.
/// R needs +, -, *, multiplication by BigInt and an exact_divide(R, int64) overload.
template <class R>
std::vector<R> lambda_to_adams(const std::vector<R>& lambdas) {
    std::vector<R> psi;
    psi.reserve(lambdas.size());
    for (std::size_t k = 1; k <= lambdas.size(); ++k) {
        // p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
        R acc = R(BigInt((k % 2 == 1) ? 1 : -1) * BigInt(k) * lambdas[k - 1]);
        for (std::size_t i = 1; i < k; ++i) {
            R term = R(lambdas[i - 1] * psi[k - i - 1]);
            if (i % 2 == 1) {
                acc = R(acc + term);
            } else {
                acc = R(acc - term);
            }
        }
        psi.push_back(std::move(acc));
    }
    return psi;
}

template <class R>
std::vector<R> adams_to_lambda(const std::vector<R>& adams_values, const R& one) {
    std::vector<R> lam;
    lam.reserve(adams_values.size());
    for (std::size_t k = 1; k <= adams_values.size(); ++k) {
        // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
        R acc = R(BigInt(0) * one);
        for (std::size_t i = 1; i <= k; ++i) {
            R term = R((k == i ? one : lam[k - i - 1]) * adams_values[i - 1]);
            if (i % 2 == 1) {
                acc = R(acc + term);
            } else {
                acc = R(acc - term);
            }
        }
        lam.push_back(exact_divide(acc, static_cast<std::int64_t>(k)));
    }
    return lam;
}

/// Class of w in X / (root lattice), a cyclic group of order fundamental_group_exponent.
std::int64_t congruence_class(const RootSystem& rs, const Weight& w);

/// Whether every weight in the orbit expansion of Psi^n(x) lies in the root lattice.
bool factors_through_root_lattice(std::int64_t n, const VirtualChar& x, const Limits& limits = default_limits());

}  // namespace thetasum
