#pragma once

#include <map>

#include <json.hpp>

#include "thetasum/rootsys.hpp"

namespace thetasum {

/// Element of Z[X]^W in the orbit-sum basis: sum of coeffs[mu] * We_mu.
/// Keys are dominant, stored coefficients are nonzero.
class CharElem {
public:
    explicit CharElem(RootSystemKind kind) : kind_(kind) {}

    static CharElem zero(RootSystemKind kind) { return CharElem(kind); }
    static CharElem one(RootSystemKind kind);
    /// The single orbit sum We_mu; mu must be dominant.
    static CharElem orbit_sum(const RootSystem& rs, const Weight& mu, const BigInt& coeff = 1);

    RootSystemKind kind() const { return kind_; }
    const RootSystem& system() const { return shared_root_system(kind_); }
    const std::map<Weight, BigInt>& coeffs() const { return coeffs_; }

    BigInt coeff(const Weight& mu) const;
    /// Adds c to the coefficient of mu, dropping it if the result is zero.
    void add_term(const Weight& mu, const BigInt& c);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_effective() const;

    CharElem& operator+=(const CharElem& other);
    CharElem& operator-=(const CharElem& other);
    CharElem operator-() const;
    friend CharElem operator+(CharElem a, const CharElem& b) { return a += b; }
    friend CharElem operator-(CharElem a, const CharElem& b) { return a -= b; }
    friend CharElem operator*(const BigInt& k, const CharElem& a);
    /// Convolution with default limits.
    friend CharElem operator*(const CharElem& a, const CharElem& b);

    bool operator==(const CharElem& other) const = default;

private:
    void require_same(const CharElem& other) const;

    RootSystemKind kind_;
    std::map<Weight, BigInt> coeffs_;
};

/// Divides every coefficient by k; throws InternalError when some coefficient is not divisible.
CharElem exact_divide(const CharElem& x, std::int64_t k);

/// Coefficients on irreducible characters ch V_lambda.
struct IrrDecomposition {
    RootSystemKind kind;
    std::map<Weight, BigInt> coeffs;
    bool operator==(const IrrDecomposition&) const = default;
};

/// Weight multiplicities m_lambda(mu) on dominant mu via Freudenthal's recursion.
CharElem freudenthal_character(const RootSystem& rs, const Weight& lambda, const Limits& limits = default_limits());

/// Product over positive roots of (lambda + rho, alpha) / (rho, alpha).
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Alternating sum over W divided by the Weyl denominator in the group ring.
/// Throws ResourceLimitExceeded when |W| exceeds limits.group_cap.
CharElem weyl_character_direct(const RootSystem& rs, const Weight& lambda, const Limits& limits = default_limits());

/// Sum of coefficient times orbit size.
BigInt dimension(const CharElem& x, const Limits& limits = default_limits());

/// Convolution of full orbit expansions. Throws ResourceLimitExceeded past limits.work_cap pairwise sums.
CharElem multiply(const CharElem& a, const CharElem& b, const Limits& limits = default_limits());

/// Strips irreducible characters off a maximal support weight until nothing remains.
IrrDecomposition decompose_into_irreducibles(const CharElem& x, const Limits& limits = default_limits());

/// Sum of coefficient times freudenthal_character.
CharElem to_orbit_basis(const IrrDecomposition& d, const Limits& limits = default_limits());

IrrDecomposition tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu,
                                  const Limits& limits = default_limits());

/// [{"weight": [...], "coeff": n}, ...] in canonical coordinates, sorted by weight.
/// Coefficients outside the 64-bit range are emitted as decimal strings.
nlohmann::json to_json(const CharElem& x);
nlohmann::json to_json(const IrrDecomposition& d);
CharElem char_from_json(RootSystemKind kind, const nlohmann::json& j);

nlohmann::json coeff_to_json(const BigInt& c);

}  // namespace thetasum
