#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "thetasum/common.hpp"

namespace thetasum {

enum class Family { SpC, SlA, E6 };

/// Which root system: C_n for Sp_{2n}, A_{2n-1} for Sl_{2n}, or E6.
/// For SpC and SlA `n` is the parameter (not the rank of SlA); for E6 it is unused and 0.
struct RootSystemKind {
    Family family = Family::E6;
    int n = 0;

    static RootSystemKind sp(int n);
    static RootSystemKind sl(int n);
    static RootSystemKind e6() { return {Family::E6, 0}; }

    int rank() const;
    /// Length of the canonical coordinate vector.
    int ambient_dim() const;

    auto operator<=>(const RootSystemKind&) const = default;
};

/// "C<n>", "SL<2n>" or "E6".
std::string to_string(RootSystemKind kind);
/// Accepts "C<n>", "A<2n-1>", "SL<2n>" and "E6" (case-insensitive prefix).
RootSystemKind parse_kind(std::string_view text);

/// A weight in the canonical coordinates of its system: epsilon coordinates for
/// SpC, the normalized (a | -b) representative of Z^{2n}/<det> for SlA, and
/// Dynkin labels for E6.
struct Weight {
    RootSystemKind kind;
    Coords coords;

    auto operator<=>(const Weight&) const = default;
};

std::string to_string(const Weight& w);

enum class Basis { epsilon, dynkin, root };

std::string_view to_string(Basis b);
Basis parse_basis(std::string_view text);

class RootSystem {
public:
    explicit RootSystem(RootSystemKind kind);

    RootSystemKind kind() const { return kind_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return kind_.ambient_dim(); }

    /// Entry (i, j) is <alpha_i, alpha_j^vee>; row i holds the Dynkin labels of alpha_i.
    const std::vector<Coords>& cartan() const { return cartan_; }
    const std::vector<std::vector<Rational>>& cartan_inv() const { return cartan_inv_; }

    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Weight>& fundamental_weights() const { return fundamental_weights_; }
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const Weight& rho() const { return rho_; }
    /// Exponent of the weight lattice modulo the root lattice.
    int fundamental_group_exponent() const { return exponent_; }

    /// Builds a weight from canonical coordinates. SlA representatives are
    /// normalized modulo det; other kinds are taken as given.
    Weight weight(Coords canonical) const;
    Weight from_dynkin(const Coords& labels) const;
    /// Throws InvalidArgument unless `w` is a well-formed weight of this system.
    void check(const Weight& w) const;

    Coords dynkin(const Weight& w) const { return dynkin_of(w.coords); }
    Coords dynkin_of(const Coords& canonical) const;
    Coords canonical_of(const Coords& labels) const;
    /// SlA only: subtract the multiple of det making the last n entries have maximum 0.
    void normalize(Coords& canonical) const;

    /// Root-basis coordinates of a weight given by its Dynkin labels, scaled by
    /// root_denominator() so the result is integral.
    Coords root_numerators(const Coords& labels) const;
    std::int64_t root_denominator() const { return root_den_; }

    // Data used by the multiplicity and dimension formulas, all in label space.
    const std::vector<Coords>& positive_roots_dynkin() const { return pos_dynkin_; }
    const std::vector<Coords>& positive_roots_root() const { return pos_root_; }
    /// (alpha_i, alpha_i) / 2 for the form used by this system.
    const Coords& symmetrizer() const { return symmetrizer_; }

    /// (w, beta) where w is given by Dynkin labels and beta by integral root coordinates.
    std::int64_t pair_label_root(const Coords& labels, const Coords& root_coords) const;

    Rational inner_product(const Weight& u, const Weight& v) const;

    bool operator==(const RootSystem& other) const { return kind_ == other.kind_; }

private:
    Rational raw_inner(const Coords& u, const Coords& v) const;

    RootSystemKind kind_;
    int rank_ = 0;
    std::vector<Coords> cartan_;
    std::vector<std::vector<Rational>> cartan_inv_;
    std::vector<Coords> inv_transpose_scaled_;
    std::int64_t root_den_ = 1;
    std::vector<Weight> simple_roots_;
    std::vector<Weight> fundamental_weights_;
    std::vector<Weight> positive_roots_;
    std::vector<Coords> pos_dynkin_;
    std::vector<Coords> pos_root_;
    Coords symmetrizer_;
    Weight rho_;
    int exponent_ = 1;
};

/// Validates the parameters and assembles the Cartan data, positive roots and rho.
RootSystem build_root_system(RootSystemKind kind);

/// Interned, immutable instance; the reference stays valid for the program lifetime.
const RootSystem& shared_root_system(RootSystemKind kind);

/// Closure of the simple roots under simple reflections, restricted to the positive cone.
std::vector<Weight> positive_roots_of(const RootSystem& rs);

/// Half the sum of the positive roots; asserted equal to the sum of fundamental weights.
Weight rho_of(const RootSystem& rs);

std::vector<Rational> convert_coordinates(const RootSystem& rs, const Weight& w, Basis target);
/// Inverse of convert_coordinates. Throws if the vector is not an integral weight.
Weight weight_from_coordinates(const RootSystem& rs, const std::vector<Rational>& v, Basis source);

}  // namespace thetasum
