#include "thetasum/charring.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "thetasum/dominance.hpp"
#include "thetasum/weyl.hpp"

namespace thetasum {

CharElem CharElem::one(RootSystemKind kind) {
    const RootSystem& rs = shared_root_system(kind);
    return orbit_sum(rs, rs.from_dynkin(Coords(rs.rank(), 0)));
}

CharElem CharElem::orbit_sum(const RootSystem& rs, const Weight& mu, const BigInt& coeff) {
    if (!is_dominant(rs, mu)) throw InvalidArgument("orbit sums are indexed by dominant weights, got " + to_string(mu));
    CharElem x(rs.kind());
    x.add_term(mu, coeff);
    return x;
}

BigInt CharElem::coeff(const Weight& mu) const {
    auto it = coeffs_.find(mu);
    return it == coeffs_.end() ? BigInt(0) : it->second;
}

void CharElem::add_term(const Weight& mu, const BigInt& c) {
    if (mu.kind != kind_) throw InvalidArgument("weight " + to_string(mu) + " does not belong to " + to_string(kind_));
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(mu, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

bool CharElem::is_effective() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto& kv) { return kv.second > 0; });
}

void CharElem::require_same(const CharElem& other) const {
    if (other.kind_ != kind_) {
        throw InvalidArgument("characters of " + to_string(kind_) + " and " + to_string(other.kind_) + " cannot be combined");
    }
}

CharElem& CharElem::operator+=(const CharElem& other) {
    require_same(other);
    for (auto& [mu, c] : other.coeffs_) add_term(mu, c);
    return *this;
}

CharElem& CharElem::operator-=(const CharElem& other) {
    require_same(other);
    for (auto& [mu, c] : other.coeffs_) add_term(mu, -c);
    return *this;
}

CharElem CharElem::operator-() const {
    CharElem out = *this;
    for (auto& kv : out.coeffs_) kv.second = -kv.second;
    return out;
}

CharElem operator*(const BigInt& k, const CharElem& a) {
    CharElem out(a.kind());
    if (k == 0) return out;
    for (auto& [mu, c] : a.coeffs()) out.add_term(mu, k * c);
    return out;
}

CharElem operator*(const CharElem& a, const CharElem& b) { return multiply(a, b); }

CharElem exact_divide(const CharElem& x, std::int64_t k) {
    if (k == 0) throw InvalidArgument("division by zero");
    CharElem out(x.kind());
    for (auto& [mu, c] : x.coeffs()) {
        if (c % k != 0) throw InternalError("coefficient " + c.str() + " of " + to_string(mu) + " is not divisible by " + std::to_string(k));
        out.add_term(mu, c / k);
    }
    return out;
}

namespace {

Coords plus(const Coords& a, const Coords& b, std::int64_t k = 1) {
    Coords out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += k * b[i];
    return out;
}

std::int64_t sum(const Coords& c) {
    std::int64_t s = 0;
    for (auto x : c) s += x;
    return s;
}

void require_dominant(const RootSystem& rs, const Weight& w) {
    rs.check(w);
    if (!labels::is_dominant(rs.dynkin(w))) throw InvalidArgument("expected a dominant weight, got " + to_string(w));
}

}  // namespace

CharElem freudenthal_character(const RootSystem& rs, const Weight& lambda, const Limits& limits) {
    require_dominant(rs, lambda);
    const auto ideal = dominance_ideal(rs, lambda, limits.work_cap);
    if (ideal.size() > limits.orbit_cap) {
        throw ResourceLimitExceeded("Freudenthal needs " + std::to_string(ideal.size()) + " dominant weights, cap is " +
                                    std::to_string(limits.orbit_cap));
    }
    const Coords lam = rs.dynkin(lambda);
    const Coords two_rho = Coords(rs.rank(), 2);

    struct Stratum {
        Coords labels;
        Coords depth_coeffs;
        std::int64_t depth;
    };
    std::vector<Stratum> strata;
    strata.reserve(ideal.size());
    for (auto& mu : ideal) {
        auto w = dominance_compare(rs, lambda, mu);
        strata.push_back({rs.dynkin(mu), w.root_coefficients, sum(w.root_coefficients)});
    }
    std::stable_sort(strata.begin(), strata.end(), [](auto& x, auto& y) { return x.depth < y.depth; });

    std::unordered_map<Coords, BigInt, CoordsHash> mult;
    mult.reserve(strata.size());
    const auto& roots_lab = rs.positive_roots_dynkin();
    const auto& roots_root = rs.positive_roots_root();
    for (auto& s : strata) {
        if (s.depth == 0) {
            mult[s.labels] = 1;
            continue;
        }
        const std::int64_t den = rs.pair_label_root(plus(plus(lam, s.labels), two_rho), s.depth_coeffs);
        if (den <= 0) throw InternalError("Freudenthal denominator is not positive");
        BigInt num = 0;
        for (std::size_t r = 0; r < roots_lab.size(); ++r) {
            for (std::int64_t k = 1;; ++k) {
                Coords shifted = plus(s.labels, roots_lab[r], k);
                auto it = mult.find(labels::dominant(rs, shifted));
                if (it == mult.end()) break;
                num += it->second * rs.pair_label_root(shifted, roots_root[r]);
            }
        }
        num *= 2;
        if (num % den != 0) throw InternalError("Freudenthal recursion produced a non-integral multiplicity");
        mult[s.labels] = num / den;
    }

    CharElem out(rs.kind());
    for (auto& [a, m] : mult) out.add_term(rs.from_dynkin(a), m);
    return out;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    require_dominant(rs, lambda);
    const Coords shifted = plus(rs.dynkin(lambda), Coords(rs.rank(), 1));
    const Coords rho(rs.rank(), 1);
    BigInt num = 1, den = 1;
    for (auto& r : rs.positive_roots_root()) {
        num *= rs.pair_label_root(shifted, r);
        den *= rs.pair_label_root(rho, r);
    }
    if (num % den != 0) throw InternalError("Weyl dimension formula is not integral");
    return num / den;
}

namespace {

// Laurent polynomial in the group ring, keyed by scaled root coordinates so that
// lexicographic order is a group order.
struct Term {
    Coords labels;
    BigInt coeff;
};
using Poly = std::map<Coords, Term, std::greater<>>;

void poly_add(Poly& p, const Coords& key, const Coords& labels, const BigInt& c) {
    auto [it, inserted] = p.emplace(key, Term{labels, c});
    if (!inserted) {
        it->second.coeff += c;
        if (it->second.coeff == 0) p.erase(it);
    }
}

// sum over w of sgn(w) e^{w(v)} for regular v, with W walked through the orbit of rho.
Poly alternating_sum(const RootSystem& rs, const Coords& v, const Limits& limits) {
    const Coords rho(rs.rank(), 1);
    struct Node {
        Coords image;
        int sign;
    };
    std::unordered_map<Coords, Node, CoordsHash> seen;
    std::vector<Coords> queue{rho};
    seen.emplace(rho, Node{v, 1});
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Coords cur = queue[head];
        const Node node = seen.at(cur);
        for (std::size_t i = 0; i < rho.size(); ++i) {
            Coords next = cur;
            labels::reflect(rs, i, next);
            if (seen.count(next)) continue;
            Coords img = node.image;
            labels::reflect(rs, i, img);
            seen.emplace(next, Node{std::move(img), -node.sign});
            queue.push_back(std::move(next));
            if (queue.size() > limits.group_cap) throw ResourceLimitExceeded("Weyl group exceeds the group cap");
        }
    }
    Poly p;
    for (auto& [_, node] : seen) poly_add(p, rs.root_numerators(node.image), node.image, node.sign);
    return p;
}

}  // namespace

CharElem weyl_character_direct(const RootSystem& rs, const Weight& lambda, const Limits& limits) {
    require_dominant(rs, lambda);
    const BigInt order = weyl_group_order(rs, limits);
    if (order > limits.group_cap) {
        throw ResourceLimitExceeded("|W| = " + order.str() + " exceeds the group cap of " + std::to_string(limits.group_cap));
    }
    const Coords lam_rho = plus(rs.dynkin(lambda), Coords(rs.rank(), 1));
    Poly num = alternating_sum(rs, lam_rho, limits);
    const Poly den = alternating_sum(rs, Coords(rs.rank(), 1), limits);
    const auto& [lead_key, lead] = *den.begin();

    CharElem out(rs.kind());
    std::uint64_t work = 0;
    while (!num.empty()) {
        const auto [nkey, nterm] = *num.begin();
        if (nterm.coeff % lead.coeff != 0) throw InternalError("Weyl denominator does not divide the numerator");
        const BigInt q = nterm.coeff / lead.coeff;
        const Coords qkey = plus(nkey, lead_key, -1);
        const Coords qlab = plus(nterm.labels, lead.labels, -1);
        if (labels::is_dominant(qlab)) out.add_term(rs.from_dynkin(qlab), q);
        for (auto& [dkey, dterm] : den) {
            if (++work > limits.work_cap) throw ResourceLimitExceeded("Weyl character division exceeds the work cap");
            poly_add(num, plus(qkey, dkey), plus(qlab, dterm.labels), -q * dterm.coeff);
        }
    }
    return out;
}

BigInt dimension(const CharElem& x, const Limits& limits) {
    const RootSystem& rs = x.system();
    BigInt total = 0;
    for (auto& [mu, c] : x.coeffs()) total += c * labels::orbit(rs, rs.dynkin(mu), limits.orbit_cap).size();
    return total;
}

CharElem multiply(const CharElem& a, const CharElem& b, const Limits& limits) {
    if (a.kind() != b.kind()) {
        throw InvalidArgument("characters of " + to_string(a.kind()) + " and " + to_string(b.kind()) + " cannot be multiplied");
    }
    const RootSystem& rs = a.system();
    auto expand = [&](const CharElem& x) {
        std::vector<std::pair<std::vector<Coords>, BigInt>> out;
        for (auto& [mu, c] : x.coeffs()) out.emplace_back(labels::orbit(rs, rs.dynkin(mu), limits.orbit_cap), c);
        return out;
    };
    const auto ea = expand(a), eb = expand(b);
    BigInt planned = 0;
    for (auto& [oa, _] : ea)
        for (auto& [ob, __] : eb) planned += BigInt(oa.size()) * ob.size();
    if (planned > limits.work_cap) {
        throw ResourceLimitExceeded("product needs " + planned.str() + " pairwise sums, cap is " + std::to_string(limits.work_cap));
    }
    std::unordered_map<Coords, BigInt, CoordsHash> acc;
    Coords s(rs.rank());
    for (auto& [oa, ca] : ea) {
        for (auto& [ob, cb] : eb) {
            const BigInt c = ca * cb;
            for (auto& x : oa) {
                for (auto& y : ob) {
                    bool dominant = true;
                    for (std::size_t i = 0; i < s.size(); ++i) {
                        s[i] = x[i] + y[i];
                        if (s[i] < 0) {
                            dominant = false;
                            break;
                        }
                    }
                    if (dominant) acc[s] += c;
                }
            }
        }
    }
    CharElem out(rs.kind());
    for (auto& [lab, c] : acc) out.add_term(rs.from_dynkin(lab), c);
    return out;
}

IrrDecomposition decompose_into_irreducibles(const CharElem& x, const Limits& limits) {
    const RootSystem& rs = x.system();
    IrrDecomposition out{rs.kind(), {}};
    CharElem rest = x;
    while (!rest.is_zero()) {
        // Lexicographically greatest key among those not strictly below another key.
        const Weight* top = nullptr;
        for (auto it = rest.coeffs().rbegin(); it != rest.coeffs().rend() && !top; ++it) {
            bool maximal = true;
            for (auto& [other, _] : rest.coeffs()) {
                if (other != it->first && dominates(rs, other, it->first)) {
                    maximal = false;
                    break;
                }
            }
            if (maximal) top = &it->first;
        }
        if (!top) throw InternalError("no maximal weight in a finite support");
        const Weight kappa = *top;
        const BigInt c = rest.coeff(kappa);
        out.coeffs.emplace(kappa, c);
        rest -= c * freudenthal_character(rs, kappa, limits);
    }
    return out;
}

CharElem to_orbit_basis(const IrrDecomposition& d, const Limits& limits) {
    const RootSystem& rs = shared_root_system(d.kind);
    CharElem out(d.kind);
    for (auto& [lam, c] : d.coeffs) out += c * freudenthal_character(rs, lam, limits);
    return out;
}

IrrDecomposition tensor_decompose(const RootSystem& rs, const Weight& lambda, const Weight& mu, const Limits& limits) {
    const CharElem prod = multiply(freudenthal_character(rs, lambda, limits), freudenthal_character(rs, mu, limits), limits);
    return decompose_into_irreducibles(prod, limits);
}

nlohmann::json coeff_to_json(const BigInt& c) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(c);
    }
    return c.str();
}

namespace {

nlohmann::json terms_to_json(const std::map<Weight, BigInt>& coeffs) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [mu, c] : coeffs) arr.push_back({{"weight", mu.coords}, {"coeff", coeff_to_json(c)}});
    return arr;
}

}  // namespace

nlohmann::json to_json(const CharElem& x) { return terms_to_json(x.coeffs()); }

nlohmann::json to_json(const IrrDecomposition& d) { return terms_to_json(d.coeffs); }

CharElem char_from_json(RootSystemKind kind, const nlohmann::json& j) {
    const RootSystem& rs = shared_root_system(kind);
    if (!j.is_array()) throw InvalidArgument("character JSON must be an array of {weight, coeff} objects");
    CharElem out(kind);
    for (auto& term : j) {
        if (!term.is_object() || !term.contains("weight") || !term.contains("coeff")) {
            throw InvalidArgument("character term must have 'weight' and 'coeff'");
        }
        Coords coords = term.at("weight").get<Coords>();
        if (static_cast<int>(coords.size()) != rs.ambient_dim()) throw InvalidArgument("weight has the wrong length for " + to_string(kind));
        const auto& c = term.at("coeff");
        BigInt coeff = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::int64_t>());
        out += CharElem::orbit_sum(rs, rs.weight(std::move(coords)), coeff);
    }
    return out;
}

}  // namespace thetasum
