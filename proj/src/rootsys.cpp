#include "thetasum/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace thetasum {

std::string to_string(const Coords& c) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ',';
        os << c[i];
    }
    os << ')';
    return os.str();
}

RootSystemKind RootSystemKind::sp(int n) {
    if (n < 1) throw InvalidArgument("C_n requires n >= 1");
    return {Family::SpC, n};
}

RootSystemKind RootSystemKind::sl(int n) {
    if (n < 1) throw InvalidArgument("SL_{2n} requires n >= 1");
    return {Family::SlA, n};
}

int RootSystemKind::rank() const {
    switch (family) {
        case Family::SpC: return n;
        case Family::SlA: return 2 * n - 1;
        case Family::E6: return 6;
    }
    return 0;
}

int RootSystemKind::ambient_dim() const {
    switch (family) {
        case Family::SpC: return n;
        case Family::SlA: return 2 * n;
        case Family::E6: return 6;
    }
    return 0;
}

std::string to_string(RootSystemKind kind) {
    switch (kind.family) {
        case Family::SpC: return "C" + std::to_string(kind.n);
        case Family::SlA: return "SL" + std::to_string(2 * kind.n);
        case Family::E6: return "E6";
    }
    return "?";
}

namespace {

int parse_positive(std::string_view digits, std::string_view whole) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || value < 1) {
        throw InvalidArgument("unknown root system '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

RootSystemKind parse_kind(std::string_view text) {
    std::string upper(text);
    for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (upper == "E6") return RootSystemKind::e6();
    if (upper.rfind("SL", 0) == 0) {
        int m = parse_positive(std::string_view(upper).substr(2), text);
        if (m % 2 != 0) throw InvalidArgument("SL<m> requires even m, got '" + std::string(text) + "'");
        return RootSystemKind::sl(m / 2);
    }
    if (upper.rfind('A', 0) == 0) {
        int r = parse_positive(std::string_view(upper).substr(1), text);
        if (r % 2 == 0) throw InvalidArgument("A<r> requires odd r = 2n-1, got '" + std::string(text) + "'");
        return RootSystemKind::sl((r + 1) / 2);
    }
    if (upper.rfind('C', 0) == 0) {
        return RootSystemKind::sp(parse_positive(std::string_view(upper).substr(1), text));
    }
    throw InvalidArgument("unknown root system '" + std::string(text) + "'");
}

std::string to_string(const Weight& w) { return to_string(w.kind) + to_string(w.coords); }

std::string_view to_string(Basis b) {
    switch (b) {
        case Basis::epsilon: return "epsilon";
        case Basis::dynkin: return "dynkin";
        case Basis::root: return "root_basis";
    }
    return "?";
}

Basis parse_basis(std::string_view text) {
    if (text == "epsilon") return Basis::epsilon;
    if (text == "dynkin") return Basis::dynkin;
    if (text == "root" || text == "root_basis") return Basis::root;
    throw InvalidArgument("unknown basis '" + std::string(text) + "'");
}

namespace {

std::vector<std::vector<Rational>> invert(const std::vector<Coords>& m) {
    const std::size_t r = m.size();
    std::vector<std::vector<Rational>> a(r, std::vector<Rational>(2 * r));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) a[i][j] = m[i][j];
        a[i][r + i] = 1;
    }
    for (std::size_t col = 0; col < r; ++col) {
        std::size_t piv = col;
        while (piv < r && a[piv][col] == 0) ++piv;
        if (piv == r) throw InternalError("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        Rational p = a[col][col];
        for (auto& x : a[col]) x /= p;
        for (std::size_t row = 0; row < r; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col];
            for (std::size_t k = 0; k < 2 * r; ++k) a[row][k] -= f * a[col][k];
        }
    }
    std::vector<std::vector<Rational>> inv(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) inv[i][j] = a[i][r + j];
    return inv;
}

// Bourbaki labelling: chain 1-3-4-5-6 with 2 attached to 4.
std::vector<Coords> e6_cartan() {
    std::vector<Coords> c(6, Coords(6, 0));
    for (int i = 0; i < 6; ++i) c[i][i] = 2;
    const int edges[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
    for (auto& e : edges) {
        c[e[0] - 1][e[1] - 1] = -1;
        c[e[1] - 1][e[0] - 1] = -1;
    }
    return c;
}

}  // namespace

Coords RootSystem::dynkin_of(const Coords& w) const {
    Coords a(static_cast<std::size_t>(rank_));
    switch (kind_.family) {
        case Family::SpC:
            for (int i = 0; i + 1 < rank_; ++i) a[i] = w[i] - w[i + 1];
            a[rank_ - 1] = w[rank_ - 1];
            break;
        case Family::SlA:
            for (int i = 0; i < rank_; ++i) a[i] = w[i] - w[i + 1];
            break;
        case Family::E6:
            a = w;
            break;
    }
    return a;
}

Coords RootSystem::canonical_of(const Coords& a) const {
    if (static_cast<int>(a.size()) != rank_) {
        throw InvalidArgument("expected " + std::to_string(rank_) + " Dynkin labels for " + to_string(kind_));
    }
    switch (kind_.family) {
        case Family::SpC: {
            Coords w(a.size());
            std::int64_t acc = 0;
            for (int k = rank_ - 1; k >= 0; --k) w[k] = (acc += a[k]);
            return w;
        }
        case Family::SlA: {
            Coords w(static_cast<std::size_t>(rank_ + 1), 0);
            std::int64_t acc = 0;
            for (int k = rank_ - 1; k >= 0; --k) w[k] = (acc += a[k]);
            normalize(w);
            return w;
        }
        case Family::E6:
            return a;
    }
    return a;
}

void RootSystem::normalize(Coords& w) const {
    if (kind_.family != Family::SlA) return;
    const std::size_t n = static_cast<std::size_t>(kind_.n);
    std::int64_t top = *std::max_element(w.begin() + static_cast<std::ptrdiff_t>(n), w.end());
    if (top == 0) return;
    for (auto& x : w) x -= top;
}

Weight RootSystem::weight(Coords canonical) const {
    if (static_cast<int>(canonical.size()) != ambient_dim()) {
        throw InvalidArgument("expected " + std::to_string(ambient_dim()) + " canonical coordinates for " +
                              to_string(kind_) + ", got " + std::to_string(canonical.size()));
    }
    normalize(canonical);
    return Weight{kind_, std::move(canonical)};
}

Weight RootSystem::from_dynkin(const Coords& labels) const { return Weight{kind_, canonical_of(labels)}; }

void RootSystem::check(const Weight& w) const {
    if (w.kind != kind_) {
        throw InvalidArgument("weight " + to_string(w) + " does not belong to " + to_string(kind_));
    }
    if (static_cast<int>(w.coords.size()) != ambient_dim()) {
        throw InvalidArgument("weight " + to_string(w) + " has wrong coordinate length");
    }
    if (kind_.family == Family::SlA) {
        Coords copy = w.coords;
        normalize(copy);
        if (copy != w.coords) throw InvalidArgument("SL weight " + to_string(w) + " is not normalized");
    }
}

Coords RootSystem::root_numerators(const Coords& a) const {
    Coords c(static_cast<std::size_t>(rank_), 0);
    for (int i = 0; i < rank_; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < rank_; ++j) s += inv_transpose_scaled_[i][j] * a[j];
        c[i] = s;
    }
    return c;
}

std::int64_t RootSystem::pair_label_root(const Coords& labels, const Coords& root_coords) const {
    std::int64_t s = 0;
    for (int i = 0; i < rank_; ++i) s += root_coords[i] * symmetrizer_[i] * labels[i];
    return s;
}

Rational RootSystem::raw_inner(const Coords& u, const Coords& v) const {
    switch (kind_.family) {
        case Family::SpC: {
            Rational s = 0;
            for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
            return s;
        }
        case Family::SlA: {
            // Euclidean form restricted to the sum-zero hyperplane.
            BigInt dot = 0, su = 0, sv = 0;
            for (std::size_t i = 0; i < u.size(); ++i) {
                dot += BigInt(u[i]) * v[i];
                su += u[i];
                sv += v[i];
            }
            return Rational(dot) - Rational(su * sv, BigInt(u.size()));
        }
        case Family::E6: {
            Rational s = 0;
            for (int i = 0; i < 6; ++i)
                for (int j = 0; j < 6; ++j) s += cartan_inv_[i][j] * u[i] * v[j];
            return s;
        }
    }
    return 0;
}

Rational RootSystem::inner_product(const Weight& u, const Weight& v) const {
    check(u);
    check(v);
    return raw_inner(u.coords, v.coords);
}

namespace {

std::vector<Coords> closure_dynkin(const std::vector<Coords>& cartan, std::vector<Coords>& root_coords) {
    // BFS from the simple roots; s_i(beta) = beta - <beta, alpha_i^vee> alpha_i stays
    // positive unless beta = alpha_i.
    const std::size_t r = cartan.size();
    std::map<Coords, Coords> found;  // root coords -> labels
    std::queue<Coords> todo;
    for (std::size_t i = 0; i < r; ++i) {
        Coords c(r, 0);
        c[i] = 1;
        found.emplace(c, cartan[i]);
        todo.push(c);
    }
    while (!todo.empty()) {
        Coords c = todo.front();
        todo.pop();
        const Coords labels = found.at(c);
        for (std::size_t i = 0; i < r; ++i) {
            Coords nc = c;
            nc[i] -= labels[i];
            if (std::any_of(nc.begin(), nc.end(), [](std::int64_t x) { return x < 0; })) continue;
            if (std::all_of(nc.begin(), nc.end(), [](std::int64_t x) { return x == 0; })) continue;
            if (found.count(nc)) continue;
            Coords nl = labels;
            for (std::size_t j = 0; j < r; ++j) nl[j] -= labels[i] * cartan[i][j];
            found.emplace(nc, nl);
            todo.push(nc);
        }
    }
    std::vector<std::pair<Coords, Coords>> sorted(found.begin(), found.end());
    std::stable_sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
        auto hx = std::accumulate(x.first.begin(), x.first.end(), std::int64_t{0});
        auto hy = std::accumulate(y.first.begin(), y.first.end(), std::int64_t{0});
        return hx < hy;
    });
    std::vector<Coords> labels;
    root_coords.clear();
    for (auto& [c, l] : sorted) {
        root_coords.push_back(c);
        labels.push_back(l);
    }
    return labels;
}

}  // namespace

RootSystem::RootSystem(RootSystemKind kind) : kind_(kind) {
    if (kind.family != Family::E6 && kind.n < 1) throw InvalidArgument("root system parameter must be >= 1");
    rank_ = kind.rank();
    const int n = kind.n;
    const std::size_t r = static_cast<std::size_t>(rank_);

    // Simple roots in canonical coordinates, before normalization.
    std::vector<Coords> raw_simple;
    switch (kind.family) {
        case Family::SpC:
            for (int i = 0; i + 1 < n; ++i) {
                Coords c(n, 0);
                c[i] = 1;
                c[i + 1] = -1;
                raw_simple.push_back(c);
            }
            {
                Coords c(n, 0);
                c[n - 1] = 2;
                raw_simple.push_back(c);
            }
            break;
        case Family::SlA:
            for (int i = 0; i < rank_; ++i) {
                Coords c(2 * n, 0);
                c[i] = 1;
                c[i + 1] = -1;
                raw_simple.push_back(c);
            }
            break;
        case Family::E6:
            cartan_ = e6_cartan();
            raw_simple = cartan_;
            break;
    }

    if (kind.family == Family::E6) {
        cartan_inv_ = invert(cartan_);
    } else {
        cartan_.assign(r, Coords(r, 0));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
                Rational v = 2 * raw_inner(raw_simple[i], raw_simple[j]) / raw_inner(raw_simple[j], raw_simple[j]);
                if (denominator(v) != 1) throw InternalError("non-integral Cartan entry");
                cartan_[i][j] = static_cast<std::int64_t>(numerator(v));
            }
        }
        cartan_inv_ = invert(cartan_);
    }

    symmetrizer_.assign(r, 1);
    for (std::size_t i = 0; i < r; ++i) {
        Rational half = raw_inner(raw_simple[i], raw_simple[i]) / 2;
        if (denominator(half) != 1) throw InternalError("non-integral root length");
        symmetrizer_[i] = static_cast<std::int64_t>(numerator(half));
    }

    // Root coordinates c of a weight with labels a solve C^T c = a.
    std::vector<Coords> transpose(r, Coords(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) transpose[i][j] = cartan_[j][i];
    auto inv_t = invert(transpose);
    BigInt den = 1;
    for (auto& row : inv_t)
        for (auto& x : row) den = boost::multiprecision::lcm(den, denominator(x));
    root_den_ = static_cast<std::int64_t>(den);
    inv_transpose_scaled_.assign(r, Coords(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Rational s = inv_t[i][j] * root_den_;
            inv_transpose_scaled_[i][j] = static_cast<std::int64_t>(numerator(s));
        }

    switch (kind.family) {
        case Family::SpC: exponent_ = 2; break;
        case Family::SlA: exponent_ = 2 * n; break;
        case Family::E6: exponent_ = 3; break;
    }

    for (std::size_t i = 0; i < r; ++i) simple_roots_.push_back(weight(raw_simple[i]));
    for (std::size_t i = 0; i < r; ++i) {
        Coords a(r, 0);
        a[i] = 1;
        fundamental_weights_.push_back(from_dynkin(a));
    }

    pos_dynkin_ = closure_dynkin(cartan_, pos_root_);
    for (auto& labels : pos_dynkin_) positive_roots_.push_back(from_dynkin(labels));

    // rho as half-sum of positive roots, computed in label space.
    Coords twice(r, 0);
    for (auto& labels : pos_dynkin_)
        for (std::size_t i = 0; i < r; ++i) twice[i] += labels[i];
    Coords half(r);
    for (std::size_t i = 0; i < r; ++i) {
        if (twice[i] % 2 != 0) throw InternalError("half-sum of positive roots is not integral");
        half[i] = twice[i] / 2;
    }
    if (half != Coords(r, 1)) throw InternalError("rho differs from the sum of fundamental weights");
    rho_ = from_dynkin(half);
}

RootSystem build_root_system(RootSystemKind kind) { return RootSystem(kind); }

const RootSystem& shared_root_system(RootSystemKind kind) {
    static std::mutex mutex;
    static std::map<RootSystemKind, std::unique_ptr<const RootSystem>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(kind);
    if (it == registry.end()) {
        it = registry.emplace(kind, std::make_unique<const RootSystem>(kind)).first;
    }
    return *it->second;
}

std::vector<Weight> positive_roots_of(const RootSystem& rs) {
    std::vector<Coords> root_coords;
    auto labels = closure_dynkin(rs.cartan(), root_coords);
    std::vector<Weight> out;
    out.reserve(labels.size());
    for (auto& l : labels) out.push_back(rs.from_dynkin(l));
    return out;
}

Weight rho_of(const RootSystem& rs) {
    const auto roots = positive_roots_of(rs);
    Coords twice(static_cast<std::size_t>(rs.rank()), 0);
    for (auto& root : roots) {
        auto labels = rs.dynkin(root);
        for (std::size_t i = 0; i < labels.size(); ++i) twice[i] += labels[i];
    }
    Coords half(twice.size());
    for (std::size_t i = 0; i < twice.size(); ++i) half[i] = twice[i] / 2;
    Weight rho = rs.from_dynkin(half);
    Coords sum(twice.size(), 0);
    for (auto& fw : rs.fundamental_weights()) {
        auto labels = rs.dynkin(fw);
        for (std::size_t i = 0; i < labels.size(); ++i) sum[i] += labels[i];
    }
    if (rs.from_dynkin(sum) != rho) throw InternalError("rho consistency check failed");
    return rho;
}

std::vector<Rational> convert_coordinates(const RootSystem& rs, const Weight& w, Basis target) {
    rs.check(w);
    std::vector<Rational> out;
    switch (target) {
        case Basis::epsilon:
            if (rs.kind().family == Family::E6) throw InvalidArgument("epsilon basis is undefined for E6");
            for (auto x : w.coords) out.emplace_back(x);
            break;
        case Basis::dynkin:
            for (auto x : rs.dynkin(w)) out.emplace_back(x);
            break;
        case Basis::root: {
            auto num = rs.root_numerators(rs.dynkin(w));
            for (auto x : num) out.emplace_back(Rational(x, rs.root_denominator()));
            break;
        }
    }
    return out;
}

Weight weight_from_coordinates(const RootSystem& rs, const std::vector<Rational>& v, Basis source) {
    auto integral = [](const std::vector<Rational>& xs) {
        Coords c;
        for (auto& x : xs) {
            if (denominator(x) != 1) throw InvalidArgument("coordinates do not define an integral weight");
            c.push_back(to_int64(numerator(x)));
        }
        return c;
    };
    switch (source) {
        case Basis::epsilon:
            if (rs.kind().family == Family::E6) throw InvalidArgument("epsilon basis is undefined for E6");
            return rs.weight(integral(v));
        case Basis::dynkin:
            return rs.from_dynkin(integral(v));
        case Basis::root: {
            if (static_cast<int>(v.size()) != rs.rank()) throw InvalidArgument("wrong number of root coordinates");
            std::vector<Rational> labels(v.size());
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = 0; j < v.size(); ++j) labels[i] += v[j] * rs.cartan()[j][i];
            return rs.from_dynkin(integral(labels));
        }
    }
    throw InvalidArgument("unknown basis");
}

}  // namespace thetasum
