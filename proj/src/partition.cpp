#include "thetasum/partition.hpp"

#include <algorithm>

namespace thetasum {

Partition transpose_partition(const Partition& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1])) {
            throw InvalidArgument("transpose_partition needs a weakly decreasing nonnegative sequence");
        }
    }
    Partition out;
    const std::int64_t width = parts.empty() ? 0 : parts.front();
    for (std::int64_t col = 0; col < width; ++col) {
        std::int64_t height = 0;
        for (auto p : parts)
            if (p > col) ++height;
        out.push_back(height);
    }
    return out;
}

DegreeLength degree_length_hyp(const Weight& lambda) {
    if (lambda.kind.family != Family::SpC) throw InvalidArgument("degree_length_hyp needs a C_n weight");
    DegreeLength out;
    for (auto x : lambda.coords) {
        out.degree += x;
        if (x != 0) ++out.length;
    }
    return out;
}

SlSplit split_sl(const RootSystem& rs, const Coords& representative) {
    if (rs.kind().family != Family::SlA) throw InvalidArgument("split_sl needs an SL_{2n} system");
    Coords w = representative;
    if (static_cast<int>(w.size()) != rs.ambient_dim()) throw InvalidArgument("wrong coordinate length");
    if (!std::is_sorted(w.begin(), w.end(), std::greater<>())) throw InvalidArgument("split_sl needs a dominant weight");
    rs.normalize(w);
    const std::size_t n = static_cast<std::size_t>(rs.kind().n);
    SlSplit s;
    for (std::size_t i = 0; i < n; ++i) {
        s.plus.push_back(w[i]);
        s.minus.push_back(-w[n + i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        s.degree_plus += s.plus[i];
        s.degree_minus += s.minus[i];
        if (s.plus[i] != 0) ++s.length_plus;
        if (s.minus[i] != 0) ++s.length_minus;
    }
    return s;
}

Weight join_sl(const RootSystem& rs, const Partition& plus, const Partition& minus) {
    const std::size_t n = static_cast<std::size_t>(rs.kind().n);
    if (plus.size() != n || minus.size() != n) throw InvalidArgument("join_sl: parts must have length n");
    Coords w(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = plus[i];
        w[n + i] = -minus[i];
    }
    return rs.weight(std::move(w));
}

}  // namespace thetasum
