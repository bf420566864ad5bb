#pragma once

#include <cstdint>
#include <vector>

#include "thetasum/rootsys.hpp"

namespace thetasum {

using Partition = std::vector<std::int64_t>;

/// Young-diagram transpose of a weakly decreasing nonnegative sequence.
/// Trailing zeros are dropped from the result.
Partition transpose_partition(const Partition& parts);

struct DegreeLength {
    std::int64_t degree = 0;
    std::int64_t length = 0;
    auto operator<=>(const DegreeLength&) const = default;
};

/// Degree (sum) and length (number of nonzero entries) of a dominant C_n weight.
DegreeLength degree_length_hyp(const Weight& lambda);

/// The unique split lambda = (plus | -minus) mod det with both parts nonnegative and
/// some entry of `minus` zero. `plus` is weakly decreasing; `minus` is stored in the
/// coordinate order of the last n entries, hence weakly increasing with minus[0] = 0.
struct SlSplit {
    Partition plus;
    Partition minus;
    std::int64_t degree_plus = 0;
    std::int64_t degree_minus = 0;
    std::int64_t length_plus = 0;
    std::int64_t length_minus = 0;

    std::int64_t degree() const { return degree_plus + degree_minus; }
    std::int64_t length() const { return length_plus + length_minus; }
};

/// Accepts any Z^{2n} representative of a dominant SL_{2n} weight.
SlSplit split_sl(const RootSystem& rs, const Coords& representative);
inline SlSplit split_sl(const RootSystem& rs, const Weight& w) { return split_sl(rs, w.coords); }

/// Reassembles (plus | -minus) as a normalized weight.
Weight join_sl(const RootSystem& rs, const Partition& plus, const Partition& minus);

}  // namespace thetasum
