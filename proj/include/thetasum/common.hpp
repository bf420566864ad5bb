#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thetasum {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer coordinate vector. Interpretation depends on the basis it is given in.
using Coords = std::vector<std::int64_t>;

struct CoordsHash {
    std::size_t operator()(const Coords& c) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto x : c) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// Error taxonomy. The CLI maps each class to an exit code.

/// Malformed or out-of-domain input supplied by a caller.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (orbit size, pairwise work, group order) was exceeded.
class ResourceLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal certification failed. Signals a bug, never expected on valid input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Resource caps shared by orbit enumeration, convolution and the
/// alternating-sum oracle. The CLI exposes a single `--cap` that overrides all three.
struct Limits {
    std::uint64_t orbit_cap = 1'000'000;
    std::uint64_t work_cap = 100'000'000;
    std::uint64_t group_cap = 100'000;

    static Limits uniform(std::uint64_t cap) { return Limits{cap, cap, cap}; }
};

inline const Limits& default_limits() {
    static const Limits limits{};
    return limits;
}

std::string to_string(const Coords& c);

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw InvalidArgument("integer out of 64-bit range: " + v.str());
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace thetasum
