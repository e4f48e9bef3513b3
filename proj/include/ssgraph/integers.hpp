#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

namespace ssgraph {

// Exact arbitrary-precision arithmetic. All divisor/lattice computations run
// on Int; Rat is used internally where exact division is not available.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Integer vector indexed by the supersingular classes.
using Divisor = std::vector<Int>;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// gcd of a list, nonnegative; empty or all-zero lists give 0.
inline Int gcd_list(const std::vector<Int>& xs) {
    Int g = 0;
    for (const Int& x : xs) g = boost::multiprecision::gcd(g, x);
    return abs_int(g);
}

inline Int sum_of(const Divisor& v) {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
}

} // namespace ssgraph
