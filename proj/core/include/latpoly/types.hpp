#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace latpoly {

// All geometry runs on exact integers; rationals appear only where scaling or
// linear programming forces them.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

// floor(p/q) with q > 0 (cpp_rational keeps denominators positive)
inline Int rat_floor(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int rat_ceil(const Rat& q) { return -rat_floor(-q); }

inline bool rat_is_integer(const Rat& q) { return rat_den(q) == 1; }

// lowest-terms decimal string: "p" when integral, "p/q" otherwise
inline std::string rat_to_string(const Rat& q) {
    Int n = rat_num(q), d = rat_den(q);
    if (d == 1) return n.str();
    return n.str() + "/" + d.str();
}

} // namespace latpoly
