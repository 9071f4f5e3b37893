#pragma once

#include "latpoly/errors.hpp"
#include "latpoly/types.hpp"

#include <boost/multiprecision/integer.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace latpoly {

// integer coordinate vector; dimension = coords.size()
struct LatticePoint {
    std::vector<Int> coords;

    LatticePoint() = default;
    explicit LatticePoint(std::vector<Int> c) : coords(std::move(c)) {}
    LatticePoint(std::initializer_list<long long> c) {
        coords.reserve(c.size());
        for (long long v : c) coords.emplace_back(v);
    }

    int dim() const { return static_cast<int>(coords.size()); }
    Int& operator[](int i) { return coords[static_cast<size_t>(i)]; }
    const Int& operator[](int i) const { return coords[static_cast<size_t>(i)]; }

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.coords == b.coords; }
    friend bool operator!=(const LatticePoint& a, const LatticePoint& b) { return !(a == b); }
    // lexicographic; all deterministic orderings in the library derive from it
    friend bool operator<(const LatticePoint& a, const LatticePoint& b) { return a.coords < b.coords; }

    friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
        LatticePoint r = a;
        for (int i = 0; i < r.dim(); ++i) r[i] += b[i];
        return r;
    }
    friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
        LatticePoint r = a;
        for (int i = 0; i < r.dim(); ++i) r[i] -= b[i];
        return r;
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += coords[static_cast<size_t>(i)].str();
        }
        return s + ")";
    }
};

// exact rational coordinate vector (cpp_rational keeps lowest terms)
struct RationalPoint {
    std::vector<Rat> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rat> c) : coords(std::move(c)) {}
    explicit RationalPoint(const LatticePoint& p) {
        coords.reserve(p.coords.size());
        for (const Int& v : p.coords) coords.emplace_back(v);
    }

    int dim() const { return static_cast<int>(coords.size()); }
    Rat& operator[](int i) { return coords[static_cast<size_t>(i)]; }
    const Rat& operator[](int i) const { return coords[static_cast<size_t>(i)]; }

    friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords == b.coords; }

    // integral iff every coordinate has denominator 1
    bool is_integral() const {
        for (const Rat& q : coords)
            if (!rat_is_integer(q)) return false;
        return true;
    }
    LatticePoint to_lattice() const {
        std::vector<Int> c;
        c.reserve(coords.size());
        for (const Rat& q : coords) c.push_back(rat_num(q));
        return LatticePoint(std::move(c));
    }

    std::string str() const {
        std::string s = "(";
        for (int i = 0; i < dim(); ++i) {
            if (i) s += ",";
            s += rat_to_string(coords[static_cast<size_t>(i)]);
        }
        return s + ")";
    }
};

inline Int dot(const std::vector<Int>& a, const LatticePoint& p) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * p.coords[i];
    return s;
}

inline Rat dot(const std::vector<Int>& a, const RationalPoint& p) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * p.coords[i];
    return s;
}

inline Int gcd_of(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

inline Int l1_norm(const std::vector<Int>& v) {
    Int s = 0;
    for (const Int& x : v) s += abs(x);
    return s;
}

// primitive nonzero integer vector, sign canonicalized so the first nonzero
// entry is positive; the canonical form makes direction sets comparable
struct Direction {
    std::vector<Int> v;

    Direction() = default;
    explicit Direction(std::vector<Int> raw) {
        Int g = gcd_of(raw);
        if (g == 0) throw input_error("Direction: zero vector");
        for (Int& x : raw) x /= g;
        for (const Int& x : raw) {
            if (x == 0) continue;
            if (x < 0)
                for (Int& y : raw) y = -y;
            break;
        }
        v = std::move(raw);
    }
    Direction(std::initializer_list<long long> raw)
        : Direction(std::vector<Int>(raw.begin(), raw.end())) {}

    int dim() const { return static_cast<int>(v.size()); }

    friend bool operator==(const Direction& a, const Direction& b) { return a.v == b.v; }
    friend bool operator<(const Direction& a, const Direction& b) { return a.v < b.v; }

    std::string str() const { return LatticePoint(v).str(); }
};

// reduces an integer vector to primitive form without sign canonicalization;
// used where orientation matters (segment steps, facet normals)
inline std::vector<Int> primitive_part(std::vector<Int> v) {
    Int g = gcd_of(v);
    if (g == 0) throw input_error("primitive_part: zero vector");
    for (Int& x : v) x /= g;
    return v;
}

inline void require_same_dimension(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) throw input_error("empty point list");
    const int d = pts.front().dim();
    if (d < 1) throw input_error("points must have dimension >= 1");
    for (const LatticePoint& p : pts)
        if (p.dim() != d) throw input_error("dimension mismatch in point list");
}

} // namespace latpoly
