#ifndef CHARPOLY_RATIONAL_HPP
#define CHARPOLY_RATIONAL_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "charpoly/errors.hpp"

namespace charpoly {

// All arithmetic in the library is exact. No floating point anywhere.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// A weighting of the edges of a graph: coords[i] is the value on edge i.
using EdgeVector = std::vector<Rat>;

inline Int rat_num(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int rat_den(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }
inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Canonical "p/q" string, "p" when the denominator is 1.
inline std::string rat_str(const Rat& q) { return q.str(); }

inline Rat rat_parse(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw Error("cannot parse rational: '" + s + "'");
    }
}

inline EdgeVector vec_add(const EdgeVector& a, const EdgeVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    EdgeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline EdgeVector vec_sub(const EdgeVector& a, const EdgeVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    EdgeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline EdgeVector vec_scale(const EdgeVector& a, const Rat& c) {
    EdgeVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

inline Rat dot(const EdgeVector& a, const EdgeVector& b) {
    if (a.size() != b.size()) throw DimensionMismatch();
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const EdgeVector& a) {
    for (const Rat& x : a)
        if (x != 0) return false;
    return true;
}

inline EdgeVector constant_vector(size_t n, const Rat& c) { return EdgeVector(n, c); }

inline std::string vec_str(const EdgeVector& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += rat_str(a[i]);
    }
    return s + ")";
}

// Scale a rational vector to a primitive integer vector pointing the same way.
// Requires a != 0.
inline std::vector<Int> primitive_integer(const EdgeVector& a) {
    if (is_zero(a)) throw ZeroVector();
    Int l = 1;
    for (const Rat& x : a) l = lcm(l, rat_den(x));
    std::vector<Int> v(a.size());
    Int g = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        v[i] = rat_num(a[i]) * (l / rat_den(a[i]));
        g = gcd(g, v[i]);
    }
    for (Int& x : v) x /= g;
    return v;
}

}  // namespace charpoly

#endif  // CHARPOLY_RATIONAL_HPP
