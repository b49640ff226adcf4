#ifndef LATPICK_LATTICE_CORE_HPP
#define LATPICK_LATTICE_CORE_HPP

#include <cassert>
#include <compare>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <vector>

#include "arithmetic.hpp"
#include "error.hpp"

namespace latpick {

/** An exact point or displacement on Z^2. */
struct LatticeVector {
    integer x = 0;
    integer y = 0;

    friend constexpr bool operator==(const LatticeVector&,const LatticeVector&) = default;
    friend constexpr auto operator<=>(const LatticeVector&,const LatticeVector&) = default;

    friend LatticeVector operator+(LatticeVector a,LatticeVector b) {
        return {checked_add(a.x,b.x),checked_add(a.y,b.y)};
    }
    friend LatticeVector operator-(LatticeVector a,LatticeVector b) {
        return {checked_sub(a.x,b.x),checked_sub(a.y,b.y)};
    }
    friend LatticeVector operator-(LatticeVector a) {
        return {checked_sub(0,a.x),checked_sub(0,a.y)};
    }
    friend LatticeVector operator*(integer k,LatticeVector a) {
        return {checked_mul(k,a.x),checked_mul(k,a.y)};
    }

    friend std::ostream &operator<<(std::ostream &os,const LatticeVector &v) {
        return os << '(' << v.x << ',' << v.y << ')';
    }
};

using LatticePoint = LatticeVector;

/** u.x*v.y - u.y*v.x, computed without intermediate overflow. */
inline integer cross(LatticeVector u,LatticeVector v) {
    return narrow(wide_integer(u.x)*v.y - wide_integer(u.y)*v.x);
}

inline integer dot(LatticeVector u,LatticeVector v) {
    return narrow(wide_integer(u.x)*v.x + wide_integer(u.y)*v.y);
}

/** Sign of the turn a -> b -> c: positive for counterclockwise. */
inline int orientation(LatticePoint a,LatticePoint b,LatticePoint c) {
    wide_integer d = (wide_integer(b.x) - a.x)*(wide_integer(c.y) - a.y)
                   - (wide_integer(b.y) - a.y)*(wide_integer(c.x) - a.x);
    return sign(d);
}

inline void check_coordinates(LatticeVector v) {
    check_coordinate(v.x);
    check_coordinate(v.y);
}

/** Witness of s*a + t*b = g with g = gcd(|a|,|b|). */
struct BezoutCertificate {
    integer a = 0;
    integer b = 0;
    integer g = 0;
    integer s = 0;
    integer t = 0;

    friend constexpr bool operator==(const BezoutCertificate&,const BezoutCertificate&) = default;
};

/** Integer matrix taking basis {p,q} to {r,s}: r = a*p + b*q, s = c*p + d*q. */
struct BasisChange {
    integer a = 1;
    integer b = 0;
    integer c = 0;
    integer d = 1;

    integer determinant() const { return narrow(wide_integer(a)*d - wide_integer(b)*c); }
};

inline integer gcd(integer a,integer b) {
    std::uint64_t g = std::gcd(magnitude(a),magnitude(b));
    if(g > static_cast<std::uint64_t>(std::numeric_limits<integer>::max()))
        throw error(errc::overflow,"gcd does not fit in a signed 64-bit integer");
    return static_cast<integer>(g);
}

namespace detail {
// floor-based remainder in [0,m) for m > 0
inline wide_integer floor_mod(wide_integer x,wide_integer m) {
    wide_integer r = x % m;
    return r < 0 ? r + m : r;
}
} // namespace detail

/** Extended Euclid. The returned coefficient s is the representative in
(-|b|/2g, |b|/2g] of its residue class modulo |b|/g; when b is zero, s is the
sign of a and t is zero. */
inline BezoutCertificate extended_gcd(integer a,integer b) {
    if(a == 0 && b == 0) throw error(errc::both_zero,"extended_gcd(0, 0) is undefined");
    check_coordinate(a);
    check_coordinate(b);

    integer old_r = a, r = b;
    integer old_s = 1, s = 0;
    integer old_t = 0, t = 1;
    while(r != 0) {
        integer q = old_r / r;
        integer tmp = old_r - q*r; old_r = r; r = tmp;
        tmp = old_s - q*s; old_s = s; s = tmp;
        tmp = old_t - q*t; old_t = t; t = tmp;
    }
    if(old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }

    BezoutCertificate cert{a,b,old_r,old_s,old_t};
    if(b == 0) {
        cert.s = a > 0 ? 1 : -1;
        cert.t = 0;
        return cert;
    }

    // s + k*(b/g), t - k*(a/g) is the full solution family
    wide_integer step_s = b / cert.g;
    wide_integer step_t = a / cert.g;
    wide_integer m = step_s < 0 ? -step_s : step_s;
    wide_integer rep = detail::floor_mod(cert.s,m);
    if(2*rep > m) rep -= m;
    wide_integer k = (rep - cert.s) / step_s;
    cert.s = narrow(rep);
    cert.t = narrow(cert.t - k*step_t);
    return cert;
}

/** True iff the segment from the origin to v meets no other lattice point. */
inline bool is_simple(LatticeVector v) {
    if(v.x == 0 && v.y == 0) throw error(errc::zero_vector,"the zero vector has no direction");
    return gcd(v.x,v.y) == 1;
}

inline integer interior_lattice_points_on_segment(LatticeVector v) {
    if(v.x == 0 && v.y == 0) throw error(errc::zero_vector,"the zero vector spans no segment");
    return gcd(v.x,v.y) - 1;
}

/** The partner w of a simple vector u with cross(u,w) = +1, normalized so
that 0 <= w.x < |u.x| (or 0 <= w.y < |u.y| when u.x is zero). */
inline LatticeVector primitive_partner(LatticeVector u) {
    check_coordinates(u);
    if(!is_simple(u))
        throw error(errc::not_simple,"vector (" + std::to_string(u.x) + ", " + std::to_string(u.y)
            + ") has gcd " + std::to_string(gcd(u.x,u.y)));

    BezoutCertificate cert = extended_gcd(u.x,u.y);
    wide_integer wx = -wide_integer(cert.t);
    wide_integer wy = cert.s;

    // shift along u into the residue window
    wide_integer j;
    if(u.x != 0) {
        wide_integer m = u.x < 0 ? -wide_integer(u.x) : wide_integer(u.x);
        j = (detail::floor_mod(wx,m) - wx) / u.x;
    } else {
        wide_integer m = u.y < 0 ? -wide_integer(u.y) : wide_integer(u.y);
        j = (detail::floor_mod(wy,m) - wy) / u.y;
    }
    return {narrow(wx + j*u.x),narrow(wy + j*u.y)};
}

/** 2k partners of u. Partners are w + j*u for j = 0, -1, 1, -2, 2, ... (the
first k of these), each followed by its negation. */
inline std::vector<LatticeVector> all_partners(LatticeVector u,std::size_t k) {
    LatticeVector w = primitive_partner(u);
    std::vector<LatticeVector> out;
    out.reserve(2*k);
    for(std::size_t i = 0; i < k; ++i) {
        integer j = (i % 2 == 0) ? integer(i/2) : -integer(i/2 + 1);
        LatticeVector p = w + j*u;
        out.push_back(p);
        out.push_back(-p);
    }
    return out;
}

inline bool is_unimodular(const BasisChange &m) {
    wide_integer det = wide_integer(m.a)*m.d - wide_integer(m.b)*m.c;
    return det == 1 || det == -1;
}

/** Coordinates (m,n) in the basis produced by applying `m` to the standard
basis, expressed back in standard coordinates. */
inline LatticeVector apply_basis(const BasisChange &m,LatticeVector coords) {
    return {narrow(wide_integer(coords.x)*m.a + wide_integer(coords.y)*m.c),
            narrow(wide_integer(coords.x)*m.b + wide_integer(coords.y)*m.d)};
}

struct MinimalTriangle {
    LatticeVector apex;
    integer twice_area = 0;
};

/** A lattice vector (alpha,beta) with a*beta - b*alpha = gcd(a,b), the least
positive value that determinant can take. The triangle on the origin, (a,b)
and the apex therefore has no interior lattice points. */
inline MinimalTriangle minimal_triangle(integer a,integer b) {
    if(a == 0 && b == 0) throw error(errc::zero_vector,"minimal_triangle needs a nonzero side");
    BezoutCertificate cert = extended_gcd(a,b);
    LatticeVector apex{checked_sub(0,cert.t),cert.s};
    integer det = cross({a,b},apex);
    assert(det == cert.g);
    return {apex,det};
}

} // namespace latpick

#endif
