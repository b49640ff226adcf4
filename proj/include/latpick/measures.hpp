#ifndef LATPICK_MEASURES_HPP
#define LATPICK_MEASURES_HPP

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/rational.hpp>

#include "arithmetic.hpp"
#include "error.hpp"
#include "lattice_core.hpp"
#include "polygon.hpp"

namespace latpick {

using rational = boost::rational<integer>;

enum class PointRole { vertex, edge, interior };

struct VisibilityEntry {
    LatticePoint point;
    PointRole role = PointRole::interior;
    double alpha = 0.0;
};

/** Fraction of a small disk around each lattice point that lies in the
polygon, and their sum. */
struct VisibilityReport {
    std::vector<VisibilityEntry> per_point;
    double total = 0.0;
};

/** Interior angle at v between the edges to prev and next of a CCW polygon,
in units of a full turn. */
inline double angle_fraction(LatticePoint prev,LatticePoint v,LatticePoint next) {
    LatticeVector out = next - v;
    LatticeVector back = prev - v;
    double theta = std::atan2(static_cast<double>(cross(out,back)),static_cast<double>(dot(out,back)));
    if(theta < 0) theta += 2*std::numbers::pi;
    return theta / (2*std::numbers::pi);
}

namespace detail {

// boundary entries in walk order; straight angles get exactly 1/2
inline std::vector<VisibilityEntry> boundary_visibility(const Polygon &p) {
    std::vector<VisibilityEntry> out;
    for(std::size_t i = 0; i < p.size(); ++i) {
        const LatticePoint prev = p.prev(i), v = p[i], next = p.next(i);
        if(orientation(prev,v,next) == 0)
            out.push_back({v,PointRole::edge,0.5});
        else
            out.push_back({v,PointRole::vertex,angle_fraction(prev,v,next)});

        LatticeVector d = next - v;
        integer g = gcd(d.x,d.y);
        LatticeVector step{d.x / g,d.y / g};
        for(integer k = 1; k < g; ++k) out.push_back({v + k*step,PointRole::edge,0.5});
    }
    return out;
}

} // namespace detail

inline VisibilityReport visibility_measure(const Polygon &p) {
    VisibilityReport r;
    r.per_point = detail::boundary_visibility(p);
    for(const LatticePoint &q : interior_points(p)) r.per_point.push_back({q,PointRole::interior,1.0});
    for(const VisibilityEntry &e : r.per_point) r.total += e.alpha;
    return r;
}

/** Sum of the boundary visibility fractions only; N^b/2 - 1 up to rounding. */
inline double boundary_angle_sum(const Polygon &p) {
    double total = 0.0;
    for(const VisibilityEntry &e : detail::boundary_visibility(p)) total += e.alpha;
    return total;
}

/** p with every coordinate multiplied by k. */
inline Polygon scale(const Polygon &p,integer k) {
    if(k < 1) throw error(errc::invalid_argument,"scale factor must be at least 1");
    std::vector<LatticePoint> v;
    v.reserve(p.size());
    for(const LatticePoint &q : p.vertices()) {
        LatticePoint s = k*q;
        check_coordinates(s);
        v.push_back(s);
    }
    return Polygon(Polygon::trusted_tag{},std::move(v));
}

struct ScalingRow {
    integer k = 0;
    integer interior = 0;
    /// interior / k^2
    rational ratio;
    /// A - ratio
    rational deficit;
    /// interior == k^2 A - k N^b / 2 + 1
    bool identity_holds = false;
};

struct ScalingReport {
    std::vector<ScalingRow> rows;
    TwiceArea area;
    integer boundary = 0;
};

/** Interior counts of kP for k = 1..k_max. The counts are taken by direct
scan and compared against the closed form implied by Pick's formula. */
inline ScalingReport scaling_study(const Polygon &p,integer k_max) {
    if(k_max < 1) throw error(errc::invalid_argument,"k_max must be at least 1");
    ScalingReport r;
    r.area = shoelace_twice_area(p);
    r.boundary = boundary_count(p);
    const rational area(r.area.value,2);
    for(integer k = 1; k <= k_max; ++k) {
        Polygon scaled = scale(p,k);
        ScalingRow row;
        row.k = k;
        row.interior = interior_count(scaled);
        const integer k2 = checked_mul(k,k);
        row.ratio = rational(row.interior,k2);
        row.deficit = area - row.ratio;
        wide_integer expected_doubled = wide_integer(k2)*r.area.value - wide_integer(k)*r.boundary + 2;
        row.identity_holds = expected_doubled == 2*wide_integer(row.interior);
        r.rows.push_back(row);
    }
    return r;
}

} // namespace latpick

#endif
