#ifndef LATPICK_POLYGON_HPP
#define LATPICK_POLYGON_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arithmetic.hpp"
#include "error.hpp"
#include "lattice_core.hpp"

namespace latpick {

/** Twice the area of a lattice region. Lattice areas are multiples of 1/2, so
the doubled value is always an exact integer. */
struct TwiceArea {
    integer value = 0;

    friend constexpr bool operator==(const TwiceArea&,const TwiceArea&) = default;
    friend constexpr auto operator<=>(const TwiceArea&,const TwiceArea&) = default;

    /** The area itself as an exact decimal, e.g. "8.0" or "0.5". */
    std::string decimal() const {
        std::string s = std::to_string(value / 2);
        return s + (value % 2 ? ".5" : ".0");
    }
};

struct PointCounts {
    integer boundary = 0;
    integer interior = 0;

    friend constexpr bool operator==(const PointCounts&,const PointCounts&) = default;
};

enum class Location { outside, boundary, inside };

/** A simple closed lattice polygon, stored counterclockwise. Only obtainable
through validate() and the operations below, so every instance satisfies the
Jordan-polygon invariants. */
class Polygon {
public:
    const std::vector<LatticePoint> &vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const LatticePoint &operator[](std::size_t i) const { return vertices_[i]; }

    /** Vertex i+1, wrapping around. */
    const LatticePoint &next(std::size_t i) const { return vertices_[(i + 1) % vertices_.size()]; }
    const LatticePoint &prev(std::size_t i) const {
        return vertices_[(i + vertices_.size() - 1) % vertices_.size()];
    }

    friend bool operator==(const Polygon&,const Polygon&) = default;

    struct trusted_tag {};
    Polygon(trusted_tag,std::vector<LatticePoint> v) : vertices_(std::move(v)) {}

private:
    std::vector<LatticePoint> vertices_;
};

namespace detail {

inline bool within_box(LatticePoint a,LatticePoint b,LatticePoint p) {
    return std::min(a.x,b.x) <= p.x && p.x <= std::max(a.x,b.x)
        && std::min(a.y,b.y) <= p.y && p.y <= std::max(a.y,b.y);
}

} // namespace detail

/** True if p lies on the closed segment ab. */
inline bool on_segment(LatticePoint a,LatticePoint b,LatticePoint p) {
    return orientation(a,b,p) == 0 && detail::within_box(a,b,p);
}

/** Closed-segment intersection test, touching included. */
inline bool segments_intersect(LatticePoint a,LatticePoint b,LatticePoint c,LatticePoint d) {
    int o1 = orientation(a,b,c);
    int o2 = orientation(a,b,d);
    int o3 = orientation(c,d,a);
    int o4 = orientation(c,d,b);
    if(o1*o2 < 0 && o3*o4 < 0) return true;
    if(o1 == 0 && detail::within_box(a,b,c)) return true;
    if(o2 == 0 && detail::within_box(a,b,d)) return true;
    if(o3 == 0 && detail::within_box(c,d,a)) return true;
    if(o4 == 0 && detail::within_box(c,d,b)) return true;
    return false;
}

/** Signed shoelace sum over a closed vertex ring; positive when counterclockwise. */
inline integer signed_twice_area(std::span<const LatticePoint> ring) {
    wide_integer sum = 0;
    for(std::size_t i = 0; i < ring.size(); ++i) {
        const LatticePoint &a = ring[i];
        const LatticePoint &b = ring[(i + 1) % ring.size()];
        sum += wide_integer(a.x)*b.y - wide_integer(b.x)*a.y;
    }
    return narrow(sum);
}

/** Classify q against a closed ring. Boundary membership is decided first by
exact collinearity; otherwise the crossing number of a rightward ray decides,
with the half-open rule on edge endpoints. */
inline Location locate(std::span<const LatticePoint> ring,LatticePoint q) {
    bool inside = false;
    for(std::size_t i = 0; i < ring.size(); ++i) {
        const LatticePoint &a = ring[i];
        const LatticePoint &b = ring[(i + 1) % ring.size()];
        if(on_segment(a,b,q)) return Location::boundary;
        if((a.y > q.y) != (b.y > q.y)) {
            int o = orientation(a,b,q);
            if(b.y > a.y ? o > 0 : o < 0) inside = !inside;
        }
    }
    return inside ? Location::inside : Location::outside;
}

inline Location locate(const Polygon &p,LatticePoint q) {
    return locate(std::span<const LatticePoint>(p.vertices()),q);
}

namespace detail {

inline bool edges_adjacent(std::size_t i,std::size_t j,std::size_t n) {
    return (i + 1) % n == j || (j + 1) % n == i;
}

// adjacent edges (p,v) and (v,q) overlap when they fold back along one line
inline bool folds_back(LatticePoint p,LatticePoint v,LatticePoint q) {
    return orientation(p,v,q) == 0 && dot(p - v,q - v) > 0;
}

} // namespace detail

/** Check that `vertices` form a simple lattice polygon and return it in
counterclockwise order. A clockwise input is reversed, keeping the first
vertex in place. Vertices with straight angles are accepted. */
inline Polygon validate(std::span<const LatticePoint> vertices) {
    const std::size_t n = vertices.size();
    if(n < 3)
        throw error(errc::too_few_vertices,
            "a polygon needs at least 3 vertices, got " + std::to_string(n));
    for(const LatticePoint &v : vertices) check_coordinates(v);

    for(std::size_t i = 0; i < n; ++i) {
        if(vertices[i] == vertices[(i + 1) % n])
            throw error(errc::degenerate_edge,"edge " + std::to_string(i) + " has zero length");
    }
    {
        std::vector<LatticePoint> sorted(vertices.begin(),vertices.end());
        std::sort(sorted.begin(),sorted.end());
        auto dup = std::adjacent_find(sorted.begin(),sorted.end());
        if(dup != sorted.end()) {
            throw error(errc::repeated_vertex,
                "vertex (" + std::to_string(dup->x) + ", " + std::to_string(dup->y) + ") appears twice");
        }
    }

    for(std::size_t i = 0; i < n; ++i) {
        const LatticePoint &a = vertices[i];
        const LatticePoint &b = vertices[(i + 1) % n];
        for(std::size_t j = i + 1; j < n; ++j) {
            const LatticePoint &c = vertices[j];
            const LatticePoint &d = vertices[(j + 1) % n];
            if(detail::edges_adjacent(i,j,n)) {
                // the shared vertex is b (j == i+1) or a (i == j+1 mod n)
                bool overlap = (j == (i + 1) % n) ? detail::folds_back(a,b,d)
                                                  : detail::folds_back(b,a,c);
                if(overlap) throw self_intersection_error(i,j);
            } else if(segments_intersect(a,b,c,d)) {
                throw self_intersection_error(i,j);
            }
        }
    }

    std::vector<LatticePoint> out(vertices.begin(),vertices.end());
    if(signed_twice_area(out) < 0) std::reverse(out.begin() + 1,out.end());
    return Polygon(Polygon::trusted_tag{},std::move(out));
}

inline Polygon validate(std::initializer_list<LatticePoint> vertices) {
    return validate(std::span<const LatticePoint>(vertices.begin(),vertices.size()));
}

/** N^b: every lattice point on the boundary, summed edge by edge via gcd. */
inline integer boundary_count(const Polygon &p) {
    integer total = 0;
    for(std::size_t i = 0; i < p.size(); ++i) total += gcd(p.next(i).x - p[i].x,p.next(i).y - p[i].y);
    return total;
}

/** Boundary lattice points in counterclockwise walk order, starting at vertex 0. */
inline std::vector<LatticePoint> boundary_points(const Polygon &p) {
    std::vector<LatticePoint> out;
    for(std::size_t i = 0; i < p.size(); ++i) {
        LatticeVector d = p.next(i) - p[i];
        integer g = gcd(d.x,d.y);
        LatticeVector step{d.x / g,d.y / g};
        for(integer k = 0; k < g; ++k) out.push_back(p[i] + k*step);
    }
    return out;
}

struct BoundingBox {
    LatticePoint lo;
    LatticePoint hi;
};

inline BoundingBox bounding_box(std::span<const LatticePoint> pts) {
    BoundingBox box{pts.front(),pts.front()};
    for(const LatticePoint &v : pts) {
        box.lo.x = std::min(box.lo.x,v.x);
        box.lo.y = std::min(box.lo.y,v.y);
        box.hi.x = std::max(box.hi.x,v.x);
        box.hi.y = std::max(box.hi.y,v.y);
    }
    return box;
}

/** Interior lattice points, x-major then y, found by scanning the bounding box. */
inline std::vector<LatticePoint> interior_points(const Polygon &p) {
    BoundingBox box = bounding_box(p.vertices());
    std::vector<LatticePoint> out;
    for(integer x = box.lo.x + 1; x < box.hi.x; ++x) {
        for(integer y = box.lo.y + 1; y < box.hi.y; ++y) {
            if(locate(p,{x,y}) == Location::inside) out.push_back({x,y});
        }
    }
    return out;
}

/** N^i by exact bounding-box scan. Cost is proportional to the box area times
the vertex count. */
inline integer interior_count(const Polygon &p) {
    BoundingBox box = bounding_box(p.vertices());
    integer count = 0;
    for(integer x = box.lo.x + 1; x < box.hi.x; ++x) {
        for(integer y = box.lo.y + 1; y < box.hi.y; ++y) {
            if(locate(p,{x,y}) == Location::inside) ++count;
        }
    }
    return count;
}

inline PointCounts point_counts(const Polygon &p) {
    return {boundary_count(p),interior_count(p)};
}

/** 2A from lattice-point counts alone: N^b + 2N^i - 2. */
inline TwiceArea pick_twice_area(const PointCounts &c) {
    return {c.boundary + 2*c.interior - 2};
}

inline TwiceArea pick_twice_area(const Polygon &p) {
    return pick_twice_area(point_counts(p));
}

/** 2A from the vertex coordinates (surveyor's formula). */
inline TwiceArea shoelace_twice_area(const Polygon &p) {
    integer s = signed_twice_area(p.vertices());
    return {s < 0 ? checked_sub(0,s) : s};
}

inline integer twice_area_of_triangle(LatticeVector u,LatticeVector v) {
    integer d = cross(u,v);
    if(d == 0) throw error(errc::collinear,"the two vectors are collinear");
    return d < 0 ? checked_sub(0,d) : d;
}

/** The additive functional F(P) = N^b/2 + N^i - 1, doubled. Numerically the
same as the Pick area; kept separate so that additivity can be stated about
point counts without mentioning area. */
inline integer f_functional_doubled(const PointCounts &c) {
    return checked_sub(checked_add(c.boundary,checked_mul(2,c.interior)),2);
}

inline integer f_functional_doubled(const Polygon &p) {
    return f_functional_doubled(point_counts(p));
}

/** Drop every vertex that lies on the straight line through its neighbours. */
inline Polygon canonical_vertices(const Polygon &p) {
    std::vector<LatticePoint> out;
    for(std::size_t i = 0; i < p.size(); ++i) {
        if(orientation(p.prev(i),p[i],p.next(i)) != 0) out.push_back(p[i]);
    }
    return Polygon(Polygon::trusted_tag{},std::move(out));
}

namespace detail {

// For a chord segment (e,o) touching the boundary edge (a,b) at e: true when
// the two collinear segments share more than the point e.
inline bool collinear_overlap(LatticePoint e,LatticePoint o,LatticePoint a,LatticePoint b) {
    return on_segment(a,b,o) || (a != e && on_segment(e,o,a)) || (b != e && on_segment(e,o,b));
}

} // namespace detail

/** Cut p along a lattice path whose two end points lie on the boundary and
whose remaining points and segments lie strictly inside. Returns the two
pieces; the first is bounded by the boundary walk from chord.front() to
chord.back() and the second by the rest. */
inline std::pair<Polygon,Polygon> split_by_chord(const Polygon &p,std::span<const LatticePoint> chord) {
    if(chord.size() < 2) throw error(errc::too_few_vertices,"a chord needs at least 2 points");
    for(const LatticePoint &c : chord) check_coordinates(c);

    const LatticePoint first = chord.front();
    const LatticePoint last = chord.back();
    if(locate(p,first) != Location::boundary || locate(p,last) != Location::boundary)
        throw error(errc::chord_endpoints_not_on_boundary,"both chord ends must lie on the boundary");

    const std::size_t m = chord.size();
    {
        std::vector<LatticePoint> sorted(chord.begin(),chord.end());
        std::sort(sorted.begin(),sorted.end());
        if(std::adjacent_find(sorted.begin(),sorted.end()) != sorted.end())
            throw error(errc::chord_self_intersects,"chord visits a lattice point twice");
    }
    for(std::size_t i = 0; i + 1 < m; ++i) {
        for(std::size_t j = i + 1; j + 1 < m; ++j) {
            bool bad = (j == i + 1) ? detail::folds_back(chord[i],chord[i + 1],chord[j + 1])
                                    : segments_intersect(chord[i],chord[i + 1],chord[j],chord[j + 1]);
            if(bad)
                throw error(errc::chord_self_intersects,
                    "chord segments " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
    }

    for(std::size_t i = 1; i + 1 < m; ++i) {
        if(locate(p,chord[i]) != Location::inside)
            throw error(errc::chord_not_inside,"chord point " + std::to_string(i) + " is not interior");
    }

    for(std::size_t i = 0; i + 1 < m; ++i) {
        const LatticePoint s0 = chord[i];
        const LatticePoint s1 = chord[i + 1];
        for(std::size_t e = 0; e < p.size(); ++e) {
            const LatticePoint a = p[e];
            const LatticePoint b = p.next(e);
            if(!segments_intersect(s0,s1,a,b)) continue;
            bool allowed = false;
            for(auto [end,other] : {std::pair{s0,s1},std::pair{s1,s0}}) {
                if((end != first && end != last) || !on_segment(a,b,end)) continue;
                bool collinear = orientation(a,b,other) == 0;
                if(!collinear || !detail::collinear_overlap(end,other,a,b)) allowed = true;
            }
            if(!allowed)
                throw error(errc::chord_not_inside,
                    "chord segment " + std::to_string(i) + " meets boundary edge " + std::to_string(e));
        }
    }

    // midpoints, in doubled coordinates so they stay on the lattice
    std::vector<LatticePoint> doubled;
    doubled.reserve(p.size());
    for(const LatticePoint &v : p.vertices()) doubled.push_back(2*v);
    for(std::size_t i = 0; i + 1 < m; ++i) {
        if(locate(doubled,chord[i] + chord[i + 1]) != Location::inside)
            throw error(errc::chord_not_inside,"chord segment " + std::to_string(i) + " runs outside");
    }

    // boundary ring with the chord ends inserted as vertices
    std::vector<LatticePoint> ring;
    for(std::size_t e = 0; e < p.size(); ++e) {
        const LatticePoint a = p[e];
        const LatticePoint b = p.next(e);
        ring.push_back(a);
        std::vector<LatticePoint> inserted;
        for(LatticePoint c : {first,last}) {
            if(c != a && c != b && on_segment(a,b,c)) inserted.push_back(c);
        }
        auto dist = [a](LatticePoint c) { return magnitude(c.x - a.x) + magnitude(c.y - a.y); };
        std::sort(inserted.begin(),inserted.end(),[&](auto l,auto r) { return dist(l) < dist(r); });
        ring.insert(ring.end(),inserted.begin(),inserted.end());
    }
    const std::size_t rn = ring.size();
    const std::size_t i_first = std::find(ring.begin(),ring.end(),first) - ring.begin();
    const std::size_t i_last = std::find(ring.begin(),ring.end(),last) - ring.begin();

    std::vector<LatticePoint> one, two;
    for(std::size_t i = i_first; ; i = (i + 1) % rn) {
        one.push_back(ring[i]);
        if(i == i_last) break;
    }
    for(std::size_t i = m - 2; i >= 1; --i) one.push_back(chord[i]);
    for(std::size_t i = i_last; ; i = (i + 1) % rn) {
        two.push_back(ring[i]);
        if(i == i_first) break;
    }
    for(std::size_t i = 1; i + 1 < m; ++i) two.push_back(chord[i]);

    return {validate(one),validate(two)};
}

inline std::pair<Polygon,Polygon> split_by_chord(const Polygon &p,std::initializer_list<LatticePoint> chord) {
    return split_by_chord(p,std::span<const LatticePoint>(chord.begin(),chord.size()));
}

} // namespace latpick

#endif
