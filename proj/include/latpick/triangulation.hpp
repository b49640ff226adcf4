#ifndef LATPICK_TRIANGULATION_HPP
#define LATPICK_TRIANGULATION_HPP

#include <array>
#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arithmetic.hpp"
#include "error.hpp"
#include "lattice_core.hpp"
#include "polygon.hpp"

namespace latpick {

/** Counterclockwise lattice triangle. Triangles produced by triangulate()
have twice-area 1 and no lattice points besides their corners. */
struct ElementaryTriangle {
    LatticePoint a;
    LatticePoint b;
    LatticePoint c;

    std::array<LatticePoint,3> corners() const { return {a,b,c}; }
    integer twice_signed_area() const { return cross(b - a,c - a); }

    friend constexpr bool operator==(const ElementaryTriangle&,const ElementaryTriangle&) = default;
};

struct TriangulationStats {
    integer n_triangles = 0;
    integer n_edges = 0;
    integer n_vertices = 0;
    integer n_boundary = 0;
    integer n_interior = 0;
};

/** Undirected edge, endpoints sorted. */
using EdgeKey = std::pair<LatticePoint,LatticePoint>;

inline EdgeKey edge_key(LatticePoint p,LatticePoint q) {
    return p < q ? EdgeKey{p,q} : EdgeKey{q,p};
}

inline std::array<EdgeKey,3> edge_keys(const ElementaryTriangle &t) {
    return {edge_key(t.a,t.b),edge_key(t.b,t.c),edge_key(t.c,t.a)};
}

/** How many triangles use each undirected edge. */
inline std::map<EdgeKey,int> edge_usage(std::span<const ElementaryTriangle> tris) {
    std::map<EdgeKey,int> use;
    for(const ElementaryTriangle &t : tris) {
        for(const EdgeKey &e : edge_keys(t)) ++use[e];
    }
    return use;
}

namespace detail {

inline bool in_closed_triangle(LatticePoint a,LatticePoint b,LatticePoint c,LatticePoint q) {
    return orientation(a,b,q) >= 0 && orientation(b,c,q) >= 0 && orientation(c,a,q) >= 0;
}

// Lexicographically smallest lattice point of the closed CCW triangle that is
// not a corner.
inline std::optional<LatticePoint> first_extra_point(const ElementaryTriangle &t) {
    std::array<LatticePoint,3> pts = t.corners();
    BoundingBox box = bounding_box(pts);
    for(integer x = box.lo.x; x <= box.hi.x; ++x) {
        for(integer y = box.lo.y; y <= box.hi.y; ++y) {
            LatticePoint q{x,y};
            if(q == t.a || q == t.b || q == t.c) continue;
            if(in_closed_triangle(t.a,t.b,t.c,q)) return q;
        }
    }
    return std::nullopt;
}

// Split until every piece is elementary. Twice-area strictly decreases at
// each split, and a lattice triangle with twice-area above 1 always holds an
// extra lattice point, so this ends with twice-area 1 everywhere.
inline void refine(const ElementaryTriangle &root,std::vector<ElementaryTriangle> &out) {
    std::vector<ElementaryTriangle> stack{root};
    while(!stack.empty()) {
        ElementaryTriangle t = stack.back();
        stack.pop_back();
        std::optional<LatticePoint> q = first_extra_point(t);
        if(!q) {
            out.push_back(t);
            continue;
        }
        std::vector<ElementaryTriangle> parts;
        if(on_segment(t.a,t.b,*q)) {
            parts = {{t.a,*q,t.c},{*q,t.b,t.c}};
        } else if(on_segment(t.b,t.c,*q)) {
            parts = {{t.a,t.b,*q},{t.a,*q,t.c}};
        } else if(on_segment(t.c,t.a,*q)) {
            parts = {{t.a,t.b,*q},{*q,t.b,t.c}};
        } else {
            parts = {{t.a,t.b,*q},{t.b,t.c,*q},{t.c,t.a,*q}};
        }
        // reversed so the first part is emitted first
        for(auto it = parts.rbegin(); it != parts.rend(); ++it) stack.push_back(*it);
    }
}

} // namespace detail

/** Ear-clip p into lattice triangles (ears taken in stored vertex order),
then split each through its lexicographically smallest extra lattice point
until all are elementary. The result has N^b + 2N^i - 2 triangles. */
inline std::vector<ElementaryTriangle> triangulate(const Polygon &p) {
    std::vector<LatticePoint> ring = p.vertices();
    std::vector<ElementaryTriangle> coarse;
    while(ring.size() > 3) {
        const std::size_t n = ring.size();
        bool clipped = false;
        for(std::size_t i = 0; i < n && !clipped; ++i) {
            const LatticePoint prev = ring[(i + n - 1) % n];
            const LatticePoint cur = ring[i];
            const LatticePoint next = ring[(i + 1) % n];
            if(orientation(prev,cur,next) <= 0) continue;
            bool blocked = false;
            for(std::size_t j = 0; j < n && !blocked; ++j) {
                if(j == i || j == (i + 1) % n || j == (i + n - 1) % n) continue;
                blocked = detail::in_closed_triangle(prev,cur,next,ring[j]);
            }
            if(blocked) continue;
            coarse.push_back({prev,cur,next});
            ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
            clipped = true;
        }
        if(!clipped) throw error(errc::inconsistent_triangulation,"no ear found; polygon is not simple");
    }
    coarse.push_back({ring[0],ring[1],ring[2]});

    std::vector<ElementaryTriangle> out;
    for(const ElementaryTriangle &t : coarse) detail::refine(t,out);
    return out;
}

/** Combinatorial counts of a triangulation, cross-checked against the
edge-count, triangle-count and Euler relations. */
inline TriangulationStats stats(std::span<const ElementaryTriangle> tris,const Polygon &p) {
    std::set<LatticePoint> verts;
    for(const ElementaryTriangle &t : tris) {
        if(t.twice_signed_area() != 1)
            throw error(errc::inconsistent_triangulation,"triangle is not elementary and counterclockwise");
        verts.insert({t.a,t.b,t.c});
    }
    TriangulationStats s;
    s.n_triangles = static_cast<integer>(tris.size());
    s.n_edges = static_cast<integer>(edge_usage(tris).size());
    s.n_vertices = static_cast<integer>(verts.size());
    s.n_boundary = boundary_count(p);
    s.n_interior = interior_count(p);

    auto fail = [](const std::string &what) { throw error(errc::inconsistent_triangulation,what); };
    if(s.n_vertices != s.n_boundary + s.n_interior)
        fail("vertex count " + std::to_string(s.n_vertices) + " != N^b + N^i");
    if(s.n_edges != 2*s.n_boundary + 3*s.n_interior - 3)
        fail("edge count " + std::to_string(s.n_edges) + " != 2N^b + 3N^i - 3");
    if(s.n_triangles != s.n_boundary + 2*s.n_interior - 2)
        fail("triangle count " + std::to_string(s.n_triangles) + " != N^b + 2N^i - 2");
    if(s.n_vertices + (s.n_triangles + 1) - s.n_edges != 2)
        fail("Euler characteristic is not 2");
    return s;
}

enum class StepKind {
    seed,
    /// one new boundary point, interior unchanged
    adds_boundary_point,
    /// fills a wedge between two placed triangles; a boundary point becomes interior
    wedge_fill
};

constexpr std::string_view to_string(StepKind k) noexcept {
    switch(k) {
    case StepKind::seed: return "seed";
    case StepKind::adds_boundary_point: return "adds-boundary-point";
    case StepKind::wedge_fill: return "wedge-fill";
    }
    return "unknown";
}

/** One triangle placed during reassembly, with the counts of the running
union after placing it. */
struct ReassemblyStep {
    ElementaryTriangle triangle;
    StepKind kind = StepKind::seed;
    integer boundary = 0;
    integer interior = 0;
    integer twice_area = 0;
};

/** Order the triangles so that the running union stays a topological disk:
start from the first triangle and visit the edge-adjacency graph breadth
first, deferring any triangle whose addition would pinch the union (a single
shared edge with the opposite corner already placed). */
inline std::vector<ReassemblyStep> reassembly_order(std::span<const ElementaryTriangle> tris) {
    std::vector<ReassemblyStep> steps;
    if(tris.empty()) return steps;

    std::map<EdgeKey,std::vector<std::size_t>> by_edge;
    for(std::size_t i = 0; i < tris.size(); ++i) {
        for(const EdgeKey &e : edge_keys(tris[i])) by_edge[e].push_back(i);
    }

    std::vector<bool> placed(tris.size(),false), queued(tris.size(),false);
    std::set<EdgeKey> union_edges;
    std::set<LatticePoint> union_verts;
    std::deque<std::size_t> frontier;

    auto place = [&](std::size_t i,StepKind kind) {
        placed[i] = true;
        const ElementaryTriangle &t = tris[i];
        for(const EdgeKey &e : edge_keys(t)) {
            union_edges.insert(e);
            for(std::size_t j : by_edge[e]) {
                if(!queued[j]) {
                    queued[j] = true;
                    frontier.push_back(j);
                }
            }
        }
        union_verts.insert({t.a,t.b,t.c});

        ReassemblyStep step{t,kind,3,0,1};
        if(!steps.empty()) {
            const ReassemblyStep &prev = steps.back();
            step.boundary = prev.boundary + (kind == StepKind::adds_boundary_point ? 1 : -1);
            step.interior = prev.interior + (kind == StepKind::wedge_fill ? 1 : 0);
            step.twice_area = prev.twice_area + 1;
        }
        steps.push_back(step);
    };

    queued[0] = true;
    place(0,StepKind::seed);

    std::size_t stalled = 0;
    while(!frontier.empty()) {
        std::size_t i = frontier.front();
        frontier.pop_front();
        if(placed[i]) continue;

        const ElementaryTriangle &t = tris[i];
        std::array<EdgeKey,3> keys = edge_keys(t);
        int shared = 0;
        std::size_t shared_idx = 0;
        for(std::size_t k = 0; k < 3; ++k) {
            if(union_edges.count(keys[k])) {
                ++shared;
                shared_idx = k;
            }
        }
        std::optional<StepKind> kind;
        if(shared == 2) {
            kind = StepKind::wedge_fill;
        } else if(shared == 1) {
            // edge k joins corners k and k+1; the opposite corner is k+2
            LatticePoint opposite = t.corners()[(shared_idx + 2) % 3];
            if(!union_verts.count(opposite)) kind = StepKind::adds_boundary_point;
        }

        if(kind) {
            place(i,*kind);
            stalled = 0;
        } else {
            frontier.push_back(i);
            if(++stalled > frontier.size())
                throw error(errc::disconnected,"no triangle can extend the union without pinching it");
        }
    }
    if(steps.size() != tris.size())
        throw error(errc::disconnected,"triangles do not form one edge-connected region");
    return steps;
}

} // namespace latpick

#endif
