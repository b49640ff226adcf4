#ifndef LATPICK_CROSS_CHECK_HPP
#define LATPICK_CROSS_CHECK_HPP

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "measures.hpp"
#include "polygon.hpp"
#include "triangulation.hpp"

namespace latpick {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

inline constexpr double visibility_tolerance = 1e-9;
inline constexpr integer check_scaling_k_max = 5;

namespace detail {

inline std::string short_double(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

} // namespace detail

/** Lattice points of the closed triangle, counted by scanning its box. */
inline integer closed_triangle_points(const ElementaryTriangle &t) {
    std::array<LatticePoint,3> pts = t.corners();
    BoundingBox box = bounding_box(pts);
    integer n = 0;
    for(integer x = box.lo.x; x <= box.hi.x; ++x) {
        for(integer y = box.lo.y; y <= box.hi.y; ++y) {
            LatticePoint q{x,y};
            if(orientation(t.a,t.b,q) >= 0 && orientation(t.b,t.c,q) >= 0 && orientation(t.c,t.a,q) >= 0) ++n;
        }
    }
    return n;
}

/** Pick's formula on the running union after each reassembly step. Counts
are rebuilt from edge multiplicities rather than taken from the step
bookkeeping: edges used once are boundary edges, their endpoints are the
boundary points and every other placed corner is interior. Returns the index
of the first failing step, or -1. */
inline long first_reassembly_pick_failure(std::span<const ReassemblyStep> steps) {
    std::map<EdgeKey,int> use;
    std::map<LatticePoint,int> boundary_degree;
    std::set<LatticePoint> verts;
    integer twice_area = 0;
    for(std::size_t s = 0; s < steps.size(); ++s) {
        const ElementaryTriangle &t = steps[s].triangle;
        for(const EdgeKey &e : edge_keys(t)) {
            int before = use[e]++;
            int delta = before == 0 ? +1 : -1;  // 0 -> 1 opens a boundary edge, 1 -> 2 closes it
            boundary_degree[e.first] += delta;
            boundary_degree[e.second] += delta;
        }
        verts.insert({t.a,t.b,t.c});
        twice_area += std::abs(t.twice_signed_area());

        integer nb = 0;
        for(const auto &[v,deg] : boundary_degree) nb += deg > 0;
        integer ni = static_cast<integer>(verts.size()) - nb;
        if(nb + 2*ni - 2 != twice_area) return static_cast<long>(s);
    }
    return -1;
}

/** The full cross-validation battery for one polygon. */
inline std::vector<CheckResult> run_checks(const Polygon &p) {
    std::vector<CheckResult> out;
    auto add = [&](std::string name,bool ok,std::string detail) {
        out.push_back({std::move(name),ok,std::move(detail)});
    };

    const PointCounts counts = point_counts(p);
    const TwiceArea pick = pick_twice_area(counts);
    const TwiceArea shoe = shoelace_twice_area(p);
    add("pick-equals-shoelace",pick == shoe,
        "pick " + std::to_string(pick.value) + ", shoelace " + std::to_string(shoe.value));

    {
        Polygon canon = canonical_vertices(p);
        bool ok = shoelace_twice_area(canon) == shoe && point_counts(canon) == counts;
        add("canonical-vertices-preserve-counts",ok,
            std::to_string(p.size()) + " -> " + std::to_string(canon.size()) + " vertices");
    }

    {
        VisibilityReport vis = visibility_measure(p);
        double err = std::fabs(vis.total - pick.value / 2.0);
        add("visibility-total",err <= visibility_tolerance,
            "sum " + detail::short_double(vis.total) + ", |error| " + detail::short_double(err));
        double bsum = boundary_angle_sum(p);
        double berr = std::fabs(bsum - (counts.boundary / 2.0 - 1.0));
        add("boundary-angle-sum",berr <= visibility_tolerance,
            "sum " + detail::short_double(bsum) + ", |error| " + detail::short_double(berr));
    }

    std::vector<ElementaryTriangle> tris = triangulate(p);
    {
        integer bad = 0, area = 0;
        for(const ElementaryTriangle &t : tris) {
            area += std::abs(t.twice_signed_area());
            if(std::abs(t.twice_signed_area()) != 1 || closed_triangle_points(t) != 3) ++bad;
        }
        add("triangles-elementary",bad == 0,
            std::to_string(tris.size()) + " triangles, " + std::to_string(bad) + " not elementary");
        add("triangulation-area",area == shoe.value,"sum of twice-areas " + std::to_string(area));
    }
    try {
        TriangulationStats st = stats(tris,p);
        add("triangulation-stats",true,
            "V=" + std::to_string(st.n_vertices) + " E=" + std::to_string(st.n_edges)
            + " N(tri)=" + std::to_string(st.n_triangles));
    } catch(const error &e) {
        add("triangulation-stats",false,e.what());
    }

    try {
        std::vector<ReassemblyStep> steps = reassembly_order(tris);
        long fail = first_reassembly_pick_failure(steps);
        add("reassembly-pick-every-step",fail < 0,
            fail < 0 ? std::to_string(steps.size()) + " steps" : "fails at step " + std::to_string(fail));
    } catch(const error &e) {
        add("reassembly-pick-every-step",false,e.what());
    }

    {
        ScalingReport sr = scaling_study(p,check_scaling_k_max);
        bool ok = true;
        for(const ScalingRow &r : sr.rows) {
            ok = ok && r.identity_holds
                 && r.deficit == rational(counts.boundary,2*r.k) - rational(1,r.k*r.k);
        }
        add("scaling-identity",ok,"k = 1.." + std::to_string(check_scaling_k_max));
    }
    return out;
}

} // namespace latpick

#endif
