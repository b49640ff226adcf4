// Acceptance gate: one line per criterion, "PASS" or "FAIL", followed by a
// short measurement. Exits nonzero if any criterion fails. Reference values
// come from the brute-force oracles in oracles.hpp, never from the library.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <latpick/latpick.hpp>

#include "oracles.hpp"
#include "run_command.hpp"

using namespace latpick;

namespace {

// pinned tolerances and sizes
constexpr int random_polygon_count = 500;
constexpr double pick_time_budget_seconds = 10.0;
constexpr int min_chord_splits = 100;
constexpr integer parallelogram_range = 6;
constexpr integer strip_range = 3;
constexpr integer max_strip_copies = 5;
constexpr double visibility_tol = 1e-9;
constexpr integer scaling_k_max = 20;
constexpr integer farey_max_order = 100;
constexpr std::size_t farey_100_length = 3045;
constexpr integer minimal_triangle_range = 30;
constexpr integer minimal_triangle_search = 60;
constexpr std::uint64_t sampler_seed = 20240611;

const std::string fixture_dir = LATPICK_FIXTURES;
const std::string cli = LATPICK_CLI;

const std::vector<std::string> valid_fixtures{
    "unit_square.txt","elementary_triangle.txt","triangle_2.txt","triangle_4.txt","parallelogram.txt",
    "cell_173_16.txt","pair_2_5_1_4.txt","pair_3_2_4_3.txt","pair_3_2_2_1.txt","rectangle_collinear.txt",
    "nonconvex_12.json"};

std::vector<Polygon> load_fixtures() {
    std::vector<Polygon> out;
    for(const std::string &f : valid_fixtures) out.push_back(read_polygon_file(fixture_dir + "/" + f));
    return out;
}

std::vector<std::vector<LatticePoint>> random_rings() {
    oracle::PolygonSampler sampler(sampler_seed);
    std::vector<std::vector<LatticePoint>> out;
    for(int i = 0; i < random_polygon_count; ++i) out.push_back(sampler.next());
    return out;
}

int failures = 0;

void report(int id,const std::string &title,bool ok,const std::string &detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << title << ": " << detail << std::endl;
    if(!ok) ++failures;
}

// Runs a criterion body, turning an unexpected exception into a failure.
void criterion(int id,const std::string &title,const std::function<std::pair<bool,std::string>()> &body) {
    try {
        auto [ok,detail] = body();
        report(id,title,ok,detail);
    } catch(const std::exception &e) {
        report(id,title,false,std::string("exception: ") + e.what());
    }
}

std::vector<Polygon> all_polygons(const std::vector<Polygon> &fixtures,
                                  const std::vector<std::vector<LatticePoint>> &rings) {
    std::vector<Polygon> out(fixtures);
    for(const auto &r : rings) out.push_back(validate(r));
    return out;
}

} // namespace

int main() {
    const std::vector<Polygon> fixtures = load_fixtures();
    const std::vector<std::vector<LatticePoint>> rings = random_rings();
    const std::vector<Polygon> polygons = all_polygons(fixtures,rings);

    criterion(1,"Pick equals shoelace",[&] {
        auto start = std::chrono::steady_clock::now();
        int bad = 0;
        for(const Polygon &p : polygons) bad += pick_twice_area(p) != shoelace_twice_area(p);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::pair{bad == 0 && secs < pick_time_budget_seconds && rings.size() >= 500,
            std::to_string(polygons.size()) + " polygons, " + std::to_string(bad) + " mismatches, "
            + std::to_string(secs) + " s"};
    });

    criterion(2,"Bezout worked example",[&] {
        BezoutCertificate c = extended_gcd(173,16);
        bool ok = c.g == 1 && c.s == 5 && c.t == -54 && 5*173 - 54*16 == 1;
        ok = ok && primitive_partner({173,16}) == LatticeVector{54,5};
        std::vector<LatticeVector> ps = all_partners({173,16},4);
        auto has = [&](LatticeVector v) { return std::find(ps.begin(),ps.end(),v) != ps.end(); };
        ok = ok && has({-54,-5}) && has({119,11});
        for(const LatticeVector &w : ps) ok = ok && std::abs(173*w.y - 16*w.x) == 1;
        return std::pair{ok,"1 = " + std::to_string(c.s) + "*173 + (" + std::to_string(c.t) + ")*16, "
            + std::to_string(ps.size()) + " partners with |det| 1"};
    });

    criterion(3,"Triangulation counts",[&] {
        int bad = 0;
        for(const Polygon &p : polygons) {
            oracle::Counts c = oracle::brute_counts(p.vertices());
            std::vector<ElementaryTriangle> tris = triangulate(p);
            bool ok = static_cast<integer>(tris.size()) == c.boundary + 2*c.interior - 2;
            std::set<std::pair<LatticePoint,LatticePoint>> edges;
            std::set<LatticePoint> verts;
            for(const ElementaryTriangle &t : tris) {
                ok = ok && std::abs(oracle::orient(t.a,t.b,t.c)) == 1
                     && oracle::closed_triangle_points(t.a,t.b,t.c) == 3;
                for(auto [u,v] : {std::pair{t.a,t.b},{t.b,t.c},{t.c,t.a}}) edges.insert({std::min(u,v),std::max(u,v)});
                verts.insert({t.a,t.b,t.c});
            }
            const integer e = static_cast<integer>(edges.size());
            const integer v = static_cast<integer>(verts.size());
            const integer f = static_cast<integer>(tris.size()) + 1;
            ok = ok && e == 2*c.boundary + 3*c.interior - 3 && v == c.boundary + c.interior && v + f - e == 2;
            bad += !ok;
        }
        return std::pair{bad == 0,std::to_string(polygons.size()) + " polygons, " + std::to_string(bad) + " failures"};
    });

    criterion(4,"Chord additivity",[&] {
        int splits = 0, bad = 0;
        std::mt19937_64 rng(sampler_seed + 4);
        auto choose = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0,n - 1)(rng); };
        for(const Polygon &p : polygons) {
            std::vector<LatticePoint> bnd = boundary_points(p);
            std::vector<LatticePoint> in = interior_points(p);
            for(int attempt = 0; attempt < 3; ++attempt) {
                std::vector<LatticePoint> chord{bnd[choose(bnd.size())]};
                if(!in.empty() && choose(2)) chord.push_back(in[choose(in.size())]);
                chord.push_back(bnd[choose(bnd.size())]);
                std::pair<Polygon,Polygon> parts = [&]() -> std::pair<Polygon,Polygon> {
                    try {
                        return split_by_chord(p,chord);
                    } catch(const error &) {
                        return {p,p};
                    }
                }();
                if(parts.first == p) continue;
                ++splits;
                auto f2 = [](const Polygon &q) {
                    oracle::Counts c = oracle::brute_counts(q.vertices());
                    return c.boundary + 2*c.interior - 2;
                };
                bad += f2(parts.first) + f2(parts.second) != f2(p);
            }
        }
        return std::pair{bad == 0 && splits >= min_chord_splits,
            std::to_string(splits) + " splits, " + std::to_string(bad) + " non-additive"};
    });

    criterion(5,"Parallelogram and strip identities",[&] {
        int tested = 0, bad = 0;
        for(integer ux = -parallelogram_range; ux <= parallelogram_range; ++ux)
        for(integer uy = -parallelogram_range; uy <= parallelogram_range; ++uy)
        for(integer vx = -parallelogram_range; vx <= parallelogram_range; ++vx)
        for(integer vy = -parallelogram_range; vy <= parallelogram_range; ++vy) {
            if(oracle::gcd(ux,uy) != 1 || oracle::gcd(vx,vy) != 1 || ux*vy - uy*vx == 0) continue;
            std::vector<LatticePoint> ring{{0,0},{ux,uy},{ux + vx,uy + vy},{vx,vy}};
            Polygon p = validate(ring);
            oracle::Counts c = oracle::brute_counts(ring);
            bool ok = c.boundary == 4 && boundary_count(p) == 4
                      && shoelace_twice_area(p).value == 2*(c.interior + 1) && interior_count(p) == c.interior;
            bad += !ok;
            ++tested;
        }
        int strips = 0;
        for(integer ux = -strip_range; ux <= strip_range; ++ux)
        for(integer uy = -strip_range; uy <= strip_range; ++uy)
        for(integer vx = -strip_range; vx <= strip_range; ++vx)
        for(integer vy = -strip_range; vy <= strip_range; ++vy) {
            if(oracle::gcd(ux,uy) != 1 || oracle::gcd(vx,vy) != 1 || ux*vy - uy*vx == 0) continue;
            LatticeVector u{ux,uy}, v{vx,vy};
            for(integer k = 1; k <= max_strip_copies; ++k) {
                std::vector<LatticePoint> ring{{0,0},u};
                for(integer j = 1; j <= k; ++j) ring.push_back(u + j*v);
                for(integer j = k; j >= 1; --j) ring.push_back(j*v);
                Polygon p = validate(ring);
                integer twice = shoelace_twice_area(p).value;
                bad += twice != 2*(oracle::brute_counts(ring).interior + k);
                ++strips;
            }
        }
        return std::pair{bad == 0,std::to_string(tested) + " parallelograms, " + std::to_string(strips)
            + " strips, " + std::to_string(bad) + " failures"};
    });

    criterion(6,"Visibility measure",[&] {
        double worst = 0.0, worst_b = 0.0;
        for(const Polygon &p : polygons) {
            oracle::Counts c = oracle::brute_counts(p.vertices());
            double area = (c.boundary + 2.0*c.interior - 2.0) / 2.0;
            worst = std::max(worst,std::fabs(visibility_measure(p).total - area));
            worst_b = std::max(worst_b,std::fabs(boundary_angle_sum(p) - (c.boundary / 2.0 - 1.0)));
        }
        std::ostringstream os;
        os << "max |sum - A| " << worst << ", max |boundary sum - (N^b/2 - 1)| " << worst_b;
        return std::pair{worst <= visibility_tol && worst_b <= visibility_tol,os.str()};
    });

    criterion(7,"Scaling identity",[&] {
        int bad = 0, rows = 0;
        for(const Polygon &p : fixtures) {
            ScalingReport r = scaling_study(p,scaling_k_max);
            oracle::Counts c = oracle::brute_counts(p.vertices());
            const integer twice_a = shoelace_twice_area(p).value;
            for(const ScalingRow &row : r.rows) {
                const integer k = row.k;
                // 2 N^i(kP) = k^2 (2A) - k N^b + 2
                bool ok = 2*row.interior == k*k*twice_a - k*c.boundary + 2;
                ok = ok && row.ratio == rational(row.interior,k*k);
                ok = ok && row.deficit == rational(c.boundary,2*k) - rational(1,k*k);
                if(k <= 6) {
                    std::vector<LatticePoint> scaled;
                    for(LatticePoint v : p.vertices()) scaled.push_back({k*v.x,k*v.y});
                    ok = ok && oracle::brute_counts(scaled).interior == row.interior;
                }
                bad += !ok;
                ++rows;
            }
        }
        return std::pair{bad == 0,std::to_string(rows) + " rows (k = 1.." + std::to_string(scaling_k_max) + "), "
            + std::to_string(bad) + " failures"};
    });

    criterion(8,"Farey sequences",[&] {
        int bad = 0;
        for(integer n = 1; n <= farey_max_order; ++n) {
            std::vector<Fraction> seq = farey_sequence(n);
            auto ref = oracle::farey_enumerate(n);
            bool ok = seq.size() == ref.size();
            for(std::size_t i = 0; ok && i < seq.size(); ++i)
                ok = seq[i].num() == ref[i].first && seq[i].den() == ref[i].second;
            for(std::size_t i = 0; ok && i + 1 < seq.size(); ++i)
                ok = seq[i].den()*seq[i + 1].num() - seq[i].num()*seq[i + 1].den() == 1;
            bad += !ok;
        }
        auto phi = oracle::totient_sieve(farey_max_order);
        std::size_t expected = 1;
        for(integer q = 1; q <= farey_max_order; ++q) expected += static_cast<std::size_t>(phi[q]);
        std::size_t got = farey_sequence(farey_max_order).size();
        return std::pair{bad == 0 && got == farey_100_length && expected == farey_100_length,
            "n = 1.." + std::to_string(farey_max_order) + ", " + std::to_string(bad) + " mismatches, |F_100| = "
            + std::to_string(got) + " (totient " + std::to_string(expected) + ")"};
    });

    criterion(9,"Minimal triangle",[&] {
        int tested = 0, bad = 0;
        for(integer a = -minimal_triangle_range; a <= minimal_triangle_range; ++a) {
            for(integer b = -minimal_triangle_range; b <= minimal_triangle_range; ++b) {
                if(a == 0 && b == 0) continue;
                MinimalTriangle m = minimal_triangle(a,b);
                const integer g = oracle::gcd(a,b);
                bool ok = m.twice_area == g
                          && oracle::exhaustive_min_determinant(a,b,minimal_triangle_search) == g
                          && std::abs(oracle::orient({0,0},{a,b},m.apex)) == g
                          && oracle::brute_counts({{0,0},{a,b},m.apex}).interior == 0;
                bad += !ok;
                ++tested;
            }
        }
        return std::pair{bad == 0,std::to_string(tested) + " vectors, " + std::to_string(bad) + " failures"};
    });

    criterion(10,"Reassembly keeps Pick at every step",[&] {
        int checks = 0, bad = 0;
        for(const Polygon &p : fixtures) {
            std::vector<ReassemblyStep> steps = reassembly_order(triangulate(p));
            // recount the running union from scratch: edges used once form its boundary
            std::map<std::pair<LatticePoint,LatticePoint>,int> use;
            std::set<LatticePoint> verts;
            integer twice_area = 0;
            for(const ReassemblyStep &s : steps) {
                const ElementaryTriangle &t = s.triangle;
                for(auto [u,v] : {std::pair{t.a,t.b},{t.b,t.c},{t.c,t.a}}) ++use[{std::min(u,v),std::max(u,v)}];
                verts.insert({t.a,t.b,t.c});
                twice_area += std::abs(oracle::orient(t.a,t.b,t.c));
                std::map<LatticePoint,int> degree;
                integer boundary_edges = 0;
                for(const auto &[e,n] : use) {
                    if(n != 1) continue;
                    ++degree[e.first];
                    ++degree[e.second];
                    ++boundary_edges;
                }
                bool disk = true;
                for(const auto &[v,d] : degree) disk = disk && d == 2;
                const integer nb = static_cast<integer>(degree.size());
                const integer ni = static_cast<integer>(verts.size()) - nb;
                bad += !(disk && boundary_edges == nb && nb + 2*ni - 2 == twice_area);
                ++checks;
            }
        }
        return std::pair{bad == 0,std::to_string(fixtures.size()) + " fixtures, " + std::to_string(checks)
            + " step checks, " + std::to_string(bad) + " failures"};
    });

    criterion(11,"CLI contract",[&] {
        int bad = 0;
        std::string detail;
        for(const std::string &f : valid_fixtures) {
            int rc = run_command(cli + " check " + fixture_dir + "/" + f).status;
            if(rc != 0) {
                ++bad;
                detail += " " + f + "->" + std::to_string(rc);
            }
        }
        const std::vector<std::pair<std::string,int>> invalid{{"bowtie.txt",1},{"non_integer.txt",2},{"overflow.txt",3}};
        for(const auto &[f,want] : invalid) {
            int rc = run_command(cli + " check " + fixture_dir + "/" + f).status;
            if(rc != want) {
                ++bad;
                detail += " " + f + "->" + std::to_string(rc);
            }
        }
        auto svg = std::filesystem::temp_directory_path() / "latpick_acceptance_unit_square.svg";
        run_command(cli + " triangulate " + fixture_dir + "/unit_square.txt --svg " + svg.string());
        bool svg_ok = slurp(svg.string()) == slurp(fixture_dir + "/unit_square.svg");
        std::filesystem::remove(svg);
        if(!svg_ok) {
            ++bad;
            detail += " svg differs";
        }
        return std::pair{bad == 0,std::to_string(valid_fixtures.size()) + " fixtures exit 0, invalid inputs exit 1/2/3, "
            + "svg " + (svg_ok ? "byte-identical" : "differs") + detail};
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
