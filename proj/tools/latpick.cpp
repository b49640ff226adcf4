// latpick: command-line front end for exact lattice-polygon geometry.
//
// Exit status: 0 success, 1 invalid polygon / domain error / failed check,
// 2 parse error, 3 arithmetic overflow.

#include <cstdlib>
#include <fstream>
#include <optional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <latpick/latpick.hpp>

namespace {

using namespace latpick;
using nlohmann::json;

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<CheckResult> checks;
    std::vector<std::string> text;

    bool passed() const {
        for(const CheckResult &c : checks) {
            if(!c.passed) return false;
        }
        return true;
    }

    void check(std::string name,bool ok,std::string detail) {
        checks.push_back({std::move(name),ok,std::move(detail)});
    }

    json to_json() const {
        json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["results"] = results;
        j["checks"] = json::array();
        for(const CheckResult &c : checks)
            j["checks"].push_back({{"name",c.name},{"pass",c.passed},{"detail",c.detail}});
        j["ok"] = passed();
        return j;
    }
};

std::string point_text(LatticePoint v) {
    return "(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")";
}

std::string rational_text(const rational &r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string decimal_text(const rational &r) {
    std::ostringstream os;
    os.precision(12);
    os << static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
    return os.str();
}

// "1 = 5·173 − 54·16"; negative factors are parenthesized
std::string bezout_text(const BezoutCertificate &c) {
    const std::string minus = "−", dot = "·";
    auto factor = [&](integer v) {
        return v < 0 ? "(" + minus + std::to_string(-v) + ")" : std::to_string(v);
    };
    std::string out = std::to_string(c.g) + " = ";
    out += (c.s < 0 ? minus + std::to_string(-c.s) : std::to_string(c.s)) + dot + factor(c.a);
    out += (c.t < 0 ? " " + minus + " " : " + ") + std::to_string(c.t < 0 ? -c.t : c.t) + dot + factor(c.b);
    return out;
}

struct Loaded {
    Report report;
    Polygon polygon;
};

Loaded load_polygon(const std::string &cmd,const std::string &file) {
    Loaded l{Report{},read_polygon_file(file)};
    l.report.command = cmd;
    l.report.inputs["file"] = file;
    l.report.inputs["vertices"] = latpick::to_json(l.polygon);
    return l;
}

Report cmd_area(const std::string &file,const std::string &method) {
    auto [r,p] = load_polygon("area",file);
    r.inputs["method"] = method;
    std::optional<TwiceArea> pick, shoe;
    if(method == "pick" || method == "both") {
        pick = pick_twice_area(p);
        r.results["pick"] = {{"twice_area",pick->value},{"area",pick->decimal()}};
        r.text.push_back("pick: twice_area " + std::to_string(pick->value) + ", area " + pick->decimal());
    }
    if(method == "shoelace" || method == "both") {
        shoe = shoelace_twice_area(p);
        r.results["shoelace"] = {{"twice_area",shoe->value},{"area",shoe->decimal()}};
        r.text.push_back("shoelace: twice_area " + std::to_string(shoe->value) + ", area " + shoe->decimal());
    }
    if(pick && shoe) {
        r.check("pick-equals-shoelace",*pick == *shoe,
            std::to_string(pick->value) + " vs " + std::to_string(shoe->value));
    }
    return r;
}

Report cmd_counts(const std::string &file) {
    auto [r,p] = load_polygon("counts",file);
    PointCounts c = point_counts(p);
    integer f2 = f_functional_doubled(c);
    r.results = {{"boundary",c.boundary},{"interior",c.interior},{"twice_f",f2}};
    r.text = {"N^b = " + std::to_string(c.boundary),"N^i = " + std::to_string(c.interior),
              "2F = " + std::to_string(f2)};
    return r;
}

Report cmd_triangulate(const std::string &file,const std::string &svg_path) {
    auto [r,p] = load_polygon("triangulate",file);
    std::vector<ElementaryTriangle> tris = triangulate(p);
    TriangulationStats st = stats(tris,p);

    json list = json::array();
    for(const ElementaryTriangle &t : tris) {
        list.push_back({latpick::to_json(t.a),latpick::to_json(t.b),latpick::to_json(t.c)});
        r.text.push_back(point_text(t.a) + " " + point_text(t.b) + " " + point_text(t.c));
    }
    r.results["triangles"] = list;
    r.results["stats"] = {{"triangles",st.n_triangles},{"edges",st.n_edges},{"vertices",st.n_vertices},
                          {"boundary",st.n_boundary},{"interior",st.n_interior}};
    r.text.push_back("triangles " + std::to_string(st.n_triangles) + ", edges " + std::to_string(st.n_edges)
        + ", vertices " + std::to_string(st.n_vertices) + " (N^b " + std::to_string(st.n_boundary)
        + ", N^i " + std::to_string(st.n_interior) + ")");
    r.check("triangulation-stats",true,"E = 2N^b + 3N^i - 3, N(tri) = N^b + 2N^i - 2, V + F - E = 2");

    if(!svg_path.empty()) {
        std::ofstream out(svg_path,std::ios::binary);
        if(!out) throw error(errc::invalid_argument,"cannot write '" + svg_path + "'");
        out << render_svg(p,tris);
        r.results["svg"] = svg_path;
    }
    return r;
}

Report cmd_bezout(integer a,integer b) {
    Report r;
    r.command = "bezout";
    r.inputs = {{"a",a},{"b",b}};
    BezoutCertificate c = extended_gcd(a,b);
    r.results = {{"g",c.g},{"s",c.s},{"t",c.t}};
    r.text.push_back(bezout_text(c));
    wide_integer lhs = wide_integer(c.s)*a + wide_integer(c.t)*b;
    r.check("bezout-identity",lhs == c.g,"s*a + t*b = g");
    return r;
}

Report cmd_partner(integer u1,integer u2) {
    Report r;
    r.command = "partner";
    r.inputs = {{"u",{u1,u2}}};
    LatticeVector w = primitive_partner({u1,u2});
    integer det = cross({u1,u2},w);
    r.results = {{"partner",latpick::to_json(w)},{"determinant",det}};
    r.text.push_back("partner " + point_text(w) + ", det " + (det > 0 ? "+" : "") + std::to_string(det));
    r.check("unit-determinant",det == 1,"det = " + std::to_string(det));
    return r;
}

Report cmd_farey(integer n,bool as_json) {
    Report r;
    r.command = "farey";
    r.inputs = {{"n",n}};
    FareyGenerator gen(n);
    json seq = json::array();
    std::optional<Fraction> prev;
    integer count = 0;
    bool neighbours_ok = true;
    while(auto f = gen.next()) {
        if(prev) neighbours_ok = neighbours_ok && wide_integer(prev->den())*f->num()
                                                  - wide_integer(prev->num())*f->den() == 1;
        if(as_json) seq.push_back(f->str());
        else std::cout << f->str() << '\n';
        prev = f;
        ++count;
    }
    r.results = {{"length",count}};
    if(as_json) r.results["sequence"] = seq;
    r.check("neighbour-determinant",neighbours_ok,"bc - ad = 1 for every adjacent a/b < c/d");
    return r;
}

Report cmd_scale(const std::string &file,integer k_max) {
    auto [r,p] = load_polygon("scale",file);
    r.inputs["k_max"] = k_max;
    ScalingReport sr = scaling_study(p,k_max);
    r.results["twice_area"] = sr.area.value;
    r.results["boundary"] = sr.boundary;
    r.results["rows"] = json::array();
    r.text.push_back("k,interior,ratio,ratio_decimal,deficit");
    bool identity = true;
    for(const ScalingRow &row : sr.rows) {
        r.results["rows"].push_back({{"k",row.k},{"interior",row.interior},{"ratio",rational_text(row.ratio)},
                                     {"ratio_decimal",decimal_text(row.ratio)},
                                     {"deficit",rational_text(row.deficit)}});
        r.text.push_back(std::to_string(row.k) + "," + std::to_string(row.interior) + ","
            + rational_text(row.ratio) + "," + decimal_text(row.ratio) + "," + rational_text(row.deficit));
        identity = identity && row.identity_holds;
    }
    r.check("scaling-identity",identity,"N^i(kP) = k^2 A - k N^b / 2 + 1");
    return r;
}

Report cmd_check(const std::string &file) {
    auto [r,p] = load_polygon("check",file);
    r.checks = run_checks(p);
    PointCounts c = point_counts(p);
    r.results = {{"boundary",c.boundary},{"interior",c.interior},{"twice_area",shoelace_twice_area(p).value}};
    return r;
}

void emit(const Report &r,bool as_json) {
    if(as_json) {
        std::cout << r.to_json().dump(2) << '\n';
        return;
    }
    for(const std::string &line : r.text) std::cout << line << '\n';
    // the Farey listing is one fraction per line and nothing else
    if(r.command == "farey") return;
    for(const CheckResult &c : r.checks)
        std::cout << (c.passed ? "[pass] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
}

int exit_code(errc code) {
    switch(code) {
    case errc::parse_error: return 2;
    case errc::overflow: return 3;
    default: return 1;
    }
}

} // namespace

int main(int argc,char **argv) {
    CLI::App app{"Exact lattice-polygon geometry: Pick's formula and its companions"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format",format,"output format")->check(CLI::IsMember({"text","json"}));

    std::string file, method = "both", svg;
    integer a = 0, b = 0, n = 0, k_max = 0;

    auto *area = app.add_subcommand("area","twice-area and area by Pick's formula and/or the shoelace sum");
    area->add_option("file",file,"polygon file")->required();
    area->add_option("--method",method)->check(CLI::IsMember({"pick","shoelace","both"}));

    auto *counts = app.add_subcommand("counts","boundary and interior lattice-point counts");
    counts->add_option("file",file,"polygon file")->required();

    auto *tri = app.add_subcommand("triangulate","split into elementary triangles");
    tri->add_option("file",file,"polygon file")->required();
    tri->add_option("--svg",svg,"write an SVG drawing to this path");

    auto *bez = app.add_subcommand("bezout","extended Euclid certificate for a and b");
    bez->add_option("a",a)->required();
    bez->add_option("b",b)->required();

    auto *partner = app.add_subcommand("partner","primitive-cell partner of a simple vector");
    partner->add_option("u1",a)->required();
    partner->add_option("u2",b)->required();

    auto *farey = app.add_subcommand("farey","Farey sequence of order n");
    farey->add_option("n",n)->required();

    auto *scale_cmd = app.add_subcommand("scale","interior counts of kP for k = 1..k_max");
    scale_cmd->add_option("file",file,"polygon file")->required();
    scale_cmd->add_option("k_max",k_max)->required();

    auto *check = app.add_subcommand("check","run every cross-validation on one polygon");
    check->add_option("file",file,"polygon file")->required();

    app.fallthrough();
    try {
        app.parse(argc,argv);
    } catch(const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const bool as_json = format == "json";
    try {
        Report r;
        if(*area) r = cmd_area(file,method);
        else if(*counts) r = cmd_counts(file);
        else if(*tri) r = cmd_triangulate(file,svg);
        else if(*bez) r = cmd_bezout(a,b);
        else if(*partner) r = cmd_partner(a,b);
        else if(*farey) r = cmd_farey(n,as_json);
        else if(*scale_cmd) r = cmd_scale(file,k_max);
        else r = cmd_check(file);

        emit(r,as_json);
        if(!r.passed()) {
            for(const CheckResult &c : r.checks) {
                if(!c.passed) std::cerr << "check failed: " << c.name << ": " << c.detail << '\n';
            }
            return 1;
        }
        return 0;
    } catch(const error &e) {
        std::cerr << "latpick: " << e.what() << '\n';
        return exit_code(e.code());
    }
}
