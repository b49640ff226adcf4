#ifndef LATPICK_IO_HPP
#define LATPICK_IO_HPP

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "lattice_core.hpp"
#include "polygon.hpp"

namespace latpick {

namespace detail {

inline integer parse_integer_token(std::string_view tok,std::size_t line) {
    integer v = 0;
    const char *begin = tok.data();
    const char *end = tok.data() + tok.size();
    if(!tok.empty() && tok.front() == '+') ++begin;
    auto [ptr,ec] = std::from_chars(begin,end,v);
    if(ec == std::errc::result_out_of_range)
        throw error(errc::overflow,"line " + std::to_string(line) + ": '" + std::string(tok) + "' does not fit in 64 bits");
    if(ec != std::errc() || ptr != end)
        throw error(errc::parse_error,"line " + std::to_string(line) + ": '" + std::string(tok) + "' is not an integer");
    return v;
}

inline integer json_integer(const nlohmann::json &j) {
    if(j.is_number_integer() && !j.is_number_unsigned()) return j.get<integer>();
    if(j.is_number_unsigned()) {
        auto u = j.get<std::uint64_t>();
        if(u > static_cast<std::uint64_t>(std::numeric_limits<integer>::max()))
            throw error(errc::overflow,std::to_string(u) + " does not fit in 64 bits");
        return static_cast<integer>(u);
    }
    if(j.is_number_float()) {
        double d = j.get<double>();
        if(std::isfinite(d) && std::trunc(d) == d && std::fabs(d) >= 9.2e18)
            throw error(errc::overflow,"coordinate does not fit in 64 bits");
    }
    throw error(errc::parse_error,"coordinate " + j.dump() + " is not an integer");
}

} // namespace detail

/** One vertex per line as two whitespace-separated integers. Text after '#'
is ignored, as are blank lines. */
inline std::vector<LatticePoint> parse_polygon_text(std::string_view text) {
    std::vector<LatticePoint> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while(std::getline(in,line)) {
        ++lineno;
        if(auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> toks;
        for(std::string t; fields >> t;) toks.push_back(t);
        if(toks.empty()) continue;
        if(toks.size() != 2)
            throw error(errc::parse_error,"line " + std::to_string(lineno) + ": expected 2 integers, found "
                + std::to_string(toks.size()) + " fields");
        out.push_back({detail::parse_integer_token(toks[0],lineno),detail::parse_integer_token(toks[1],lineno)});
    }
    if(out.size() < 3)
        throw error(errc::parse_error,"polygon file lists " + std::to_string(out.size()) + " vertices, need at least 3");
    return out;
}

/** A single JSON array of [x, y] integer pairs. */
inline std::vector<LatticePoint> parse_polygon_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch(const nlohmann::json::parse_error &e) {
        throw error(errc::parse_error,e.what());
    }
    if(!doc.is_array()) throw error(errc::parse_error,"top level must be an array of [x, y] pairs");
    std::vector<LatticePoint> out;
    for(const nlohmann::json &pt : doc) {
        if(!pt.is_array() || pt.size() != 2)
            throw error(errc::parse_error,"vertex " + pt.dump() + " is not a two-element array");
        out.push_back({detail::json_integer(pt[0]),detail::json_integer(pt[1])});
    }
    if(out.size() < 3)
        throw error(errc::parse_error,"polygon lists " + std::to_string(out.size()) + " vertices, need at least 3");
    return out;
}

/** Dispatch on the first significant character: '[' selects JSON. Leading
'#' comment lines are allowed in either format. */
inline std::vector<LatticePoint> parse_polygon(std::string_view text) {
    std::size_t i = 0;
    while(i < text.size()) {
        char c = text[i];
        if(c == '#') {
            while(i < text.size() && text[i] != '\n') ++i;
        } else if(std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else {
            break;
        }
    }
    if(i < text.size() && text[i] == '[') return parse_polygon_json(text.substr(i));
    return parse_polygon_text(text);
}

inline std::string read_file(const std::string &path) {
    std::ifstream in(path,std::ios::binary);
    if(!in) throw error(errc::parse_error,"cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Polygon read_polygon_file(const std::string &path) {
    std::vector<LatticePoint> v = parse_polygon(read_file(path));
    return validate(v);
}

inline std::string format_polygon_text(const Polygon &p) {
    std::string out;
    for(const LatticePoint &v : p.vertices()) out += std::to_string(v.x) + " " + std::to_string(v.y) + "\n";
    return out;
}

inline nlohmann::json to_json(LatticePoint v) { return nlohmann::json::array({v.x,v.y}); }

inline nlohmann::json to_json(const Polygon &p) {
    nlohmann::json arr = nlohmann::json::array();
    for(const LatticePoint &v : p.vertices()) arr.push_back(to_json(v));
    return arr;
}

} // namespace latpick

#endif
