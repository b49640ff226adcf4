#ifndef LATPICK_ERROR_HPP
#define LATPICK_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace latpick {

enum class errc {
    both_zero,
    zero_vector,
    not_simple,
    collinear,
    overflow,
    too_few_vertices,
    repeated_vertex,
    degenerate_edge,
    self_intersection,
    chord_not_inside,
    chord_endpoints_not_on_boundary,
    chord_self_intersects,
    inconsistent_triangulation,
    disconnected,
    too_large,
    not_ordered,
    not_neighbors,
    parse_error,
    invalid_argument
};

constexpr std::string_view to_string(errc c) noexcept {
    switch(c) {
    case errc::both_zero: return "BothZero";
    case errc::zero_vector: return "ZeroVector";
    case errc::not_simple: return "NotSimple";
    case errc::collinear: return "Collinear";
    case errc::overflow: return "Overflow";
    case errc::too_few_vertices: return "TooFewVertices";
    case errc::repeated_vertex: return "RepeatedVertex";
    case errc::degenerate_edge: return "DegenerateEdge";
    case errc::self_intersection: return "SelfIntersection";
    case errc::chord_not_inside: return "ChordNotInside";
    case errc::chord_endpoints_not_on_boundary: return "ChordEndpointsNotOnBoundary";
    case errc::chord_self_intersects: return "ChordSelfIntersects";
    case errc::inconsistent_triangulation: return "InconsistentTriangulation";
    case errc::disconnected: return "Disconnected";
    case errc::too_large: return "TooLarge";
    case errc::not_ordered: return "NotOrdered";
    case errc::not_neighbors: return "NotNeighbors";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

/** Every failure raised by the library carries one of the errc kinds. */
class error : public std::runtime_error {
public:
    error(errc code,const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/** Raised by polygon validation; names the two offending edges. Edge i runs
from vertex i to vertex (i+1) mod n of the list as given. */
class self_intersection_error : public error {
public:
    self_intersection_error(std::size_t first,std::size_t second)
        : error(errc::self_intersection,
                "edges " + std::to_string(first) + " and " + std::to_string(second) + " intersect"),
          first_(first), second_(second) {}

    std::size_t first_edge() const noexcept { return first_; }
    std::size_t second_edge() const noexcept { return second_; }

private:
    std::size_t first_;
    std::size_t second_;
};

} // namespace latpick

#endif
