#ifndef SDMAP_SCHEME_HPP
#define SDMAP_SCHEME_HPP

#include <utility>
#include <vector>

#include "sdmap/map.hpp"

namespace sdmap {

// Edge-end placement form of a map: every edge has two ends (slots 0 and 1),
// and each vertex lists its incident ends in counterclockwise order.  Each
// (edge, slot) pair must appear exactly once across all rotations; loops list
// both slots at the same vertex.  Dart ids come out as 2*edge + slot, so
// alpha is always (0 1)(2 3)...
struct RotationScheme {
    int vertex_count = 0;
    int edge_count = 0;
    std::vector<std::vector<std::pair<int, int>>> rotations;

    void add_end(int vertex, int edge, int slot) {
        rotations[vertex].push_back({edge, slot});
    }
};

CombinatorialMap build_from_rotation_scheme(const RotationScheme& scheme,
                                            bool allow_nonspherical = false);

// Built map orbits are indexed by minimal dart, so scheme vertex ids and map
// vertex ids differ in general; vertex_index translates scheme -> map.
struct BuiltScheme {
    CombinatorialMap map;
    std::vector<int> vertex_index;
};

BuiltScheme build_indexed_rotation_scheme(const RotationScheme& scheme,
                                          bool allow_nonspherical = false);

inline Dart scheme_dart(int edge, int slot) { return 2 * edge + slot; }

} // namespace sdmap

#endif
