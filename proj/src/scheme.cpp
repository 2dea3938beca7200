#include "sdmap/scheme.hpp"

#include <string>

#include "sdmap/error.hpp"

namespace sdmap {

CombinatorialMap build_from_rotation_scheme(const RotationScheme& scheme,
                                            bool allow_nonspherical) {
    if (scheme.vertex_count <= 0 || scheme.edge_count <= 0)
        fail(Errc::ValidationError, "rotation scheme needs at least one vertex and one edge");
    if (static_cast<int>(scheme.rotations.size()) != scheme.vertex_count)
        fail(Errc::ValidationError, "rotation scheme has wrong number of vertex rotations");

    const int darts = 2 * scheme.edge_count;
    Perm alpha(darts), sigma(darts, -1);
    for (int e = 0; e < scheme.edge_count; ++e) {
        alpha[2 * e] = 2 * e + 1;
        alpha[2 * e + 1] = 2 * e;
    }

    std::vector<char> placed(darts, 0);
    for (int v = 0; v < scheme.vertex_count; ++v) {
        const auto& ends = scheme.rotations[v];
        if (ends.empty())
            fail(Errc::ValidationError, "vertex " + std::to_string(v) + " has empty rotation");
        const int degree = static_cast<int>(ends.size());
        for (int k = 0; k < degree; ++k) {
            const auto [edge, slot] = ends[k];
            if (edge < 0 || edge >= scheme.edge_count || slot < 0 || slot > 1)
                fail(Errc::ValidationError, "rotation scheme references an invalid edge end");
            const Dart dart = scheme_dart(edge, slot);
            if (placed[dart])
                fail(Errc::ValidationError,
                     "edge end (" + std::to_string(edge) + "," + std::to_string(slot) +
                         ") placed twice");
            placed[dart] = 1;
            const auto [next_edge, next_slot] = ends[(k + 1) % degree];
            sigma[dart] = scheme_dart(next_edge, next_slot);
        }
    }
    for (int d = 0; d < darts; ++d)
        if (!placed[d])
            fail(Errc::ValidationError, "edge end " + std::to_string(d) + " was never placed");

    return CombinatorialMap::build(std::move(alpha), std::move(sigma), allow_nonspherical);
}

BuiltScheme build_indexed_rotation_scheme(const RotationScheme& scheme,
                                          bool allow_nonspherical) {
    BuiltScheme built;
    built.map = build_from_rotation_scheme(scheme, allow_nonspherical);
    built.vertex_index.resize(scheme.vertex_count);
    for (int v = 0; v < scheme.vertex_count; ++v) {
        const auto [edge, slot] = scheme.rotations[v].front();
        built.vertex_index[v] = built.map.vertex_of(scheme_dart(edge, slot));
    }
    return built;
}

} // namespace sdmap
