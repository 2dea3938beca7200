#include "sdmap/derived.hpp"

#include <string>

#include "sdmap/error.hpp"
#include "sdmap/scheme.hpp"

namespace sdmap {

namespace {

[[noreturn]] void internal_error(const std::string& what) {
    fail(Errc::ValidationError, "internal derivation check failed: " + what);
}

// phi^-1 order starting from the orbit's minimal dart.
std::vector<Dart> reversed_face_orbit(const CombinatorialMap& m, int f) {
    const auto& orbit = m.face_darts(f);
    std::vector<Dart> out;
    out.reserve(orbit.size());
    out.push_back(orbit.front());
    for (int k = static_cast<int>(orbit.size()) - 1; k >= 1; --k) out.push_back(orbit[k]);
    return out;
}

} // namespace

int DerivedMap::derived_vertex(ElementKind elem_kind, int index) const {
    const int V = source.vertex_count();
    const int E = source.edge_count();
    int slot = -1;
    switch (kind) {
        case DerivedKind::Dual:
            if (elem_kind == ElementKind::Face) slot = index;
            break;
        case DerivedKind::Medial:
            if (elem_kind == ElementKind::Edge) slot = index;
            break;
        case DerivedKind::Incidence:
            if (elem_kind == ElementKind::Vertex) slot = index;
            if (elem_kind == ElementKind::Face) slot = V + index;
            break;
        case DerivedKind::Square:
            if (elem_kind == ElementKind::Vertex) slot = index;
            if (elem_kind == ElementKind::Edge) slot = V + index;
            if (elem_kind == ElementKind::Face) slot = V + E + index;
            break;
    }
    if (slot < 0 || slot >= static_cast<int>(vertex_table.size()))
        fail(Errc::BadParameter, "element kind has no vertex in this derived map");
    return vertex_table[slot];
}

DerivedMap dual(const CombinatorialMap& m) {
    DerivedMap result;
    result.kind = DerivedKind::Dual;
    result.source = m;
    result.map = CombinatorialMap::build(m.alpha(), m.phi(), m.euler_characteristic() != 2);

    // Dual vertex orbits are the face orbits of m dart for dart, and both
    // sides index orbits by minimal dart, so the indices agree; recompute
    // through darts anyway.
    result.vertex_origin.resize(result.map.vertex_count());
    result.vertex_table.assign(m.face_count(), -1);
    for (int i = 0; i < result.map.vertex_count(); ++i) {
        const Dart d = result.map.vertex_darts(i).front();
        const int f = m.face_of(d);
        result.vertex_origin[i] = m.face_ref(f);
        result.vertex_table[f] = i;
    }
    result.face_origin.resize(result.map.face_count());
    for (int j = 0; j < result.map.face_count(); ++j) {
        const Dart d = result.map.face_darts(j).front();
        result.face_origin[j] = m.vertex_ref(m.vertex_of(d));
    }
    return result;
}

DerivedMap medial(const CombinatorialMap& m) {
    const int E = m.edge_count();
    RotationScheme scheme;
    scheme.vertex_count = E;
    scheme.edge_count = m.dart_count();
    scheme.rotations.resize(E);
    for (int e = 0; e < E; ++e) {
        const Dart d = m.edge_darts(e).front();
        const Dart ad = m.alpha(d);
        scheme.add_end(e, d, 0);
        scheme.add_end(e, m.phi(d), 1);
        scheme.add_end(e, ad, 0);
        scheme.add_end(e, m.sigma(d), 1);
    }

    DerivedMap result;
    result.kind = DerivedKind::Medial;
    result.source = m;
    BuiltScheme built = build_indexed_rotation_scheme(scheme, m.euler_characteristic() != 2);
    result.map = std::move(built.map);
    result.vertex_table = std::move(built.vertex_index);

    result.vertex_origin.resize(E);
    for (int e = 0; e < E; ++e) result.vertex_origin[result.vertex_table[e]] = m.edge_ref(e);

    // Faces alternate by dart parity: the orbit of dart 2c walks the corner
    // diagonals around vertex(c); the orbit of 2c+1 walks around face(c).
    result.face_origin.resize(result.map.face_count());
    for (int j = 0; j < result.map.face_count(); ++j) {
        const auto& orbit = result.map.face_darts(j);
        const Dart first = orbit.front();
        const ElementRef origin = (first % 2 == 0)
                                      ? m.vertex_ref(m.vertex_of(first / 2))
                                      : m.face_ref(m.face_of(first / 2));
        for (Dart x : orbit) {
            const ElementRef check = (x % 2 == 0) ? m.vertex_ref(m.vertex_of(x / 2))
                                                  : m.face_ref(m.face_of(x / 2));
            if (!(check == origin)) internal_error("medial face provenance is inconsistent");
        }
        result.face_origin[j] = origin;
    }
    return result;
}

DerivedMap incidence(const CombinatorialMap& m) {
    const int V = m.vertex_count();
    const int F = m.face_count();
    RotationScheme scheme;
    scheme.vertex_count = V + F;
    scheme.edge_count = m.dart_count();
    scheme.rotations.resize(V + F);
    for (int v = 0; v < V; ++v)
        for (Dart d : m.vertex_darts(v)) scheme.add_end(v, d, 0);
    for (int f = 0; f < F; ++f)
        for (Dart d : reversed_face_orbit(m, f)) scheme.add_end(V + f, d, 1);

    DerivedMap result;
    result.kind = DerivedKind::Incidence;
    result.source = m;
    BuiltScheme built = build_indexed_rotation_scheme(scheme, m.euler_characteristic() != 2);
    result.map = std::move(built.map);
    result.vertex_table = std::move(built.vertex_index);

    result.vertex_origin.resize(V + F);
    for (int v = 0; v < V; ++v) result.vertex_origin[result.vertex_table[v]] = m.vertex_ref(v);
    for (int f = 0; f < F; ++f) result.vertex_origin[result.vertex_table[V + f]] = m.face_ref(f);

    // The quadrilateral around source edge e is bounded by the four corners
    // adjacent to e; the orbit of dart 2d identifies e = edge(sigma^-1(d)).
    result.face_origin.resize(result.map.face_count());
    for (int j = 0; j < result.map.face_count(); ++j) {
        const auto& orbit = result.map.face_darts(j);
        const Dart first = orbit.front();
        const int e = (first % 2 == 0) ? m.edge_of(m.sigma_inv(first / 2))
                                       : m.edge_of(first / 2);
        for (Dart x : orbit) {
            const int check = (x % 2 == 0) ? m.edge_of(m.sigma_inv(x / 2)) : m.edge_of(x / 2);
            if (check != e) internal_error("incidence face provenance is inconsistent");
        }
        result.face_origin[j] = m.edge_ref(e);
    }
    return result;
}

DerivedMap square(const CombinatorialMap& m) {
    const int V = m.vertex_count();
    const int E = m.edge_count();
    const int F = m.face_count();
    const int D = m.dart_count(); // = 2E

    RotationScheme scheme;
    scheme.vertex_count = V + E + F;
    scheme.edge_count = 2 * D; // vertex halves [0, D), face halves [D, 2D)
    scheme.rotations.resize(V + E + F);
    for (int v = 0; v < V; ++v)
        for (Dart d : m.vertex_darts(v)) scheme.add_end(v, d, 0);
    for (int e = 0; e < E; ++e) {
        const Dart d = m.edge_darts(e).front();
        const Dart ad = m.alpha(d);
        scheme.add_end(V + e, d, 1);
        scheme.add_end(V + e, D + d, 1);
        scheme.add_end(V + e, ad, 1);
        scheme.add_end(V + e, D + ad, 1);
    }
    for (int f = 0; f < F; ++f)
        for (Dart d : reversed_face_orbit(m, f)) scheme.add_end(V + E + f, D + d, 0);

    DerivedMap result;
    result.kind = DerivedKind::Square;
    result.source = m;
    BuiltScheme built = build_indexed_rotation_scheme(scheme, m.euler_characteristic() != 2);
    result.map = std::move(built.map);
    result.vertex_table = std::move(built.vertex_index);

    result.vertex_origin.resize(V + E + F);
    for (int v = 0; v < V; ++v) result.vertex_origin[result.vertex_table[v]] = m.vertex_ref(v);
    for (int e = 0; e < E; ++e)
        result.vertex_origin[result.vertex_table[V + e]] = m.edge_ref(e);
    for (int f = 0; f < F; ++f)
        result.vertex_origin[result.vertex_table[V + E + f]] = m.face_ref(f);

    // Every face is the quadrilateral covering one corner; the unique even
    // dart below 2D in its orbit is 2c for the corner dart c.
    result.face_diagonals.resize(result.map.face_count());
    for (int j = 0; j < result.map.face_count(); ++j) {
        const auto& orbit = result.map.face_darts(j);
        if (orbit.size() != 4) internal_error("squares-graph face is not a quadrilateral");
        Dart corner = -1;
        for (Dart x : orbit) {
            if (x % 2 == 0 && x < 2 * D) {
                if (corner >= 0) internal_error("ambiguous corner for squares-graph face");
                corner = x / 2;
            }
        }
        if (corner < 0) internal_error("no corner dart for squares-graph face");
        SquareFaceDiagonals diag;
        diag.corner_dart = corner;
        diag.vv = result.derived_vertex(ElementKind::Vertex, m.vertex_of(corner));
        diag.vf = result.derived_vertex(ElementKind::Face, m.face_of(corner));
        diag.ve_a = result.derived_vertex(ElementKind::Edge, m.edge_of(corner));
        diag.ve_b = result.derived_vertex(ElementKind::Edge, m.edge_of(m.sigma_inv(corner)));
        result.face_diagonals[j] = diag;
    }
    return result;
}

namespace {

// Both-valid dart maps (degenerate hosts) settle on Preserving.
void finalize_orientation(MapMorphism& mor) {
    if (satisfies_orientation(mor, Orientation::Preserving)) {
        mor.orientation = Orientation::Preserving;
    } else {
        mor.orientation = Orientation::Reversing;
        require_valid_morphism(mor);
    }
}

} // namespace

MapMorphism dual_induced(const MapMorphism& psi) {
    require_valid_morphism(psi);
    MapMorphism result;
    result.source = dual(psi.source).map;
    result.target = dual(psi.target).map;
    if (psi.orientation == Orientation::Preserving) {
        result.dart_map = psi.dart_map;
    } else {
        result.dart_map = compose_perm(psi.target.alpha(), psi.dart_map);
    }
    finalize_orientation(result);
    result.kind = result.source == result.target ? MorphismKind::Automorphism
                                                 : MorphismKind::Isomorphism;
    return result;
}

MapMorphism incidence_induced(const MapMorphism& psi) {
    require_valid_morphism(psi);
    const CombinatorialMap& m = psi.source;
    const CombinatorialMap& n = psi.target;
    const bool preserving = psi.orientation == Orientation::Preserving;
    MapMorphism result;
    result.source = incidence(m).map;
    result.target = incidence(n).map;
    result.dart_map.resize(2 * m.dart_count());
    for (Dart d = 0; d < m.dart_count(); ++d) {
        const Dart image_corner = preserving ? psi.dart_map[d] : n.sigma(psi.dart_map[d]);
        result.dart_map[2 * d] = 2 * image_corner;
        result.dart_map[2 * d + 1] = 2 * image_corner + 1;
    }
    finalize_orientation(result);
    result.kind = result.source == result.target ? MorphismKind::Automorphism
                                                 : MorphismKind::Isomorphism;
    return result;
}

MapMorphism incidence_dual_swap(const CombinatorialMap& m) {
    MapMorphism result;
    result.source = incidence(dual(m).map).map;
    result.target = incidence(m).map;
    result.dart_map.resize(2 * m.dart_count());
    for (Dart d = 0; d < m.dart_count(); ++d) {
        result.dart_map[2 * d] = 2 * d + 1;
        result.dart_map[2 * d + 1] = 2 * d;
    }
    finalize_orientation(result);
    result.kind = MorphismKind::Isomorphism;
    return result;
}

MapMorphism duality_incidence_automorphism(const MapMorphism& psi) {
    if (!(psi.target == dual(psi.source).map))
        fail(Errc::InvalidMorphism, "morphism is not a duality onto dual(source)");
    MapMorphism result = compose(incidence_dual_swap(psi.source), incidence_induced(psi));
    result.kind = MorphismKind::Automorphism;
    return result;
}

} // namespace sdmap
