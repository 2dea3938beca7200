#ifndef SDMAP_DERIVED_HPP
#define SDMAP_DERIVED_HPP

#include <vector>

#include "sdmap/map.hpp"
#include "sdmap/morphism.hpp"

namespace sdmap {

enum class DerivedKind { Dual, Medial, Incidence, Square };

// Incidence and intersecting diagonals of one quadrilateral face of a
// squares graph, as derived-vertex indices.  corner_dart is the source dart
// whose corner the face covers.
struct SquareFaceDiagonals {
    Dart corner_dart;
    int vv;
    int vf;
    int ve_a;
    int ve_b;
};

// A map derived from another, with provenance from every derived vertex,
// edge and face back to the source.
//
// Dart/index layouts (E = source edge count, V = vertices, F = faces):
//   dual      same darts as the source; rotation is the source's phi.
//   medial    vertex e per source edge; edge c per source dart (the corner
//             diagonal joining edge(c) and edge(sigma^-1(c))); darts 2c,2c+1.
//   incidence black vertex v in [0,V), white vertex F+j at index V+j; edge d
//             per source dart (the corner joining vertex(d) to face(d));
//             darts 2d (black end) and 2d+1 (white end).
//   square    vertices: V_V = [0,V), V_E = V+[0,E), V_F = V+E+[0,F); edges:
//             d in [0,2E) is the vertex half of dart d, 2E+d the face half.
struct DerivedMap {
    DerivedKind kind;
    CombinatorialMap map;
    CombinatorialMap source;
    std::vector<ElementRef> vertex_origin;
    std::vector<ElementRef> face_origin;          // not used for Square
    std::vector<SquareFaceDiagonals> face_diagonals; // Square only

    // Map vertex index of a source element (Dual: faces; Medial: edges;
    // Incidence: vertices and faces; Square: all three kinds).
    int derived_vertex(ElementKind kind, int index) const;

    bool incidence_black(int derived_vertex) const {
        return vertex_origin[derived_vertex].kind == ElementKind::Vertex;
    }

    // Internal: source-layout slot -> map vertex index.
    std::vector<int> vertex_table;
};

DerivedMap dual(const CombinatorialMap& m);
DerivedMap medial(const CombinatorialMap& m);
DerivedMap incidence(const CombinatorialMap& m);
DerivedMap square(const CombinatorialMap& m);

// Functorial morphisms between derived maps.
//
// dual_induced(psi) has the same dart map for preserving psi and
// alpha_target . psi for reversing psi.
MapMorphism dual_induced(const MapMorphism& psi);

// incidence_induced(psi) : I(source) -> I(target); black vertices map to
// black, white to white.
MapMorphism incidence_induced(const MapMorphism& psi);

// The canonical color-swapping identification I(dual(m)) -> I(m)
// (orientation-reversing; dart 2d <-> 2d+1).
MapMorphism incidence_dual_swap(const CombinatorialMap& m);

// For a duality psi : m -> dual(m), the induced color-swapping automorphism
// of I(m): incidence_dual_swap(m) after incidence_induced(psi).
MapMorphism duality_incidence_automorphism(const MapMorphism& psi);

} // namespace sdmap

#endif
