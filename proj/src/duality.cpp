#include "sdmap/duality.hpp"

#include "sdmap/error.hpp"

namespace sdmap {

bool vertex_on_face(const CombinatorialMap& m, int v, int f) {
    for (Dart d : m.face_darts(f))
        if (m.vertex_of(d) == v) return true;
    return false;
}

std::vector<DualityWitness> enumerate_dualities(const CombinatorialMap& m) {
    const DerivedMap dm = dual(m);
    std::vector<DualityWitness> result;
    for (MapMorphism& iso : enumerate_isomorphisms(m, dm.map, OrientationFilter::Both)) {
        iso.kind = MorphismKind::Duality;
        DualityWitness w;
        const ElementAction action = element_action(iso);
        w.vertex_to_face.resize(m.vertex_count());
        for (int v = 0; v < m.vertex_count(); ++v)
            w.vertex_to_face[v] = dm.vertex_origin[action.vertex_image[v]].index;
        w.face_to_vertex.resize(m.face_count());
        for (int f = 0; f < m.face_count(); ++f)
            w.face_to_vertex[f] = dm.face_origin[action.face_image[f]].index;
        w.edge_to_edge = action.edge_image; // dual edges share source edge ids

        w.involutive = true;
        for (int v = 0; v < m.vertex_count() && w.involutive; ++v)
            if (w.face_to_vertex[w.vertex_to_face[v]] != v) w.involutive = false;
        for (int f = 0; f < m.face_count() && w.involutive; ++f)
            if (w.vertex_to_face[w.face_to_vertex[f]] != f) w.involutive = false;

        w.strongly_involutive = w.involutive;
        for (int v = 0; v < m.vertex_count() && w.strongly_involutive; ++v)
            if (vertex_on_face(m, v, w.vertex_to_face[v])) w.strongly_involutive = false;

        w.morphism = std::move(iso);
        result.push_back(std::move(w));
    }
    return result;
}

bool is_self_dual(const CombinatorialMap& m) {
    if (m.vertex_count() != m.face_count()) return false;
    return !enumerate_isomorphisms(m, dual(m).map, OrientationFilter::Both).empty();
}

bool is_involutive(const DualityWitness& witness) { return witness.involutive; }

StrongInvolutivityResult is_strongly_involutive(const CombinatorialMap& m) {
    StrongInvolutivityResult result;
    for (DualityWitness& w : enumerate_dualities(m)) {
        if (w.strongly_involutive) {
            result.strongly_involutive = true;
            result.witness = std::move(w);
            break;
        }
    }
    return result;
}

MapMorphism compose_dualities(const DualityWitness& second, const DualityWitness& first) {
    // dual_induced(second) maps dual(m) onto dual(dual(m)) = m exactly.
    MapMorphism back = dual_induced(second.morphism);
    if (!(back.target == first.morphism.source))
        fail(Errc::InvalidMorphism, "dualities do not live on the same map");
    MapMorphism result = compose(back, first.morphism);
    result.kind = MorphismKind::Automorphism;
    return result;
}

} // namespace sdmap
