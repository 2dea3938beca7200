#include "sdmap/morphism.hpp"

#include <algorithm>

#include "sdmap/error.hpp"

namespace sdmap {

const char* orientation_name(Orientation o) {
    return o == Orientation::Preserving ? "preserving" : "reversing";
}

bool satisfies_orientation(const MapMorphism& mor, Orientation o) {
    const auto& m = mor.source;
    const auto& n = mor.target;
    if (m.dart_count() != n.dart_count()) return false;
    if (static_cast<int>(mor.dart_map.size()) != m.dart_count()) return false;
    if (!is_permutation(mor.dart_map)) return false;
    const Perm& psi = mor.dart_map;
    for (Dart d = 0; d < m.dart_count(); ++d) {
        if (psi[m.alpha(d)] != n.alpha(psi[d])) return false;
        const Dart want = o == Orientation::Preserving ? n.sigma(psi[d]) : n.sigma_inv(psi[d]);
        if (psi[m.sigma(d)] != want) return false;
    }
    return true;
}

bool is_valid_morphism(const MapMorphism& mor) {
    if (!satisfies_orientation(mor, mor.orientation)) return false;
    if (mor.kind == MorphismKind::Automorphism && !(mor.source == mor.target)) return false;
    return true;
}

void require_valid_morphism(const MapMorphism& mor) {
    if (!is_valid_morphism(mor)) fail(Errc::InvalidMorphism, "dart map does not commute with the rotation system");
}

MapMorphism identity_morphism(const CombinatorialMap& m) {
    return MapMorphism{m, m, identity_perm(m.dart_count()), Orientation::Preserving,
                       MorphismKind::Automorphism};
}

namespace {

// Propagate psi[0] = anchor through the sigma/alpha action; returns the full
// dart map iff consistent and bijective.
std::optional<Perm> propagate(const CombinatorialMap& m, const CombinatorialMap& n, Dart anchor,
                              Orientation orientation) {
    const int size = m.dart_count();
    Perm psi(size, -1);
    std::vector<char> used(size, 0);
    std::vector<Dart> stack;
    psi[0] = anchor;
    used[anchor] = 1;
    stack.push_back(0);
    while (!stack.empty()) {
        const Dart d = stack.back();
        stack.pop_back();
        const Dart image = psi[d];
        const Dart pairs[2][2] = {
            {m.alpha(d), n.alpha(image)},
            {m.sigma(d),
             orientation == Orientation::Preserving ? n.sigma(image) : n.sigma_inv(image)},
        };
        for (const auto& pair : pairs) {
            const Dart src = pair[0];
            const Dart dst = pair[1];
            if (psi[src] < 0) {
                if (used[dst]) return std::nullopt;
                psi[src] = dst;
                used[dst] = 1;
                stack.push_back(src);
            } else if (psi[src] != dst) {
                return std::nullopt;
            }
        }
    }
    return psi;
}

} // namespace

std::vector<MapMorphism> enumerate_isomorphisms(const CombinatorialMap& m,
                                                const CombinatorialMap& n,
                                                OrientationFilter filter) {
    std::vector<MapMorphism> result;
    if (m.dart_count() != n.dart_count()) return result;
    if (m.vertex_count() != n.vertex_count() || m.face_count() != n.face_count()) return result;

    const MorphismKind kind = m == n ? MorphismKind::Automorphism : MorphismKind::Isomorphism;
    std::vector<Perm> found;
    auto try_orientation = [&](Orientation o) {
        for (Dart anchor = 0; anchor < n.dart_count(); ++anchor) {
            auto psi = propagate(m, n, anchor, o);
            if (!psi) continue;
            if (std::find(found.begin(), found.end(), *psi) != found.end()) continue;
            found.push_back(*psi);
            result.push_back(MapMorphism{m, n, std::move(*psi), o, kind});
        }
    };
    if (filter != OrientationFilter::Reversing) try_orientation(Orientation::Preserving);
    if (filter != OrientationFilter::Preserving) try_orientation(Orientation::Reversing);

    std::sort(result.begin(), result.end(), [](const MapMorphism& a, const MapMorphism& b) {
        if (a.dart_map != b.dart_map) return a.dart_map < b.dart_map;
        return a.orientation < b.orientation;
    });
    return result;
}

std::vector<MapMorphism> enumerate_automorphisms(const CombinatorialMap& m,
                                                 OrientationFilter filter) {
    return enumerate_isomorphisms(m, m, filter);
}

ElementAction element_action(const MapMorphism& mor) {
    require_valid_morphism(mor);
    const auto& m = mor.source;
    const auto& n = mor.target;
    const Perm& psi = mor.dart_map;
    const bool reversing = mor.orientation == Orientation::Reversing &&
                           !satisfies_orientation(mor, Orientation::Preserving);
    ElementAction action;
    action.vertex_image.assign(m.vertex_count(), -1);
    action.edge_image.assign(m.edge_count(), -1);
    action.face_image.assign(m.face_count(), -1);
    for (Dart d = 0; d < m.dart_count(); ++d) {
        action.vertex_image[m.vertex_of(d)] = n.vertex_of(psi[d]);
        action.edge_image[m.edge_of(d)] = n.edge_of(psi[d]);
        const Dart face_dart = reversing ? n.alpha(psi[d]) : psi[d];
        action.face_image[m.face_of(d)] = n.face_of(face_dart);
    }
    return action;
}

MapMorphism compose(const MapMorphism& g, const MapMorphism& f) {
    if (!(f.target == g.source))
        fail(Errc::InvalidMorphism, "composition mismatch: f.target differs from g.source");
    MapMorphism result;
    result.source = f.source;
    result.target = g.target;
    result.dart_map = compose_perm(g.dart_map, f.dart_map);
    if (satisfies_orientation(result, Orientation::Preserving)) {
        result.orientation = Orientation::Preserving;
    } else {
        result.orientation = Orientation::Reversing;
        require_valid_morphism(result);
    }
    result.kind = result.source == result.target ? MorphismKind::Automorphism
                                                 : MorphismKind::Isomorphism;
    return result;
}

MapMorphism inverse_morphism(const MapMorphism& mor) {
    require_valid_morphism(mor);
    MapMorphism result;
    result.source = mor.target;
    result.target = mor.source;
    result.dart_map = inverse_perm(mor.dart_map);
    result.orientation =
        satisfies_orientation(result, Orientation::Preserving) ? Orientation::Preserving
                                                               : Orientation::Reversing;
    require_valid_morphism(result);
    result.kind = mor.kind == MorphismKind::Duality ? MorphismKind::Isomorphism : mor.kind;
    return result;
}

bool same_dart_map(const MapMorphism& a, const MapMorphism& b) {
    return a.dart_map == b.dart_map;
}

} // namespace sdmap
