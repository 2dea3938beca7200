#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "sdmap/derived.hpp"
#include "sdmap/duality.hpp"
#include "sdmap/families.hpp"
#include "sdmap/map.hpp"
#include "sdmap/morphism.hpp"
#include "sdmap/scheme.hpp"

using namespace sdmap;

namespace {

bool map_isomorphic(const CombinatorialMap& a, const CombinatorialMap& b) {
    return !enumerate_isomorphisms(a, b).empty();
}

// Rebuilds the incidence map of `m` out of square(m)'s incidence diagonals:
// one edge per quadrilateral, rotations read off by walking the square
// graph's faces around each V_V / V_F vertex.
CombinatorialMap reassemble_incidence(const DerivedMap& sq) {
    const CombinatorialMap& host = sq.map;
    const CombinatorialMap& src = sq.source;
    const int V = src.vertex_count();
    const int F = src.face_count();
    RotationScheme scheme;
    scheme.vertex_count = V + F;
    scheme.edge_count = host.face_count(); // one diagonal per quadrilateral
    scheme.rotations.resize(scheme.vertex_count);
    for (int w = 0; w < V + F; ++w) {
        const bool is_vertex_class = w < V;
        const int host_vertex = is_vertex_class
                                    ? sq.derived_vertex(ElementKind::Vertex, w)
                                    : sq.derived_vertex(ElementKind::Face, w - V);
        for (Dart d : host.vertex_darts(host_vertex)) {
            const int face = host.face_of(d); // quadrilateral on the right of d
            scheme.add_end(w, face, is_vertex_class ? 0 : 1);
        }
    }
    return build_from_rotation_scheme(scheme);
}

// Same on the intersecting diagonals: one edge per quadrilateral around the
// V_E vertices.
CombinatorialMap reassemble_medial(const DerivedMap& sq) {
    const CombinatorialMap& host = sq.map;
    const CombinatorialMap& src = sq.source;
    const int E = src.edge_count();
    RotationScheme scheme;
    scheme.vertex_count = E;
    scheme.edge_count = host.face_count();
    scheme.rotations.resize(E);
    std::vector<int> slot_used(host.face_count(), 0);
    for (int e = 0; e < E; ++e) {
        const int host_vertex = sq.derived_vertex(ElementKind::Edge, e);
        for (Dart d : host.vertex_darts(host_vertex)) {
            const int face = host.face_of(d);
            scheme.add_end(e, face, slot_used[face]++);
        }
    }
    return build_from_rotation_scheme(scheme);
}

std::vector<CombinatorialMap> sample_maps() {
    std::vector<CombinatorialMap> maps = {wheel(3), wheel(4), wheel(5), ear(3), ear(4),
                                          pancake(3, 2), cycle_map(3), cycle_map(2)};
    std::mt19937 rng(2024);
    for (int e = 2; e <= 7; ++e) maps.push_back(random_sphere_map(rng, e));
    return maps;
}

} // namespace

TEST_CASE("dual counts and involutivity") {
    const CombinatorialMap k3 = cycle_map(3);
    const DerivedMap d = dual(k3);
    CHECK(d.map.vertex_count() == 2);
    CHECK(d.map.edge_count() == 3);
    CHECK(d.map.face_count() == 3);

    // dual(dual(m)) is the same map on the nose.
    CHECK(dual(d.map).map == k3);
    CHECK(dual(dual(ear(4)).map).map == ear(4));
}

TEST_CASE("dual of the tetrahedral map is tetrahedral") {
    CHECK(map_isomorphic(dual(wheel(3)).map, wheel(3)));
}

TEST_CASE("dual provenance links vertices to source faces") {
    const CombinatorialMap m = ear(3);
    const DerivedMap d = dual(m);
    for (int i = 0; i < d.map.vertex_count(); ++i) {
        CHECK(d.vertex_origin[i].kind == ElementKind::Face);
        // The dual vertex orbit is exactly the face orbit of the source.
        const Dart dart = d.map.vertex_darts(i).front();
        CHECK(d.vertex_origin[i].index == m.face_of(dart));
    }
    for (int j = 0; j < d.map.face_count(); ++j)
        CHECK(d.face_origin[j].kind == ElementKind::Vertex);
}

TEST_CASE("medial of the tetrahedral map is the octahedral map") {
    const DerivedMap med = medial(wheel(3));
    CHECK(med.map.vertex_count() == 6);
    CHECK(med.map.edge_count() == 12);
    CHECK(med.map.face_count() == 8);
    // 4-regular.
    for (int v = 0; v < med.map.vertex_count(); ++v)
        CHECK(med.map.vertex_darts(v).size() == 4);
}

TEST_CASE("medial vertex count equals source edge count") {
    CHECK(medial(ear(4)).map.vertex_count() == ear(4).edge_count());
    for (const auto& m : sample_maps()) {
        const DerivedMap med = medial(m);
        CHECK(med.map.vertex_count() == m.edge_count());
        CHECK(med.map.edge_count() == m.dart_count());
        CHECK(med.map.euler_characteristic() == 2);
        // Faces in bijection with V(source) + F(source).
        CHECK(med.map.face_count() == m.vertex_count() + m.face_count());
        int vertex_faces = 0, face_faces = 0;
        for (const auto& origin : med.face_origin)
            (origin.kind == ElementKind::Vertex ? vertex_faces : face_faces)++;
        CHECK(vertex_faces == m.vertex_count());
        CHECK(face_faces == m.face_count());
    }
}

TEST_CASE("medial of the dual is the medial") {
    CHECK(map_isomorphic(medial(dual(wheel(5)).map).map, medial(wheel(5)).map));
    for (const auto& m : sample_maps())
        CHECK(map_isomorphic(medial(dual(m).map).map, medial(m).map));
}

TEST_CASE("incidence of the tetrahedral map is the cube map") {
    const DerivedMap inc = incidence(wheel(3));
    CHECK(inc.map.vertex_count() == 8);
    CHECK(inc.map.edge_count() == 12);
    CHECK(inc.map.face_count() == 6);
    for (int f = 0; f < inc.map.face_count(); ++f)
        CHECK(inc.map.face_darts(f).size() == 4);
}

TEST_CASE("incidence is a bipartite quadrangulation with one edge per corner") {
    CHECK(incidence(pancake(3, 2)).map.edge_count() == 2 * pancake(3, 2).edge_count());
    for (const auto& m : sample_maps()) {
        const DerivedMap inc = incidence(m);
        CHECK(inc.map.edge_count() == m.dart_count());
        CHECK(inc.map.euler_characteristic() == 2);
        // Quadrilateral faces (boundary walks of length 4, repeats allowed).
        for (int f = 0; f < inc.map.face_count(); ++f)
            CHECK(inc.map.face_darts(f).size() == 4);
        // Black/white bipartition: every edge joins a vertex-origin to a
        // face-origin vertex.
        for (int e = 0; e < inc.map.edge_count(); ++e) {
            const Dart d = inc.map.edge_darts(e).front();
            const bool black_a = inc.incidence_black(inc.map.vertex_of(d));
            const bool black_b = inc.incidence_black(inc.map.vertex_of(inc.map.alpha(d)));
            CHECK(black_a != black_b);
        }
        // One face of I(m) per source edge.
        CHECK(inc.map.face_count() == m.edge_count());
    }
}

TEST_CASE("dual of incidence is medial") {
    CHECK(map_isomorphic(dual(incidence(ear(4)).map).map, medial(ear(4)).map));
    for (const auto& m : sample_maps())
        CHECK(map_isomorphic(dual(incidence(m).map).map, medial(m).map));
}

TEST_CASE("squares graph of the tetrahedral map") {
    const DerivedMap sq = square(wheel(3));
    CHECK(sq.map.vertex_count() == 14);
    CHECK(sq.map.edge_count() == 24);
    CHECK(sq.map.face_count() == 12);
}

TEST_CASE("squares graph faces are quadrilaterals carrying both diagonals") {
    for (const auto& m : sample_maps()) {
        const DerivedMap sq = square(m);
        CHECK(sq.map.euler_characteristic() == 2);
        CHECK(sq.map.face_count() == 2 * m.edge_count());
        CHECK((int)sq.face_diagonals.size() == sq.map.face_count());
        std::set<Dart> corners;
        for (int f = 0; f < sq.map.face_count(); ++f) {
            CHECK(sq.map.face_darts(f).size() == 4);
            const SquareFaceDiagonals& diag = sq.face_diagonals[f];
            corners.insert(diag.corner_dart);
            CHECK(sq.vertex_origin[diag.vv].kind == ElementKind::Vertex);
            CHECK(sq.vertex_origin[diag.vf].kind == ElementKind::Face);
            CHECK(sq.vertex_origin[diag.ve_a].kind == ElementKind::Edge);
            CHECK(sq.vertex_origin[diag.ve_b].kind == ElementKind::Edge);
            // The incidence diagonal matches the corner's vertex and face.
            CHECK(diag.vv == sq.derived_vertex(ElementKind::Vertex,
                                               m.vertex_of(diag.corner_dart)));
            CHECK(diag.vf == sq.derived_vertex(ElementKind::Face,
                                               m.face_of(diag.corner_dart)));
        }
        // Every corner indexes exactly one quadrilateral.
        CHECK((int)corners.size() == m.dart_count());
    }
    // Closure under derivation: square of a derived incidence map.
    const DerivedMap closure = square(incidence(wheel(4)).map);
    CHECK(closure.map.euler_characteristic() == 2);
}

TEST_CASE("ear(4) squares graph faces all have length four") {
    const DerivedMap sq = square(ear(4));
    for (int f = 0; f < sq.map.face_count(); ++f) CHECK(sq.map.face_darts(f).size() == 4);
}

TEST_CASE("diagonal reassembly recovers incidence and medial exactly") {
    for (const auto& m : sample_maps()) {
        const DerivedMap sq = square(m);
        CHECK(map_isomorphic(reassemble_incidence(sq), incidence(m).map));
        CHECK(map_isomorphic(reassemble_medial(sq), medial(m).map));
    }
}

TEST_CASE("self-dual maps have an even number of edges") {
    for (const auto& m : sample_maps()) {
        if (is_self_dual(m)) CHECK(m.edge_count() % 2 == 0);
    }
    CHECK(wheel(5).edge_count() % 2 == 0);
}

TEST_CASE("induced incidence morphisms respect the functor laws") {
    const CombinatorialMap m = wheel(4);
    const auto autos = enumerate_automorphisms(m);
    const DerivedMap inc = incidence(m);
    for (const auto& aut : autos) {
        const MapMorphism lifted = incidence_induced(aut);
        CHECK(is_valid_morphism(lifted));
        CHECK(lifted.source == inc.map);
        CHECK(lifted.target == inc.map);
        // Vertex action matches the element action through provenance.
        const auto base_action = element_action(aut);
        const auto lifted_action = element_action(lifted);
        for (int v = 0; v < m.vertex_count(); ++v)
            CHECK(lifted_action.vertex_image[inc.derived_vertex(ElementKind::Vertex, v)] ==
                  inc.derived_vertex(ElementKind::Vertex, base_action.vertex_image[v]));
        for (int f = 0; f < m.face_count(); ++f)
            CHECK(lifted_action.vertex_image[inc.derived_vertex(ElementKind::Face, f)] ==
                  inc.derived_vertex(ElementKind::Face, base_action.face_image[f]));
    }
    // Functoriality on a composition.
    const auto& a = autos[1];
    const auto& b = autos[autos.size() - 1];
    CHECK(incidence_induced(compose(a, b)).dart_map ==
          compose(incidence_induced(a), incidence_induced(b)).dart_map);
}

TEST_CASE("incidence dual swap is a color-swapping isomorphism") {
    for (const auto& m : sample_maps()) {
        const MapMorphism swap = incidence_dual_swap(m);
        CHECK(is_valid_morphism(swap));
        const DerivedMap inc_dual = incidence(dual(m).map);
        const DerivedMap inc = incidence(m);
        const auto action = element_action(swap);
        for (int w = 0; w < inc_dual.map.vertex_count(); ++w) {
            // Black vertices of I(dual) are faces of m and must land white.
            CHECK(inc_dual.incidence_black(w) != inc.incidence_black(action.vertex_image[w]));
        }
    }
}

TEST_CASE("duality induces a color-swapping automorphism of the incidence map") {
    for (const CombinatorialMap& m : {wheel(3), wheel(4), wheel(5)}) {
        const auto dualities = enumerate_dualities(m);
        REQUIRE(!dualities.empty());
        const DerivedMap inc = incidence(m);
        for (size_t k = 0; k < dualities.size(); k += 5) {
            const MapMorphism sigma_i = duality_incidence_automorphism(dualities[k].morphism);
            CHECK(is_valid_morphism(sigma_i));
            CHECK(sigma_i.source == inc.map);
            CHECK(sigma_i.target == inc.map);
            const auto action = element_action(sigma_i);
            for (int w = 0; w < inc.map.vertex_count(); ++w)
                CHECK(inc.incidence_black(w) != inc.incidence_black(action.vertex_image[w]));
        }
    }
}

TEST_CASE("dual_induced composes dualities into automorphisms") {
    const CombinatorialMap m = wheel(3);
    const auto dualities = enumerate_dualities(m);
    REQUIRE(dualities.size() >= 2);
    const MapMorphism aut = compose_dualities(dualities[1], dualities[0]);
    CHECK(aut.source == m);
    CHECK(aut.target == m);
    CHECK(is_valid_morphism(aut));
}

TEST_CASE("repeated vertex-face incidences yield parallel incidence edges") {
    // One vertex u with a loop plus a pendant vertex w inside the loop: u
    // meets the inner face twice, so I(m) carries two parallel edges there.
    const Perm alpha{1, 0, 3, 2};
    const Perm sigma{2, 0, 1, 3}; // u carries darts 0,1 (loop) and 2 (pendant)
    const CombinatorialMap m = CombinatorialMap::build(alpha, sigma);
    REQUIRE(m.vertex_count() == 2);
    REQUIRE(m.face_count() == 2);
    const DerivedMap inc = incidence(m);
    // Count parallel edges per black/white pair.
    std::map<std::pair<int, int>, int> multiplicity;
    for (int e = 0; e < inc.map.edge_count(); ++e) {
        const Dart d = inc.map.edge_darts(e).front();
        int a = inc.map.vertex_of(d);
        int b = inc.map.vertex_of(inc.map.alpha(d));
        if (!inc.incidence_black(a)) std::swap(a, b);
        ++multiplicity[{a, b}];
    }
    int doubled = 0;
    for (const auto& [pair, count] : multiplicity)
        if (count == 2) ++doubled;
    CHECK(doubled == 1); // exactly the u/inner-face pair
}

TEST_CASE("derived maps of a pendant-loop map stay spherical") {
    // Loop at u with a pendant vertex inside: degree-1 vertex and a loop in
    // one map, which exercises the degenerate rotation cases.
    const CombinatorialMap m = CombinatorialMap::build({1, 0, 3, 2}, {2, 0, 1, 3});
    const DerivedMap med = medial(m);
    CHECK(med.map.vertex_count() == 2);
    CHECK(med.map.edge_count() == 4);
    CHECK(med.map.face_count() == 4);
    CHECK(med.map.euler_characteristic() == 2);
    const DerivedMap sq = square(m);
    CHECK(sq.map.face_count() == 2 * m.edge_count());
    for (int f = 0; f < sq.map.face_count(); ++f) CHECK(sq.map.face_darts(f).size() == 4);
}
