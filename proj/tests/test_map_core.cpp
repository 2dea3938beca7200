#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <thread>

#include "sdmap/error.hpp"
#include "sdmap/families.hpp"
#include "sdmap/map.hpp"
#include "sdmap/morphism.hpp"

using namespace sdmap;

namespace {

// Independent orbit counter working straight off a permutation table.
int count_cycles(const Perm& p) {
    std::vector<char> seen(p.size(), 0);
    int cycles = 0;
    for (int i = 0; i < (int)p.size(); ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int x = i; !seen[x]; x = p[x]) seen[x] = 1;
    }
    return cycles;
}

} // namespace

TEST_CASE("wheel(3) is the tetrahedral map") {
    const CombinatorialMap m = wheel(3);
    CHECK(m.vertex_count() == 4);
    CHECK(m.edge_count() == 6);
    CHECK(m.face_count() == 4);
    CHECK(m.euler_characteristic() == 2);
    // Orbit counts re-derived straight from the permutations.
    CHECK(count_cycles(m.sigma()) == 4);
    CHECK(count_cycles(m.alpha()) == 6);
    CHECK(count_cycles(m.phi()) == 4);
}

TEST_CASE("interleaved one-vertex map is a torus map") {
    // darts 0..3, alpha=(01)(23), sigma=(0 2 1 3)
    const Perm alpha{1, 0, 3, 2};
    const Perm sigma{2, 3, 1, 0}; // 0->2->1->3->0
    CHECK_THROWS_WITH_AS(CombinatorialMap::build(alpha, sigma), doctest::Contains("NotSphere"),
                         Error);
    const CombinatorialMap torus = CombinatorialMap::build(alpha, sigma, true);
    CHECK(torus.euler_characteristic() == 0);
    CHECK(torus.vertex_count() == 1);
    CHECK(torus.edge_count() == 2);
    CHECK(torus.face_count() == 1);
}

TEST_CASE("alpha with a fixed dart is rejected") {
    const Perm alpha{0, 1};
    const Perm sigma{1, 0};
    try {
        CombinatorialMap::build(alpha, sigma);
        FAIL("expected NotInvolution");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotInvolution);
    }
}

TEST_CASE("build rejects malformed inputs") {
    CHECK_THROWS_AS(CombinatorialMap::build({}, {}), Error);
    CHECK_THROWS_AS(CombinatorialMap::build({1, 0, 3, 2}, {1, 0}), Error);
    CHECK_THROWS_AS(CombinatorialMap::build({1, 0}, {0, 0}), Error);
    // Two disjoint loops: disconnected.
    try {
        CombinatorialMap::build({1, 0, 3, 2}, {1, 0, 3, 2});
        FAIL("expected Disconnected");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Disconnected);
    }
}

TEST_CASE("euler characteristic of generated maps") {
    CHECK(euler_characteristic(wheel(5)) == 2);
    CHECK(euler_characteristic(adhesion(wheel(3), 0)) == 2);
    CHECK(euler_characteristic(ear(4)) == 2);
    CHECK(euler_characteristic(pancake(4, 2)) == 2);
}

TEST_CASE("alpha orbit count is half the dart count") {
    for (const CombinatorialMap& m : {wheel(3), wheel(6), ear(3), pancake(3, 2)}) {
        CHECK(m.edge_count() * 2 == m.dart_count());
        CHECK(m.euler_characteristic() == 2);
    }
}

TEST_CASE("automorphisms of the tetrahedral map realize all 24 vertex permutations") {
    const CombinatorialMap m = wheel(3);
    const auto autos = enumerate_automorphisms(m);
    CHECK(autos.size() == 24);

    // Independent cross-check: K4's graph automorphisms are all of S4, and a
    // map automorphism is determined by its dart action, so the element
    // actions must produce 24 distinct vertex permutations.
    std::set<std::vector<int>> vertex_perms;
    for (const auto& aut : autos) vertex_perms.insert(element_action(aut).vertex_image);
    CHECK(vertex_perms.size() == 24);

    int preserving = 0;
    for (const auto& aut : autos)
        if (satisfies_orientation(aut, Orientation::Preserving)) ++preserving;
    CHECK(preserving == 12);
}

TEST_CASE("automorphism group of the square pyramid map") {
    const CombinatorialMap m = wheel(4);
    const auto autos = enumerate_automorphisms(m);
    // Dihedral rim action in both orientation classes; each graph
    // automorphism of W4 lifts to exactly one map automorphism.
    CHECK(autos.size() == 8);
    std::set<std::vector<int>> vertex_perms;
    for (const auto& aut : autos) vertex_perms.insert(element_action(aut).vertex_image);
    CHECK(vertex_perms.size() == 8);
}

TEST_CASE("maps of different size admit no isomorphism") {
    CHECK(enumerate_isomorphisms(wheel(3), wheel(4)).empty());
}

TEST_CASE("automorphisms form a group with preserving subgroup of index <= 2") {
    for (const CombinatorialMap& m : {wheel(3), wheel(4), ear(3)}) {
        const auto autos = enumerate_automorphisms(m);
        std::set<Perm> members;
        for (const auto& aut : autos) members.insert(aut.dart_map);
        CHECK(members.count(identity_perm(m.dart_count())) == 1);
        for (const auto& a : autos) {
            CHECK(members.count(inverse_morphism(a).dart_map) == 1);
            for (const auto& b : autos)
                CHECK(members.count(compose(a, b).dart_map) == 1);
        }
        int preserving = 0;
        for (const auto& aut : autos)
            if (satisfies_orientation(aut, Orientation::Preserving)) ++preserving;
        CHECK(preserving * 2 >= (int)autos.size());
        CHECK((int)autos.size() % preserving == 0);
    }
}

TEST_CASE("element action is functorial under composition") {
    const CombinatorialMap m = wheel(4);
    const auto autos = enumerate_automorphisms(m);
    for (size_t i = 0; i < autos.size(); i += 3) {
        for (size_t j = 0; j < autos.size(); j += 3) {
            const auto composed = compose(autos[i], autos[j]);
            const auto lhs = element_action(composed);
            const auto fa = element_action(autos[i]);
            const auto fb = element_action(autos[j]);
            for (int v = 0; v < m.vertex_count(); ++v)
                CHECK(lhs.vertex_image[v] == fa.vertex_image[fb.vertex_image[v]]);
            for (int e = 0; e < m.edge_count(); ++e)
                CHECK(lhs.edge_image[e] == fa.edge_image[fb.edge_image[e]]);
            for (int f = 0; f < m.face_count(); ++f)
                CHECK(lhs.face_image[f] == fa.face_image[fb.face_image[f]]);
        }
    }
}

TEST_CASE("identity automorphism acts as identity on elements") {
    const CombinatorialMap m = wheel(5);
    const auto action = element_action(identity_morphism(m));
    for (int v = 0; v < m.vertex_count(); ++v) CHECK(action.vertex_image[v] == v);
    for (int e = 0; e < m.edge_count(); ++e) CHECK(action.edge_image[e] == e);
    for (int f = 0; f < m.face_count(); ++f) CHECK(action.face_image[f] == f);
}

TEST_CASE("a reversing automorphism of wheel(4) fixes the hub and flips the rim") {
    const CombinatorialMap m = wheel(4);
    int hub = -1;
    for (int v = 0; v < m.vertex_count(); ++v)
        if (m.vertex_darts(v).size() == 4) hub = v;
    REQUIRE(hub >= 0);
    // Rim vertices in rotation order around the hub.
    std::vector<int> rim;
    for (Dart d : m.vertex_darts(hub)) rim.push_back(m.vertex_of(m.alpha(d)));
    const auto rim_pos = [&](int v) {
        return (int)(std::find(rim.begin(), rim.end(), v) - rim.begin());
    };
    bool found = false;
    for (const auto& aut : enumerate_automorphisms(m, OrientationFilter::Reversing)) {
        const auto action = element_action(aut);
        if (action.vertex_image[hub] != hub) continue;
        // Successor relation around the rim must flip.
        bool reverses = true;
        for (int i = 0; i < 4; ++i) {
            const int a = rim_pos(action.vertex_image[rim[i]]);
            const int b = rim_pos(action.vertex_image[rim[(i + 1) % 4]]);
            if ((b + 1) % 4 != a) reverses = false;
        }
        if (reverses) found = true;
    }
    CHECK(found);
}

TEST_CASE("relabeling conjugates the automorphism set") {
    const CombinatorialMap m = ear(3);
    std::mt19937 rng(12345);
    Perm p = identity_perm(m.dart_count());
    std::shuffle(p.begin(), p.end(), rng);
    const CombinatorialMap shuffled = relabel(m, p);
    const auto original = enumerate_automorphisms(m);
    const auto conjugated = enumerate_automorphisms(shuffled);
    CHECK(original.size() == conjugated.size());
    CHECK(isomorphic_by_relabeling(m, shuffled));
    // Conjugation by p maps one automorphism set onto the other.
    std::set<Perm> conjugated_set;
    for (const auto& aut : conjugated) conjugated_set.insert(aut.dart_map);
    const Perm p_inv = inverse_perm(p);
    for (const auto& aut : original)
        CHECK(conjugated_set.count(compose_perm(p, compose_perm(aut.dart_map, p_inv))) == 1);
}

TEST_CASE("canonical form is invariant under relabeling") {
    const CombinatorialMap m = wheel(5);
    std::mt19937 rng(99);
    for (int round = 0; round < 5; ++round) {
        Perm p = identity_perm(m.dart_count());
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(relabel(m, p).canonical_form() == m.canonical_form());
    }
    CHECK_FALSE(isomorphic_by_relabeling(wheel(5), wheel(6)));
}

TEST_CASE("maps are safe for concurrent read-only use") {
    const CombinatorialMap m = wheel(5);
    const auto expected = enumerate_automorphisms(m).size();
    std::vector<std::thread> workers;
    std::array<size_t, 4> results{};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&m, &results, t] {
            results[t] = enumerate_automorphisms(m).size();
        });
    for (auto& w : workers) w.join();
    for (size_t r : results) CHECK(r == expected);
}

TEST_CASE("element_action rejects corrupted morphisms") {
    const CombinatorialMap m = wheel(3);
    MapMorphism broken = identity_morphism(m);
    std::swap(broken.dart_map[0], broken.dart_map[1]);
    try {
        element_action(broken);
        FAIL("expected InvalidMorphism");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidMorphism);
    }
}
