#include "sdmap/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sdmap/antipodal.hpp"
#include "sdmap/derived.hpp"
#include "sdmap/duality.hpp"
#include "sdmap/error.hpp"
#include "sdmap/scheme.hpp"
#include "sdmap/symmetry.hpp"

namespace sdmap {

CombinatorialMap pancake(int n, int layers) {
    if (n < 3) fail(Errc::BadParameter, "pancake needs n >= 3");
    if (layers < 1) fail(Errc::BadParameter, "pancake needs at least one layer");
    // Vertices: hub 0, then layer j in [1, layers] vertex i at 1 + (j-1)*n + i.
    // Edges: cycle(j, i) = (j-1)*n + i joins v_i^j to v_{i+1}^j;
    //        spoke(j, i) = n*layers + (j-1)*n + i joins v_i^{j-1} to v_i^j
    //        (slot 0 inward, slot 1 at v_i^j).
    const auto vertex = [n](int j, int i) { return 1 + (j - 1) * n + ((i % n + n) % n); };
    const auto cyc = [n](int j, int i) { return (j - 1) * n + ((i % n + n) % n); };
    const auto spoke = [n, layers](int j, int i) {
        return n * layers + (j - 1) * n + ((i % n + n) % n);
    };

    RotationScheme scheme;
    scheme.vertex_count = 1 + n * layers;
    scheme.edge_count = 2 * n * layers;
    scheme.rotations.resize(scheme.vertex_count);
    for (int i = 0; i < n; ++i) scheme.add_end(0, spoke(1, i), 0);
    for (int j = 1; j <= layers; ++j) {
        for (int i = 0; i < n; ++i) {
            const int v = vertex(j, i);
            if (j < layers) scheme.add_end(v, spoke(j + 1, i), 0);
            scheme.add_end(v, cyc(j, i), 0);
            scheme.add_end(v, spoke(j, i), 1);
            scheme.add_end(v, cyc(j, i - 1), 1);
        }
    }
    return build_from_rotation_scheme(scheme);
}

CombinatorialMap wheel(int n) {
    if (n < 3) fail(Errc::BadParameter, "wheel needs n >= 3");
    return pancake(n, 1);
}

CombinatorialMap ear(int n) {
    if (n < 3) fail(Errc::BadParameter, "ear needs n >= 3");
    // Vertices: rim 0..n-1, ears n..2n-1 (ear i sits inside rim edge (i, i+1)),
    // center 2n.  Edges: rim i, left(i) = n+i to rim vertex i,
    // right(i) = 2n+i to rim vertex i+1, spoke(i) = 3n+i to the center.
    const auto mod = [n](int i) { return (i % n + n) % n; };
    RotationScheme scheme;
    scheme.vertex_count = 2 * n + 1;
    scheme.edge_count = 4 * n;
    scheme.rotations.resize(scheme.vertex_count);
    for (int i = 0; i < n; ++i) {
        scheme.add_end(i, i, 0);                    // toward rim i+1
        scheme.add_end(i, n + i, 1);                // toward ear i
        scheme.add_end(i, 2 * n + mod(i - 1), 1);   // toward ear i-1
        scheme.add_end(i, mod(i - 1), 1);           // toward rim i-1
    }
    for (int i = 0; i < n; ++i) {
        scheme.add_end(n + i, 2 * n + i, 0); // toward rim vertex i+1
        scheme.add_end(n + i, 3 * n + i, 1); // toward center
        scheme.add_end(n + i, n + i, 0);     // toward rim vertex i
    }
    for (int i = 0; i < n; ++i) scheme.add_end(2 * n, 3 * n + i, 0);
    return build_from_rotation_scheme(scheme);
}

CombinatorialMap cycle_map(int n) {
    if (n < 1) fail(Errc::BadParameter, "cycle needs n >= 1");
    if (n == 1) {
        // Single loop.
        return CombinatorialMap::build({1, 0}, {1, 0});
    }
    const auto mod = [n](int i) { return (i % n + n) % n; };
    RotationScheme scheme;
    scheme.vertex_count = n;
    scheme.edge_count = n;
    scheme.rotations.resize(n);
    for (int i = 0; i < n; ++i) {
        scheme.add_end(i, i, 0);
        scheme.add_end(i, mod(i - 1), 1);
    }
    return build_from_rotation_scheme(scheme);
}

Corner corner_at(const CombinatorialMap& m, Dart d) {
    if (d < 0 || d >= m.dart_count()) fail(Errc::InvalidCorner, "corner dart out of range");
    return Corner{m.vertex_of(d), m.face_of(d), d};
}

std::vector<Corner> corners(const CombinatorialMap& m) {
    std::vector<Corner> result;
    result.reserve(m.dart_count());
    for (Dart d = 0; d < m.dart_count(); ++d) result.push_back(corner_at(m, d));
    return result;
}

CombinatorialMap one_point_splice(const CombinatorialMap& m1, Dart a,
                                  const CombinatorialMap& m2, Dart b) {
    if (a < 0 || a >= m1.dart_count() || b < 0 || b >= m2.dart_count())
        fail(Errc::InvalidCorner, "splice dart out of range");
    const int n1 = m1.dart_count();
    const int n2 = m2.dart_count();
    Perm alpha(n1 + n2), sigma(n1 + n2);
    for (Dart d = 0; d < n1; ++d) {
        alpha[d] = m1.alpha(d);
        sigma[d] = m1.sigma(d);
    }
    for (Dart d = 0; d < n2; ++d) {
        alpha[n1 + d] = n1 + m2.alpha(d);
        sigma[n1 + d] = n1 + m2.sigma(d);
    }
    // Merge the rotation cycles: ... sigma1^-1(a), [b .. sigma2^-1(b)], a ...
    sigma[m1.sigma_inv(a)] = n1 + b;
    sigma[n1 + m2.sigma_inv(b)] = a;
    return CombinatorialMap::build(std::move(alpha), std::move(sigma));
}

CombinatorialMap adhesion(const CombinatorialMap& m, const Corner& corner) {
    if (corner.dart < 0 || corner.dart >= m.dart_count() ||
        m.vertex_of(corner.dart) != corner.vertex || m.face_of(corner.dart) != corner.face)
        fail(Errc::InvalidCorner, "corner does not belong to the map");
    return adhesion(m, corner.dart);
}

CombinatorialMap adhesion(const CombinatorialMap& m, Dart corner_dart) {
    // In dual(m) the same dart realizes the mirrored corner (face, vertex),
    // so the gluing data on both sides is carried by one dart.
    return one_point_splice(m, corner_dart, dual(m).map, corner_dart);
}

CombinatorialMap adhesion_diagnostic(const CombinatorialMap& m, Dart corner_on_map,
                                     Dart corner_on_dual) {
    return one_point_splice(m, corner_on_map, dual(m).map, corner_on_dual);
}

namespace {

struct FixtureData {
    const char* name;
    Perm alpha;
    Perm sigma;
};

// Hand-frozen rotation systems realizing the advertised property bundles;
// each is re-verified by self_check at load.
const std::vector<FixtureData>& fixture_table() {
    static const std::vector<FixtureData> table = {
        // Self-dual multigraph on 4 vertices and 6 edges with exactly one
        // involutive duality, no strongly involutive one, and a symmetric
        // 8-cycle in its incidence graph; not antipodally self-dual.
        {"fig3_not_antipodal",
         {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10},
         {3, 8, 7, 6, 11, 9, 4, 2, 1, 10, 5, 0}},
        // One-point gluing of a triangle with its dual: antipodally
        // self-dual with a cut vertex, yet no strongly involutive duality.
        {"fig4_antipodal_not_strong",
         {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10},
         {5, 2, 1, 4, 3, 6, 8, 11, 10, 7, 0, 9}},
        // Self-dual map on 3 vertices and 4 edges whose bottom vertex meets
        // every face an odd number of times.
        {"fig6_odd_obstruction",
         {1, 0, 3, 2, 5, 4, 7, 6},
         {6, 2, 4, 0, 1, 7, 3, 5}},
    };
    return table;
}

void self_check(const std::string& name, const CombinatorialMap& m) {
    const auto check = [&](bool ok, const char* what) {
        if (!ok) fail(Errc::FixtureSelfCheckFailed, name + ": " + what);
    };
    check(is_self_dual(m), "expected a self-dual map");
    if (name == "fig3_not_antipodal") {
        bool involutive = false;
        for (const DualityWitness& w : enumerate_dualities(m))
            if (w.involutive) involutive = true;
        check(involutive, "expected an involutive duality");
        check(is_antipodally_self_dual(m).verdict == AntipodalVerdict::SelfDualNotAntipodal,
              "expected a non-antipodal map");
        const SymmetricCycleLawReport report = symmetric_cycle_law_report(m);
        check(std::find(report.any_witness_lengths.begin(), report.any_witness_lengths.end(),
                        8) != report.any_witness_lengths.end(),
              "expected a symmetric cycle of length 8 in the incidence graph");
    } else if (name == "fig4_antipodal_not_strong") {
        check(is_antipodally_self_dual(m).verdict == AntipodalVerdict::Antipodal,
              "expected an antipodally self-dual map");
        check(!is_strongly_involutive(m).strongly_involutive,
              "expected no strongly involutive duality");
    } else if (name == "fig6_odd_obstruction") {
        const ObstructionResult obstruction = odd_edge_obstruction(m);
        check(obstruction.obstructed, "expected the odd-edge obstruction");
        check(is_antipodally_self_dual(m).verdict == AntipodalVerdict::SelfDualNotAntipodal,
              "expected a non-antipodal map");
    }
}

} // namespace

std::vector<std::string> fixture_names() {
    std::vector<std::string> names;
    for (const auto& data : fixture_table()) names.push_back(data.name);
    return names;
}

std::pair<Perm, Perm> fixture_tables(const std::string& name) {
    for (const auto& data : fixture_table())
        if (name == data.name) return {data.alpha, data.sigma};
    fail(Errc::UnknownFixture, "no fixture named '" + name + "'");
}

CombinatorialMap fixture(const std::string& name) {
    const auto [alpha, sigma] = fixture_tables(name);
    CombinatorialMap m = CombinatorialMap::build(alpha, sigma);
    self_check(name, m);
    return m;
}

CombinatorialMap random_sphere_map(std::mt19937& rng, int edge_count) {
    if (edge_count < 1) fail(Errc::BadParameter, "need at least one edge");
    const int darts = 2 * edge_count;
    Perm alpha(darts);
    for (int e = 0; e < edge_count; ++e) {
        alpha[2 * e] = 2 * e + 1;
        alpha[2 * e + 1] = 2 * e;
    }
    Perm sigma(darts);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::shuffle(sigma.begin(), sigma.end(), rng);
        try {
            return CombinatorialMap::build(alpha, sigma);
        } catch (const Error&) {
            continue; // disconnected or wrong genus; try again
        }
    }
    fail(Errc::BadParameter, "could not sample a sphere map of the requested size");
}

} // namespace sdmap
