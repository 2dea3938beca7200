#include "sdmap/symmetry.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "sdmap/antipodal.hpp"
#include "sdmap/error.hpp"

namespace sdmap {

void require_simple_cycle(const CombinatorialMap& host, const std::vector<Dart>& cycle) {
    if (cycle.empty()) fail(Errc::NotACycle, "empty walk");
    const int k = static_cast<int>(cycle.size());
    for (Dart d : cycle)
        if (d < 0 || d >= host.dart_count()) fail(Errc::NotACycle, "dart out of range");
    for (int i = 0; i < k; ++i) {
        const Dart here = cycle[i];
        const Dart next = cycle[(i + 1) % k];
        if (host.vertex_of(host.alpha(here)) != host.vertex_of(next))
            fail(Errc::NotACycle, "walk is not closed at step " + std::to_string(i));
    }
    std::set<int> vertices, edges;
    for (Dart d : cycle) {
        if (!vertices.insert(host.vertex_of(d)).second)
            fail(Errc::NotSimple, "walk revisits a vertex");
        if (!edges.insert(host.edge_of(d)).second)
            fail(Errc::NotSimple, "walk reuses an edge");
    }
}

SideSplit cycle_sides(const CombinatorialMap& host, const std::vector<Dart>& cycle) {
    require_simple_cycle(host, cycle);

    std::vector<char> on_cycle_edge(host.edge_count(), 0);
    std::vector<char> on_cycle_vertex(host.vertex_count(), 0);
    for (Dart d : cycle) {
        on_cycle_edge[host.edge_of(d)] = 1;
        on_cycle_vertex[host.vertex_of(d)] = 1;
    }

    // Cluster faces across non-cycle edges.
    std::vector<int> face_component(host.face_count(), -1);
    int components = 0;
    for (int f = 0; f < host.face_count(); ++f) {
        if (face_component[f] >= 0) continue;
        if (components >= 2)
            fail(Errc::NotACycle, "cycle does not separate the sphere into two sides");
        std::queue<int> queue;
        queue.push(f);
        face_component[f] = components;
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop();
            for (Dart d : host.face_darts(cur)) {
                if (on_cycle_edge[host.edge_of(d)]) continue;
                const int other = host.face_of(host.alpha(d));
                if (face_component[other] < 0) {
                    face_component[other] = components;
                    queue.push(other);
                }
            }
        }
        ++components;
    }
    if (components != 2)
        fail(Errc::NotACycle, "cycle does not separate the sphere into two sides");

    SideSplit split;
    split.face_side = face_component; // face 0 always lands in component 0
    split.vertex_side.assign(host.vertex_count(), -1);
    split.edge_side.assign(host.edge_count(), -1);
    for (int e = 0; e < host.edge_count(); ++e) {
        if (on_cycle_edge[e]) continue;
        const Dart d = host.edge_darts(e).front();
        split.edge_side[e] = face_component[host.face_of(d)];
    }
    for (int v = 0; v < host.vertex_count(); ++v) {
        if (on_cycle_vertex[v]) continue;
        split.vertex_side[v] = face_component[host.face_of(host.vertex_darts(v).front())];
    }
    for (int v = 0; v < host.vertex_count(); ++v)
        if (split.vertex_side[v] >= 0) ++split.counts[split.vertex_side[v]][0];
    for (int e = 0; e < host.edge_count(); ++e)
        if (split.edge_side[e] >= 0) ++split.counts[split.edge_side[e]][1];
    for (int f = 0; f < host.face_count(); ++f) ++split.counts[split.face_side[f]][2];
    return split;
}

namespace {

bool exchanges_sides(const CombinatorialMap& host, const std::vector<int>& cycle_edges_sorted,
                     const SideSplit& split, const MapMorphism& aut) {
    const ElementAction action = element_action(aut);
    // Cycle edge set must be stabilized.
    for (int e : cycle_edges_sorted)
        if (!std::binary_search(cycle_edges_sorted.begin(), cycle_edges_sorted.end(),
                                action.edge_image[e]))
            return false;
    // Every face must land on the opposite side.
    for (int f = 0; f < host.face_count(); ++f)
        if (split.face_side[action.face_image[f]] == split.face_side[f]) return false;
    return true;
}

} // namespace

// Witness pool per policy.  AntipodalInvolution keeps only element
// involutions whose squares-graph extension leaves no vertex, edge or face
// fixed (witnesses realizable as the antipodal map); the identity can never
// exchange sides and is dropped in both cases.
static std::vector<MapMorphism> witness_pool(const CombinatorialMap& host,
                                             CycleWitnessPolicy policy) {
    std::vector<MapMorphism> result;
    for (MapMorphism& aut : enumerate_automorphisms(host)) {
        if (is_identity(aut.dart_map)) continue;
        if (policy == CycleWitnessPolicy::AntipodalInvolution) {
            const SquareExtension ext = square_extension(host, aut);
            if (!ext.element_involutive || !ext.fixed.empty()) continue;
        }
        result.push_back(std::move(aut));
    }
    return result;
}

SymmetricCycleCheck is_symmetric_cycle(const CombinatorialMap& host,
                                       const std::vector<Dart>& cycle,
                                       CycleWitnessPolicy policy) {
    SymmetricCycleCheck check;
    const SideSplit split = cycle_sides(host, cycle);
    // Fast filter: exchange needs equal element counts on both sides.
    for (int kind = 0; kind < 3; ++kind)
        if (split.counts[0][kind] != split.counts[1][kind]) return check;
    std::vector<int> edges;
    for (Dart d : cycle) edges.push_back(host.edge_of(d));
    std::sort(edges.begin(), edges.end());
    for (const MapMorphism& aut : witness_pool(host, policy)) {
        if (exchanges_sides(host, edges, split, aut)) {
            check.symmetric = true;
            check.witness = aut;
            return check;
        }
    }
    return check;
}

namespace {

// DFS state for sigma-invariant cycle growth under one automorphism.
struct InvariantCycleSearch {
    const CombinatorialMap& host;
    const std::vector<int>& edge_image; // action of the automorphism on edges
    int max_len;
    std::int64_t budget;
    std::int64_t extensions = 0;
    bool budget_exceeded = false;

    std::vector<char> edge_in_path;
    std::vector<char> vertex_in_path;
    std::vector<int> required_degree; // vertex -> degree among orbit-closure edges
    std::vector<char> edge_required;
    int required_count = 0;
    int anchor_edge = 0;
    std::vector<Dart> path;
    std::vector<std::vector<Dart>> found;

    InvariantCycleSearch(const CombinatorialMap& h, const std::vector<int>& img, int ml,
                         std::int64_t b)
        : host(h), edge_image(img), max_len(ml), budget(b),
          edge_in_path(h.edge_count(), 0), vertex_in_path(h.vertex_count(), 0),
          required_degree(h.vertex_count(), 0), edge_required(h.edge_count(), 0) {}

    // Adds the automorphism orbit of edge e to the required set; returns
    // false (with the partial additions recorded in `added` for retract)
    // when the closure reaches below the anchor, outgrows max_len, or gives
    // some vertex required degree > 2.  A loop consumes both slots of its
    // vertex.
    bool require_orbit(int e, std::vector<int>& added) {
        for (int cur = e; !edge_required[cur]; cur = edge_image[cur]) {
            edge_required[cur] = 1;
            ++required_count;
            added.push_back(cur);
            const Dart d = host.edge_darts(cur).front();
            const int va = host.vertex_of(d);
            const int vb = host.vertex_of(host.alpha(d));
            ++required_degree[va];
            ++required_degree[vb];
            if (cur < anchor_edge) return false; // found from its own anchor instead
            if (max_len > 0 && required_count > max_len) return false;
            if (required_degree[va] > 2 || required_degree[vb] > 2) return false;
        }
        return true;
    }

    void retract(const std::vector<int>& added) {
        for (int e : added) {
            edge_required[e] = 0;
            --required_count;
            const Dart d = host.edge_darts(e).front();
            --required_degree[host.vertex_of(d)];
            --required_degree[host.vertex_of(host.alpha(d))];
        }
    }

    void run() {
        for (anchor_edge = 0; anchor_edge < host.edge_count(); ++anchor_edge) {
            if (budget_exceeded) return;
            const Dart d0 = host.edge_darts(anchor_edge).front();
            std::vector<int> added;
            if (require_orbit(anchor_edge, added)) {
                edge_in_path[anchor_edge] = 1;
                vertex_in_path[host.vertex_of(d0)] = 1;
                path.push_back(d0);
                grow(host.vertex_of(host.alpha(d0)), host.vertex_of(d0));
                path.pop_back();
                vertex_in_path[host.vertex_of(d0)] = 0;
                edge_in_path[anchor_edge] = 0;
            }
            retract(added);
        }
    }

    void grow(int at_vertex, int start_vertex) {
        if (budget_exceeded) return;
        if (++extensions > budget) {
            budget_exceeded = true;
            return;
        }
        if (at_vertex == start_vertex) {
            // Candidate cycle: must use exactly the orbit closure.
            if (required_count == static_cast<int>(path.size())) found.push_back(path);
            return; // a simple cycle cannot be extended through its start
        }
        if (vertex_in_path[at_vertex]) return;
        if (max_len > 0 && static_cast<int>(path.size()) >= max_len) return;
        vertex_in_path[at_vertex] = 1;
        for (Dart d : host.vertex_darts(at_vertex)) {
            const int e = host.edge_of(d);
            if (e <= anchor_edge || edge_in_path[e]) continue; // anchor stays minimal
            std::vector<int> added;
            const bool ok = require_orbit(e, added);
            if (ok) {
                edge_in_path[e] = 1;
                path.push_back(d);
                grow(host.vertex_of(host.alpha(d)), start_vertex);
                path.pop_back();
                edge_in_path[e] = 0;
            }
            retract(added);
            if (budget_exceeded) break;
        }
        vertex_in_path[at_vertex] = 0;
    }
};

} // namespace

SymmetricCycleEnumeration enumerate_symmetric_cycles(const CombinatorialMap& host, int max_len,
                                                     std::int64_t budget,
                                                     CycleWitnessPolicy policy) {
    SymmetricCycleEnumeration out;
    const std::vector<MapMorphism> autos = witness_pool(host, policy);
    std::set<std::vector<int>> seen_edge_sets;

    for (const MapMorphism& aut : autos) {
        const ElementAction action = element_action(aut);
        InvariantCycleSearch search(host, action.edge_image, max_len, budget);
        search.run();
        out.extensions += search.extensions;
        if (search.budget_exceeded) out.budget_exceeded = true;
        for (const auto& cycle : search.found) {
            std::vector<int> edges;
            for (Dart d : cycle) edges.push_back(host.edge_of(d));
            std::sort(edges.begin(), edges.end());
            if (seen_edge_sets.count(edges)) continue;
            SideSplit split = cycle_sides(host, cycle);
            bool balanced = true;
            for (int kind = 0; kind < 3; ++kind)
                if (split.counts[0][kind] != split.counts[1][kind]) balanced = false;
            if (!balanced || !exchanges_sides(host, edges, split, aut)) continue;
            seen_edge_sets.insert(edges);
            out.witnesses.push_back(SymmetricCycleWitness{cycle, std::move(edges), aut,
                                                          std::move(split)});
        }
    }
    std::sort(out.witnesses.begin(), out.witnesses.end(),
              [](const SymmetricCycleWitness& a, const SymmetricCycleWitness& b) {
                  if (a.edges.size() != b.edges.size()) return a.edges.size() < b.edges.size();
                  return a.edges < b.edges;
              });
    return out;
}

SymmetricCycleLawReport symmetric_cycle_law_report(const CombinatorialMap& m, int max_len,
                                      std::int64_t budget) {
    SymmetricCycleLawReport report;
    report.input_antipodally_self_dual =
        is_antipodally_self_dual(m).verdict == AntipodalVerdict::Antipodal;
    const DerivedMap inc = incidence(m);

    const SymmetricCycleEnumeration strict = enumerate_symmetric_cycles(
        inc.map, max_len, budget, CycleWitnessPolicy::AntipodalInvolution);
    report.budget_exceeded = strict.budget_exceeded;
    std::set<int> lengths;
    for (const auto& witness : strict.witnesses)
        lengths.insert(static_cast<int>(witness.edges.size()));
    report.lengths.assign(lengths.begin(), lengths.end());
    report.has_symmetric_cycle = !report.lengths.empty();
    report.consistent = report.has_symmetric_cycle;
    for (int len : report.lengths)
        if (len % 4 != 2) report.consistent = false;

    const SymmetricCycleEnumeration loose = enumerate_symmetric_cycles(
        inc.map, max_len, budget, CycleWitnessPolicy::AnyAutomorphism);
    report.budget_exceeded = report.budget_exceeded || loose.budget_exceeded;
    std::set<int> any_lengths;
    for (const auto& witness : loose.witnesses)
        any_lengths.insert(static_cast<int>(witness.edges.size()));
    report.any_witness_lengths.assign(any_lengths.begin(), any_lengths.end());
    for (int len : report.any_witness_lengths)
        if (len % 4 == 0) report.has_bad_any_witness_length = true;
    return report;
}

AntipodalSymmetryResult is_antipodally_symmetric(const CombinatorialMap& host) {
    AntipodalSymmetryResult result;
    for (const MapMorphism& aut : enumerate_automorphisms(host)) {
        const SquareExtension ext = square_extension(host, aut);
        if (!ext.element_involutive || !ext.fixed.empty()) continue;
        if (is_identity(aut.dart_map)) continue;
        result.antipodally_symmetric = true;
        result.witness = aut;
        return result;
    }
    return result;
}

} // namespace sdmap
