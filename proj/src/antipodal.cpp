#include "sdmap/antipodal.hpp"

#include <algorithm>
#include <set>

#include "sdmap/error.hpp"

namespace sdmap {

const char* antipodal_verdict_name(AntipodalVerdict verdict) {
    switch (verdict) {
        case AntipodalVerdict::Antipodal: return "antipodal";
        case AntipodalVerdict::SelfDualNotAntipodal: return "self-dual-not-antipodal";
        case AntipodalVerdict::NotSelfDual: return "not-self-dual";
    }
    return "?";
}

SquareExtension square_extension(const CombinatorialMap& host, const MapMorphism& aut) {
    if (!(aut.source == host) || !(aut.target == host))
        fail(Errc::NotAutomorphism, "morphism is not an automorphism of the host map");
    if (!is_valid_morphism(aut))
        fail(Errc::NotAutomorphism, "morphism does not respect the host rotation system");

    SquareExtension ext;
    ext.base = aut;
    ext.action = element_action(aut);

    auto involutive_on = [](const std::vector<int>& image) {
        for (int i = 0; i < static_cast<int>(image.size()); ++i)
            if (image[image[i]] != i) return false;
        return true;
    };
    ext.element_involutive = involutive_on(ext.action.vertex_image) &&
                             involutive_on(ext.action.edge_image) &&
                             involutive_on(ext.action.face_image);

    for (int v = 0; v < host.vertex_count(); ++v)
        if (ext.action.vertex_image[v] == v) ext.fixed.push_back(host.vertex_ref(v));
    for (int e = 0; e < host.edge_count(); ++e)
        if (ext.action.edge_image[e] == e) ext.fixed.push_back(host.edge_ref(e));
    for (int f = 0; f < host.face_count(); ++f)
        if (ext.action.face_image[f] == f) ext.fixed.push_back(host.face_ref(f));
    return ext;
}

InvolutiveLabeling labeling_from_involution(const SquareExtension& ext) {
    if (!ext.element_involutive)
        fail(Errc::NotInvolution, "base automorphism does not square to the identity on elements");
    const CombinatorialMap& host = ext.base.source;

    InvolutiveLabeling out;
    out.host_square = square(host);
    out.labels.resize(out.host_square.map.vertex_count());

    int next_pair = 1;
    auto assign = [&](ElementKind kind, const std::vector<int>& image, int count) {
        for (int i = 0; i < count; ++i) {
            const int self = out.host_square.derived_vertex(kind, i);
            if (!out.labels[self].empty()) continue;
            const int other = out.host_square.derived_vertex(kind, image[i]);
            if (other == self) {
                out.labels[self] = {next_pair, -next_pair};
                out.fixed_vertices.push_back(self);
            } else {
                out.labels[self] = {next_pair};
                out.labels[other] = {-next_pair};
            }
            ++next_pair;
        }
    };
    assign(ElementKind::Vertex, ext.action.vertex_image, host.vertex_count());
    assign(ElementKind::Edge, ext.action.edge_image, host.edge_count());
    assign(ElementKind::Face, ext.action.face_image, host.face_count());
    return out;
}

namespace {

// Simple adjacency of the squares-graph skeleton.
std::vector<std::set<int>> skeleton_adjacency(const CombinatorialMap& m) {
    std::vector<std::set<int>> adj(m.vertex_count());
    for (int e = 0; e < m.edge_count(); ++e) {
        const Dart d = m.edge_darts(e).front();
        const int a = m.vertex_of(d);
        const int b = m.vertex_of(m.alpha(d));
        adj[a].insert(b);
        adj[b].insert(a);
    }
    return adj;
}

} // namespace

std::vector<int> involution_from_labeling(const DerivedMap& host_square,
                                          const std::vector<std::vector<int>>& labels) {
    const int n = host_square.map.vertex_count();
    if (static_cast<int>(labels.size()) != n)
        fail(Errc::UnknownVertex, "labeling does not cover every squares-graph vertex");
    std::vector<int> owner_plus, owner_minus;
    std::vector<int> involution(n, -1);
    auto slot = [&](std::vector<int>& table, int pair) -> int& {
        if (pair >= static_cast<int>(table.size())) table.resize(pair + 1, -1);
        return table[pair];
    };
    for (int v = 0; v < n; ++v) {
        for (int label : labels[v]) {
            if (label == 0) fail(Errc::ValidationError, "label 0 is not allowed");
            int& cell = label > 0 ? slot(owner_plus, label) : slot(owner_minus, -label);
            if (cell >= 0) fail(Errc::ValidationError, "label used on two vertices");
            cell = v;
        }
    }
    for (int pair = 0; pair < static_cast<int>(std::max(owner_plus.size(), owner_minus.size()));
         ++pair) {
        const int a = pair < static_cast<int>(owner_plus.size()) ? owner_plus[pair] : -1;
        const int b = pair < static_cast<int>(owner_minus.size()) ? owner_minus[pair] : -1;
        if (a < 0 && b < 0) continue;
        if (a < 0 || b < 0) fail(Errc::ValidationError, "label pair is only half-used");
        involution[a] = b;
        involution[b] = a;
    }
    for (int v = 0; v < n; ++v)
        if (involution[v] < 0) fail(Errc::ValidationError, "vertex carries no label");
    return involution;
}

LabelingCheck verify_involutive_labeling(const DerivedMap& host_square,
                                         const std::vector<std::vector<int>>& labels) {
    const int n = host_square.map.vertex_count();
    if (static_cast<int>(labels.size()) != n)
        fail(Errc::UnknownVertex, "labeling does not cover every squares-graph vertex");

    LabelingCheck check;
    auto violate = [&](int condition, std::string detail) {
        check.valid = false;
        check.violated_condition = condition;
        check.detail = std::move(detail);
    };

    for (int v = 0; v < n && check.valid; ++v) {
        const auto& set = labels[v];
        if (set.empty() || set.size() > 2) {
            violate(1, "vertex " + std::to_string(v) + " carries " +
                           std::to_string(set.size()) + " labels");
            return check;
        }
        if (set.size() == 2 && set[0] != -set[1]) {
            violate(2, "vertex " + std::to_string(v) + " carries an unpaired two-label set");
            return check;
        }
    }

    std::set<int> used;
    for (int v = 0; v < n; ++v)
        for (int label : labels[v]) {
            if (label == 0) {
                violate(1, "label 0 is not allowed");
                return check;
            }
            if (!used.insert(label).second) {
                violate(3, "label " + std::to_string(label) + " appears on two vertices");
                return check;
            }
        }

    std::vector<int> involution;
    try {
        involution = involution_from_labeling(host_square, labels);
    } catch (const Error&) {
        violate(3, "labels do not encode an involution");
        return check;
    }

    const auto adjacency = skeleton_adjacency(host_square.map);
    for (int u = 0; u < n; ++u)
        for (int v : adjacency[u]) {
            const bool mirrored = adjacency[involution[u]].count(involution[v]) > 0;
            if (!mirrored) {
                violate(4, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                               "} has no mirrored edge under the labeling");
                return check;
            }
        }
    return check;
}

AntipodalityResult is_antipodally_self_dual(const CombinatorialMap& m) {
    AntipodalityResult result;
    const std::vector<DualityWitness> dualities = enumerate_dualities(m);
    result.dualities_total = static_cast<int>(dualities.size());
    if (dualities.empty()) {
        result.verdict = AntipodalVerdict::NotSelfDual;
        return result;
    }

    const DerivedMap inc = incidence(m);
    result.verdict = AntipodalVerdict::SelfDualNotAntipodal;
    for (int k = 0; k < static_cast<int>(dualities.size()); ++k) {
        const DualityWitness& w = dualities[k];
        RejectedDuality rejection;
        rejection.duality_index = k;
        rejection.involutive = w.involutive;
        if (!w.involutive) {
            result.rejections.push_back(rejection);
            continue;
        }
        ++result.involutive_dualities;
        MapMorphism sigma_i = duality_incidence_automorphism(w.morphism);
        SquareExtension ext = square_extension(inc.map, sigma_i);
        if (!ext.element_involutive) {
            result.rejections.push_back(rejection);
            continue;
        }
        if (ext.fixed.empty()) {
            result.verdict = AntipodalVerdict::Antipodal;
            result.witness = w;
            result.incidence_automorphism = std::move(sigma_i);
            result.labeling = labeling_from_involution(ext);
            result.rejections.clear();
            return result;
        }
        rejection.first_fixed = ext.fixed.front();
        result.rejections.push_back(rejection);
    }
    return result;
}

ObstructionResult odd_edge_obstruction(const CombinatorialMap& m) {
    ObstructionResult result;
    result.self_dual = is_self_dual(m);
    for (int v = 0; v < m.vertex_count(); ++v) {
        std::vector<int> counts(m.face_count(), 0);
        for (Dart d : m.vertex_darts(v)) ++counts[m.face_of(d)];
        bool all_odd = true;
        for (int f = 0; f < m.face_count(); ++f)
            if (counts[f] % 2 == 0) { // zero corners is even as well
                all_odd = false;
                break;
            }
        if (all_odd) {
            result.obstructed = true;
            result.witness_vertex = v;
            result.corner_counts = std::move(counts);
            return result;
        }
    }
    return result;
}

namespace {

struct RawSearch {
    const std::vector<std::set<int>>& adjacency;
    const std::vector<int>& type_of;    // 0 = black, 1 = white, 2 = V_E, 3 = V_F
    std::vector<int> partner;

    explicit RawSearch(const std::vector<std::set<int>>& adj, const std::vector<int>& types)
        : adjacency(adj), type_of(types), partner(adj.size(), -1) {}

    bool compatible(int u, int v) const {
        if (u == v) return false; // fixed-point-free
        const int tu = type_of[u], tv = type_of[v];
        if (tu <= 1) {
            if (tv > 1 || tu == tv) return false; // black pairs with white
        } else if (tu != tv) {
            return false;
        }
        if (adjacency[u].size() != adjacency[v].size()) return false;
        // Every already-paired neighbour of u must mirror to a neighbour of v.
        for (int w : adjacency[u])
            if (partner[w] >= 0 && !adjacency[v].count(partner[w])) return false;
        for (int w : adjacency[v])
            if (partner[w] >= 0 && !adjacency[u].count(partner[w])) return false;
        return true;
    }

    bool extend() {
        int u = -1;
        for (int i = 0; i < static_cast<int>(partner.size()); ++i)
            if (partner[i] < 0) {
                u = i;
                break;
            }
        if (u < 0) return verify();
        for (int v = 0; v < static_cast<int>(partner.size()); ++v) {
            if (partner[v] >= 0 || !compatible(u, v)) continue;
            partner[u] = v;
            partner[v] = u;
            if (extend()) return true;
            partner[u] = -1;
            partner[v] = -1;
        }
        return false;
    }

    bool verify() const {
        for (int u = 0; u < static_cast<int>(partner.size()); ++u)
            for (int v : adjacency[u])
                if (!adjacency[partner[u]].count(partner[v])) return false;
        return true;
    }
};

} // namespace

std::optional<bool> raw_labeling_antipodality_oracle(const CombinatorialMap& m,
                                                     int max_square_vertices) {
    const DerivedMap inc = incidence(m);
    const DerivedMap sq = square(inc.map);
    const int n = sq.map.vertex_count();
    if (n > max_square_vertices) return std::nullopt;

    std::vector<int> types(n);
    for (int i = 0; i < n; ++i) {
        switch (sq.vertex_origin[i].kind) {
            case ElementKind::Vertex:
                types[i] = inc.incidence_black(sq.vertex_origin[i].index) ? 0 : 1;
                break;
            case ElementKind::Edge: types[i] = 2; break;
            case ElementKind::Face: types[i] = 3; break;
        }
    }
    const auto adjacency = skeleton_adjacency(sq.map);
    RawSearch search(adjacency, types);
    return search.extend();
}

} // namespace sdmap
