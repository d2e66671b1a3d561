#include "planarrep/treedec.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace planarrep {

int SpanningForestAnnotated::max_edge_remember() const {
    int best = 0;
    for (const auto& [e, c] : edge_remember) best = std::max(best, c);
    return best;
}

int SpanningForestAnnotated::max_vertex_remember() const {
    int best = 0;
    for (int c : vertex_remember) best = std::max(best, c);
    return best;
}

std::vector<VertexId> detour(const SpanningForestAnnotated& f, VertexId a, VertexId b) {
    const Graph& t = f.forest;
    if (a < 0 || a >= t.vertex_count() || b < 0 || b >= t.vertex_count())
        throw structural_error("detour: endpoint out of range");
    std::vector<VertexId> parent(t.vertex_count(), -2);
    std::queue<VertexId> q;
    parent[a] = -1;
    q.push(a);
    while (!q.empty() && parent[b] == -2) {
        VertexId u = q.front();
        q.pop();
        for (VertexId w : t.neighbors(u))
            if (parent[w] == -2) {
                parent[w] = u;
                q.push(w);
            }
    }
    if (parent[b] == -2)
        throw structural_error("detour: endpoints " + std::to_string(a) + " and " +
                               std::to_string(b) + " lie in different components");
    std::vector<VertexId> path;
    for (VertexId v = b; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

namespace {

void check_spanning(const Graph& g, const Graph& forest, const char* op) {
    if (forest.vertex_count() != g.vertex_count())
        throw precondition_error(std::string(op) + ": forest and host disagree on vertex count");
    for (auto [a, b] : forest.edges())
        if (!g.has_edge(a, b))
            throw precondition_error(std::string(op) + ": forest edge " + std::to_string(a) + "-" +
                                     std::to_string(b) + " is not a host edge");
    if (forest.has_cycle())
        throw precondition_error(std::string(op) + ": forest contains a cycle");
    if (forest.component_count() != g.component_count())
        throw precondition_error(std::string(op) + ": forest does not span every component");
}

}  // namespace

SpanningForestAnnotated annotate_forest(const Graph& host, Graph forest) {
    check_spanning(host, forest, "annotate_forest");
    SpanningForestAnnotated f;
    f.forest = std::move(forest);
    f.vertex_remember.assign(host.vertex_count(), 0);
    for (auto e : f.forest.edges()) f.edge_remember[e] = 0;
    for (auto [a, b] : host.edges()) {
        if (f.forest.has_edge(a, b)) continue;
        auto path = detour(f, a, b);
        for (VertexId v : path) ++f.vertex_remember[v];
        for (size_t i = 0; i + 1 < path.size(); ++i) ++f.edge_remember[make_edge(path[i], path[i + 1])];
    }
    return f;
}

SpanningForestAnnotated maximal_spanning_forest(const Graph& g) {
    Graph forest(g.vertex_count());
    std::vector<char> seen(g.vertex_count(), 0);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    forest.add_edge(u, w);
                    q.push(w);
                }
        }
    }
    return annotate_forest(g, std::move(forest));
}

int TreeDecomposition::width() const {
    size_t best = 0;
    for (const auto& b : bags) best = std::max(best, b.size());
    return (int)best - 1;
}

TreeDecomposition bodlaender_decomposition(const Graph& g, const SpanningForestAnnotated& f) {
    check_spanning(g, f.forest, "bodlaender_decomposition");
    const int n = g.vertex_count();
    auto tree_edges = f.forest.edges();

    TreeDecomposition td;
    td.tree = Graph(n + (int)tree_edges.size());
    td.bags.resize(td.tree.vertex_count());
    td.origin.resize(td.tree.vertex_count());
    std::map<Edge, int> node_of_edge;
    for (VertexId v = 0; v < n; ++v) {
        td.bags[v] = {v};
        td.origin[v] = {false, v, {-1, -1}};
    }
    for (int k = 0; k < (int)tree_edges.size(); ++k) {
        int node = n + k;
        auto [a, b] = tree_edges[k];
        td.bags[node] = {a, b};
        td.origin[node] = {true, -1, tree_edges[k]};
        node_of_edge[tree_edges[k]] = node;
        td.tree.add_edge(a, node);
        td.tree.add_edge(node, b);
    }

    // remember numbers recomputed here so the width assertion is authoritative
    std::map<Edge, int> er;
    std::vector<int> vr(n, 0);
    for (auto e : tree_edges) er[e] = 0;
    for (auto [a, b] : g.edges()) {
        if (f.forest.has_edge(a, b)) continue;
        auto path = detour(f, a, b);
        const VertexId chosen = std::min(a, b);
        for (VertexId v : path) {
            ++vr[v];
            td.bags[v].push_back(chosen);
        }
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            Edge e = make_edge(path[i], path[i + 1]);
            ++er[e];
            td.bags[node_of_edge[e]].push_back(chosen);
        }
    }
    for (auto& bag : td.bags) {
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    }

    int max_er = 0, max_vr = 0;
    for (auto& [e, c] : er) max_er = std::max(max_er, c);
    for (int c : vr) max_vr = std::max(max_vr, c);
    const int bound = std::max(max_vr, max_er + 1);
    if (td.width() > bound)
        throw invariant_breach("width-bound", "decomposition width " + std::to_string(td.width()) +
                                                  " exceeds max{vr, er+1} = " + std::to_string(bound));
    return td;
}

TreeDecCheck validate_treedec(const Graph& g, const TreeDecomposition& td) {
    TreeDecCheck out;
    const int n = g.vertex_count();
    if (td.tree.vertex_count() != td.node_count()) {
        out.failed_axiom = "tree-shape";
        out.detail = "tree and bag table disagree on node count";
        return out;
    }
    if (td.tree.has_cycle()) {
        out.failed_axiom = "tree-shape";
        out.detail = "tree contains a cycle";
        return out;
    }
    std::vector<std::vector<int>> nodes_of(n);
    for (int t = 0; t < td.node_count(); ++t)
        for (VertexId v : td.bags[t]) {
            if (v < 0 || v >= n) {
                out.failed_axiom = "coverage";
                out.detail = "bag of node " + std::to_string(t) + " names unknown vertex " +
                             std::to_string(v);
                return out;
            }
            nodes_of[v].push_back(t);
        }
    for (VertexId v = 0; v < n; ++v)
        if (nodes_of[v].empty()) {
            out.failed_axiom = "coverage";
            out.detail = "vertex " + std::to_string(v) + " appears in no bag";
            return out;
        }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (int t : nodes_of[u])
            if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), v)) {
                covered = true;
                break;
            }
        if (!covered) {
            out.failed_axiom = "edge-coverage";
            out.detail = "edge " + std::to_string(u) + "-" + std::to_string(v) + " fits no bag";
            return out;
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        const auto& nodes = nodes_of[v];  // sorted by construction
        std::vector<char> seen(nodes.size(), 0);
        std::vector<int> stack = {nodes[0]};
        seen[0] = 1;
        size_t reached = 1;
        auto pos = [&](int t) {
            auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
            return it != nodes.end() && *it == t ? (int)(it - nodes.begin()) : -1;
        };
        while (!stack.empty()) {
            int t = stack.back();
            stack.pop_back();
            for (int u : td.tree.neighbors(t)) {
                int p = pos(u);
                if (p >= 0 && !seen[p]) {
                    seen[p] = 1;
                    ++reached;
                    stack.push_back(u);
                }
            }
        }
        if (reached != nodes.size()) {
            out.failed_axiom = "subtree-connectivity";
            out.detail = "nodes holding vertex " + std::to_string(v) + " are disconnected";
            return out;
        }
    }
    out.pass = true;
    return out;
}

namespace {

struct DisjointSet {
    std::vector<int> parent;
    explicit DisjointSet(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

}  // namespace

SpanningForestAnnotated extend_forest(const EmbeddedGraph& g, const SpanningForestAnnotated& h_forest) {
    const Graph& host = g.graph;
    const int n = host.vertex_count();
    BoundaryInfo b = outer_boundary(g);
    std::set<Edge> boundary(b.edges.begin(), b.edges.end());

    Graph h(n);
    for (auto e : host.edges())
        if (!boundary.count(e)) h.add_edge(e.first, e.second);
    check_spanning(h, h_forest.forest, "extend_forest");
    if ((int)h_forest.vertex_remember.size() != n)
        throw precondition_error("extend_forest: remember table covers the wrong vertex count");

    Graph t = h_forest.forest;
    DisjointSet ds(n);
    for (auto [x, y] : t.edges()) ds.unite(x, y);
    for (auto [x, y] : b.edges)
        if (ds.unite(x, y)) t.add_edge(x, y);

    SpanningForestAnnotated out = annotate_forest(host, std::move(t));

    const int dmax = host.max_degree();
    for (auto& [e, c] : out.edge_remember) {
        auto it = h_forest.edge_remember.find(e);
        const int prior = it == h_forest.edge_remember.end() ? 0 : it->second;
        if (c > prior + 2)
            throw invariant_breach("forest-extension",
                                   "tree edge " + std::to_string(e.first) + "-" +
                                       std::to_string(e.second) + " rose from " +
                                       std::to_string(prior) + " to " + std::to_string(c) +
                                       " detours (allowed +2)");
    }
    for (VertexId v = 0; v < n; ++v)
        if (out.vertex_remember[v] > h_forest.vertex_remember[v] + dmax)
            throw invariant_breach("forest-extension",
                                   "vertex " + std::to_string(v) + " rose from " +
                                       std::to_string(h_forest.vertex_remember[v]) + " to " +
                                       std::to_string(out.vertex_remember[v]) +
                                       " detours (allowed +" + std::to_string(dmax) + ")");
    return out;
}

TreeDecomposition extend_decomposition(const EmbeddedGraph& g, const SpanningForestAnnotated& t,
                                       const TreeDecomposition& prior) {
    TreeDecomposition fresh = bodlaender_decomposition(g.graph, t);
    BoundaryInfo b = outer_boundary(g);
    std::set<VertexId> outer(b.vertices.begin(), b.vertices.end());
    std::map<Edge, int> node_of_edge;
    for (int k = 0; k < fresh.node_count(); ++k)
        if (fresh.origin[k].is_edge) node_of_edge[fresh.origin[k].e] = k;

    const int dmax = g.graph.max_degree();
    for (int p = 0; p < prior.node_count(); ++p) {
        const NodeOrigin& o = prior.origin[p];
        int q;
        if (o.is_edge) {
            auto it = node_of_edge.find(o.e);
            if (it == node_of_edge.end())
                throw invariant_breach("decomposition-extension",
                                       "prior tree edge " + std::to_string(o.e.first) + "-" +
                                           std::to_string(o.e.second) + " left the forest");
            q = it->second;
        } else {
            q = o.v;
        }
        const auto& old_bag = prior.bags[p];
        const auto& new_bag = fresh.bags[q];
        if (!std::includes(new_bag.begin(), new_bag.end(), old_bag.begin(), old_bag.end()))
            throw invariant_breach("decomposition-extension",
                                   "a grown bag dropped prior members at node " + std::to_string(q));
        int grown = 0;
        for (VertexId v : new_bag) {
            if (std::binary_search(old_bag.begin(), old_bag.end(), v)) continue;
            ++grown;
            if (!outer.count(v))
                throw invariant_breach("decomposition-extension",
                                       "bag growth used non-boundary vertex " + std::to_string(v));
        }
        const int allowed = o.is_edge ? 2 : dmax;
        if (grown > allowed)
            throw invariant_breach("decomposition-extension",
                                   "bag at node " + std::to_string(q) + " grew by " +
                                       std::to_string(grown) + " (allowed " +
                                       std::to_string(allowed) + ")");
    }

    TreeDecCheck check = validate_treedec(g.graph, fresh);
    if (!check.pass)
        throw invariant_breach("decomposition-extension", check.failed_axiom + ": " + check.detail);
    return fresh;
}

LayeredDecomposition layered_decomposition(const EmbeddedGraph& eg_expanded,
                                           const LayerPartition& layers) {
    EdgePeelResult ep = boundary_edge_peel(eg_expanded);

    LayeredDecomposition out;
    out.forest = annotate_forest(ep.core.graph, ep.core.graph);
    out.td = bodlaender_decomposition(ep.core.graph, out.forest);

    for (int j = (int)ep.stages.size() - 1; j >= 0; --j) {
        const EmbeddedGraph& g = ep.stages[j].before;
        SpanningForestAnnotated grown = extend_forest(g, out.forest);
        LayerStepStats st;
        st.stage_index = j + 1;
        st.max_degree = g.graph.max_degree();
        for (auto& [e, c] : grown.edge_remember) {
            auto it = out.forest.edge_remember.find(e);
            const int prior = it == out.forest.edge_remember.end() ? 0 : it->second;
            st.max_er_increment = std::max(st.max_er_increment, c - prior);
        }
        for (VertexId v = 0; v < g.graph.vertex_count(); ++v)
            st.max_vr_increment = std::max(
                st.max_vr_increment, grown.vertex_remember[v] - out.forest.vertex_remember[v]);
        out.td = extend_decomposition(g, grown, out.td);
        out.forest = std::move(grown);
        out.steps.push_back(st);
    }

    TreeDecCheck check = validate_treedec(eg_expanded.graph, out.td);
    if (!check.pass) throw invariant_breach("layer-bound", check.failed_axiom + ": " + check.detail);
    auto idx = layers.layer_index(eg_expanded.graph.vertex_count());
    for (int tnode = 0; tnode < out.td.node_count(); ++tnode) {
        std::map<int, int> per_layer;
        for (VertexId v : out.td.bags[tnode])
            if (++per_layer[idx[v]] > 4)
                throw invariant_breach("layer-bound",
                                       "bag of node " + std::to_string(tnode) + " meets layer " +
                                           std::to_string(idx[v]) + " in more than 4 vertices");
    }
    return out;
}

TreeDecomposition contract_decomposition(const TreeDecomposition& td, const ExpansionMap& m) {
    const int n_exp = (int)m.backward.size();
    TreeDecomposition out;
    out.tree = td.tree;
    out.bags.resize(td.node_count());
    out.origin.resize(td.node_count());
    for (int t = 0; t < td.node_count(); ++t) {
        std::vector<VertexId> bag;
        for (VertexId v : td.bags[t]) {
            if (v < 0 || v >= n_exp)
                throw structural_error("contract_decomposition: bag vertex " + std::to_string(v) +
                                       " is not covered by the map");
            bag.push_back(m.backward[v]);
        }
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        out.bags[t] = std::move(bag);
        NodeOrigin o = td.origin[t];
        if (o.is_edge) {
            if (o.e.first < 0 || o.e.first >= n_exp || o.e.second < 0 || o.e.second >= n_exp)
                throw structural_error("contract_decomposition: origin edge is not covered by the map");
            // endpoints may collapse onto one original vertex; keep the pair as-is then
            VertexId a = m.backward[o.e.first], b = m.backward[o.e.second];
            o.e = {std::min(a, b), std::max(a, b)};
        } else if (o.v >= 0) {
            o.v = m.backward[o.v];
        }
        out.origin[t] = o;
    }
    return out;
}

}  // namespace planarrep
