#include "planarrep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace planarrep {

Graph::Graph(int n) {
    if (n < 0) throw parameter_error("vertex count must be >= 0, got " + std::to_string(n));
    adj_.resize(n);
}

void Graph::check_vertex(VertexId v, const char* op) const {
    if (v < 0 || v >= vertex_count())
        throw structural_error(std::string(op) + ": vertex " + std::to_string(v) +
                               " out of range [0," + std::to_string(vertex_count()) + ")");
}

void Graph::add_edge(VertexId u, VertexId v) {
    check_vertex(u, "add_edge");
    check_vertex(v, "add_edge");
    if (u == v)
        throw structural_error("add_edge: loop edge " + std::to_string(u) + "-" + std::to_string(v));
    auto insert_at = [&](VertexId a, VertexId b) {
        auto it = std::lower_bound(adj_[a].begin(), adj_[a].end(), b);
        if (it != adj_[a].end() && *it == b)
            throw structural_error("add_edge: duplicate edge " + std::to_string(u) + "-" +
                                   std::to_string(v));
        adj_[a].insert(it, b);
    };
    insert_at(u, v);
    insert_at(v, u);
    ++edge_count_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u, "has_edge");
    check_vertex(v, "has_edge");
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    check_vertex(v, "neighbors");
    return adj_[v];
}

int Graph::degree(VertexId v) const {
    check_vertex(v, "degree");
    return (int)adj_[v].size();
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& a : adj_) best = std::max(best, (int)a.size());
    return best;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < vertex_count(); ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

std::vector<int> Graph::component_ids() const {
    std::vector<int> comp(vertex_count(), -1);
    int next = 0;
    for (VertexId s = 0; s < vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = next;
        std::queue<VertexId> q;
        q.push(s);
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId w : adj_[u])
                if (comp[w] < 0) {
                    comp[w] = next;
                    q.push(w);
                }
        }
        ++next;
    }
    return comp;
}

int Graph::component_count() const {
    auto comp = component_ids();
    return comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
}

bool Graph::is_connected() const { return component_count() <= 1; }

bool Graph::has_cycle() const {
    return edge_count_ > vertex_count() - component_count();
}

std::vector<VertexId> FaceWalk::vertices() const {
    std::vector<VertexId> out;
    out.reserve(darts.size());
    for (const Dart& d : darts) out.push_back(d.from);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void validate_rotation(const EmbeddedGraph& eg) {
    const Graph& g = eg.graph;
    if ((int)eg.rotation.size() != g.vertex_count())
        throw structural_error("rotation: table covers " + std::to_string(eg.rotation.size()) +
                               " vertices, graph has " + std::to_string(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::vector<VertexId> sorted = eg.rotation[v];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != g.neighbors(v))
            throw structural_error("rotation: order at vertex " + std::to_string(v) +
                                   " is not a permutation of its neighbors");
    }
}

void validate_outer(const EmbeddedGraph& eg) {
    const Graph& g = eg.graph;
    auto comp = g.component_ids();
    std::map<int, int> darts_seen;
    for (const Dart& d : eg.outer) {
        if (d.from < 0 || d.from >= g.vertex_count() || d.to < 0 || d.to >= g.vertex_count() ||
            !g.has_edge(d.from, d.to))
            throw structural_error("outer face: no such dart (" + std::to_string(d.from) + "->" +
                                   std::to_string(d.to) + ")");
        ++darts_seen[comp[d.from]];
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int want = g.degree(v) > 0 ? 1 : 0;
        int got = darts_seen.count(comp[v]) ? darts_seen[comp[v]] : 0;
        if (got != want)
            throw structural_error("outer face: component of vertex " + std::to_string(v) +
                                   " carries " + std::to_string(got) +
                                   " boundary darts, expected " + std::to_string(want));
    }
}

namespace {

// next dart of (u->v) is (v->w) where w follows u in rotation(v)
Dart next_dart(const EmbeddedGraph& eg, Dart d) {
    const auto& rot = eg.rotation[d.to];
    for (size_t i = 0; i < rot.size(); ++i)
        if (rot[i] == d.from) return {d.to, rot[(i + 1) % rot.size()]};
    throw structural_error("face trace: no such dart (" + std::to_string(d.from) + "->" +
                           std::to_string(d.to) + ")");
}

}  // namespace

std::vector<FaceWalk> trace_faces(const EmbeddedGraph& eg) {
    validate_rotation(eg);
    if (eg.graph.edge_count() == 0) return {FaceWalk{}};
    std::map<Dart, bool> used;
    for (auto [u, v] : eg.graph.edges()) {
        used[{u, v}] = false;
        used[{v, u}] = false;
    }
    std::vector<FaceWalk> walks;
    for (auto& [start, taken] : used) {
        if (taken) continue;
        FaceWalk w;
        Dart d = start;
        do {
            used[d] = true;
            w.darts.push_back(d);
            d = next_dart(eg, d);
        } while (!(d == start));
        walks.push_back(std::move(w));
    }
    return walks;
}

FaceWalk trace_face_from(const EmbeddedGraph& eg, Dart start) {
    if (start.from < 0 || start.from >= eg.graph.vertex_count() ||
        !eg.graph.has_edge(start.from, start.to))
        throw structural_error("face trace: no such dart (" + std::to_string(start.from) + "->" +
                               std::to_string(start.to) + ")");
    FaceWalk w;
    Dart d = start;
    size_t cap = 2 * (size_t)eg.graph.edge_count();
    do {
        w.darts.push_back(d);
        d = next_dart(eg, d);
        if (w.darts.size() > cap)
            throw structural_error("face trace: walk does not close (broken rotation)");
    } while (!(d == start));
    return w;
}

EulerReport euler_certify(const EmbeddedGraph& eg) {
    const Graph& g = eg.graph;
    if (g.vertex_count() == 0)
        throw structural_error("euler certification: empty graph");
    if (!g.is_connected())
        throw structural_error("euler certification: graph is disconnected");
    EulerReport r;
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    r.faces = (int)trace_faces(eg).size();
    r.ok = r.vertices - r.edges + r.faces == 2;
    return r;
}

ExpansionMap ExpansionMap::identity(int n) {
    ExpansionMap m;
    m.forward.resize(n);
    m.backward.resize(n);
    for (int v = 0; v < n; ++v) {
        m.forward[v] = {v};
        m.backward[v] = v;
    }
    return m;
}

bool ExpansionMap::is_identity() const {
    for (size_t v = 0; v < forward.size(); ++v)
        if (forward[v].size() != 1 || forward[v][0] != (VertexId)v) return false;
    return backward.size() == forward.size();
}

ExpansionResult expand_vertex(const EmbeddedGraph& eg, VertexId v, VertexId anchor) {
    const Graph& g = eg.graph;
    const int n0 = g.vertex_count();
    if (v < 0 || v >= n0)
        throw structural_error("expand_vertex: vertex " + std::to_string(v) + " out of range");
    const int d = g.degree(v);
    if (d <= 3) return {eg, ExpansionMap::identity(n0)};

    const auto& rot = eg.rotation[v];
    int start;
    if (anchor < 0) {
        start = (int)(std::min_element(rot.begin(), rot.end()) - rot.begin());
    } else {
        auto it = std::find(rot.begin(), rot.end(), anchor);
        if (it == rot.end())
            throw precondition_error("expand_vertex: anchor " + std::to_string(anchor) +
                                     " is not a neighbor of " + std::to_string(v));
        start = (int)(it - rot.begin() + 1) % d;
    }
    std::vector<VertexId> w(d);
    for (int j = 0; j < d; ++j) w[j] = rot[(start + j) % d];

    const int m = d - 2;
    std::vector<VertexId> p(m);
    p[0] = v;
    for (int i = 1; i < m; ++i) p[i] = n0 + i - 1;

    std::vector<VertexId> owner(d);
    owner[0] = owner[1] = p[0];
    for (int j = 2; j <= m - 1; ++j) owner[j] = p[j - 1];
    owner[d - 2] = owner[d - 1] = p[m - 1];

    ExpansionResult res;
    res.eg.graph = Graph(n0 + m - 1);
    for (auto [a, b] : g.edges())
        if (a != v && b != v) res.eg.graph.add_edge(a, b);
    for (int j = 0; j < d; ++j) res.eg.graph.add_edge(w[j], owner[j]);
    for (int i = 0; i + 1 < m; ++i) res.eg.graph.add_edge(p[i], p[i + 1]);

    res.eg.rotation = eg.rotation;
    res.eg.rotation.resize(n0 + m - 1);
    res.eg.rotation[p[0]] = {w[0], w[1], p[1]};
    for (int i = 1; i <= m - 2; ++i) res.eg.rotation[p[i]] = {p[i - 1], w[i + 1], p[i + 1]};
    res.eg.rotation[p[m - 1]] = {p[m - 2], w[d - 2], w[d - 1]};
    for (int j = 0; j < d; ++j)
        for (VertexId& x : res.eg.rotation[w[j]])
            if (x == v) x = owner[j];

    auto slot_of = [&](VertexId x) {
        for (int j = 0; j < d; ++j)
            if (w[j] == x) return j;
        throw structural_error("expand_vertex: outer dart references a non-neighbor");
    };
    res.eg.outer = eg.outer;
    for (Dart& od : res.eg.outer) {
        if (od.from == v) od.from = owner[slot_of(od.to)];
        else if (od.to == v) od.to = owner[slot_of(od.from)];
    }

    res.map = ExpansionMap::identity(n0);
    res.map.forward[v] = p;
    res.map.backward.resize(n0 + m - 1, v);
    return res;
}

ExpansionResult expand_to_degree_three(const EmbeddedGraph& eg,
                                       const std::vector<VertexId>* anchors) {
    const int n0 = eg.graph.vertex_count();
    if (anchors && (int)anchors->size() != n0)
        throw precondition_error("expand_to_degree_three: anchor table covers " +
                                 std::to_string(anchors->size()) + " vertices, graph has " +
                                 std::to_string(n0));
    ExpansionResult res{eg, ExpansionMap::identity(n0)};
    std::vector<VertexId> cut = anchors ? *anchors : std::vector<VertexId>(n0, -1);
    for (;;) {
        VertexId v = -1;
        for (VertexId u = 0; u < res.eg.graph.vertex_count(); ++u)
            if (res.eg.graph.degree(u) >= 4) {
                v = u;
                break;
            }
        if (v < 0) break;
        // vertices of degree >= 4 are always original ids: replacement vertices
        // are created with degree exactly 3 and never gain edges
        const int n_before = res.eg.graph.vertex_count();
        ExpansionResult step = expand_vertex(res.eg, v, cut[v]);
        res.eg = std::move(step.eg);
        res.map.forward[v] = step.map.forward[v];
        for (int x = n_before; x < res.eg.graph.vertex_count(); ++x) res.map.backward.push_back(v);
        // any recorded cut neighbor that pointed at v now points at the unique
        // path member that inherited its edge
        for (VertexId x = 0; x < n0; ++x) {
            if (x == v || cut[x] != v) continue;
            // once x has itself been expanded its anchor is never consulted
            // again, and its edge to v may live on one of its path vertices
            if ((int)res.map.forward[x].size() > 1) continue;
            VertexId repl = -1;
            for (VertexId y : res.eg.graph.neighbors(x))
                if (y == v || y >= n_before) {
                    repl = y;
                    break;
                }
            if (repl < 0)
                throw invariant_breach("expansion",
                                       "cut neighbor of vertex " + std::to_string(x) +
                                           " lost its edge during expansion of " + std::to_string(v));
            cut[x] = repl;
        }
    }
    return res;
}

Graph contract_paths(const Graph& g, const ExpansionMap& map) {
    const int n_exp = g.vertex_count();
    if ((int)map.backward.size() != n_exp)
        throw structural_error("contract_paths: map covers " + std::to_string(map.backward.size()) +
                               " vertices, graph has " + std::to_string(n_exp));
    const int n_orig = (int)map.forward.size();
    size_t total = 0;
    for (VertexId o = 0; o < n_orig; ++o) {
        const auto& path = map.forward[o];
        if (path.empty())
            throw structural_error("contract_paths: vertex " + std::to_string(o) +
                                   " has no replacement vertices");
        for (VertexId x : path) {
            if (x < 0 || x >= n_exp || map.backward[x] != o)
                throw structural_error("contract_paths: map references unknown vertex " +
                                       std::to_string(x) + " for original " + std::to_string(o));
        }
        total += path.size();
        if (path.size() >= 2) {
            // the replacement set must be connected so contraction is well defined
            std::vector<VertexId> stack = {path[0]};
            std::map<VertexId, bool> seen;
            for (VertexId x : path) seen[x] = false;
            seen[path[0]] = true;
            size_t reached = 1;
            while (!stack.empty()) {
                VertexId u = stack.back();
                stack.pop_back();
                for (VertexId y : g.neighbors(u)) {
                    auto it = seen.find(y);
                    if (it != seen.end() && !it->second) {
                        it->second = true;
                        ++reached;
                        stack.push_back(y);
                    }
                }
            }
            if (reached != path.size())
                throw precondition_error("contract_paths: replacement path of vertex " +
                                         std::to_string(o) + " is not connected");
        }
    }
    if (total != (size_t)n_exp)
        throw structural_error("contract_paths: forward/backward tables disagree");
    Graph out(n_orig);
    for (auto [a, b] : g.edges()) {
        VertexId oa = map.backward[a];
        VertexId ob = map.backward[b];
        if (oa != ob && !out.has_edge(oa, ob)) out.add_edge(oa, ob);
    }
    return out;
}

}  // namespace planarrep
