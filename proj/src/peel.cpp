#include "planarrep/peel.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace planarrep {

std::vector<int> LayerPartition::layer_index(int n) const {
    std::vector<int> idx(n, 0);
    for (int i = 0; i < (int)layers.size(); ++i)
        for (VertexId v : layers[i])
            if (v >= 0 && v < n) idx[v] = i + 1;
    return idx;
}

BoundaryInfo outer_boundary(const EmbeddedGraph& eg) {
    const Graph& g = eg.graph;
    if (g.edge_count() > 0 && eg.outer.empty())
        throw structural_error("outer boundary: missing outer-face designation");
    validate_outer(eg);
    std::set<VertexId> verts;
    std::set<Edge> edges;
    for (const Dart& d : eg.outer) {
        FaceWalk w = trace_face_from(eg, d);
        for (const Dart& x : w.darts) {
            verts.insert(x.from);
            edges.insert(make_edge(x.from, x.to));
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) verts.insert(v);
    BoundaryInfo b;
    b.vertices.assign(verts.begin(), verts.end());
    b.edges.assign(edges.begin(), edges.end());
    return b;
}

namespace {

// the faces of the old embedding that touch a removal merge into one region;
// per surviving edged component, the surviving darts that bordered that region
// must line one face of the induced embedding, which becomes its outer face
struct MergeTracker {
    std::map<Dart, int> face_of;
    std::vector<char> marked;

    explicit MergeTracker(const EmbeddedGraph& eg) {
        auto walks = trace_faces(eg);
        marked.assign(walks.size(), 0);
        for (int i = 0; i < (int)walks.size(); ++i)
            for (const Dart& d : walks[i].darts) face_of[d] = i;
    }

    void mark_walks_visiting(const EmbeddedGraph& eg, const std::vector<char>& deleted) {
        for (auto& [d, f] : face_of)
            if (deleted[d.from]) marked[f] = 1;
        (void)eg;
    }

    void mark_walks_using(const std::set<Edge>& removed) {
        for (auto& [d, f] : face_of)
            if (removed.count(make_edge(d.from, d.to))) marked[f] = 1;
    }
};

// assigns the outer dart of every edged component of `next` given the
// candidate darts that bordered the merged region, and checks they agree
void assign_outer(EmbeddedGraph& next, const std::vector<Dart>& candidates) {
    if (next.graph.edge_count() == 0) {
        next.outer.clear();
        return;
    }
    auto walks = trace_faces(next);
    std::map<Dart, int> face_of;
    for (int i = 0; i < (int)walks.size(); ++i)
        for (const Dart& d : walks[i].darts) face_of[d] = i;
    auto comp = next.graph.component_ids();
    std::map<int, std::vector<Dart>> by_comp;
    for (const Dart& d : candidates) by_comp[comp[d.from]].push_back(d);
    next.outer.clear();
    std::set<int> edged;
    for (VertexId v = 0; v < next.graph.vertex_count(); ++v)
        if (next.graph.degree(v) > 0) edged.insert(comp[v]);
    for (int c : edged) {
        auto it = by_comp.find(c);
        if (it == by_comp.end() || it->second.empty())
            throw invariant_breach("face-merge", "a surviving component has no dart on the merged region");
        auto& cand = it->second;
        std::sort(cand.begin(), cand.end());
        int face = face_of.at(cand.front());
        for (const Dart& d : cand)
            if (face_of.at(d) != face)
                throw invariant_breach("face-merge",
                                       "merged region darts split across faces at (" +
                                           std::to_string(d.from) + "->" + std::to_string(d.to) + ")");
        next.outer.push_back(cand.front());
    }
}

// induced embedding on the survivors, relabeled to dense ids
Residual remove_vertices_induced(const EmbeddedGraph& eg, const std::vector<char>& deleted) {
    const Graph& g = eg.graph;
    MergeTracker faces(eg);
    faces.mark_walks_visiting(eg, deleted);

    std::vector<VertexId> to_global;
    std::vector<VertexId> to_local(g.vertex_count(), -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!deleted[v]) {
            to_local[v] = (int)to_global.size();
            to_global.push_back(v);
        }

    Residual res;
    res.to_global = to_global;
    res.eg.graph = Graph((int)to_global.size());
    for (auto [u, v] : g.edges())
        if (!deleted[u] && !deleted[v]) res.eg.graph.add_edge(to_local[u], to_local[v]);
    res.eg.rotation.resize(to_global.size());
    for (VertexId v : to_global)
        for (VertexId w : eg.rotation[v])
            if (!deleted[w]) res.eg.rotation[to_local[v]].push_back(to_local[w]);

    std::vector<Dart> candidates;
    for (auto& [d, f] : faces.face_of)
        if (!deleted[d.from] && !deleted[d.to] && faces.marked[f])
            candidates.push_back({to_local[d.from], to_local[d.to]});
    assign_outer(res.eg, candidates);
    return res;
}

// edge-deleted embedding on the same vertex ids
EmbeddedGraph remove_edges(const EmbeddedGraph& eg, const std::vector<Edge>& removal) {
    const Graph& g = eg.graph;
    std::set<Edge> removed(removal.begin(), removal.end());
    MergeTracker faces(eg);
    faces.mark_walks_using(removed);

    EmbeddedGraph next;
    next.graph = Graph(g.vertex_count());
    for (auto [u, v] : g.edges())
        if (!removed.count({u, v})) next.graph.add_edge(u, v);
    next.rotation.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (VertexId w : eg.rotation[v])
            if (!removed.count(make_edge(v, w))) next.rotation[v].push_back(w);

    std::vector<Dart> candidates;
    for (auto& [d, f] : faces.face_of)
        if (!removed.count(make_edge(d.from, d.to)) && faces.marked[f]) candidates.push_back(d);
    assign_outer(next, candidates);
    return next;
}

void check_pipeline_input(const EmbeddedGraph& eg, const char* op) {
    if (eg.graph.vertex_count() == 0)
        throw structural_error(std::string(op) + ": empty graph");
    if (!eg.graph.is_connected())
        throw structural_error(std::string(op) + ": input must be connected");
    validate_rotation(eg);
    validate_outer(eg);
    EulerReport euler = euler_certify(eg);
    if (!euler.ok)
        throw structural_error(std::string(op) + ": embedding fails the Euler test (V-E+F = " +
                               std::to_string(euler.vertices - euler.edges + euler.faces) + ")");
}

}  // namespace

PeelResult peel_layers(const EmbeddedGraph& eg) {
    check_pipeline_input(eg, "peel_layers");
    PeelResult out;
    out.exposure.assign(eg.graph.vertex_count(), -1);

    Residual cur;
    cur.eg = eg;
    cur.to_global.resize(eg.graph.vertex_count());
    for (VertexId v = 0; v < eg.graph.vertex_count(); ++v) cur.to_global[v] = v;

    while (cur.eg.graph.vertex_count() > 0) {
        // record where the boundary walk first arrives at each vertex it strips
        for (const Dart& d0 : cur.eg.outer) {
            FaceWalk w = trace_face_from(cur.eg, d0);
            const auto& darts = w.darts;
            const size_t L = darts.size();
            for (size_t i = 0; i < L; ++i) {
                VertexId v = cur.to_global[darts[i].from];
                VertexId pred = cur.to_global[darts[(i + L - 1) % L].from];
                if (out.exposure[v] < 0) out.exposure[v] = pred;
            }
        }
        BoundaryInfo b = outer_boundary(cur.eg);
        std::vector<VertexId> layer;
        layer.reserve(b.vertices.size());
        for (VertexId v : b.vertices) layer.push_back(cur.to_global[v]);
        std::sort(layer.begin(), layer.end());
        out.layers.layers.push_back(layer);
        out.residuals.push_back(cur);

        std::vector<char> deleted(cur.eg.graph.vertex_count(), 0);
        for (VertexId v : b.vertices) deleted[v] = 1;
        Residual next = remove_vertices_induced(cur.eg, deleted);
        for (VertexId& v : next.to_global) v = cur.to_global[v];
        cur = std::move(next);
    }

    LayerCheck check = validate_layering(eg.graph, out.layers);
    if (!check.pass) throw invariant_breach("peeling", check.detail);
    return out;
}

LayerCheck validate_layering(const Graph& g, const LayerPartition& lp) {
    LayerCheck out;
    std::vector<int> idx(g.vertex_count(), 0);
    for (int i = 0; i < lp.depth(); ++i) {
        if (lp.layers[i].empty()) {
            out.detail = "layer " + std::to_string(i + 1) + " is empty";
            return out;
        }
        for (VertexId v : lp.layers[i]) {
            if (v < 0 || v >= g.vertex_count()) {
                out.detail = "layer " + std::to_string(i + 1) + " names unknown vertex " +
                             std::to_string(v);
                return out;
            }
            if (idx[v] != 0) {
                out.detail = "vertex " + std::to_string(v) + " appears in two layers";
                return out;
            }
            idx[v] = i + 1;
        }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (idx[v] == 0) {
            out.detail = "vertex " + std::to_string(v) + " is missing from the layering";
            return out;
        }
    for (auto [u, v] : g.edges())
        if (std::abs(idx[u] - idx[v]) > 1) {
            out.violation = {u, v};
            out.detail = "edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " joins layers " + std::to_string(idx[u]) + " and " + std::to_string(idx[v]);
            return out;
        }
    out.pass = true;
    return out;
}

EdgePeelResult boundary_edge_peel(const EmbeddedGraph& eg) {
    check_pipeline_input(eg, "boundary_edge_peel");
    EdgePeelResult out;
    EmbeddedGraph cur = eg;
    const int cap = eg.graph.edge_count() + 1;
    while (cur.graph.has_cycle()) {
        if ((int)out.stages.size() > cap)
            throw invariant_breach("edge-peel", "stage count exceeded the edge count");
        BoundaryInfo b = outer_boundary(cur);
        if (b.edges.empty())
            throw invariant_breach("edge-peel", "cyclic graph produced an edgeless boundary");
        EmbeddedGraph next = remove_edges(cur, b.edges);
        out.stages.push_back({std::move(cur), b.edges, b.vertices});
        cur = std::move(next);
    }
    out.core = std::move(cur);
    return out;
}

}  // namespace planarrep
