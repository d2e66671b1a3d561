#include "planarrep/represent.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "planarrep/verify.hpp"

namespace planarrep {

namespace {

// greedy coloring along a maximum-cardinality-search order, restricted to a
// vertex subset; uses exactly the clique number when the induced graph is
// chordal; classes are sorted by their smallest member
std::vector<std::vector<VertexId>> mcs_greedy_classes(const Graph& g,
                                                      const std::vector<VertexId>& subset) {
    const int k = (int)subset.size();
    std::map<VertexId, int> local;
    for (int i = 0; i < k; ++i) {
        if (subset[i] < 0 || subset[i] >= g.vertex_count())
            throw precondition_error("layer names unknown vertex " + std::to_string(subset[i]));
        if (!local.emplace(subset[i], i).second)
            throw precondition_error("layer repeats vertex " + std::to_string(subset[i]));
    }
    std::vector<int> weight(k, 0), color(k, -1);
    std::vector<char> visited(k, 0);
    for (int step = 0; step < k; ++step) {
        int pick = -1;
        for (int i = 0; i < k; ++i)
            if (!visited[i] && (pick < 0 || weight[i] > weight[pick] ||
                                (weight[i] == weight[pick] && subset[i] < subset[pick])))
                pick = i;
        visited[pick] = 1;
        std::set<int> used;
        for (VertexId w : g.neighbors(subset[pick])) {
            auto it = local.find(w);
            if (it == local.end()) continue;
            if (!visited[it->second]) ++weight[it->second];
            if (color[it->second] >= 0) used.insert(color[it->second]);
        }
        int c = 0;
        while (used.count(c)) ++c;
        color[pick] = c;
    }
    int ncolors = 0;
    for (int c : color) ncolors = std::max(ncolors, c + 1);
    std::vector<std::vector<VertexId>> classes(ncolors);
    for (int i = 0; i < k; ++i) classes[color[i]].push_back(subset[i]);
    for (auto& cls : classes) std::sort(cls.begin(), cls.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes;
}

}  // namespace

SubtreeModel subtree_model(const TreeDecomposition& td, int n) {
    SubtreeModel m;
    m.nodes_of_vertex.resize(n);
    for (int t = 0; t < td.node_count(); ++t)
        for (VertexId v : td.bags[t]) {
            if (v < 0 || v >= n)
                throw structural_error("subtree_model: bag names unknown vertex " +
                                       std::to_string(v));
            m.nodes_of_vertex[v].push_back(t);
        }
    return m;
}

Graph chordal_from_subtrees(const TreeDecomposition& td) {
    if (td.tree.vertex_count() != td.node_count())
        throw structural_error("chordal_from_subtrees: tree and bag table disagree on node count");
    if (td.tree.has_cycle())
        throw precondition_error("chordal_from_subtrees: the decomposition tree contains a cycle");
    int n = 0;
    for (const auto& bag : td.bags)
        for (VertexId v : bag) {
            if (v < 0) throw structural_error("chordal_from_subtrees: negative vertex id in a bag");
            n = std::max(n, v + 1);
        }
    SubtreeModel m = subtree_model(td, n);
    for (VertexId v = 0; v < n; ++v) {
        const auto& nodes = m.nodes_of_vertex[v];
        if (nodes.empty()) continue;
        std::vector<char> seen(nodes.size(), 0);
        auto pos = [&](int t) {
            auto it = std::lower_bound(nodes.begin(), nodes.end(), t);
            return it != nodes.end() && *it == t ? (int)(it - nodes.begin()) : -1;
        };
        std::vector<int> stack = {nodes[0]};
        seen[0] = 1;
        size_t reached = 1;
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
        if (reached != nodes.size())
            throw precondition_error("chordal_from_subtrees: nodes holding vertex " +
                                     std::to_string(v) + " are disconnected in the tree");
    }
    Graph g2(n);
    std::set<Edge> added;
    for (const auto& bag : td.bags)
        for (size_t i = 0; i < bag.size(); ++i)
            for (size_t j = i + 1; j < bag.size(); ++j)
                if (added.insert(make_edge(bag[i], bag[j])).second)
                    g2.add_edge(bag[i], bag[j]);
    return g2;
}

int compute_t_star(const TreeDecomposition& td, const LayerPartition& lp) {
    Graph g2 = chordal_from_subtrees(td);
    int t = 0;
    for (const auto& layer : lp.layers)
        t = std::max(t, (int)mcs_greedy_classes(g2, layer).size());
    return t;
}

std::vector<std::vector<VertexId>> layer_coloring(const Graph& g2,
                                                  const std::vector<VertexId>& layer, int budget) {
    auto classes = mcs_greedy_classes(g2, layer);
    if ((int)classes.size() > budget)
        throw invariant_breach("representation", "a layer needs " +
                                                     std::to_string(classes.size()) +
                                                     " classes but the budget is " +
                                                     std::to_string(budget));
    return classes;
}

OrderedCliqueCover build_g1(const Graph& g, const LayerPartition& lp,
                            const std::vector<std::vector<std::vector<VertexId>>>& colorings,
                            int t_star) {
    const int n = g.vertex_count();
    if ((int)colorings.size() != lp.depth())
        throw precondition_error("build_g1: one coloring per layer is required");

    OrderedCliqueCover cover;
    cover.host = g;
    std::vector<int> pos(n, -1);
    for (const auto& classes : colorings) {
        if ((int)classes.size() > t_star)
            throw precondition_error("build_g1: a layer has more classes than the block budget");
        for (const auto& cls : classes) {
            std::vector<VertexId> block = cls;
            std::sort(block.begin(), block.end());
            for (VertexId v : block) {
                if (v < 0 || v >= n)
                    throw precondition_error("build_g1: class names unknown vertex " +
                                             std::to_string(v));
                if (pos[v] != -1)
                    throw precondition_error("build_g1: vertex " + std::to_string(v) +
                                             " is covered twice");
                pos[v] = (int)cover.blocks.size();
            }
            cover.blocks.push_back(std::move(block));
        }
        for (int pad = (int)classes.size(); pad < t_star; ++pad) cover.blocks.push_back({});
    }
    for (VertexId v = 0; v < n; ++v)
        if (pos[v] < 0)
            throw precondition_error("build_g1: vertex " + std::to_string(v) + " is not covered");

    for (const auto& block : cover.blocks)
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!cover.host.has_edge(block[i], block[j]))
                    cover.host.add_edge(block[i], block[j]);

    int width = 0;
    for (auto [u, v] : cover.host.edges()) width = std::max(width, std::abs(pos[u] - pos[v]));
    if (width > 2 * t_star - 1)
        throw invariant_breach("width-bound", "cover width " + std::to_string(width) +
                                                  " exceeds 2*t_star-1 = " +
                                                  std::to_string(2 * t_star - 1));
    return cover;
}

RepresentationPair universal_representation(const Graph& g, const TreeDecomposition& td,
                                            const LayerPartition& lp) {
    const int n = g.vertex_count();
    if (n == 0) throw parameter_error("universal_representation: empty graph");
    TreeDecCheck tc = validate_treedec(g, td);
    if (!tc.pass)
        throw precondition_error("universal_representation: invalid decomposition (" +
                                 tc.failed_axiom + ": " + tc.detail + ")");
    LayerCheck lc = validate_layering(g, lp);
    if (!lc.pass)
        throw precondition_error("universal_representation: invalid layering (" + lc.detail + ")");

    RepresentationPair pair;
    pair.td = td;
    pair.layers = lp;
    pair.g2 = chordal_from_subtrees(td);
    if (pair.g2.vertex_count() != n)
        throw invariant_breach("representation", "chordal factor vertex count mismatch");
    pair.model = subtree_model(td, n);
    pair.t_star = compute_t_star(td, lp);

    std::vector<std::vector<std::vector<VertexId>>> colorings;
    colorings.reserve(lp.layers.size());
    for (const auto& layer : lp.layers)
        colorings.push_back(layer_coloring(pair.g2, layer, pair.t_star));

    pair.cover = build_g1(g, lp, colorings, pair.t_star);
    pair.g1 = pair.cover.host;

    pair.report = certify(pair, g, lp);
    if (!pair.report.all_pass()) {
        std::string joined;
        for (const auto& v : pair.report.violations) {
            if (!joined.empty()) joined += "; ";
            joined += v;
        }
        if (joined.empty()) joined = "re-verification failed";
        throw invariant_breach("representation", joined);
    }
    return pair;
}

RepresentationPair planar_representation(const EmbeddedGraph& eg, PlanarRunTrace* trace) {
    PeelResult p0 = peel_layers(eg);
    ExpansionResult ex = expand_to_degree_three(eg, &p0.exposure);
    PeelResult p1 = peel_layers(ex.eg);

    if (p1.layers.depth() != p0.layers.depth())
        throw invariant_breach("expansion-layering",
                               "layer count changed from " + std::to_string(p0.layers.depth()) +
                                   " to " + std::to_string(p1.layers.depth()));
    for (int i = 0; i < p0.layers.depth(); ++i) {
        std::vector<VertexId> image;
        for (VertexId v : p0.layers.layers[i])
            image.insert(image.end(), ex.map.forward[v].begin(), ex.map.forward[v].end());
        std::sort(image.begin(), image.end());
        if (image != p1.layers.layers[i])
            throw invariant_breach("expansion-layering",
                                   "layer " + std::to_string(i + 1) +
                                       " is not the image of its original layer");
    }

    LayeredDecomposition ld = layered_decomposition(ex.eg, p1.layers);
    TreeDecomposition td_c = contract_decomposition(ld.td, ex.map);
    TreeDecCheck cc = validate_treedec(eg.graph, td_c);
    if (!cc.pass) throw invariant_breach("contract", cc.failed_axiom + ": " + cc.detail);

    RepresentationPair pair = universal_representation(eg.graph, td_c, p0.layers);
    if (pair.t_star > 4)
        throw invariant_breach("width-bound",
                               "t_star = " + std::to_string(pair.t_star) + " exceeds 4");
    if (pair.report.cover_width > 7)
        throw invariant_breach("width-bound", "cover width " +
                                                  std::to_string(pair.report.cover_width) +
                                                  " exceeds 7");
    if (trace) {
        trace->map = ex.map;
        trace->expanded_layers = p1.layers;
        trace->expanded_td = ld.td;
        trace->steps = ld.steps;
    }
    return pair;
}

}  // namespace planarrep
