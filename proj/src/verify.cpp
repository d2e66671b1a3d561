#include "planarrep/verify.hpp"

#include <algorithm>
#include <queue>

namespace planarrep {

ChordalityResult is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    ChordalityResult out;
    std::vector<int> weight(n, 0), visit_rank(n, -1);
    std::vector<VertexId> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (visit_rank[v] < 0 && (pick < 0 || weight[v] > weight[pick])) pick = v;
        visit_rank[pick] = step;
        order.push_back(pick);
        for (VertexId w : g.neighbors(pick))
            if (visit_rank[w] < 0) ++weight[w];
    }

    // reverse visit order is a perfect elimination order iff each vertex's
    // earlier neighbors, minus the latest of them, are neighbors of that latest one
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
        VertexId v = order[i];
        VertexId u = -1;
        for (VertexId w : g.neighbors(v))
            if (visit_rank[w] < i && (u < 0 || visit_rank[w] > visit_rank[u])) u = w;
        if (u < 0) continue;
        for (VertexId w : g.neighbors(v)) {
            if (visit_rank[w] >= i || w == u) continue;
            if (!g.has_edge(u, w)) {
                ok = false;
                break;
            }
        }
    }
    if (ok) {
        out.chordal = true;
        out.elimination_order.assign(order.rbegin(), order.rend());
        return out;
    }

    // witness: for an induced two-edge path a-b-c, a shortest a..c path dodging
    // b's other neighbors closes into a chordless cycle; some such path exists
    // in every non-chordal graph
    for (VertexId b = 0; b < n; ++b) {
        const auto& nb = g.neighbors(b);
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                VertexId a = nb[i], c = nb[j];
                if (g.has_edge(a, c)) continue;
                std::vector<char> blocked(n, 0);
                blocked[b] = 1;
                for (VertexId w : nb)
                    if (w != a && w != c) blocked[w] = 1;
                std::vector<VertexId> parent(n, -2);
                std::queue<VertexId> q;
                parent[c] = -1;
                q.push(c);
                while (!q.empty() && parent[a] == -2) {
                    VertexId x = q.front();
                    q.pop();
                    for (VertexId y : g.neighbors(x))
                        if (!blocked[y] && parent[y] == -2) {
                            parent[y] = x;
                            q.push(y);
                        }
                }
                if (parent[a] == -2) continue;
                out.witness_cycle.push_back(b);
                std::vector<VertexId> path;
                for (VertexId x = a; x != -1; x = parent[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());  // c .. a
                out.witness_cycle.insert(out.witness_cycle.end(), path.begin(), path.end());
                return out;
            }
    }
    throw invariant_breach("chordality",
                           "elimination check failed but no chordless cycle was found");
}

IntersectionCheck intersection_equals(const Graph& g, const std::vector<Graph>& factors) {
    if (factors.empty()) throw parameter_error("intersection_equals: no factors given");
    for (const Graph& f : factors)
        if (f.vertex_count() != g.vertex_count())
            throw structural_error("intersection_equals: a factor disagrees on vertex count");
    IntersectionCheck out;
    for (auto [u, v] : g.edges())
        for (const Graph& f : factors)
            if (!f.has_edge(u, v)) {
                out.witness = {u, v};
                out.detail = "edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " is missing from a factor";
                return out;
            }
    for (auto [u, v] : factors[0].edges()) {
        if (g.has_edge(u, v)) continue;
        bool in_all = true;
        for (size_t i = 1; i < factors.size() && in_all; ++i)
            if (!factors[i].has_edge(u, v)) in_all = false;
        if (in_all) {
            out.witness = {u, v};
            out.detail = "edge " + std::to_string(u) + "-" + std::to_string(v) +
                         " lies in every factor but not in the graph";
            return out;
        }
    }
    out.pass = true;
    return out;
}

int cover_width(const OrderedCliqueCover& cover) {
    const int n = cover.host.vertex_count();
    std::vector<int> pos(n, -1);
    for (size_t b = 0; b < cover.blocks.size(); ++b)
        for (VertexId v : cover.blocks[b]) {
            if (v < 0 || v >= n)
                throw structural_error("cover_width: block " + std::to_string(b) +
                                       " names unknown vertex " + std::to_string(v));
            if (pos[v] != -1)
                throw structural_error("cover_width: vertex " + std::to_string(v) +
                                       " appears in more than one block");
            pos[v] = (int)b;
        }
    for (VertexId v = 0; v < n; ++v)
        if (pos[v] < 0)
            throw structural_error("cover_width: vertex " + std::to_string(v) +
                                   " is not covered by any block");
    for (size_t b = 0; b < cover.blocks.size(); ++b) {
        const auto& block = cover.blocks[b];
        for (size_t i = 0; i < block.size(); ++i)
            for (size_t j = i + 1; j < block.size(); ++j)
                if (!cover.host.has_edge(block[i], block[j]))
                    throw structural_error("cover_width: block " + std::to_string(b) +
                                           " is not a clique: vertices " +
                                           std::to_string(block[i]) + " and " +
                                           std::to_string(block[j]) + " are not adjacent");
    }
    int width = 0;
    for (auto [u, v] : cover.host.edges()) width = std::max(width, std::abs(pos[u] - pos[v]));
    return width;
}

namespace {

struct CcwSearch {
    int n;
    std::vector<unsigned> adj;
    int best;
    std::vector<int> blocks;  // vertex masks, in cover order

    bool clique(unsigned s) const {
        for (int b = 0; b < n; ++b)
            if (s & (1u << b))
                if ((adj[b] & s) != (s & ~(1u << b))) return false;
        return true;
    }

    bool touches(unsigned s, unsigned t) const {
        for (int b = 0; b < n; ++b)
            if (s & (1u << b))
                if (adj[b] & t) return true;
        return false;
    }

    void rec(unsigned remaining, int cur) {
        if (cur >= best) return;
        if (!remaining) {
            best = cur;
            return;
        }
        // a placed block with an edge into the remaining set forces a gap of at
        // least (next position - its position)
        const int next = (int)blocks.size();
        for (int j = 0; j < next; ++j)
            if (next - j >= best && touches(blocks[j], remaining)) return;
        for (unsigned s = remaining; s; s = (s - 1) & remaining) {
            if (!clique(s)) continue;
            int w2 = cur;
            for (int j = 0; j < next; ++j)
                if (touches(blocks[j], s)) w2 = std::max(w2, next - j);
            if (w2 >= best) continue;
            blocks.push_back(s);
            rec(remaining & ~s, w2);
            blocks.pop_back();
        }
    }
};

}  // namespace

int brute_ccw(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit)
        throw parameter_error("brute_ccw: graph has " + std::to_string(n) +
                              " vertices, limit is " + std::to_string(limit));
    if (n == 0) return 0;
    CcwSearch s;
    s.n = n;
    s.adj.assign(n, 0);
    for (auto [u, v] : g.edges()) {
        s.adj[u] |= 1u << v;
        s.adj[v] |= 1u << u;
    }
    s.best = n;  // strictly above any achievable width
    s.rec((1u << n) - 1, 0);
    return s.best;
}

namespace {

struct BwSearch {
    const Graph* g;
    int n;
    int best;
    std::vector<int> pos;  // vertex -> position, -1 unplaced

    void rec(int p, int cur) {
        if (cur >= best) return;
        if (p == n) {
            best = cur;
            return;
        }
        for (VertexId v = 0; v < n; ++v) {
            if (pos[v] != -1) continue;
            int w2 = cur;
            for (VertexId u : g->neighbors(v))
                if (pos[u] != -1) w2 = std::max(w2, p - pos[u]);
            if (w2 >= best) continue;
            pos[v] = p;
            rec(p + 1, w2);
            pos[v] = -1;
        }
    }
};

}  // namespace

int brute_bandwidth(const Graph& g, int limit) {
    const int n = g.vertex_count();
    if (n > limit)
        throw parameter_error("brute_bandwidth: graph has " + std::to_string(n) +
                              " vertices, limit is " + std::to_string(limit));
    if (n <= 1) return 0;
    BwSearch s;
    s.g = &g;
    s.n = n;
    s.best = n;
    s.pos.assign(n, -1);
    s.rec(0, 0);
    return s.best;
}

CertifyReport certify(const RepresentationPair& pair, const Graph& g, const LayerPartition& lp) {
    CertifyReport r;
    const int n = g.vertex_count();
    auto note = [&](const std::string& s) { r.violations.push_back(s); };

    if (pair.g1.vertex_count() != n || pair.g2.vertex_count() != n) {
        note("factors disagree with the input on vertex count");
    } else {
        IntersectionCheck ic = intersection_equals(g, {pair.g1, pair.g2});
        r.intersection = ic.pass;
        if (!ic.pass) note("intersection mismatch: " + ic.detail);
    }

    ChordalityResult ch = is_chordal(pair.g2);
    r.chordal = ch.chordal;
    if (!ch.chordal) note("second factor is not chordal");

    TreeDecCheck tc = validate_treedec(g, pair.td);
    r.treedec_valid = tc.pass;
    if (!tc.pass) {
        note("decomposition invalid: " + tc.failed_axiom + ": " + tc.detail);
    } else {
        try {
            Graph rebuilt = chordal_from_subtrees(pair.td);
            if (!(rebuilt == pair.g2))
                note("second factor disagrees with the decomposition's subtree intersections");
        } catch (const std::exception& e) {
            note(std::string("decomposition cannot induce a chordal factor: ") + e.what());
        }
    }

    r.t_star = pair.t_star;
    r.bound = 2 * pair.t_star - 1;
    LayerCheck lc = validate_layering(g, lp);
    if (!lc.pass) {
        note("layering invalid: " + lc.detail);
    } else if (tc.pass) {
        try {
            int recomputed = compute_t_star(pair.td, lp);
            if (recomputed != pair.t_star)
                note("stated t_star " + std::to_string(pair.t_star) +
                     " differs from the recomputed " + std::to_string(recomputed));
        } catch (const std::exception& e) {
            note(std::string("t_star cannot be recomputed: ") + e.what());
        }
    }

    if (!(pair.cover.host == pair.g1)) note("cover host differs from the first factor");
    try {
        r.cover_width = cover_width(pair.cover);
        if (r.cover_width > r.bound)
            note("cover width " + std::to_string(r.cover_width) + " exceeds the bound " +
                 std::to_string(r.bound));
    } catch (const structural_error& e) {
        r.cover_width = -1;
        note(std::string("cover is not legal: ") + e.what());
    }

    return r;
}

}  // namespace planarrep
