#include "planarrep/gen.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>

namespace planarrep {

namespace {

int next_below(std::mt19937_64& rng, int k) { return (int)(rng() % (std::uint64_t)k); }

void certify_output(const EmbeddedGraph& eg, const char* tag) {
    if (!eg.graph.is_connected())
        throw invariant_breach(tag, "produced a disconnected graph");
    validate_rotation(eg);
    validate_outer(eg);
    if (!euler_certify(eg).ok)
        throw invariant_breach(tag, "produced an embedding that fails the Euler test");
}

void insert_after(std::vector<VertexId>& rot, VertexId after, VertexId value) {
    auto it = std::find(rot.begin(), rot.end(), after);
    rot.insert(it + 1, value);
}

// true iff u and v stay connected without the edge {u,v}
bool edge_on_cycle(const Graph& g, VertexId u, VertexId v) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::queue<VertexId> q;
    q.push(u);
    seen[u] = 1;
    while (!q.empty()) {
        VertexId a = q.front();
        q.pop();
        for (VertexId b : g.neighbors(a)) {
            if (a == u && b == v) continue;
            if (!seen[b]) {
                if (b == v) return true;
                seen[b] = 1;
                q.push(b);
            }
        }
    }
    return false;
}

void delete_edge(EmbeddedGraph& eg, VertexId u, VertexId v) {
    if (!eg.outer.empty()) {
        Edge gone = make_edge(u, v);
        Dart& od = eg.outer.front();
        if (make_edge(od.from, od.to) == gone) {
            // the outer face absorbs the face across the edge; any other dart of
            // the current outer walk stays on the merged face
            FaceWalk w = trace_face_from(eg, od);
            for (const Dart& d : w.darts)
                if (make_edge(d.from, d.to) != gone) {
                    od = d;
                    break;
                }
        }
    }
    Graph next(eg.graph.vertex_count());
    for (auto [a, b] : eg.graph.edges())
        if (make_edge(a, b) != make_edge(u, v)) next.add_edge(a, b);
    eg.graph = std::move(next);
    std::erase(eg.rotation[u], v);
    std::erase(eg.rotation[v], u);
}

}  // namespace

EmbeddedGraph random_planar(const GenSpec& spec) {
    if (spec.n < 1)
        throw parameter_error("random_planar: vertex count must be >= 1, got " +
                              std::to_string(spec.n));
    if (!(spec.edge_keep_ratio > 0.0) || spec.edge_keep_ratio > 1.0)
        throw parameter_error("random_planar: edge_keep_ratio must lie in (0,1], got " +
                              std::to_string(spec.edge_keep_ratio));

    EmbeddedGraph eg;
    if (spec.n == 1) {
        eg.graph = Graph(1);
        eg.rotation = {{}};
        return eg;
    }
    if (spec.n == 2) {
        eg.graph = Graph(2);
        eg.graph.add_edge(0, 1);
        eg.rotation = {{1}, {0}};
        eg.outer = {{0, 1}};
        certify_output(eg, "generator");
        return eg;
    }

    std::mt19937_64 rng(spec.seed);
    eg.graph = Graph(3);
    eg.graph.add_edge(0, 1);
    eg.graph.add_edge(0, 2);
    eg.graph.add_edge(1, 2);
    eg.rotation = {{1, 2}, {2, 0}, {0, 1}};
    eg.outer = {{0, 1}};

    for (VertexId v = 3; v < spec.n; ++v) {
        auto faces = trace_faces(eg);
        const FaceWalk& face = faces[next_below(rng, (int)faces.size())];
        // triangulation growth: every face is a triangle
        std::vector<VertexId> corners;
        for (const Dart& d : face.darts) corners.push_back(d.from);
        eg.rotation.emplace_back(corners.rbegin(), corners.rend());
        Graph next(v + 1);
        for (auto [a, b] : eg.graph.edges()) next.add_edge(a, b);
        for (size_t i = 0; i < corners.size(); ++i) {
            VertexId cur = face.darts[i].to;
            VertexId pred = face.darts[i].from;
            insert_after(eg.rotation[cur], pred, v);
            next.add_edge(v, cur);
        }
        eg.graph = std::move(next);
    }

    const int full = eg.graph.edge_count();
    const int deletions = (int)std::floor((1.0 - spec.edge_keep_ratio) * full + 1e-9);
    for (int t = 0; t < deletions; ++t) {
        auto edges = eg.graph.edges();
        const int m = (int)edges.size();
        int start = next_below(rng, m);
        bool done = false;
        for (int k = 0; k < m && !done; ++k) {
            auto [u, v] = edges[(start + k) % m];
            if (edge_on_cycle(eg.graph, u, v)) {
                delete_edge(eg, u, v);
                done = true;
            }
        }
        if (!done) break;  // only bridges left
    }

    certify_output(eg, "generator");
    return eg;
}

namespace {

EmbeddedGraph make_path(int m) {
    EmbeddedGraph eg;
    eg.graph = Graph(m);
    eg.rotation.resize(m);
    for (VertexId i = 0; i + 1 < m; ++i) eg.graph.add_edge(i, i + 1);
    for (VertexId i = 0; i < m; ++i) {
        if (i > 0) eg.rotation[i].push_back(i - 1);
        if (i + 1 < m) eg.rotation[i].push_back(i + 1);
    }
    if (m >= 2) eg.outer = {{0, 1}};
    return eg;
}

EmbeddedGraph make_cycle(int m) {
    EmbeddedGraph eg;
    eg.graph = Graph(m);
    eg.rotation.resize(m);
    for (VertexId i = 0; i < m; ++i) {
        eg.graph.add_edge(i, (i + 1) % m);
        eg.rotation[i] = {(i + m - 1) % m, (i + 1) % m};
    }
    eg.outer = {{0, 1}};
    return eg;
}

EmbeddedGraph make_wheel(int m) {
    EmbeddedGraph eg;
    const VertexId hub = m;
    eg.graph = Graph(m + 1);
    eg.rotation.resize(m + 1);
    for (VertexId i = 0; i < m; ++i) {
        eg.graph.add_edge(i, (i + 1) % m);
        eg.graph.add_edge(i, hub);
        eg.rotation[i] = {(i + 1) % m, hub, (i + m - 1) % m};
        eg.rotation[hub].push_back(i);
    }
    eg.outer = {{0, 1}};
    return eg;
}

EmbeddedGraph make_complete(int m) {
    if (m <= 2) return make_path(m);
    if (m == 3) return make_cycle(3);
    EmbeddedGraph eg = make_wheel(3);  // K4 is a triangle around a hub
    return eg;
}

EmbeddedGraph make_grid(int a, int b) {
    EmbeddedGraph eg;
    eg.graph = Graph(a * b);
    eg.rotation.resize(a * b);
    auto id = [&](int r, int c) { return r * b + c; };
    for (int r = 0; r < a; ++r)
        for (int c = 0; c < b; ++c) {
            if (c + 1 < b) eg.graph.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < a) eg.graph.add_edge(id(r, c), id(r + 1, c));
            auto& rot = eg.rotation[id(r, c)];
            if (c + 1 < b) rot.push_back(id(r, c + 1));  // east
            if (r > 0) rot.push_back(id(r - 1, c));      // north
            if (c > 0) rot.push_back(id(r, c - 1));      // west
            if (r + 1 < a) rot.push_back(id(r + 1, c));  // south
        }
    if (eg.graph.edge_count() > 0) {
        // designate the unbounded face: the longest walk (the perimeter)
        auto walks = trace_faces(eg);
        const FaceWalk* best = &walks.front();
        for (const auto& w : walks)
            if (w.darts.size() > best->darts.size()) best = &w;
        eg.outer = {*std::min_element(best->darts.begin(), best->darts.end())};
    }
    return eg;
}

EmbeddedGraph make_nested(int k, int m) {
    EmbeddedGraph eg;
    eg.graph = Graph(k * m);
    eg.rotation.resize(k * m);
    auto id = [&](int r, int p) { return r * m + p; };
    for (int r = 0; r < k; ++r)
        for (int p = 0; p < m; ++p) {
            eg.graph.add_edge(id(r, p), id(r, (p + 1) % m));
            if (r + 1 < k) eg.graph.add_edge(id(r, p), id(r + 1, p));
            auto& rot = eg.rotation[id(r, p)];
            rot.push_back(id(r, (p + 1) % m));          // along the ring
            if (r > 0) rot.push_back(id(r - 1, p));     // outward
            rot.push_back(id(r, (p + m - 1) % m));      // back along the ring
            if (r + 1 < k) rot.push_back(id(r + 1, p)); // inward
        }
    // the unbounded face is the walk lying entirely on the outermost ring
    for (const FaceWalk& w : trace_faces(eg)) {
        if ((int)w.darts.size() != m) continue;
        bool ring0 = true;
        for (const Dart& d : w.darts) ring0 = ring0 && d.from < m;
        if (ring0) {
            eg.outer = {*std::min_element(w.darts.begin(), w.darts.end())};
            return eg;
        }
    }
    throw invariant_breach("fixture", "nested_cycles embedding lost its outer ring face");
}

}  // namespace

EmbeddedGraph fixture(const FixtureSpec& spec) {
    EmbeddedGraph eg;
    switch (spec.kind) {
        case FixtureKind::grid:
            if (spec.a < 1 || spec.b < 1)
                throw parameter_error("fixture grid: sides must be >= 1");
            eg = make_grid(spec.a, spec.b);
            break;
        case FixtureKind::cycle:
            if (spec.a < 3) throw parameter_error("fixture cycle: need >= 3 vertices");
            eg = make_cycle(spec.a);
            break;
        case FixtureKind::wheel:
            if (spec.a < 3) throw parameter_error("fixture wheel: need >= 3 rim vertices");
            eg = make_wheel(spec.a);
            break;
        case FixtureKind::nested_cycles:
            if (spec.a < 1 || spec.b < 3)
                throw parameter_error("fixture nested_cycles: need >= 1 rings of >= 3 vertices");
            eg = make_nested(spec.a, spec.b);
            break;
        case FixtureKind::path:
            if (spec.a < 1) throw parameter_error("fixture path: need >= 1 vertices");
            eg = make_path(spec.a);
            break;
        case FixtureKind::complete:
            if (spec.a < 1 || spec.a > 4)
                throw parameter_error("fixture complete: planar sizes are 1..4");
            eg = make_complete(spec.a);
            break;
    }
    certify_output(eg, "fixture");
    return eg;
}

FixtureSpec parse_fixture(const std::string& text) {
    std::string name = text;
    std::string args;
    if (auto colon = text.find(':'); colon != std::string::npos) {
        name = text.substr(0, colon);
        args = text.substr(colon + 1);
    }
    std::vector<int> vals;
    if (!args.empty()) {
        size_t pos = 0;
        while (pos <= args.size()) {
            size_t comma = args.find(',', pos);
            std::string tok = args.substr(pos, comma == std::string::npos ? comma : comma - pos);
            try {
                size_t used = 0;
                vals.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw parameter_error("fixture: bad parameter '" + tok + "' in '" + text + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    FixtureSpec spec;
    int arity = 1;
    if (name == "grid") {
        spec.kind = FixtureKind::grid;
        arity = 2;
    } else if (name == "cycle") {
        spec.kind = FixtureKind::cycle;
    } else if (name == "wheel") {
        spec.kind = FixtureKind::wheel;
    } else if (name == "nested_cycles") {
        spec.kind = FixtureKind::nested_cycles;
        arity = 2;
    } else if (name == "path") {
        spec.kind = FixtureKind::path;
    } else if (name == "complete") {
        spec.kind = FixtureKind::complete;
    } else {
        throw parameter_error("fixture: unknown kind '" + name + "'");
    }
    if ((int)vals.size() != arity)
        throw parameter_error("fixture " + name + ": expected " + std::to_string(arity) +
                              " parameter(s) in '" + text + "'");
    spec.a = vals[0];
    if (arity == 2) spec.b = vals[1];
    return spec;
}

}  // namespace planarrep
