#include "planarrep/json_io.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace planarrep {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw structural_error(path.empty() ? msg : path + ": " + msg);
}

long long get_integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<long long>();
}

VertexId vertex_ref(const json& j, const std::string& path, int n,
                    const std::map<std::string, int>& byname) {
    if (!byname.empty()) {
        if (!j.is_string()) fail(path, "expected a vertex name");
        const std::string s = j.get<std::string>();
        auto it = byname.find(s);
        if (it == byname.end()) fail(path, "unknown vertex name '" + s + "'");
        return it->second;
    }
    long long v = get_integer(j, path);
    if (v < 0 || v >= n) fail(path, "vertex index out of range");
    return (VertexId)v;
}

GraphDoc graph_from_json(const json& j, const std::string& root) {
    auto at = [&](const std::string& field) { return root.empty() ? field : root + "." + field; };
    if (!j.is_object()) fail(root, "graph document must be a JSON object");
    for (const auto& [k, v] : j.items()) {
        (void)v;
        if (k != "n" && k != "ids" && k != "edges" && k != "rotation" && k != "outer_face")
            fail(root, "unknown field '" + k + "'");
    }
    if (!j.contains("n")) fail(at("n"), "missing");
    long long n_ll = get_integer(j["n"], at("n"));
    if (n_ll < 1 || n_ll > 1000000) fail(at("n"), "must be between 1 and 1000000");
    const int n = (int)n_ll;

    GraphDoc doc;
    doc.graph = Graph(n);
    std::map<std::string, int> byname;
    if (j.contains("ids")) {
        const json& a = j["ids"];
        if (!a.is_array() || (int)a.size() != n) fail(at("ids"), "expected an array of n names");
        doc.ids.resize(n);
        for (int i = 0; i < n; ++i) {
            const std::string path = at("ids[" + std::to_string(i) + "]");
            if (!a[i].is_string()) fail(path, "expected a string");
            const std::string s = a[i].get<std::string>();
            if (s.empty()) fail(path, "empty name");
            if (!byname.emplace(s, i).second) fail(path, "duplicate name '" + s + "'");
            doc.ids[i] = s;
        }
    }
    auto show = [&](VertexId v) {
        return doc.ids.empty() ? std::to_string(v) : doc.ids[v];
    };

    if (!j.contains("edges")) fail(at("edges"), "missing");
    const json& ea = j["edges"];
    if (!ea.is_array()) fail(at("edges"), "expected an array");
    for (size_t k = 0; k < ea.size(); ++k) {
        const std::string path = at("edges[" + std::to_string(k) + "]");
        const json& e = ea[k];
        if (!e.is_array() || e.size() != 2) fail(path, "expected a pair of vertices");
        VertexId u = vertex_ref(e[0], path + "[0]", n, byname);
        VertexId v = vertex_ref(e[1], path + "[1]", n, byname);
        if (u == v) fail(path, "loop at vertex " + show(u));
        if (doc.graph.has_edge(u, v)) fail(path, "duplicate edge " + show(u) + "-" + show(v));
        doc.graph.add_edge(u, v);
    }

    const bool has_rot = j.contains("rotation");
    const bool has_outer = j.contains("outer_face");
    if (has_outer && !has_rot) fail(at("outer_face"), "requires a rotation");
    if (!has_rot) return doc;

    const json& r = j["rotation"];
    if (!r.is_object()) fail(at("rotation"), "expected an object");
    doc.rotation.assign(n, {});
    std::map<std::string, int> expected;
    for (VertexId v = 0; v < n; ++v) expected[show(v)] = v;
    for (const auto& [key, val] : r.items()) {
        auto it = expected.find(key);
        if (it == expected.end()) fail(at("rotation." + key), "unknown vertex");
        if (!val.is_array()) fail(at("rotation." + key), "expected an array");
        for (size_t i = 0; i < val.size(); ++i)
            doc.rotation[it->second].push_back(
                vertex_ref(val[i], at("rotation." + key + "[" + std::to_string(i) + "]"), n, byname));
    }
    for (VertexId v = 0; v < n; ++v)
        if (!r.contains(show(v))) fail(at("rotation"), "missing entry for vertex " + show(v));

    EmbeddedGraph eg{doc.graph, doc.rotation, {}};
    try {
        validate_rotation(eg);
    } catch (const structural_error& e) {
        fail(at("rotation"), e.what());
    }
    if (!doc.graph.is_connected())
        fail(at("rotation"), "a rotation system requires a connected graph");
    if (doc.graph.edge_count() == 0) {
        if (has_outer) fail(at("outer_face"), "given for an edgeless graph");
        return doc;
    }
    if (!has_outer) fail(at("outer_face"), "required alongside a rotation");
    const json& of = j["outer_face"];
    if (!of.is_array() || of.size() != 2) fail(at("outer_face"), "expected a pair of vertices");
    Dart d{vertex_ref(of[0], at("outer_face[0]"), n, byname),
           vertex_ref(of[1], at("outer_face[1]"), n, byname)};
    doc.outer = {d};
    eg.outer = doc.outer;
    try {
        validate_outer(eg);
    } catch (const structural_error& e) {
        fail(at("outer_face"), e.what());
    }
    EulerReport er = euler_certify(eg);
    if (!er.ok)
        fail(at("rotation"), "embedding fails the Euler test (V-E+F = " +
                                 std::to_string(er.vertices - er.edges + er.faces) + ")");
    return doc;
}

ordered_json graph_to_json(const GraphDoc& doc) {
    const Graph& g = doc.graph;
    auto show = [&](VertexId v) -> ordered_json {
        if (doc.ids.empty()) return v;
        return doc.ids[v];
    };
    ordered_json out;
    out["n"] = g.vertex_count();
    if (!doc.ids.empty()) out["ids"] = doc.ids;
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back(ordered_json::array({show(u), show(v)}));
    out["edges"] = std::move(edges);
    if (doc.has_embedding()) {
        ordered_json rot = ordered_json::object();
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::vector<VertexId> canon = doc.rotation[v];
            if (!canon.empty())
                std::rotate(canon.begin(), std::min_element(canon.begin(), canon.end()),
                            canon.end());
            ordered_json list = ordered_json::array();
            for (VertexId w : canon) list.push_back(show(w));
            const std::string key = doc.ids.empty() ? std::to_string(v) : doc.ids[v];
            rot[key] = std::move(list);
        }
        out["rotation"] = std::move(rot);
        if (g.edge_count() > 0) {
            if (doc.outer.size() != 1)
                throw structural_error(
                    "serialize_graph: exactly one outer dart is required to serialize");
            out["outer_face"] = ordered_json::array({show(doc.outer[0].from), show(doc.outer[0].to)});
        }
    }
    return out;
}

ordered_json report_to_json(const CertifyReport& report) {
    ordered_json rep;
    rep["intersection"] = report.intersection;
    rep["chordal"] = report.chordal;
    rep["cover_width"] = report.cover_width;
    rep["bound"] = report.bound;
    rep["t_star"] = report.t_star;
    rep["treedec_valid"] = report.treedec_valid;
    rep["violations"] = report.violations;
    return rep;
}

}  // namespace

EmbeddedGraph GraphDoc::embedded() const {
    if (!has_embedding()) throw structural_error("graph document carries no embedding");
    return {graph, rotation, outer};
}

GraphDoc parse_graph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw structural_error(std::string("invalid JSON: ") + e.what());
    }
    return graph_from_json(j, "");
}

std::string serialize_graph(const GraphDoc& doc) { return graph_to_json(doc).dump(2) + "\n"; }

std::string serialize_graph(const Graph& g) {
    GraphDoc doc;
    doc.graph = g;
    return serialize_graph(doc);
}

std::string serialize_embedded(const EmbeddedGraph& eg) {
    GraphDoc doc;
    doc.graph = eg.graph;
    doc.rotation = eg.rotation;
    doc.outer = eg.outer;
    return serialize_graph(doc);
}

std::string serialize_pair(const RepresentationPair& pair) {
    ordered_json out;
    GraphDoc d1, d2;
    d1.graph = pair.g1;
    d2.graph = pair.g2;
    out["g1"] = graph_to_json(d1);
    ordered_json cover;
    cover["order"] = pair.cover.blocks;
    cover["width"] = pair.report.cover_width;
    out["clique_cover"] = std::move(cover);
    out["g2"] = graph_to_json(d2);
    ordered_json td;
    ordered_json nodes = ordered_json::array();
    for (int t = 0; t < pair.td.node_count(); ++t) {
        ordered_json node;
        node["id"] = t;
        node["bag"] = pair.td.bags[t];
        nodes.push_back(std::move(node));
    }
    td["nodes"] = std::move(nodes);
    td["tree_edges"] = pair.td.tree.edges();
    td["width"] = pair.td.width();
    out["tree_decomposition"] = std::move(td);
    ordered_json layers;
    layers["layers"] = pair.layers.layers;
    out["layers"] = std::move(layers);
    out["t_star"] = pair.t_star;
    out["report"] = report_to_json(pair.report);
    return out.dump(2) + "\n";
}

RepresentationPair parse_pair(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw structural_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw structural_error("pair document must be a JSON object");
    for (const char* key : {"g1", "clique_cover", "g2", "tree_decomposition", "layers", "t_star",
                            "report"})
        if (!j.contains(key)) fail(key, "missing");

    RepresentationPair pair;
    pair.g1 = graph_from_json(j["g1"], "g1").graph;
    pair.g2 = graph_from_json(j["g2"], "g2").graph;
    const int n = pair.g1.vertex_count();
    if (pair.g2.vertex_count() != n)
        throw structural_error("g2: vertex count differs from g1");

    const json& cov = j["clique_cover"];
    if (!cov.is_object() || !cov.contains("order"))
        fail("clique_cover", "expected an object with an 'order' array");
    const json& order = cov["order"];
    if (!order.is_array()) fail("clique_cover.order", "expected an array");
    pair.cover.host = pair.g1;
    for (size_t b = 0; b < order.size(); ++b) {
        const std::string path = "clique_cover.order[" + std::to_string(b) + "]";
        if (!order[b].is_array()) fail(path, "expected an array");
        std::vector<VertexId> block;
        for (size_t i = 0; i < order[b].size(); ++i)
            block.push_back(vertex_ref(order[b][i], path + "[" + std::to_string(i) + "]", n, {}));
        std::sort(block.begin(), block.end());
        pair.cover.blocks.push_back(std::move(block));
    }

    const json& td = j["tree_decomposition"];
    if (!td.is_object() || !td.contains("nodes") || !td.contains("tree_edges"))
        fail("tree_decomposition", "expected an object with 'nodes' and 'tree_edges'");
    const json& nodes = td["nodes"];
    if (!nodes.is_array()) fail("tree_decomposition.nodes", "expected an array");
    const int k = (int)nodes.size();
    pair.td.tree = Graph(k);
    pair.td.bags.assign(k, {});
    pair.td.origin.assign(k, NodeOrigin{false, -1, {-1, -1}});
    std::vector<char> seen(k, 0);
    for (int t = 0; t < k; ++t) {
        const std::string path = "tree_decomposition.nodes[" + std::to_string(t) + "]";
        const json& node = nodes[t];
        if (!node.is_object() || !node.contains("id") || !node.contains("bag"))
            fail(path, "expected an object with 'id' and 'bag'");
        long long id = get_integer(node["id"], path + ".id");
        if (id < 0 || id >= k) fail(path + ".id", "node id out of range");
        if (seen[id]) fail(path + ".id", "duplicate node id");
        seen[id] = 1;
        const json& bag = node["bag"];
        if (!bag.is_array()) fail(path + ".bag", "expected an array");
        std::vector<VertexId> b;
        for (size_t i = 0; i < bag.size(); ++i)
            b.push_back(vertex_ref(bag[i], path + ".bag[" + std::to_string(i) + "]", n, {}));
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        pair.td.bags[id] = std::move(b);
    }
    const json& te = td["tree_edges"];
    if (!te.is_array()) fail("tree_decomposition.tree_edges", "expected an array");
    for (size_t i = 0; i < te.size(); ++i) {
        const std::string path = "tree_decomposition.tree_edges[" + std::to_string(i) + "]";
        if (!te[i].is_array() || te[i].size() != 2) fail(path, "expected a pair of node ids");
        long long a = get_integer(te[i][0], path + "[0]");
        long long b = get_integer(te[i][1], path + "[1]");
        if (a < 0 || a >= k || b < 0 || b >= k) fail(path, "node id out of range");
        try {
            pair.td.tree.add_edge((VertexId)a, (VertexId)b);
        } catch (const structural_error& e) {
            fail(path, e.what());
        }
    }

    const json& la = j["layers"];
    if (!la.is_object() || !la.contains("layers")) fail("layers", "expected an object with 'layers'");
    const json& ll = la["layers"];
    if (!ll.is_array()) fail("layers.layers", "expected an array");
    for (size_t i = 0; i < ll.size(); ++i) {
        const std::string path = "layers.layers[" + std::to_string(i) + "]";
        if (!ll[i].is_array()) fail(path, "expected an array");
        std::vector<VertexId> layer;
        for (size_t p = 0; p < ll[i].size(); ++p)
            layer.push_back(vertex_ref(ll[i][p], path + "[" + std::to_string(p) + "]", n, {}));
        std::sort(layer.begin(), layer.end());
        pair.layers.layers.push_back(std::move(layer));
    }

    long long ts = get_integer(j["t_star"], "t_star");
    if (ts < 0) fail("t_star", "must be nonnegative");
    pair.t_star = (int)ts;

    const json& rep = j["report"];
    if (!rep.is_object()) fail("report", "expected an object");
    auto get_bool = [&](const char* field) {
        if (!rep.contains(field) || !rep[field].is_boolean())
            fail(std::string("report.") + field, "expected a boolean");
        return rep[field].get<bool>();
    };
    pair.report.intersection = get_bool("intersection");
    pair.report.chordal = get_bool("chordal");
    pair.report.treedec_valid = get_bool("treedec_valid");
    if (rep.contains("cover_width"))
        pair.report.cover_width = (int)get_integer(rep["cover_width"], "report.cover_width");
    if (rep.contains("bound")) pair.report.bound = (int)get_integer(rep["bound"], "report.bound");
    if (rep.contains("t_star")) pair.report.t_star = (int)get_integer(rep["t_star"], "report.t_star");
    if (rep.contains("violations")) {
        const json& vio = rep["violations"];
        if (!vio.is_array()) fail("report.violations", "expected an array");
        for (size_t i = 0; i < vio.size(); ++i) {
            if (!vio[i].is_string())
                fail("report.violations[" + std::to_string(i) + "]", "expected a string");
            pair.report.violations.push_back(vio[i].get<std::string>());
        }
    }

    pair.model = subtree_model(pair.td, n);
    return pair;
}

std::string serialize_report(const CertifyReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

std::string to_dot(const Graph& g, const OrderedCliqueCover* cover) {
    static const char* palette[] = {"#4c72b0", "#dd8452", "#55a868", "#c44e52",
                                    "#8172b3", "#937860", "#da8bc3", "#8c8c8c"};
    const int ncolors = 8;
    std::vector<int> pos;
    if (cover) {
        pos.assign(g.vertex_count(), -1);
        for (size_t b = 0; b < cover->blocks.size(); ++b)
            for (VertexId v : cover->blocks[b])
                if (v >= 0 && v < g.vertex_count()) pos[v] = (int)b;
    }
    std::string out = "graph g {\n";
    if (cover) out += "  node [style=filled];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out += "  " + std::to_string(v);
        if (cover && pos[v] >= 0) {
            out += " [label=\"" + std::to_string(v) + " | " + std::to_string(pos[v]) +
                   "\", fillcolor=\"" + palette[pos[v] % ncolors] + "\"]";
        }
        out += ";\n";
    }
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace planarrep
