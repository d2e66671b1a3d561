#include "planarrep/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "planarrep/gen.hpp"
#include "planarrep/json_io.hpp"
#include "planarrep/verify.hpp"

namespace planarrep {

namespace {

double uniform01(std::mt19937_64& rng) {
    // identical across platforms: 53 high bits scaled to [0, 1)
    return (double)(rng() >> 11) * 0x1.0p-53;
}

bool bernoulli(std::mt19937_64& rng, double p) { return uniform01(rng) < p; }

Graph gnp(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (bernoulli(rng, p)) g.add_edge(u, v);
    return g;
}

Graph random_connected(int n, double extra_p, std::mt19937_64& rng) {
    Graph g(n);
    for (VertexId v = 1; v < n; ++v) g.add_edge((VertexId)(rng() % v), v);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && bernoulli(rng, extra_p)) g.add_edge(u, v);
    return g;
}

LayerPartition bfs_layers(const Graph& g) {
    LayerPartition lp;
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<VertexId> queue = {0};
    dist[0] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if ((int)lp.layers.size() <= dist[v]) lp.layers.resize(dist[v] + 1);
        lp.layers[dist[v]].push_back(v);
    }
    return lp;
}

std::vector<GenSpec> planar_corpus_specs() {
    std::vector<GenSpec> specs;
    for (int i = 0; i < 200; ++i)
        specs.push_back({4 + (i * 7) % 57, (std::uint64_t)(1000 + i), 1.0 - 0.05 * (i % 7)});
    return specs;
}

std::vector<std::pair<std::string, FixtureSpec>> named_fixtures() {
    using K = FixtureKind;
    return {
        {"grid:2,2", {K::grid, 2, 2}},           {"grid:3,3", {K::grid, 3, 3}},
        {"grid:3,4", {K::grid, 3, 4}},           {"grid:1,6", {K::grid, 1, 6}},
        {"cycle:3", {K::cycle, 3, 0}},           {"cycle:4", {K::cycle, 4, 0}},
        {"cycle:5", {K::cycle, 5, 0}},           {"cycle:6", {K::cycle, 6, 0}},
        {"cycle:7", {K::cycle, 7, 0}},           {"cycle:8", {K::cycle, 8, 0}},
        {"wheel:5", {K::wheel, 5, 0}},           {"wheel:6", {K::wheel, 6, 0}},
        {"wheel:9", {K::wheel, 9, 0}},           {"nested_cycles:2,3", {K::nested_cycles, 2, 3}},
        {"nested_cycles:3,4", {K::nested_cycles, 3, 4}},
        {"nested_cycles:2,5", {K::nested_cycles, 2, 5}},
        {"nested_cycles:4,3", {K::nested_cycles, 4, 3}},
        {"path:1", {K::path, 1, 0}},             {"path:2", {K::path, 2, 0}},
        {"path:5", {K::path, 5, 0}},             {"path:9", {K::path, 9, 0}},
        {"complete:1", {K::complete, 1, 0}},     {"complete:2", {K::complete, 2, 0}},
        {"complete:3", {K::complete, 3, 0}},     {"complete:4", {K::complete, 4, 0}},
    };
}

struct CorpusOutcome {
    std::string name;
    bool ok = false;
    std::string error;
    CertifyReport report;
    int t_star = 0;
    int bag_layer_max = 0;   // max |bag ∩ layer| over the expanded decomposition
    int er_inc_max = 0;      // max per-step edge-remember increment
    int vr_inc_max = 0;      // max per-step vertex-remember increment
    int expanded_degree = 0; // max degree after expansion
};

CorpusOutcome run_pipeline_case(const std::string& name, const EmbeddedGraph& eg) {
    CorpusOutcome out;
    out.name = name;
    try {
        PlanarRunTrace trace;
        RepresentationPair pair = planar_representation(eg, &trace);
        out.report = pair.report;
        out.t_star = pair.t_star;
        auto idx = trace.expanded_layers.layer_index((int)trace.map.backward.size());
        for (int t = 0; t < trace.expanded_td.node_count(); ++t) {
            std::map<int, int> per_layer;
            for (VertexId v : trace.expanded_td.bags[t])
                out.bag_layer_max = std::max(out.bag_layer_max, ++per_layer[idx[v]]);
        }
        for (const LayerStepStats& st : trace.steps) {
            out.er_inc_max = std::max(out.er_inc_max, st.max_er_increment);
            out.vr_inc_max = std::max(out.vr_inc_max, st.max_vr_increment);
            out.expanded_degree = std::max(out.expanded_degree, st.max_degree);
        }
        out.ok = true;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

std::vector<CorpusOutcome> run_planar_corpus() {
    std::vector<CorpusOutcome> outcomes;
    for (const GenSpec& spec : planar_corpus_specs()) {
        const std::string name = "random(n=" + std::to_string(spec.n) +
                                 ",seed=" + std::to_string(spec.seed) + ")";
        outcomes.push_back(run_pipeline_case(name, random_planar(spec)));
    }
    for (const auto& [name, fs] : named_fixtures())
        outcomes.push_back(run_pipeline_case(name, fixture(fs)));
    return outcomes;
}

// ---- small-graph catalog ----------------------------------------------------

int slot_of(int i, int j, int n) {  // i < j
    int s = 0;
    for (int a = 0; a < i; ++a) s += n - a - 1;
    return s + (j - i - 1);
}

bool mask_connected(unsigned mask, int n) {
    if (n <= 1) return true;
    std::vector<unsigned> adj(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask & (1u << slot_of(i, j, n))) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    unsigned seen = 1, frontier = 1;
    while (frontier) {
        unsigned next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (1u << v)) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

}  // namespace

std::vector<Graph> connected_catalog(int n) {
    if (n < 1 || n > 6) throw parameter_error("connected_catalog: n must be in [1, 6]");
    const int m = n * (n - 1) / 2;
    std::vector<std::array<int, 2>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.push_back({i, j});

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> slot_maps;  // per permutation: slot -> permuted slot
    do {
        std::vector<int> map(m);
        for (int s = 0; s < m; ++s) {
            int i = perm[slots[s][0]], j = perm[slots[s][1]];
            map[s] = slot_of(std::min(i, j), std::max(i, j), n);
        }
        slot_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<unsigned> canon;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (!mask_connected(mask, n)) continue;
        unsigned best = ~0u;
        for (const auto& map : slot_maps) {
            unsigned img = 0;
            for (int s = 0; s < m; ++s)
                if (mask & (1u << s)) img |= 1u << map[s];
            best = std::min(best, img);
            if (best == 0) break;
        }
        canon.insert(best);
    }
    std::vector<Graph> out;
    for (unsigned mask : canon) {
        Graph g(n);
        for (int s = 0; s < m; ++s)
            if (mask & (1u << s)) g.add_edge(slots[s][0], slots[s][1]);
        out.push_back(std::move(g));
    }
    return out;
}

bool naive_chordal(const Graph& g) {
    const int n = g.vertex_count();
    // an induced cycle of length >= 4 is a vertex subset whose induced subgraph
    // is connected and 2-regular, of size >= 4
    for (unsigned s = 0; s < (1u << n); ++s) {
        if (__builtin_popcount(s) < 4) continue;
        bool two_regular = true;
        for (int v = 0; v < n && two_regular; ++v) {
            if (!(s & (1u << v))) continue;
            int d = 0;
            for (VertexId w : g.neighbors(v))
                if (s & (1u << w)) ++d;
            two_regular = d == 2;
        }
        if (!two_regular) continue;
        // 2-regular and connected means a single cycle
        int start = __builtin_ctz(s);
        unsigned seen = 1u << start, frontier = seen;
        while (frontier) {
            unsigned next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier & (1u << v))
                    for (VertexId w : g.neighbors(v))
                        if (s & (1u << w)) next |= 1u << w;
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == s) return false;
    }
    return true;
}

namespace {

// ---- the eight criteria -----------------------------------------------------

CriterionResult criterion_intersection_identity(const std::vector<CorpusOutcome>& corpus,
                                                double elapsed_seconds) {
    CriterionResult r{1, "planar corpus: exact intersection, chordal factor, cover width <= 7", false, ""};
    int failures = 0;
    std::string first;
    for (const CorpusOutcome& c : corpus) {
        std::string why;
        if (!c.ok)
            why = c.error;
        else if (!c.report.intersection)
            why = "intersection mismatch";
        else if (!c.report.chordal)
            why = "second factor not chordal";
        else if (c.report.cover_width > 7)
            why = "cover width " + std::to_string(c.report.cover_width);
        if (!why.empty()) {
            ++failures;
            if (first.empty()) first = c.name + ": " + why;
        }
    }
    const bool in_time = elapsed_seconds < 10.0;
    r.pass = failures == 0 && in_time;
    r.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(failures) +
               " failures, corpus built and decomposed in " +
               std::to_string(elapsed_seconds).substr(0, 5) + "s";
    if (!in_time) r.detail += " (over the 10s budget)";
    if (!first.empty()) r.detail += "; first: " + first;
    return r;
}

CriterionResult criterion_bag_layer_bound(const std::vector<CorpusOutcome>& corpus) {
    CriterionResult r{2, "planar corpus: every bag meets every layer in <= 4 vertices, t* <= 4", false, ""};
    int failures = 0;
    int worst_bag = 0, worst_t = 0;
    std::string first;
    for (const CorpusOutcome& c : corpus) {
        if (!c.ok) {
            ++failures;
            if (first.empty()) first = c.name + ": " + c.error;
            continue;
        }
        worst_bag = std::max(worst_bag, c.bag_layer_max);
        worst_t = std::max(worst_t, c.t_star);
        if (c.bag_layer_max > 4 || c.t_star > 4) {
            ++failures;
            if (first.empty())
                first = c.name + ": bag/layer " + std::to_string(c.bag_layer_max) + ", t* " +
                        std::to_string(c.t_star);
        }
    }
    r.pass = failures == 0;
    r.detail = "max |bag ∩ layer| = " + std::to_string(worst_bag) + ", max t* = " +
               std::to_string(worst_t) + ", " + std::to_string(failures) + " violations";
    if (!first.empty()) r.detail += "; first: " + first;
    return r;
}

CriterionResult criterion_width_bound(const std::vector<CorpusOutcome>&) {
    CriterionResult r{3, "random graphs: decomposition width <= max{vr, er+1}", false, ""};
    int failures = 0;
    std::string first;
    int count = 0;
    for (int i = 0; i < 100; ++i) {
        std::mt19937_64 rng(500 + i);
        const int n = 2 + (i * 11) % 39;
        const double p = 0.05 + 0.07 * (i % 5);
        Graph g = gnp(n, p, rng);
        ++count;
        try {
            SpanningForestAnnotated f = maximal_spanning_forest(g);
            TreeDecomposition td = bodlaender_decomposition(g, f);
            const int bound = std::max(f.max_vertex_remember(), f.max_edge_remember() + 1);
            TreeDecCheck check = validate_treedec(g, td);
            if (!check.pass) {
                ++failures;
                if (first.empty()) first = "graph " + std::to_string(i) + ": " + check.failed_axiom;
            } else if (td.width() > bound) {
                ++failures;
                if (first.empty())
                    first = "graph " + std::to_string(i) + ": width " + std::to_string(td.width()) +
                            " > " + std::to_string(bound);
            }
        } catch (const std::exception& e) {
            ++failures;
            if (first.empty()) first = "graph " + std::to_string(i) + ": " + e.what();
        }
    }
    r.pass = failures == 0;
    r.detail = std::to_string(count) + " graphs (n <= 40), " + std::to_string(failures) +
               " violations";
    if (!first.empty()) r.detail += "; first: " + first;
    return r;
}

CriterionResult criterion_step_increments(const std::vector<CorpusOutcome>& corpus) {
    CriterionResult r{4, "planar corpus: per-step remember increments <= 2 (edges), <= 3 (vertices)", false, ""};
    int failures = 0;
    int worst_er = 0, worst_vr = 0, worst_deg = 0;
    std::string first;
    for (const CorpusOutcome& c : corpus) {
        if (!c.ok) {
            ++failures;
            if (first.empty()) first = c.name + ": " + c.error;
            continue;
        }
        worst_er = std::max(worst_er, c.er_inc_max);
        worst_vr = std::max(worst_vr, c.vr_inc_max);
        worst_deg = std::max(worst_deg, c.expanded_degree);
        if (c.er_inc_max > 2 || c.vr_inc_max > 3 || c.expanded_degree > 3) {
            ++failures;
            if (first.empty())
                first = c.name + ": er +" + std::to_string(c.er_inc_max) + ", vr +" +
                        std::to_string(c.vr_inc_max) + ", degree " +
                        std::to_string(c.expanded_degree);
        }
    }
    r.pass = failures == 0;
    r.detail = "max increments er +" + std::to_string(worst_er) + ", vr +" +
               std::to_string(worst_vr) + ", expanded degree " + std::to_string(worst_deg) +
               ", " + std::to_string(failures) + " violations";
    if (!first.empty()) r.detail += "; first: " + first;
    return r;
}

CriterionResult criterion_generic_construction(const std::vector<CorpusOutcome>&) {
    CriterionResult r{5, "random triples: generic construction reaches width <= 2t*-1", false, ""};
    int failures = 0;
    std::string first;
    for (int i = 0; i < 50; ++i) {
        std::mt19937_64 rng(7000 + i);
        const int n = 2 + (i * 13) % 30;
        Graph g = random_connected(n, 0.2, rng);
        try {
            SpanningForestAnnotated f = maximal_spanning_forest(g);
            TreeDecomposition td = bodlaender_decomposition(g, f);
            LayerPartition lp = bfs_layers(g);
            RepresentationPair pair = universal_representation(g, td, lp);
            if (!pair.report.all_pass() || pair.report.cover_width > 2 * pair.t_star - 1) {
                ++failures;
                if (first.empty())
                    first = "triple " + std::to_string(i) + ": width " +
                            std::to_string(pair.report.cover_width) + " vs bound " +
                            std::to_string(2 * pair.t_star - 1);
            }
        } catch (const std::exception& e) {
            ++failures;
            if (first.empty()) first = "triple " + std::to_string(i) + ": " + e.what();
        }
    }
    r.pass = failures == 0;
    r.detail = "50 triples, " + std::to_string(failures) + " violations";
    if (!first.empty()) r.detail += "; first: " + first;
    return r;
}

CriterionResult criterion_oracle_consistency() {
    CriterionResult r{6, "small graphs: exhaustive cover-width/bandwidth consistency", false, ""};
    std::string first;
    int failures = 0;

    static const int expected_counts[] = {1, 1, 2, 6, 21, 112};
    int catalog_total = 0;
    for (int n = 1; n <= 6 && failures == 0; ++n) {
        std::vector<Graph> graphs = connected_catalog(n);
        if ((int)graphs.size() != expected_counts[n - 1]) {
            ++failures;
            first = "catalog n=" + std::to_string(n) + " has " + std::to_string(graphs.size()) +
                    " classes, expected " + std::to_string(expected_counts[n - 1]);
            break;
        }
        catalog_total += (int)graphs.size();
        for (const Graph& g : graphs) {
            if (brute_ccw(g) > brute_bandwidth(g)) {
                ++failures;
                first = "a graph on " + std::to_string(n) + " vertices has cover width above bandwidth";
                break;
            }
        }
    }

    // frozen oracle spot values
    if (failures == 0) {
        auto path_graph = [](int n) {
            Graph g(n);
            for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
            return g;
        };
        auto cycle_graph = [](int n) {
            Graph g(n);
            for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
            return g;
        };
        auto complete_graph = [](int n) {
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
            return g;
        };
        Graph star(4);
        star.add_edge(0, 1);
        star.add_edge(0, 2);
        star.add_edge(0, 3);
        struct Spot {
            const char* name;
            Graph g;
            int want;
        };
        const Spot spots[] = {
            {"complete:2", complete_graph(2), 0}, {"complete:4", complete_graph(4), 0},
            {"complete:6", complete_graph(6), 0}, {"path:5", path_graph(5), 1},
            {"cycle:4", cycle_graph(4), 1},       {"cycle:5", cycle_graph(5), 2},
            {"cycle:6", cycle_graph(6), 2},       {"star:1,3", star, 1},
        };
        for (const Spot& s : spots)
            if (brute_ccw(s.g) != s.want) {
                ++failures;
                first = std::string(s.name) + ": cover width " + std::to_string(brute_ccw(s.g)) +
                        ", expected " + std::to_string(s.want);
                break;
            }
    }

    // pipeline cover width is a legal cover of the first factor, so it must
    // dominate that factor's exact optimum (and stay within the global bound)
    int pipeline_cases = 0;
    if (failures == 0) {
        std::vector<std::pair<std::string, EmbeddedGraph>> small;
        using K = FixtureKind;
        for (int m = 3; m <= 8; ++m) small.push_back({"cycle", fixture({K::cycle, m, 0})});
        for (int m = 1; m <= 8; ++m) small.push_back({"path", fixture({K::path, m, 0})});
        for (int m = 4; m <= 7; ++m) small.push_back({"wheel", fixture({K::wheel, m, 0})});
        for (int m = 1; m <= 4; ++m) small.push_back({"complete", fixture({K::complete, m, 0})});
        small.push_back({"grid", fixture({K::grid, 2, 2})});
        small.push_back({"grid", fixture({K::grid, 2, 3})});
        small.push_back({"grid", fixture({K::grid, 2, 4})});
        small.push_back({"nested", fixture({K::nested_cycles, 2, 3})});
        small.push_back({"nested", fixture({K::nested_cycles, 2, 4})});
        for (int i = 0; i < 40; ++i)
            small.push_back({"random", random_planar({3 + i % 6, (std::uint64_t)(9000 + i),
                                                      1.0 - 0.1 * (i % 4)})});
        for (const auto& [name, eg] : small) {
            ++pipeline_cases;
            try {
                RepresentationPair pair = planar_representation(eg);
                const int w = pair.report.cover_width;
                const int opt = brute_ccw(pair.g1);
                if (w < opt || w > 7) {
                    ++failures;
                    if (first.empty())
                        first = name + ": pipeline width " + std::to_string(w) +
                                " vs optimum " + std::to_string(opt);
                }
            } catch (const std::exception& e) {
                ++failures;
                if (first.empty()) first = name + ": " + e.what();
            }
        }
    }

    r.pass = failures == 0;
    r.detail = std::to_string(catalog_total) + " catalog classes, 8 spot values, " +
               std::to_string(pipeline_cases) + " pipeline covers vs exact optimum, " +
               std::to_string(failures) + " violations";
    if (!first.empty()) r.detail += "; first: " + first;
    return r;
}

CriterionResult criterion_round_trips() {
    CriterionResult r{7, "round-trips: expansion/contraction, JSON bytes, generator determinism", false, ""};
    int failures = 0;
    std::string first;
    auto fail_case = [&](const std::string& msg) {
        ++failures;
        if (first.empty()) first = msg;
    };

    for (int i = 0; i < 100; ++i) {
        GenSpec spec{3 + (i * 5) % 28, (std::uint64_t)(3000 + i), 1.0 - 0.05 * (i % 5)};
        const std::string name = "instance " + std::to_string(i);
        try {
            EmbeddedGraph eg = random_planar(spec);
            ExpansionResult ex = expand_to_degree_three(eg);
            if (ex.eg.graph.max_degree() > 3) {
                fail_case(name + ": expansion left degree " +
                          std::to_string(ex.eg.graph.max_degree()));
                continue;
            }
            Graph back = contract_paths(ex.eg.graph, ex.map);
            if (!(back == eg.graph)) {
                fail_case(name + ": contraction does not restore the graph");
                continue;
            }
            std::string bytes = serialize_embedded(eg);
            GraphDoc doc = parse_graph(bytes);
            if (serialize_graph(doc) != bytes) {
                fail_case(name + ": embedded JSON round-trip is not byte-stable");
                continue;
            }
            EmbeddedGraph again = random_planar(spec);
            if (serialize_embedded(again) != bytes) {
                fail_case(name + ": generator is not deterministic per seed");
                continue;
            }
        } catch (const std::exception& e) {
            fail_case(name + ": " + e.what());
        }
    }

    // representation-pair documents round-trip byte-stably too
    for (int i = 0; i < 5 && failures == 0; ++i) {
        try {
            EmbeddedGraph eg = random_planar({8 + 3 * i, (std::uint64_t)(4000 + i), 0.9});
            RepresentationPair pair = planar_representation(eg);
            std::string bytes = serialize_pair(pair);
            RepresentationPair re = parse_pair(bytes);
            if (serialize_pair(re) != bytes)
                fail_case("pair document " + std::to_string(i) + " is not byte-stable");
        } catch (const std::exception& e) {
            fail_case(std::string("pair document: ") + e.what());
        }
    }

    r.pass = failures == 0;
    r.detail = "100 expansion and JSON instances, 5 pair documents, " + std::to_string(failures) +
               " failures";
    if (!first.empty()) r.detail += "; first: " + first;
    return r;
}

CriterionResult criterion_recognizer() {
    CriterionResult r{8, "chordality recognizer matches the naive induced-cycle search", false, ""};
    int failures = 0, chordal_count = 0;
    std::string first;
    const int samples = 1200;
    for (int i = 0; i < samples; ++i) {
        std::mt19937_64 rng(11000 + i);
        const int n = 1 + i % 7;
        const double p = 0.15 + 0.1 * (i % 8);
        Graph g = gnp(n, p, rng);
        ChordalityResult got = is_chordal(g);
        const bool want = naive_chordal(g);
        if (got.chordal != want) {
            ++failures;
            if (first.empty())
                first = "sample " + std::to_string(i) + ": recognizer says " +
                        (got.chordal ? "chordal" : "not chordal") + ", naive search disagrees";
            continue;
        }
        if (got.chordal) {
            ++chordal_count;
            continue;
        }
        // the witness must really be a chordless cycle
        const auto& cyc = got.witness_cycle;
        bool good = cyc.size() >= 4;
        for (size_t a = 0; a < cyc.size() && good; ++a)
            for (size_t b = a + 1; b < cyc.size() && good; ++b) {
                const bool consecutive = b == a + 1 || (a == 0 && b == cyc.size() - 1);
                if (g.has_edge(cyc[a], cyc[b]) != consecutive) good = false;
            }
        if (!good) {
            ++failures;
            if (first.empty()) first = "sample " + std::to_string(i) + ": invalid witness cycle";
        }
    }
    r.pass = failures == 0;
    r.detail = std::to_string(samples) + " samples (" + std::to_string(chordal_count) +
               " chordal), " + std::to_string(failures) + " mismatches";
    if (!first.empty()) r.detail += "; first: " + first;
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<CorpusOutcome> corpus = run_planar_corpus();
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::vector<CriterionResult> results;
    results.push_back(criterion_intersection_identity(corpus, elapsed));
    results.push_back(criterion_bag_layer_bound(corpus));
    results.push_back(criterion_width_bound(corpus));
    results.push_back(criterion_step_increments(corpus));
    results.push_back(criterion_generic_construction(corpus));
    results.push_back(criterion_oracle_consistency());
    results.push_back(criterion_round_trips());
    results.push_back(criterion_recognizer());
    return results;
}

}  // namespace planarrep
