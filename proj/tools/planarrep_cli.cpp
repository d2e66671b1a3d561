#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "planarrep/gen.hpp"
#include "planarrep/json_io.hpp"
#include "planarrep/selftest.hpp"
#include "planarrep/verify.hpp"

namespace {

using namespace planarrep;

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw parameter_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw parameter_error("cannot open " + path + " for writing");
    f << content;
}

int oracle_limit() {
    const char* env = std::getenv("PLANARREP_ORACLE_LIMIT");
    if (!env || !*env) return 8;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (!end || *end || v < 1 || v > 20)
        throw parameter_error("PLANARREP_ORACLE_LIMIT must be an integer in [1, 20]");
    return (int)v;
}

int cmd_gen(const GenSpec& spec, const std::string& fixture_text, const std::string& out_path) {
    EmbeddedGraph eg =
        fixture_text.empty() ? random_planar(spec) : fixture(parse_fixture(fixture_text));
    write_output(out_path, serialize_embedded(eg));
    return 0;
}

int cmd_represent(const std::string& in_path, const std::string& out_path,
                  const std::string& dot_prefix) {
    GraphDoc doc = parse_graph(read_input(in_path));
    if (!doc.has_embedding())
        throw structural_error("represent: input carries no rotation; an embedding is required");
    RepresentationPair pair = planar_representation(doc.embedded());
    write_output(out_path, serialize_pair(pair));
    if (!dot_prefix.empty()) {
        write_output(dot_prefix + "_g.dot", to_dot(doc.graph));
        write_output(dot_prefix + "_g1.dot", to_dot(pair.g1, &pair.cover));
        write_output(dot_prefix + "_g2.dot", to_dot(pair.g2));
    }
    if (!pair.report.all_pass()) {
        std::cerr << "verdict failure: "
                  << (pair.report.violations.empty() ? "report does not pass"
                                                     : pair.report.violations.front())
                  << "\n";
        return 1;
    }
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& pair_path) {
    GraphDoc doc = parse_graph(read_input(graph_path));
    RepresentationPair pair = parse_pair(read_input(pair_path));
    CertifyReport report = certify(pair, doc.graph, pair.layers);
    std::cout << serialize_report(report);
    if (!report.all_pass()) {
        std::cerr << "verdict failure: "
                  << (report.violations.empty() ? "report does not pass"
                                                : report.violations.front())
                  << "\n";
        return 1;
    }
    return 0;
}

int cmd_oracle(const std::string& in_path, bool ccw, bool bw) {
    GraphDoc doc = parse_graph(read_input(in_path));
    const int limit = oracle_limit();
    const int value = ccw ? brute_ccw(doc.graph, limit) : brute_bandwidth(doc.graph, limit);
    (void)bw;
    std::cout << value << "\n";
    return 0;
}

int cmd_selftest() {
    std::vector<CriterionResult> results = run_acceptance();
    bool all = true;
    for (const CriterionResult& r : results) {
        std::cout << "criterion " << r.index << " [" << (r.pass ? "pass" : "FAIL")
                  << "] " << r.name << " — " << r.detail << "\n";
        all = all && r.pass;
    }
    std::cout << (all ? "selftest: all criteria pass" : "selftest: FAILURES above") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar graph decomposition into a bounded-width clique-cover factor "
                 "and a chordal factor"};
    app.require_subcommand(1);

    GenSpec spec;
    std::string fixture_text, gen_out;
    CLI::App* gen = app.add_subcommand("gen", "emit a graph document");
    CLI::Option* n_opt = gen->add_option("--n", spec.n, "vertex count");
    CLI::Option* seed_opt = gen->add_option("--seed", spec.seed, "random seed");
    CLI::Option* keep_opt =
        gen->add_option("--keep", spec.edge_keep_ratio, "edge keep ratio in (0, 1]");
    gen->add_option("--fixture", fixture_text, "named fixture, e.g. cycle:5 or grid:2,3")
        ->excludes(n_opt)
        ->excludes(seed_opt)
        ->excludes(keep_opt);
    gen->add_option("-o,--output", gen_out, "output path (default stdout)");

    std::string rep_in, rep_out, dot_prefix;
    CLI::App* represent = app.add_subcommand("represent", "decompose an embedded planar graph");
    represent->add_option("input", rep_in, "graph document path (default stdin)");
    represent->add_option("-o,--output", rep_out, "output path (default stdout)");
    represent->add_option("--emit-dot", dot_prefix, "write PREFIX_g.dot, PREFIX_g1.dot, PREFIX_g2.dot");

    std::string ver_graph, ver_pair;
    CLI::App* verify = app.add_subcommand("verify", "re-verify a pair document against a graph");
    verify->add_option("graph", ver_graph, "graph document path")->required();
    verify->add_option("pair", ver_pair, "pair document path")->required();

    std::string ora_in;
    bool want_ccw = false, want_bw = false;
    CLI::App* oracle = app.add_subcommand("oracle", "exact small-instance numbers");
    oracle->add_option("input", ora_in, "graph document path (default stdin)");
    CLI::Option* ccw_opt = oracle->add_flag("--ccw", want_ccw, "minimum ordered clique cover width");
    oracle->add_flag("--bw", want_bw, "minimum bandwidth")->excludes(ccw_opt);

    bool selftest = false;
    CLI::App* pipeline = app.add_subcommand("pipeline", "batch pipeline utilities");
    pipeline->add_flag("--selftest", selftest, "run the full acceptance battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(spec, fixture_text, gen_out);
        if (represent->parsed()) return cmd_represent(rep_in, rep_out, dot_prefix);
        if (verify->parsed()) return cmd_verify(ver_graph, ver_pair);
        if (oracle->parsed()) {
            if (want_ccw == want_bw)
                throw parameter_error("oracle: exactly one of --ccw or --bw is required");
            return cmd_oracle(ora_in, want_ccw, want_bw);
        }
        if (pipeline->parsed()) {
            if (!selftest) throw parameter_error("pipeline: --selftest is the only mode");
            return cmd_selftest();
        }
    } catch (const invariant_breach& e) {
        // what() already leads with the stage tag
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 1;
    } catch (const structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
