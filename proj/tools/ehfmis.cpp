// Command-line front end: parse graphs and clique partitions, run the
// solvers and brute-force oracles, and emit a JSON run report.

#include <chrono>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ehf/chordal.hpp"
#include "ehf/cover.hpp"
#include "ehf/gen.hpp"
#include "ehf/graph.hpp"
#include "ehf/io.hpp"
#include "ehf/oracle.hpp"
#include "ehf/tisehf.hpp"

using nlohmann::json;

namespace {

constexpr std::uint32_t kDefaultSeed = 20240601;

enum ExitCode : int {
    kFound = 0,
    kNone = 1,
    kParseError = 2,
    kPreconditionViolated = 3,
};

json witness_json(const ehf::VertexSet& s) {
    json out = json::array();
    for (ehf::Vertex v : s) out.push_back(v + 1);
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

json base_report(const std::string& command, std::uint32_t seed) {
    json report;
    report["command"] = command;
    report["seed"] = seed;
    return report;
}

int emit(const json& report, int code) {
    std::cout << report.dump(2) << "\n";
    return code;
}

struct SolveArgs {
    std::string graph_path;
    int k = 0;
    bool verify_ehf = false;
    bool oracle = false;
    int threads = 1;
    bool trace = false;
    std::uint32_t seed = kDefaultSeed;
};

int run_solve(const SolveArgs& args) {
    auto start = std::chrono::steady_clock::now();
    json report = base_report("solve", args.seed);
    ehf::Graph g = ehf::io::read_graph_file(args.graph_path);
    report["input_digest"] = ehf::io::file_digest(args.graph_path);
    report["n"] = g.num_vertices();
    report["k"] = args.k;

    if (args.verify_ehf) {
        if (auto hole = ehf::oracle::find_even_hole(g)) {
            report["answer"] = "precondition_violated";
            report["even_hole"] = witness_json(hole->cycle);
            report["wall_ms"] = elapsed_ms(start);
            std::cerr << "input contains an even hole of length " << hole->cycle.size() << "\n";
            return emit(report, kPreconditionViolated);
        }
        report["even_hole_check"] = "none";
    }

    ehf::cover::Options opts;
    opts.threads = args.threads;
    if (args.trace) opts.trace = &std::cerr;
    auto result = ehf::cover::isehf_solve(g, args.k, opts);

    if (args.oracle) {
        auto mis = ehf::oracle::brute_mis(g);
        bool oracle_feasible = static_cast<int>(mis.size()) >= args.k;
        report["oracle_alpha"] = mis.size();
        report["oracle_agrees"] = (oracle_feasible == result.has_value());
        if (oracle_feasible != result.has_value())
            std::cerr << "oracle disagreement: alpha=" << mis.size() << " answer="
                      << (result ? "found" : "none") << "\n";
    }

    report["wall_ms"] = elapsed_ms(start);
    if (!result) {
        report["answer"] = "none";
        return emit(report, kNone);
    }
    report["answer"] = "found";
    report["witness"] = witness_json(*result);
    json verify;
    verify["independent"] = ehf::is_independent(g, *result);
    verify["size_ok"] = static_cast<int>(result->size()) == args.k;
    report["verify"] = verify;
    bool ok = verify["independent"].get<bool>() && verify["size_ok"].get<bool>();
    if (!ok) std::cerr << "witness failed verification\n";
    return emit(report, ok ? kFound : kNone);
}

struct TisehfArgs {
    std::string graph_path;
    std::string partition_path;
    bool oracle = false;
    int threads = 1;
    bool trace = false;
    std::uint32_t seed = kDefaultSeed;
};

int run_tisehf(const TisehfArgs& args) {
    auto start = std::chrono::steady_clock::now();
    json report = base_report("tisehf", args.seed);
    ehf::Graph g = ehf::io::read_graph_file(args.graph_path);
    ehf::CliquePartition parts = ehf::io::read_partition_file(args.partition_path, g);
    report["input_digest"] =
        ehf::io::fnv1a_hex(ehf::io::file_digest(args.graph_path) +
                           ehf::io::file_digest(args.partition_path));
    report["n"] = g.num_vertices();
    report["parts"] = parts.size();

    // Partition must consist of cliques and cover every vertex.
    std::size_t covered = 0;
    for (const auto& part : parts) {
        if (!ehf::is_clique(g, part)) throw ehf::io::parse_error("partition block is not a clique");
        covered += part.size();
    }
    if (static_cast<int>(covered) != g.num_vertices())
        throw ehf::io::parse_error("partition does not cover every vertex");

    ehf::tisehf::Options opts;
    opts.threads = args.threads;
    if (args.trace) opts.trace = &std::cerr;
    auto result = ehf::tisehf::tisehf_solve(g, parts, opts);

    if (args.oracle) {
        auto brute = ehf::oracle::brute_transversal(g, parts);
        report["oracle_agrees"] = (brute.has_value() == result.has_value());
        if (brute.has_value() != result.has_value()) std::cerr << "oracle disagreement\n";
    }

    report["wall_ms"] = elapsed_ms(start);
    if (!result) {
        report["answer"] = "none";
        return emit(report, kNone);
    }
    report["answer"] = "found";
    report["witness"] = witness_json(*result);
    json verify;
    verify["independent"] = ehf::is_independent(g, *result);
    bool traversal = result->size() == parts.size();
    for (const auto& part : parts) {
        int hits = 0;
        for (ehf::Vertex v : *result)
            for (ehf::Vertex u : part)
                if (u == v) ++hits;
        if (hits != 1) traversal = false;
    }
    verify["traversal"] = traversal;
    report["verify"] = verify;
    bool ok = verify["independent"].get<bool>() && traversal;
    return emit(report, ok ? kFound : kNone);
}

struct VerifyArgs {
    std::string graph_path;
    std::string witness_path;
    std::string partition_path;
    std::uint32_t seed = kDefaultSeed;
};

int run_verify(const VerifyArgs& args) {
    auto start = std::chrono::steady_clock::now();
    json report = base_report("verify", args.seed);
    ehf::Graph g = ehf::io::read_graph_file(args.graph_path);
    ehf::VertexSet witness = ehf::io::read_vertex_set_file(args.witness_path, g);
    report["input_digest"] = ehf::io::file_digest(args.graph_path);
    report["witness"] = witness_json(witness);

    json verify;
    bool ok = true;
    verify["size"] = witness.size();

    bool independent = true;
    for (std::size_t i = 0; i < witness.size() && independent; ++i)
        for (std::size_t j = i + 1; j < witness.size(); ++j)
            if (g.adjacent(witness[i], witness[j])) {
                independent = false;
                verify["adjacent_pair"] = json::array({witness[i] + 1, witness[j] + 1});
                std::cerr << "adjacent pair " << witness[i] + 1 << " " << witness[j] + 1 << "\n";
                break;
            }
    verify["independent"] = independent;
    ok = ok && independent;

    if (!args.partition_path.empty()) {
        ehf::CliquePartition parts = ehf::io::read_partition_file(args.partition_path, g);
        bool traversal = true;
        for (std::size_t p = 0; p < parts.size(); ++p) {
            int hits = 0;
            for (ehf::Vertex v : witness)
                for (ehf::Vertex u : parts[p])
                    if (u == v) ++hits;
            if (hits != 1) {
                traversal = false;
                verify["bad_part"] = p + 1;
                std::cerr << "part " << p + 1 << " hit " << hits << " times\n";
                break;
            }
        }
        if (witness.size() != parts.size()) traversal = false;
        verify["traversal"] = traversal;
        ok = ok && traversal;
    }

    report["verify"] = verify;
    report["answer"] = ok ? "valid" : "invalid";
    report["wall_ms"] = elapsed_ms(start);
    return emit(report, ok ? kFound : kNone);
}

int run_gen_chordal(int n, double density, std::uint32_t seed, const std::string& out_path) {
    auto start = std::chrono::steady_clock::now();
    ehf::Graph g = ehf::gen::gen_chordal(n, density, seed);
    ehf::io::write_graph_file(out_path, g);
    json report = base_report("gen chordal", seed);
    report["n"] = g.num_vertices();
    report["edges"] = g.num_edges();
    report["out"] = out_path;
    report["wall_ms"] = elapsed_ms(start);
    std::cerr << "seed " << seed << " -> " << out_path << "\n";
    return emit(report, kFound);
}

int run_gen_ehf(int n, double p, std::uint32_t seed, const std::string& out_path) {
    auto start = std::chrono::steady_clock::now();
    ehf::Graph g = ehf::gen::gen_ehf(n, p, seed);
    ehf::io::write_graph_file(out_path, g);
    json report = base_report("gen ehf", seed);
    report["n"] = g.num_vertices();
    report["edges"] = g.num_edges();
    report["out"] = out_path;
    report["wall_ms"] = elapsed_ms(start);
    std::cerr << "seed " << seed << " -> " << out_path << "\n";
    return emit(report, kFound);
}

int run_gen_planted(int k, int part_size, double noise, std::uint32_t seed,
                    const std::string& prefix) {
    auto start = std::chrono::steady_clock::now();
    auto inst = ehf::gen::gen_planted(k, part_size, noise, seed);
    ehf::io::write_graph_file(prefix + ".graph", inst.graph);
    ehf::io::write_partition_file(prefix + ".parts", inst.parts);
    ehf::io::write_vertex_set_file(prefix + ".witness", inst.planted);
    json report = base_report("gen planted", seed);
    report["seed_used"] = inst.seed_used;
    report["k"] = k;
    report["n"] = inst.graph.num_vertices();
    report["files"] =
        json::array({prefix + ".graph", prefix + ".parts", prefix + ".witness"});
    report["wall_ms"] = elapsed_ms(start);
    std::cerr << "seed " << inst.seed_used << " -> " << prefix << ".{graph,parts,witness}\n";
    return emit(report, kFound);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"independent set solver for even-hole-free graphs"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "decide whether an independent set of size k exists");
    solve->add_option("--graph", solve_args.graph_path, "edge-list graph file")->required();
    solve->add_option("-k,--k", solve_args.k, "target independent-set size")->required();
    solve->add_flag("--verify-ehf", solve_args.verify_ehf,
                    "reject inputs containing an even hole (exit 3)");
    solve->add_flag("--oracle", solve_args.oracle, "cross-check against the brute-force oracle");
    solve->add_option("--threads", solve_args.threads, "parallel branch workers");
    solve->add_flag("--trace", solve_args.trace, "log branch exploration to stderr");
    solve->add_option("--seed", solve_args.seed, "seed echoed into the report");

    TisehfArgs tis_args;
    auto* tis = app.add_subcommand("tisehf", "find a transversal independent set of a clique partition");
    tis->add_option("--graph", tis_args.graph_path, "edge-list graph file")->required();
    tis->add_option("--partition", tis_args.partition_path, "clique partition file")->required();
    tis->add_flag("--oracle", tis_args.oracle, "cross-check against the brute-force oracle");
    tis->add_option("--threads", tis_args.threads, "parallel branch workers");
    tis->add_flag("--trace", tis_args.trace, "log branch exploration to stderr");
    tis->add_option("--seed", tis_args.seed, "seed echoed into the report");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check a witness file against a graph");
    verify->add_option("--graph", verify_args.graph_path, "edge-list graph file")->required();
    verify->add_option("--witness", verify_args.witness_path, "witness vertex list")->required();
    verify->add_option("--partition", verify_args.partition_path,
                       "optional partition for the traversal check");

    auto* gen = app.add_subcommand("gen", "write generated instances to files");
    gen->require_subcommand(1);

    int gc_n = 12;
    double gc_density = 0.5;
    std::uint32_t gc_seed = kDefaultSeed;
    std::string gc_out = "chordal.graph";
    auto* gen_chordal = gen->add_subcommand("chordal", "random chordal graph");
    gen_chordal->add_option("--n", gc_n, "vertex count");
    gen_chordal->add_option("--density", gc_density, "clique attachment density in [0,1]");
    gen_chordal->add_option("--seed", gc_seed, "generator seed");
    gen_chordal->add_option("--out", gc_out, "output graph file");

    int ge_n = 15;
    double ge_p = 0.3;
    std::uint32_t ge_seed = kDefaultSeed;
    std::string ge_out = "ehf.graph";
    auto* gen_ehf = gen->add_subcommand("ehf", "random even-hole-free graph");
    gen_ehf->add_option("--n", ge_n, "vertex count");
    gen_ehf->add_option("--p", ge_p, "edge probability before repair");
    gen_ehf->add_option("--seed", ge_seed, "generator seed");
    gen_ehf->add_option("--out", ge_out, "output graph file");

    int gp_k = 3, gp_part_size = 4;
    double gp_noise = 0.15;
    std::uint32_t gp_seed = kDefaultSeed;
    std::string gp_prefix = "planted";
    auto* gen_planted = gen->add_subcommand("planted", "planted transversal instance");
    gen_planted->add_option("--k", gp_k, "parameter k (1..6)");
    gen_planted->add_option("--part-size", gp_part_size, "clique size per part (3..8)");
    gen_planted->add_option("--noise", gp_noise, "noise edge probability");
    gen_planted->add_option("--seed", gp_seed, "generator seed");
    gen_planted->add_option("--out-prefix", gp_prefix, "prefix for .graph/.parts/.witness");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kParseError;
    }

    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (tis->parsed()) return run_tisehf(tis_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (gen_chordal->parsed()) return run_gen_chordal(gc_n, gc_density, gc_seed, gc_out);
        if (gen_ehf->parsed()) return run_gen_ehf(ge_n, ge_p, ge_seed, ge_out);
        if (gen_planted->parsed())
            return run_gen_planted(gp_k, gp_part_size, gp_noise, gp_seed, gp_prefix);
    } catch (const ehf::io::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParseError;
    }
    return kParseError;
}
