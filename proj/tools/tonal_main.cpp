// Command-line front end: every library operation behind a subcommand, with
// json (default), csv and text output. JSON output is deterministic for a
// fixed seed, whatever the worker count.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "tonal/canonical.hpp"
#include "tonal/embed.hpp"
#include "tonal/errors.hpp"
#include "tonal/extremal.hpp"
#include "tonal/io.hpp"
#include "tonal/patterns.hpp"
#include "tonal/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct RunConfig {
    std::string format = "json";
    int workers = 0;
    long long seed = 0;
};

int effective_workers(const RunConfig& cfg) {
    if (cfg.workers > 0) return cfg.workers;
    if (const char* env = std::getenv("TONAL_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 0;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json envelope(const RunConfig& cfg, const std::string& command, json result) {
    json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["command"] = command;
    doc["seed"] = cfg.seed;
    doc["result"] = std::move(result);
    return doc;
}

void emit_json(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json edge_array(const tonal::PatternColouring& pc) {
    json arr = json::array();
    for (int i = 0; i < pc.graph().edge_count(); ++i) {
        const auto& [u, v] = pc.graph().edges()[i];
        arr.push_back(json::array({u, v, std::string(1, tonal::colour_char(pc.colour(i)))}));
    }
    return arr;
}

json tone_json(const tonal::Tone& t) { return json{{"red", t.red}, {"blue", t.blue}}; }

// ---- canonical ----

int cmd_canonical_sizes(const RunConfig& cfg, long long limit) {
    auto sizes = tonal::canonical_sizes(limit);
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& s : sizes)
            arr.push_back(json{{"n", s.n}, {"r", s.r}, {"x", s.x}, {"y", s.y}});
        emit_json(envelope(cfg, "canonical.sizes", json{{"limit", limit}, {"sizes", arr}}));
    } else if (cfg.format == "csv") {
        std::cout << "n,r,x,y\n";
        for (const auto& s : sizes)
            std::cout << s.n << "," << s.r << "," << s.x << "," << s.y << "\n";
    } else {
        std::cout << "canonical sizes with n <= " << limit << ":\n";
        for (const auto& s : sizes)
            std::cout << "  n = " << s.n << "  r = " << s.r << "  (x = " << s.x
                      << ", y = " << s.y << ")\n";
    }
    return 0;
}

int cmd_canonical_host(const RunConfig& cfg, long long n) {
    auto size = tonal::canonical_size_for(n);
    if (!size)
        throw std::domain_error("no canonical colouring exists at n = " + std::to_string(n) +
                                "; try `canonical sizes` for valid orders");
    tonal::ColouredHost host = tonal::canonical_colouring(*size);
    if (cfg.format == "json") {
        emit_json(envelope(cfg, "canonical.host",
                           json{{"n", size->n},
                                {"r", size->r},
                                {"redCount", host.red_count()},
                                {"blueCount", host.blue_count()},
                                {"edgeList", tonal::serialize_host(host)}}));
    } else if (cfg.format == "csv") {
        std::cout << "u,v,colour\n";
        for (int u = 0; u < host.order(); ++u)
            for (int v = u + 1; v < host.order(); ++v)
                std::cout << u << "," << v << "," << tonal::colour_char(host.colour(u, v))
                          << "\n";
    } else {
        std::cout << tonal::serialize_host(host);
    }
    return 0;
}

// ---- patterns ----

int cmd_patterns_classes(const RunConfig& cfg, const std::string& path) {
    tonal::Graph g = tonal::parse_graph(read_file(path));
    auto classes = tonal::enumerate_pattern_classes(g);
    if (cfg.format == "json") {
        json arr = json::array();
        for (std::size_t i = 0; i < classes.size(); ++i)
            arr.push_back(json{{"index", i},
                               {"tone", tone_json(classes[i].tone)},
                               {"orbitSize", classes[i].orbit_size},
                               {"representative", edge_array(classes[i].representative)}});
        emit_json(envelope(cfg, "patterns.classes",
                           json{{"graph", json{{"n", g.vertex_count()}, {"edges", g.edge_count()}}},
                                {"automorphismCount", (long long)tonal::automorphisms(g).size()},
                                {"burnsideClassCount", tonal::burnside_class_count(g)},
                                {"classes", arr}}));
    } else if (cfg.format == "csv") {
        std::cout << "index,red,blue,orbitSize\n";
        for (std::size_t i = 0; i < classes.size(); ++i)
            std::cout << i << "," << classes[i].tone.red << "," << classes[i].tone.blue << ","
                      << classes[i].orbit_size << "\n";
    } else {
        std::cout << classes.size() << " pattern classes:\n";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            std::cout << "  [" << i << "] tone (" << classes[i].tone.red << ","
                      << classes[i].tone.blue << ") orbit " << classes[i].orbit_size << " rep";
            const auto& rep = classes[i].representative;
            for (int e = 0; e < rep.graph().edge_count(); ++e)
                std::cout << " " << rep.graph().edges()[e].first << "-"
                          << rep.graph().edges()[e].second << ":"
                          << tonal::colour_char(rep.colour(e));
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_patterns_witness(const RunConfig& cfg, const std::string& path) {
    tonal::Graph g = tonal::parse_graph(read_file(path));
    auto witness = tonal::witness_pattern(g);
    if (cfg.format == "json") {
        emit_json(envelope(cfg, "patterns.witness",
                           json{{"starForest", !witness.has_value()},
                                {"witness", witness ? edge_array(*witness) : json(nullptr)}}));
    } else if (cfg.format == "csv") {
        std::cout << "starForest\n" << (witness ? "false" : "true") << "\n";
    } else {
        if (!witness)
            std::cout << "star forest: no witness colouring exists\n";
        else
            std::cout << "witness colouring:\n" << tonal::serialize_coloured(*witness);
    }
    return 0;
}

int cmd_patterns_equivalent(const RunConfig& cfg, const std::string& a_path,
                            const std::string& b_path) {
    auto a = tonal::parse_coloured(read_file(a_path));
    auto b = tonal::parse_coloured(read_file(b_path));
    bool eq = tonal::patterns_equivalent(a, b);
    if (cfg.format == "json")
        emit_json(envelope(cfg, "patterns.equivalent", json{{"equivalent", eq}}));
    else if (cfg.format == "csv")
        std::cout << "equivalent\n" << (eq ? "true" : "false") << "\n";
    else
        std::cout << (eq ? "equivalent" : "not equivalent") << "\n";
    return 0;
}

// ---- embed ----

json embedding_json(const std::optional<tonal::Embedding>& emb) {
    if (!emb) return json(nullptr);
    return json(emb->map);
}

int cmd_embed_find(const RunConfig& cfg, const std::string& host_path,
                   const std::string& pattern_path) {
    auto host = tonal::parse_host(read_file(host_path));
    auto pattern = tonal::parse_coloured(read_file(pattern_path));
    auto emb = tonal::find_embedding(host, pattern);
    if (cfg.format == "json") {
        emit_json(envelope(cfg, "embed.find",
                           json{{"found", emb.has_value()}, {"embedding", embedding_json(emb)}}));
    } else if (cfg.format == "csv") {
        std::cout << "patternVertex,hostVertex\n";
        if (emb)
            for (std::size_t i = 0; i < emb->map.size(); ++i)
                std::cout << i << "," << emb->map[i] << "\n";
    } else {
        if (!emb) {
            std::cout << "no colour-exact copy\n";
        } else {
            std::cout << "embedding:";
            for (std::size_t i = 0; i < emb->map.size(); ++i)
                std::cout << " " << i << "->" << emb->map[i];
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_embed_coverage(const RunConfig& cfg, const std::string& host_path,
                       const std::string& graph_path, const std::string& level) {
    auto host = tonal::parse_host(read_file(host_path));
    auto g = tonal::parse_graph(read_file(graph_path));
    tonal::CoverageReport report = level == "class" ? tonal::class_coverage(host, g)
                                                    : tonal::tone_coverage(host, g);
    if (cfg.format == "json") {
        json targets = json::array();
        for (const auto& t : report.targets)
            targets.push_back(json{{"tone", tone_json(t.tone)},
                                   {"classIndex", t.class_index},
                                   {"found", t.embedding.has_value()},
                                   {"embedding", embedding_json(t.embedding)}});
        emit_json(envelope(cfg, "embed.coverage",
                           json{{"level", level},
                                {"complete", report.complete()},
                                {"targets", targets}}));
    } else if (cfg.format == "csv") {
        std::cout << "red,blue,classIndex,found\n";
        for (const auto& t : report.targets)
            std::cout << t.tone.red << "," << t.tone.blue << "," << t.class_index << ","
                      << (t.embedding ? "true" : "false") << "\n";
    } else {
        std::cout << (report.complete() ? "complete" : "incomplete") << " " << level
                  << " coverage:\n";
        for (const auto& t : report.targets) {
            std::cout << "  tone (" << t.tone.red << "," << t.tone.blue << ")";
            if (level == "class") std::cout << " class " << t.class_index;
            std::cout << (t.embedding ? " found" : " MISSING") << "\n";
        }
    }
    return 0;
}

int cmd_embed_star_forest(const RunConfig& cfg, const std::string& host_path,
                          const std::string& pattern_path) {
    auto host = tonal::parse_host(read_file(host_path));
    auto pattern = tonal::parse_coloured(read_file(pattern_path));
    tonal::Embedding emb = tonal::greedy_star_forest_embed(host, pattern);
    if (cfg.format == "json") {
        emit_json(envelope(cfg, "embed.star-forest", json{{"embedding", json(emb.map)}}));
    } else if (cfg.format == "csv") {
        std::cout << "patternVertex,hostVertex\n";
        for (std::size_t i = 0; i < emb.map.size(); ++i)
            std::cout << i << "," << emb.map[i] << "\n";
    } else {
        std::cout << "embedding:";
        for (std::size_t i = 0; i < emb.map.size(); ++i)
            std::cout << " " << i << "->" << emb.map[i];
        std::cout << "\n";
    }
    return 0;
}

// ---- extremal ----

int cmd_extremal_exact(const RunConfig& cfg, const std::string& command, int n,
                       const std::string& graph_path, bool force, bool no_prune) {
    tonal::Graph g = tonal::parse_graph(read_file(graph_path));
    tonal::SearchOptions opts{force, !no_prune, effective_workers(cfg)};
    tonal::ExtremalResult result = command == "extremal.tot" ? tonal::tot_exact(n, g, opts)
                                                             : tonal::ot_exact(n, g, opts);
    if (cfg.format == "json") {
        emit_json(envelope(
            cfg, command,
            json{{"n", n},
                 {"level", result.level == tonal::CoverageLevel::Class ? "class" : "tone"},
                 {"value", result.value},
                 {"saturated", result.saturated},
                 {"hostsScanned", result.hosts_scanned},
                 {"witness", edge_array(result.witness.as_pattern())}}));
    } else if (cfg.format == "csv") {
        std::cout << "n,value,saturated,hostsScanned\n"
                  << n << "," << result.value << "," << (result.saturated ? "true" : "false")
                  << "," << result.hosts_scanned << "\n";
    } else {
        std::cout << (command == "extremal.tot" ? "tot" : "ot") << "(" << n << ", G) = "
                  << result.value << (result.saturated ? " (saturated)" : "") << " over "
                  << result.hosts_scanned << " colourings\nwitness:\n"
                  << tonal::serialize_host(result.witness);
    }
    return 0;
}

int cmd_extremal_formula(const RunConfig& cfg, long long n, long long k) {
    long long value = tonal::ot_star_formula(n, k);
    if (cfg.format == "json")
        emit_json(envelope(cfg, "extremal.formula", json{{"n", n}, {"k", k}, {"value", value}}));
    else if (cfg.format == "csv")
        std::cout << "n,k,value\n" << n << "," << k << "," << value << "\n";
    else
        std::cout << "ot(" << n << ", K_{1," << k << "}) = " << value << "\n";
    return 0;
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
    return parts;
}

int cmd_extremal_bound(const RunConfig& cfg, long long n, const std::string& parts_text) {
    auto parts = parse_parts(parts_text);
    long long value = tonal::tot_star_forest_bound(n, parts);
    if (cfg.format == "json")
        emit_json(envelope(cfg, "extremal.bound",
                           json{{"n", n}, {"parts", json(parts)}, {"value", value}}));
    else if (cfg.format == "csv")
        std::cout << "n,value\n" << n << "," << value << "\n";
    else
        std::cout << "tot bound M = " << value << "\n";
    return 0;
}

// ---- verify ----

int cmd_verify(const RunConfig& cfg, double budget) {
    tonal::VerifyOptions opts;
    opts.seed = uint64_t(cfg.seed);
    opts.budget_seconds = budget;
    opts.workers = effective_workers(cfg);
    if (const char* hook = std::getenv("TONAL_VERIFY_CORRUPT"))
        opts.corrupt_canonical = std::string(hook) == "1";
    if (cfg.format == "text") {
        opts.on_claim = [](const tonal::ClaimResult& c) {
            const char* status = c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL");
            std::printf("%-4s %d %-30s %s (%.2fs)\n", status, c.id, c.name.c_str(),
                        c.detail.c_str(), c.seconds);
            std::fflush(stdout);
        };
    }
    tonal::VerifyReport report = tonal::run_verification(opts);
    int passed = 0, failed = 0, skipped = 0;
    for (const auto& c : report.claims) (c.skipped ? skipped : (c.pass ? passed : failed))++;
    if (cfg.format == "json") {
        json claims = json::array();
        for (const auto& c : report.claims)
            claims.push_back(json{{"id", c.id},
                                  {"name", c.name},
                                  {"status", c.skipped ? "skipped" : (c.pass ? "pass" : "fail")},
                                  {"detail", c.detail}});
        emit_json(envelope(cfg, "verify",
                           json{{"claims", claims},
                                {"passed", passed},
                                {"failed", failed},
                                {"skipped", skipped},
                                {"incomplete", report.incomplete}}));
    } else if (cfg.format == "csv") {
        std::cout << "id,name,status\n";
        for (const auto& c : report.claims)
            std::cout << c.id << "," << c.name << ","
                      << (c.skipped ? "skipped" : (c.pass ? "pass" : "fail")) << "\n";
    } else {
        std::printf("%d passed, %d failed, %d skipped%s\n", passed, failed, skipped,
                    report.incomplete ? " (incomplete)" : "");
        for (const auto& c : report.claims)
            if (!c.skipped && !c.pass)
                std::printf("failed claim: %d %s\n", c.id, c.name.c_str());
    }
    if (failed > 0) return 1;
    if (report.incomplete) return 3;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact search tools for omnitonal and totally-omnitonal graph colouring"};
    app.require_subcommand(1);

    RunConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--workers", cfg.workers,
                   "worker count (default: TONAL_WORKERS or all cores); never affects results");
    app.add_option("--seed", cfg.seed, "seed for randomized suites");

    // canonical
    auto* canonical = app.add_subcommand("canonical", "balanced red-clique colourings of K_n");
    long long limit = 0, host_n = 0;
    auto* sizes = canonical->add_subcommand("sizes", "list canonical (n, r) up to a limit");
    sizes->add_option("--limit", limit, "largest host order")->required();
    auto* host_cmd = canonical->add_subcommand("host", "emit the canonical colouring of K_n");
    host_cmd->add_option("--n", host_n, "host order (must be a canonical order)")->required();

    // patterns
    auto* patterns = app.add_subcommand("patterns", "colouring classes of a pattern graph");
    std::string graph_path, a_path, b_path;
    auto* classes_cmd = patterns->add_subcommand("classes", "non-equivalent colourings");
    classes_cmd->add_option("--graph", graph_path, "graph file (edge list or graph6)")
        ->required();
    auto* witness_cmd =
        patterns->add_subcommand("witness", "colouring excluded from balanced clique hosts");
    witness_cmd->add_option("--graph", graph_path, "graph file")->required();
    auto* equivalent_cmd = patterns->add_subcommand("equivalent", "colour-preserving isomorphism");
    equivalent_cmd->add_option("--a", a_path, "first coloured graph")->required();
    equivalent_cmd->add_option("--b", b_path, "second coloured graph")->required();

    // embed
    auto* embed = app.add_subcommand("embed", "colour-exact containment in a coloured host");
    std::string host_path, pattern_path, level = "tone";
    auto* find_cmd = embed->add_subcommand("find", "find one colour-exact copy");
    find_cmd->add_option("--host", host_path, "coloured K_n file")->required();
    find_cmd->add_option("--pattern", pattern_path, "coloured pattern file")->required();
    auto* coverage_cmd = embed->add_subcommand("coverage", "tone or class coverage report");
    coverage_cmd->add_option("--host", host_path, "coloured K_n file")->required();
    coverage_cmd->add_option("--graph", graph_path, "pattern graph file")->required();
    coverage_cmd->add_option("--level", level, "tone|class")
        ->check(CLI::IsMember({"tone", "class"}));
    auto* star_cmd = embed->add_subcommand("star-forest", "constructive star-forest embedding");
    star_cmd->add_option("--host", host_path, "coloured K_n file")->required();
    star_cmd->add_option("--pattern", pattern_path, "coloured star forest file")->required();

    // extremal
    auto* extremal = app.add_subcommand("extremal", "exact per-n thresholds by exhaustive search");
    int exact_n = 0;
    long long formula_n = 0, formula_k = 0, bound_n = 0;
    std::string parts_text;
    bool force = false, no_prune = false;
    auto* ot_cmd = extremal->add_subcommand("ot", "largest min{|R|,|B|} failing tone coverage");
    ot_cmd->add_option("--n", exact_n, "host order")->required();
    ot_cmd->add_option("--graph", graph_path, "pattern graph file")->required();
    ot_cmd->add_flag("--force", force, "lift the n(n-1)/2 <= 30 guard");
    ot_cmd->add_flag("--no-prune", no_prune, "scan all 2^(n(n-1)/2) colourings");
    auto* tot_cmd = extremal->add_subcommand("tot", "largest min{|R|,|B|} failing class coverage");
    tot_cmd->add_option("--n", exact_n, "host order")->required();
    tot_cmd->add_option("--graph", graph_path, "pattern graph file")->required();
    tot_cmd->add_flag("--force", force, "lift the n(n-1)/2 <= 30 guard");
    tot_cmd->add_flag("--no-prune", no_prune, "scan all 2^(n(n-1)/2) colourings");
    auto* formula_cmd = extremal->add_subcommand("formula", "closed-form star threshold");
    formula_cmd->add_option("--n", formula_n, "host order")->required();
    formula_cmd->add_option("--k", formula_k, "star size")->required();
    auto* bound_cmd = extremal->add_subcommand("bound", "star-forest class-level bound");
    bound_cmd->add_option("--n", bound_n, "host order")->required();
    bound_cmd->add_option("--parts", parts_text, "star sizes, e.g. 2,1")->required();

    // verify
    double budget = 1e18;
    auto* verify_cmd = app.add_subcommand("verify", "run the full replication suite");
    verify_cmd->add_option("--budget", budget, "wall-clock budget in seconds");

    // Let --format/--workers/--seed appear after the subcommand as well.
    for (CLI::App* sub : {canonical, patterns, embed, extremal, verify_cmd}) {
        sub->fallthrough();
        for (CLI::App* nested : sub->get_subcommands([](CLI::App*) { return true; }))
            nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

#ifdef _OPENMP
    if (effective_workers(cfg) > 0) omp_set_num_threads(effective_workers(cfg));
#endif

    try {
        if (sizes->parsed()) return cmd_canonical_sizes(cfg, limit);
        if (host_cmd->parsed()) {
            if (app.count("--format") == 0) cfg.format = "text";  // edge list by default
            return cmd_canonical_host(cfg, host_n);
        }
        if (classes_cmd->parsed()) return cmd_patterns_classes(cfg, graph_path);
        if (witness_cmd->parsed()) return cmd_patterns_witness(cfg, graph_path);
        if (equivalent_cmd->parsed()) return cmd_patterns_equivalent(cfg, a_path, b_path);
        if (find_cmd->parsed()) return cmd_embed_find(cfg, host_path, pattern_path);
        if (coverage_cmd->parsed()) return cmd_embed_coverage(cfg, host_path, graph_path, level);
        if (star_cmd->parsed()) return cmd_embed_star_forest(cfg, host_path, pattern_path);
        if (ot_cmd->parsed())
            return cmd_extremal_exact(cfg, "extremal.ot", exact_n, graph_path, force, no_prune);
        if (tot_cmd->parsed())
            return cmd_extremal_exact(cfg, "extremal.tot", exact_n, graph_path, force, no_prune);
        if (formula_cmd->parsed()) return cmd_extremal_formula(cfg, formula_n, formula_k);
        if (bound_cmd->parsed()) return cmd_extremal_bound(cfg, bound_n, parts_text);
        if (verify_cmd->parsed()) {
            if (app.count("--format") == 0) cfg.format = "text";  // streaming lines by default
            return cmd_verify(cfg, budget);
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const tonal::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 1;
    } catch (const tonal::size_limit_error& e) {
        std::cerr << "guard error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
