#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "starkit/graph.hpp"
#include "starkit/io.hpp"
#include "starkit/oracle.hpp"
#include "starkit/partition.hpp"

namespace starkit::cli {

namespace {

struct CliConfig {
    int n = 0;
    int k = 0;
    std::string out_path;
    std::string format = "dimacs";
    bool compact = false;
    std::optional<std::uint64_t> vertex_budget;
    std::size_t oracle_cap = kDefaultSearchCap;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string quantity;
    std::string input_path;

    std::uint64_t budget() const { return vertex_budget.value_or(default_vertex_budget()); }
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << content;
    if (!file) throw IoError("failed writing '" + path + "'");
}

std::string set_text(const VertexSet& set, bool compact) {
    std::string out = "{";
    for (std::size_t t = 0; t < set.size(); ++t) out += (t ? ", " : "") + set[t].to_string(compact);
    return out + "}";
}

std::string describe_edge(const KPerm& a, const KPerm& b) {
    if (a[0] != b[0] && std::equal(a.symbols().begin() + 1, a.symbols().end(), b.symbols().begin() + 1))
        return "replacement of the first symbol";
    for (int i = 1; i < a.k(); ++i)
        if (swap_first(a, i + 1) == b) return "swap of positions 1 and " + std::to_string(i + 1);
    return "not adjacent";
}

void print_report(std::ostream& out, const VerificationReport& report) {
    for (const auto& c : report.checks) {
        out << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL");
        if (!c.witness.is_null()) out << ' ' << c.witness.dump();
        out << '\n';
    }
    out << "summary: " << (report.pass() ? "pass" : "fail") << '\n';
}

int cmd_gen(const CliConfig& cfg, std::ostream& out) {
    const StarGraphParams params(cfg.n, cfg.k);
    const StarGraph g = build(params, {.vertex_budget = cfg.budget(), .threads = cfg.threads});
    out << g.vertex_count() << " vertices, " << g.edge_count() << " edges, " << g.degree() << "-regular\n";
    if (cfg.out_path.empty()) return kSuccess;

    std::ostringstream body;
    if (cfg.format == "dimacs") {
        io::write_dimacs(body, g);
        std::ostringstream labels;
        io::write_labels(labels, g, cfg.compact);
        write_file(cfg.out_path, body.str());
        write_file(cfg.out_path + ".labels", labels.str());
        out << "wrote " << cfg.out_path << " and " << cfg.out_path << ".labels\n";
        return kSuccess;
    }
    if (cfg.format == "json")
        body << io::dump(io::adjacency_json(g, cfg.compact));
    else
        io::write_text(body, g, cfg.compact);
    write_file(cfg.out_path, body.str());
    out << "wrote " << cfg.out_path << '\n';
    return kSuccess;
}

int cmd_partition(const CliConfig& cfg, std::ostream& out) {
    const StarGraphParams params(cfg.n, cfg.k);
    const Construction c = construct(params, cfg.threads);
    out << "S(" << cfg.n << "," << cfg.k << "): " << c.partition.parts.size() << " parts of size "
        << params.suffix_class_count() << " covering " << params.vertex_count() << " vertices\n";
    if (cfg.k >= 3 && cfg.n - cfg.k + 2 == 4)
        out << "note: a base over 4 symbols cannot be lifted; these parts are not independent\n";
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, io::dump(io::partition_to_json(c.partition, cfg.compact)));
        out << "wrote " << cfg.out_path << '\n';
    }
    return kSuccess;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
    std::ifstream file(cfg.input_path);
    if (!file) throw IoError("cannot open '" + cfg.input_path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(file);
    } catch (const nlohmann::json::exception& e) {
        throw ArgumentError(std::string("cannot parse partition document: ") + e.what());
    }
    const MisPartition partition = io::partition_from_json(doc);
    const StarGraphParams params = (cfg.n > 0 || cfg.k > 0) ? StarGraphParams(cfg.n, cfg.k) : partition.params;
    const VerificationReport report = verify_partition(params, partition, cfg.threads);
    out << "verifying S(" << params.n() << "," << params.k() << ") partition from " << cfg.input_path << '\n';
    print_report(out, report);
    if (!cfg.out_path.empty()) write_file(cfg.out_path, io::dump(report.to_json()));
    return report.pass() ? kSuccess : kFailure;
}

int cmd_oracle(const CliConfig& cfg, std::ostream& out) {
    const StarGraphParams params(cfg.n, cfg.k);
    if (params.vertex_count() > cfg.oracle_cap)
        throw ResourceError("S(" + std::to_string(cfg.n) + "," + std::to_string(cfg.k) + ") has " +
                                std::to_string(params.vertex_count()) + " vertices, above the oracle cap of " +
                                std::to_string(cfg.oracle_cap),
                            params.vertex_count());
    const StarGraph g = build(params, {.vertex_budget = cfg.budget(), .threads = cfg.threads});
    const OracleOptions options{.search_cap = cfg.oracle_cap, .seed = std::nullopt};
    const bool alpha = cfg.quantity == "alpha";
    const OracleResult r = alpha ? alpha_exact(g, options) : chi_exact(g, options);
    const std::uint64_t formula =
        alpha ? params.suffix_class_count() : static_cast<std::uint64_t>(cfg.n - cfg.k + 1);
    const bool match = r.value == formula;
    out << cfg.quantity << '=' << r.value << " formula=" << formula << ' ' << (match ? "MATCH" : "MISMATCH") << '\n';
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, io::dump(io::oracle_witness_json(g, r, cfg.compact)));
        out << "wrote " << cfg.out_path << '\n';
    }
    return match ? kSuccess : kFailure;
}

int cmd_counterexample(const CliConfig& cfg, std::ostream& out) {
    const StarGraphParams params(4, 3);
    const bool compact = true;

    out << "Earlier construction applied to S(4,3)\n";
    const WeiConstruction wei = flawed_construct_wei(params);
    out << "  I_2 = " << set_text(wei.levels.front().set, compact) << '\n';
    const WeiLevel& top = wei.levels.back();
    for (int x : {4, 1, 2, 3}) out << "  I_3" << x << " = " << set_text(top.buckets[x - 1], compact) << '\n';
    out << "  I_3 = union of the four sets, " << top.set.size() << " vertices\n";

    const auto verdict = is_independent(params, top.set);
    bool flaw_reproduced = false;
    if (verdict.independent) {
        out << "  no conflicting pair found\n";
    } else {
        const KPerm a = params.vertex(verdict.conflicting_edge->first);
        const KPerm b = params.vertex(verdict.conflicting_edge->second);
        out << "  conflict: " << a.to_string(compact) << " and " << b.to_string(compact) << " are adjacent ("
            << describe_edge(a, b) << ")\n";
        flaw_reproduced = true;
    }

    out << "Corrected construction on S(4,3)\n";
    const Construction c = construct(params, cfg.threads);
    const ConstructionLevel& level = c.trace.levels.back();
    for (std::size_t j = 0; j < level.sets.size(); ++j) {
        out << "  I_" << j + 1 << "^3 =";
        for (int x : {4, 1, 2, 3}) {
            VertexSet bucket = level.buckets[j][x - 1];
            std::sort(bucket.begin(), bucket.end());
            out << (x == 4 ? " " : " u ") << set_text(bucket, compact);
        }
        out << '\n';
    }
    const VerificationReport report = verify_partition(params, c.partition, cfg.threads);
    print_report(out, report);

    const bool ok = flaw_reproduced && report.pass();
    out << (ok ? "result: flaw reproduced and corrected construction verified\n" : "result: reproduction FAILED\n");
    return ok ? kSuccess : kFailure;
}

int cmd_check_structure(const CliConfig& cfg, std::ostream& out) {
    const StarGraphParams params(cfg.n, cfg.k);
    const StarGraph g = build(params, {.vertex_budget = cfg.budget(), .threads = cfg.threads});
    out << "S(" << cfg.n << "," << cfg.k << "): " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
        << g.degree() << "-regular\n";
    bool ok = true;

    bool symmetric = true;
    for (std::size_t u = 0; u < g.vertex_count() && symmetric; ++u)
        for (auto v : g.neighbors(u))
            if (v == u || !g.has_edge(v, u)) symmetric = false;
    out << "check adjacency_symmetric_irreflexive: " << (symmetric ? "pass" : "FAIL") << '\n';
    ok = ok && symmetric;

    if (cfg.k >= 2) {
        const auto cover = check_clique_cover(g);
        out << "check clique_cover: " << (cover.ok ? "pass" : "FAIL") << " (" << cover.classes.size()
            << " suffix classes of size " << cfg.n - cfg.k + 1 << ", expected " << params.suffix_class_count()
            << ")";
        if (!cover.ok) out << ' ' << cover.detail;
        out << '\n';
        const auto decomposition = check_decomposition(g);
        out << "check decomposition: " << (decomposition.ok ? "pass" : "FAIL") << " ("
            << decomposition.classes_checked << " last-symbol classes isomorphic to S(" << cfg.n - 1 << ","
            << cfg.k - 1 << "))";
        if (!decomposition.ok) out << ' ' << decomposition.detail;
        out << '\n';
        ok = ok && cover.ok && decomposition.ok;
    } else {
        out << "S(n,1) is complete; suffix-class and decomposition checks need k >= 2\n";
    }
    out << "summary: " << (ok ? "pass" : "fail") << '\n';
    return ok ? kSuccess : kFailure;
}

void add_graph_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("-n", cfg.n, "ground set size")->required()->check(CLI::Range(2, kMaxGround));
    cmd->add_option("-k", cfg.k, "permutation length, 1 <= k <= n-1")->required()->check(CLI::Range(1, kMaxLength));
}

void add_common_options(CLI::App* cmd, CliConfig& cfg) {
    cmd->add_option("--out", cfg.out_path, "output file");
    cmd->add_flag("--compact-vertices", cfg.compact, "write vertices as digit strings (n <= 9)");
    cmd->add_option("--vertex-budget", cfg.vertex_budget, "maximum vertices to materialize (env STARKIT_VERTEX_BUDGET)");
    cmd->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"(n,k)-star graph generation, independent-set partitions, and exact oracles", "starkit"};
    app.require_subcommand(1);
    CliConfig cfg;

    auto* gen = app.add_subcommand("gen", "write S(n,k) as DIMACS (+ .labels), JSON adjacency, or text");
    add_graph_options(gen, cfg);
    add_common_options(gen, cfg);
    gen->add_option("--format", cfg.format, "dimacs, json or text")->check(CLI::IsMember({"dimacs", "json", "text"}));

    auto* partition = app.add_subcommand("partition", "construct the maximum independent set partition");
    add_graph_options(partition, cfg);
    add_common_options(partition, cfg);

    auto* verify = app.add_subcommand("verify", "verify a JSON partition document");
    verify->add_option("file", cfg.input_path, "partition document")->required();
    verify->add_option("-n", cfg.n, "expected ground set size");
    verify->add_option("-k", cfg.k, "expected permutation length");
    add_common_options(verify, cfg);

    auto* oracle = app.add_subcommand("oracle", "exact alpha or chi by exhaustive search");
    oracle->add_option("quantity", cfg.quantity, "alpha or chi")->required()->check(CLI::IsMember({"alpha", "chi"}));
    add_graph_options(oracle, cfg);
    add_common_options(oracle, cfg);
    oracle->add_option("--oracle-cap", cfg.oracle_cap, "maximum vertices for exact search");

    auto* counter = app.add_subcommand("counterexample", "reproduce the adjacent pair in the earlier construction");
    counter->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);

    auto* structure = app.add_subcommand("check-structure", "check suffix-class cliques and last-symbol decomposition");
    add_graph_options(structure, cfg);
    add_common_options(structure, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (verify->parsed() && (cfg.n > 0) != (cfg.k > 0)) throw ArgumentError("verify needs both -n and -k, or neither");
        if ((gen->parsed() || partition->parsed() || oracle->parsed() || structure->parsed()) || cfg.n > 0)
            (void)StarGraphParams(cfg.n, cfg.k);  // validate before any work
        if (gen->parsed()) return cmd_gen(cfg, out);
        if (partition->parsed()) return cmd_partition(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (oracle->parsed()) return cmd_oracle(cfg, out);
        if (counter->parsed()) return cmd_counterexample(cfg, out);
        if (structure->parsed()) return cmd_check_structure(cfg, out);
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace starkit::cli
