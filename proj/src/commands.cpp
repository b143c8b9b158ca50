#include <circham/commands.hpp>
#include <circham/formats.hpp>
#include <circham/hamiltonicity.hpp>
#include <circham/isomorphism.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace circham {

RunReport::RunReport(std::string command) : command_(std::move(command)), start_(std::chrono::steady_clock::now())
{
}

void RunReport::input(std::string key, std::string value)
{
    inputs_.emplace_back(std::move(key), std::move(value));
}

void RunReport::result(std::string line)
{
    results_.push_back(std::move(line));
}

void RunReport::finish()
{
    elapsed_ = std::chrono::steady_clock::now() - start_;
}

std::string RunReport::render_untimed() const
{
    std::string out = "command: " + command_ + "\ntool_version: " + tool_version + "\n[inputs]\n";
    for (const auto & [key, value] : inputs_)
        out += key + ": " + value + "\n";
    out += "[results]\n";
    for (const auto & line : results_)
        out += line + "\n";
    return out;
}

std::string RunReport::render() const
{
    char ms[64];
    std::snprintf(ms, sizeof ms, "%.3f", elapsed_.count() * 1000.0);
    return render_untimed() + "[timing]\nelapsed_ms: " + ms + "\n";
}

namespace {
    std::string set_text(const std::vector<int> & set)
    {
        return "{" + join(set) + "}";
    }

    void emit(std::ostream & out, RunReport & report)
    {
        report.finish();
        out << report.render();
    }
}

VerifyTarget jackson_counterexample()
{
    CirculantSpec spec(12, {2, 3, 8});
    return VerifyTarget{spec, build_circulant(spec)};
}

int cmd_verify(std::ostream & out, const VerifyTarget & target)
{
    RunReport report("verify");
    const auto & g = target.graph;
    const auto & spec = target.spec;
    const int n = g.vertex_count();
    const int k = spec.k();
    report.input("n", std::to_string(spec.n()));
    report.input("set", join(spec.connection_set()));

    int failures = 0;
    auto check = [&](bool ok, const std::string & what) {
        report.result(std::string(ok ? "PASS " : "FAIL ") + what);
        failures += ok ? 0 : 1;
    };

    const bool diregular = is_k_diregular(g, k);
    const bool oriented = is_oriented(g);
    auto hypotheses = [&](BoundMode mode) {
        return diregular && oriented && k != 2 && n <= max_vertices_for(mode, k) && n == spec.n()
            && satisfies_jackson_hypotheses(spec, mode);
    };

    check(diregular, std::to_string(k) + "-diregular");
    check(oriented, "oriented");
    check(is_strongly_connected(g), "strongly connected");
    check(hypotheses(BoundMode::strict_4k_plus_1),
        "hypotheses hold: n = " + std::to_string(n) + " <= 4k+1 = " + std::to_string(4 * k + 1) + ", k = " + std::to_string(k) + " != 2");
    check(hypotheses(BoundMode::weak_4k), "hypotheses hold: n = " + std::to_string(n) + " <= 4k = " + std::to_string(4 * k));

    const auto dfs = find_hamiltonian_cycle(g);
    check(! dfs.hamiltonian(),
        "non-hamiltonian by backtracking (" + std::string(to_string(dfs.method)) + ", nodes_explored = " + std::to_string(dfs.nodes_explored) + ")");
    const auto oracle = held_karp_oracle(g);
    check(! oracle.hamiltonian(), "non-hamiltonian by Held-Karp oracle");

    report.result("summary: " + std::to_string(7 - failures) + "/7 passed");
    emit(out, report);
    return failures == 0 ? exit_ok : exit_failed;
}

int cmd_ham(std::ostream & out, const HamArgs & args)
{
    const CirculantSpec spec(args.n, args.set);
    if (args.oracle && spec.n() > max_oracle_vertices)
        throw std::invalid_argument("--oracle supports n <= " + std::to_string(max_oracle_vertices));
    if (spec.n() > max_backtracking_vertices)
        throw std::invalid_argument("ham supports n <= " + std::to_string(max_backtracking_vertices));

    RunReport report("ham");
    report.input("n", std::to_string(spec.n()));
    report.input("set", join(spec.connection_set()));
    report.input("oracle", args.oracle ? "yes" : "no");
    report.input("witness", args.witness ? "yes" : "no");

    const auto g = build_circulant(spec);
    const auto verdict = find_hamiltonian_cycle(g);
    int code = exit_ok;

    std::string line = "result: " + std::string(to_string(verdict.status));
    if (args.witness && verdict.hamiltonian()) {
        if (verify_cycle_witness(g, *verdict.witness))
            line += " " + join(*verdict.witness);
        else {
            line += " (witness failed verification)";
            code = exit_failed;
        }
    }
    report.result(line);
    report.result("method: " + std::string(to_string(verdict.method)));
    report.result("nodes_explored: " + std::to_string(verdict.nodes_explored));

    if (args.oracle) {
        const auto oracle = held_karp_oracle(g);
        const bool agree = oracle.status == verdict.status;
        report.result("oracle: " + std::string(to_string(oracle.status)) + (agree ? " (agrees)" : " (DISAGREES)"));
        if (! agree)
            code = exit_failed;
    }
    emit(out, report);
    return code;
}

std::string search_report_json(const SearchReport & report)
{
    nlohmann::ordered_json doc;
    doc["tool_version"] = tool_version;
    doc["command"] = "search";
    doc["inputs"] = {
        {"min_n", report.n_min},
        {"max_n", report.n_max},
        {"bound", to_string(report.options.bound_mode)},
        {"include_k2", report.options.include_k2},
        {"allow_digons", report.options.allow_digons},
    };
    auto layers = nlohmann::ordered_json::array();
    for (const auto & layer : report.layers)
        layers.push_back({{"n", layer.n}, {"instances", layer.instances}, {"classes", layer.classes}, {"counterexamples", layer.counterexamples}});
    auto records = nlohmann::ordered_json::array();
    for (const auto & rec : report.counterexamples)
        records.push_back({
            {"n", rec.n},
            {"k", rec.k},
            {"connection_set", rec.spec.connection_set()},
            {"canonical_set", rec.canonical_set},
            {"status", to_string(rec.verdict.status)},
            {"method", to_string(rec.verdict.method)},
            {"nodes_explored", rec.verdict.nodes_explored},
            {"oracle_status", to_string(rec.oracle_verdict.status)},
        });
    doc["results"] = {
        {"instances_enumerated", report.instances_enumerated},
        {"classes_enumerated", report.classes_enumerated},
        {"layers", std::move(layers)},
        {"counterexamples", std::move(records)},
    };
    doc["timing"] = {{"elapsed_seconds", report.elapsed.count()}};
    return doc.dump(2) + "\n";
}

int cmd_search(std::ostream & out, const SearchArgs & args)
{
    RunReport run("search");
    run.input("min_n", std::to_string(args.min_n));
    run.input("max_n", std::to_string(args.max_n));
    run.input("bound", std::string(to_string(args.options.bound_mode)));
    run.input("include_k2", args.options.include_k2 ? "yes" : "no");
    run.input("allow_digons", args.options.allow_digons ? "yes" : "no");

    const auto report = search_counterexamples(args.min_n, args.max_n, args.options);
    for (const auto & layer : report.layers)
        run.result("n=" + std::to_string(layer.n) + " instances=" + std::to_string(layer.instances) + " classes="
            + std::to_string(layer.classes) + " counterexamples=" + std::to_string(layer.counterexamples));
    run.result("instances_enumerated: " + std::to_string(report.instances_enumerated));
    run.result("classes_enumerated: " + std::to_string(report.classes_enumerated));
    run.result("counterexample_classes: " + std::to_string(report.counterexamples.size()));
    for (const auto & rec : report.counterexamples)
        run.result("counterexample n=" + std::to_string(rec.n) + " k=" + std::to_string(rec.k) + " set=" + set_text(rec.canonical_set)
            + " backtracking=" + std::string(to_string(rec.verdict.status)) + " nodes_explored=" + std::to_string(rec.verdict.nodes_explored)
            + " oracle=" + std::string(to_string(rec.oracle_verdict.status)));

    if (args.json_path) {
        std::ofstream file(*args.json_path);
        file << search_report_json(report);
        if (! file) {
            run.result("error: could not write " + *args.json_path);
            emit(out, run);
            return exit_failed;
        }
        run.result("json: " + *args.json_path);
    }
    emit(out, run);
    return exit_ok;
}

int cmd_iso(std::ostream & out, int n, const std::vector<int> & set_a, const std::vector<int> & set_b)
{
    const CirculantSpec a(n, set_a), b(n, set_b);
    if (n > max_isomorphism_vertices)
        throw std::invalid_argument("iso supports n <= " + std::to_string(max_isomorphism_vertices));

    RunReport report("iso");
    report.input("n", std::to_string(n));
    report.input("set_a", join(a.connection_set()));
    report.input("set_b", join(b.connection_set()));

    const auto unit = are_multiplier_equivalent(n, a.connection_set(), b.connection_set());
    const auto mapping = are_isomorphic(build_circulant(a), build_circulant(b));
    report.result(std::string(unit ? "multiplier-equivalent via " + std::to_string(*unit) : "not multiplier-equivalent") + "; "
        + (mapping ? "isomorphic" : "not isomorphic"));
    if (mapping)
        report.result("permutation: " + join(*mapping));
    emit(out, report);
    return exit_ok;
}

int cmd_adam(std::ostream & out, int n, int k, const std::optional<std::vector<int>> & anchor, int workers)
{
    RunReport report("adam");
    report.input("n", std::to_string(n));
    report.input("k", std::to_string(k));
    report.input("anchor", anchor ? join(CirculantSpec(n, *anchor).connection_set()) : "none");

    const auto pairs = find_adam_pairs(n, k, anchor, workers);
    report.result("pairs: " + std::to_string(pairs.size()));
    for (const auto & pair : pairs) {
        const bool verified = verify_isomorphism(
            build_circulant(CirculantSpec(n, pair.set_a)), build_circulant(CirculantSpec(n, pair.set_b)), pair.mapping);
        report.result("pair " + set_text(pair.set_a) + " ~ " + set_text(pair.set_b) + " permutation " + join(pair.mapping)
            + (verified ? " verified" : " UNVERIFIED"));
        if (! verified) {
            emit(out, report);
            return exit_failed;
        }
    }
    emit(out, report);
    return exit_ok;
}

int cmd_export(std::ostream & out, int n, const std::vector<int> & set, const std::string & format)
{
    const auto g = build_circulant(CirculantSpec(n, set));
    if (format == "dot")
        out << to_dot(g);
    else if (format == "edges")
        out << to_edges(g);
    else
        throw std::invalid_argument("unknown export format '" + format + "' (expected dot or edges)");
    return exit_ok;
}

int run_cli(int argc, const char * const * argv, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Circulant digraph Hamiltonicity toolkit", "circham"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    auto * verify = app.add_subcommand("verify", "Check that Cay(Z_12; {2,3,8}) refutes Jackson's conjecture");

    int n = 0, k = 0, min_n = 0, max_n = 0, workers = 1;
    std::string set, set_a, set_b, anchor, format, bound = "4k+1", json_path;
    bool oracle = false, witness = false, include_k2 = false, allow_digons = false;

    auto * ham = app.add_subcommand("ham", "Decide Hamiltonicity of a circulant");
    ham->add_option("--n", n, "Modulus")->required();
    ham->add_option("--set", set, "Connection set, e.g. 2,3,8")->required();
    ham->add_flag("--oracle", oracle, "Cross-check with the Held-Karp oracle");
    ham->add_flag("--witness", witness, "Print the Hamiltonian circuit if one exists");

    auto * search = app.add_subcommand("search", "Search oriented circulants for counterexamples");
    search->add_option("--min-n", min_n)->required();
    search->add_option("--max-n", max_n)->required();
    search->add_option("--bound", bound, "4k+1 or 4k")->check(CLI::IsMember({"4k+1", "4k"}));
    search->add_flag("--include-k2", include_k2, "Also scan k = 2");
    search->add_flag("--allow-digons", allow_digons, "Also scan non-oriented connection sets");
    search->add_option("--json", json_path, "Write a JSON report to this path");
    search->add_option("--workers", workers, "Solver threads")->check(CLI::PositiveNumber);

    auto * iso = app.add_subcommand("iso", "Compare two circulants for multiplier equivalence and isomorphism");
    iso->add_option("--n", n)->required();
    iso->add_option("--set-a", set_a)->required();
    iso->add_option("--set-b", set_b)->required();

    auto * adam = app.add_subcommand("adam", "Find isomorphic circulants that are not multiplier-equivalent");
    adam->add_option("--n", n)->required();
    adam->add_option("--k", k)->required();
    adam->add_option("--anchor", anchor, "Restrict to pairs involving this connection set");
    adam->add_option("--workers", workers, "Threads")->check(CLI::PositiveNumber);

    auto * exporter = app.add_subcommand("export", "Write a circulant as DOT or an edge list");
    exporter->add_option("--n", n)->required();
    exporter->add_option("--set", set)->required();
    exporter->add_option("--format", format)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (verify->parsed())
            return cmd_verify(out);
        if (ham->parsed())
            return cmd_ham(out, HamArgs{n, parse_connection_set(set), oracle, witness});
        if (search->parsed()) {
            SearchArgs args{min_n, max_n,
                SearchOptions{
                    .bound_mode = bound == "4k" ? BoundMode::weak_4k : BoundMode::strict_4k_plus_1,
                    .include_k2 = include_k2,
                    .allow_digons = allow_digons,
                    .workers = workers,
                },
                json_path.empty() ? std::nullopt : std::optional{json_path}};
            return cmd_search(out, args);
        }
        if (iso->parsed())
            return cmd_iso(out, n, parse_connection_set(set_a), parse_connection_set(set_b));
        if (adam->parsed())
            return cmd_adam(out, n, k, anchor.empty() ? std::nullopt : std::optional{parse_connection_set(anchor)}, workers);
        if (exporter->parsed())
            return cmd_export(out, n, parse_connection_set(set), format);
    }
    catch (const std::invalid_argument & e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

}
