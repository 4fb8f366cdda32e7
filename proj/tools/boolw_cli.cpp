// boolw: generate, realize, order, decompose, measure and solve, all over
// the text formats described in the README.
//
// Exit codes: 0 success, 1 infeasible answer (or failed verify), 2 input
// error, 3 bounded-resource error.

#include <boolw/builders.hpp>
#include <boolw/core.hpp>
#include <boolw/decomposition.hpp>
#include <boolw/equivalence.hpp>
#include <boolw/generators.hpp>
#include <boolw/models.hpp>
#include <boolw/oracle.hpp>
#include <boolw/solver.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>

using namespace boolw;

namespace {

struct RunConfig {
    std::string family, out, model_path, graph_path, tree_path, order_text, problem_path;
    std::string weights_path, cls, measure = "bool", preset, side_text, check = "all";
    int a = 1, b = 1, p = 1, q = 1, n = 1, k = 1, nx = 1, ny = 0, d = 1, edge = -1, jobs = 1;
    int coloring_k = 0;
    double prob = 0.5;
    std::uint64_t seed = 1, cap = default_cut_bool_cap;
    std::int64_t point = 0;
};

void write_text(const std::string & path, const std::string & text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (! out)
        throw InputError("cannot write " + path);
    out << text;
}

std::string read_file(const std::string & path) {
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string & path) {
    return parse_graph(read_file(path));
}

Model load_model(const std::string & path) {
    return parse_model(read_file(path));
}

std::vector<int> parse_int_line(const std::string & text) {
    std::istringstream in(text);
    std::vector<int> xs;
    int x;
    while (in >> x)
        xs.push_back(x);
    return xs;
}

std::string order_line(const std::vector<int> & order) {
    std::string s;
    for (std::size_t i = 0; i < order.size(); ++i)
        s += (i ? " " : "") + std::to_string(order[i]);
    return s + "\n";
}

DecompositionTree tree_for(const RunConfig & cfg, int n) {
    if (! cfg.tree_path.empty())
        return parse_decomposition(read_file(cfg.tree_path));
    if (! cfg.order_text.empty()) {
        auto order = parse_int_line(cfg.order_text);
        if (int(order.size()) != n)
            throw InputError("order length does not match graph");
        return caterpillar_from_order(order);
    }
    throw InputError("need a decomposition: pass -t or --order");
}

int run_gen(const RunConfig & cfg) {
    std::string text;
    if (cfg.family == "hsu-graph")
        text = serialize_graph(hsu_graph(cfg.a, cfg.b));
    else if (cfg.family == "hsu-stable")
        text = serialize_graph(hsu_stable_chain(cfg.p, cfg.q));
    else if (cfg.family == "hsu-clique")
        text = serialize_graph(hsu_clique_chain(cfg.p, cfg.q));
    else if (cfg.family == "stable-chain-model")
        text = serialize_model(stable_chain_permutation_model(cfg.p, cfg.q));
    else if (cfg.family == "clique-chain-model")
        text = serialize_model(clique_chain_interval_model(cfg.p, cfg.q));
    else if (cfg.family == "random-graph")
        text = serialize_graph(random_graph(cfg.n, cfg.prob, cfg.seed));
    else if (cfg.family == "random-interval")
        text = serialize_model(random_interval_model(cfg.n, cfg.k, cfg.seed));
    else if (cfg.family == "random-perm")
        text = serialize_model(random_permutation_model(cfg.n, cfg.seed));
    else if (cfg.family == "random-ktrap")
        text = serialize_model(random_ktrapezoid_model(cfg.n, cfg.k, cfg.seed));
    else if (cfg.family == "random-circktrap")
        text = serialize_model(random_circular_ktrapezoid_model(cfg.n, cfg.k, cfg.seed));
    else if (cfg.family == "random-circperm")
        text = serialize_model(random_circular_permutation_model(cfg.n, cfg.seed));
    else if (cfg.family == "random-convex")
        text = serialize_model(random_convex_model(cfg.nx, cfg.ny, cfg.seed));
    else
        throw InputError("unknown family: " + cfg.family);
    write_text(cfg.out, text);
    return 0;
}

int run_order(const RunConfig & cfg) {
    bool graph_based = cfg.cls == "dilworth" || cfg.cls == "codegen";
    if (graph_based && cfg.graph_path.empty())
        throw InputError("class " + cfg.cls + " needs -g/--graph");
    if (! graph_based && cfg.model_path.empty())
        throw InputError("class " + cfg.cls + " needs -m/--model");
    VertexOrder order;
    if (cfg.cls == "interval" || cfg.cls == "ktrap")
        order = order_linear_model(std::get<KTrapezoidModel>(load_model(cfg.model_path)));
    else if (cfg.cls == "perm")
        order = order_linear_model(std::get<PermutationModel>(load_model(cfg.model_path)));
    else if (cfg.cls == "circktrap")
        order = order_circular_model(std::get<CircularKTrapezoidModel>(load_model(cfg.model_path)), cfg.point);
    else if (cfg.cls == "circperm")
        order = order_circular_model(std::get<CircularPermutationModel>(load_model(cfg.model_path)), cfg.point);
    else if (cfg.cls == "convex") {
        auto cm = std::get<ConvexModel>(load_model(cfg.model_path));
        order = order_convex(cm.graph, cm.structure);
    }
    else if (cfg.cls == "dilworth")
        order = order_dilworth(load_graph(cfg.graph_path));
    else if (cfg.cls == "codegen")
        order = order_co_degenerate(load_graph(cfg.graph_path)).order;
    else
        throw InputError("unknown class: " + cfg.cls);
    write_text(cfg.out, order_line(order));
    if (! cfg.tree_path.empty())
        write_text(cfg.tree_path, serialize_decomposition(caterpillar_from_order(order)) + "\n");
    return 0;
}

int run_width(const RunConfig & cfg) {
    Graph g = load_graph(cfg.graph_path);
    auto tree = tree_for(cfg, g.n);
    if (cfg.measure == "bool") {
        auto w = tree_width_of(g, tree, WidthMeasure::boolean, cfg.cap, cfg.jobs);
        char bits[64];
        std::snprintf(bits, sizeof bits, "%.10g", w.bits);
        std::cout << "classes " << w.max_classes << "\nbits " << bits << "\n";
    }
    else if (cfg.measure == "rank")
        std::cout << "rank " << tree_width_of(g, tree, WidthMeasure::rank, cfg.cap, cfg.jobs).max_rank << "\n";
    else
        throw InputError("measure must be bool or rank");
    return 0;
}

int run_classes(const RunConfig & cfg) {
    Graph g = load_graph(cfg.graph_path);
    VertexSet side(g.n);
    if (! cfg.side_text.empty()) {
        for (int v : parse_int_line(cfg.side_text)) {
            if (v < 0 || v >= g.n)
                throw InputError("side vertex out of range");
            side.set(v);
        }
    }
    else {
        auto tree = tree_for(cfg, g.n);
        auto cuts = cuts_of(tree);
        if (cfg.edge < 0 || cfg.edge >= int(cuts.size()))
            throw InputError("need --edge within the tree");
        side = cuts[cfg.edge].a;
    }
    auto table = enumerate_classes(g, side, cfg.d, cfg.cap);
    for (int c = 0; c < table.size(); ++c) {
        std::cout << c << '\t';
        auto members = table.representative(c).members();
        for (std::size_t i = 0; i < members.size(); ++i)
            std::cout << (i ? "," : "") << members[i];
        if (members.empty())
            std::cout << '-';
        std::cout << '\t';
        for (auto s : table.signature_of(c))
            std::cout << int(s);
        std::cout << '\n';
    }
    return 0;
}

int run_solve(const RunConfig & cfg) {
    if (cfg.preset.empty() == cfg.problem_path.empty())
        throw InputError("need exactly one of -p/--problem and --preset");
    Graph g = load_graph(cfg.graph_path);
    auto tree = tree_for(cfg, g.n);
    Problem problem = cfg.preset.empty()
        ? parse_problem(read_file(cfg.problem_path))
        : problem_preset(cfg.preset, cfg.coloring_k);
    WeightVector weights;
    if (! cfg.weights_path.empty()) {
        std::ifstream in(cfg.weights_path);
        if (! in)
            throw InputError("cannot read " + cfg.weights_path);
        weights = parse_weights(in, g.n);
    }

    if (auto * sr = std::get_if<SigmaRhoProblem>(&problem)) {
        sr->weights = weights;
        auto sol = solve_sigma_rho(g, tree, *sr, nullptr, cfg.cap);
        if (! sol) {
            std::cout << "infeasible\n";
            return 1;
        }
        std::cout << "value " << sol->value << "\nwitness" << (sol->chosen.empty() ? " -" : "");
        sol->chosen.for_each([&](int v) { std::cout << ' ' << v; });
        std::cout << "\n";
        return 0;
    }
    auto & dq = std::get<DqProblem>(problem);
    dq.weights = weights;
    auto sol = solve_dq(g, tree, dq, nullptr, cfg.cap);
    if (! sol) {
        std::cout << "infeasible\n";
        return 1;
    }
    std::cout << "value " << sol->value << "\n";
    for (int i = 0; i < dq.q; ++i) {
        std::cout << "part " << (i + 1) << (sol->parts[i].empty() ? " -" : "");
        sol->parts[i].for_each([&](int v) { std::cout << ' ' << v; });
        std::cout << "\n";
    }
    return 0;
}

// Named oracle comparisons, each printing PASS or FAIL with a counterexample.
int run_verify(const RunConfig & cfg) {
    bool all_ok = true;
    auto report = [&](const std::string & name, bool ok, const std::string & detail) {
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (! ok && ! detail.empty())
            std::cout << ": " << detail;
        std::cout << "\n";
    };
    auto want = [&](const std::string & name) { return cfg.check == "all" || cfg.check == name; };
    bool matched = false;

    if (want("cut-bool-oracle")) {
        matched = true;
        std::mt19937_64 rng(1);
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 200 && ok; ++trial) {
            int n = 2 + int(rng() % 15);
            Graph g = random_graph(n, 0.4, rng());
            VertexSet a(n);
            while (a.empty() || a.count() == n)
                for (int v = 0; v < n; ++v)
                    if (rng() & 1)
                        a.set(v);
                    else
                        a.reset(v);
            if (cut_bool(g, a).classes != brute_cut_bool(g, a)) {
                ok = false;
                detail = "graph:\n" + serialize_graph(g);
            }
        }
        report("cut-bool-oracle", ok, detail);
    }
    if (want("cut-bool-symmetry")) {
        matched = true;
        std::mt19937_64 rng(2);
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 200 && ok; ++trial) {
            int n = 2 + int(rng() % 15);
            Graph g = random_graph(n, 0.45, rng());
            VertexSet a(n);
            while (a.empty() || a.count() == n)
                for (int v = 0; v < n; ++v)
                    if (rng() & 1)
                        a.set(v);
                    else
                        a.reset(v);
            if (cut_bool(g, a).classes != cut_bool(g, a.complement()).classes) {
                ok = false;
                detail = "graph:\n" + serialize_graph(g);
            }
        }
        report("cut-bool-symmetry", ok, detail);
    }
    if (want("solver-sigma-rho")) {
        matched = true;
        std::mt19937_64 rng(3);
        bool ok = true;
        std::string detail;
        const char * names[] = {"dominating-set", "total-dominating-set", "independent-set",
            "independent-dominating-set", "perfect-code"};
        for (int trial = 0; trial < 100 && ok; ++trial) {
            int n = 1 + int(rng() % 11);
            Graph g = random_graph(n, 0.35, rng());
            auto prob = std::get<SigmaRhoProblem>(problem_preset(names[rng() % 5]));
            prob.weights.resize(n);
            for (auto & w : prob.weights)
                w = 1 + std::int64_t(rng() % 100);
            auto fast = solve_sigma_rho(g, random_decomposition(n, rng()), prob);
            auto slow = brute_sigma_rho(g, prob);
            if (fast.has_value() != slow.has_value() || (fast && fast->value != slow->value)) {
                ok = false;
                detail = "graph:\n" + serialize_graph(g);
            }
        }
        report("solver-sigma-rho", ok, detail);
    }
    if (want("solver-dq")) {
        matched = true;
        std::mt19937_64 rng(4);
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 50 && ok; ++trial) {
            int n = 1 + int(rng() % 8);
            Graph g = random_graph(n, 0.4, rng());
            auto prob = std::get<DqProblem>(problem_preset("k-coloring", 2 + int(rng() % 2)));
            auto fast = solve_dq(g, random_decomposition(n, rng()), prob);
            auto slow = brute_dq(g, prob);
            if (fast.has_value() != slow.has_value()) {
                ok = false;
                detail = "graph:\n" + serialize_graph(g);
            }
        }
        report("solver-dq", ok, detail);
    }
    if (want("dilworth")) {
        matched = true;
        std::mt19937_64 rng(5);
        bool ok = true;
        std::string detail;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            int n = 1 + int(rng() % 10);
            Graph g = random_graph(n, 0.45, rng());
            if (int(dilworth_chain_cover(g).chains.size()) != brute_dilworth(g)) {
                ok = false;
                detail = "graph:\n" + serialize_graph(g);
            }
        }
        report("dilworth", ok, detail);
    }
    if (want("hsu-gap")) {
        matched = true;
        bool ok = true;
        std::string detail;
        for (int p = 1; p <= 12 && ok; ++p) {
            Graph h = hsu_graph(p, p);
            VertexSet a(2 * p);
            for (int i = 0; i < p; ++i)
                a.set(i);
            if (cut_bool(h, a).classes != std::uint64_t(p) + 1 || cut_rank(h, a) != p) {
                ok = false;
                detail = "p=" + std::to_string(p);
            }
        }
        report("hsu-gap", ok, detail);
    }
    if (want("d-values")) {
        matched = true;
        bool ok = d_of_set(FinCofinSet::naturals()) == 0 && d_of_set(FinCofinSet::finite({0})) == 1 &&
            d_of_set(FinCofinSet::finite({1})) == 2 && d_of_set(FinCofinSet::naturals_except({0})) == 1;
        report("d-values", ok, "");
    }
    if (want("chain-models")) {
        matched = true;
        bool ok = realize(stable_chain_permutation_model(3, 4)) == hsu_stable_chain(3, 4) &&
            realize(clique_chain_interval_model(3, 4)) == hsu_clique_chain(3, 4);
        report("chain-models", ok, "");
    }
    if (! matched)
        throw InputError("unknown check: " + cfg.check);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char ** argv) {
    CLI::App app{"boolean-width decompositions, cut measures and vertex partitioning solvers"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto * gen = app.add_subcommand("gen", "generate graphs and intersection models");
    gen->add_option("family", cfg.family,
           "hsu-graph | hsu-stable | hsu-clique | stable-chain-model | clique-chain-model | "
           "random-graph | random-interval | random-perm | random-ktrap | random-circktrap | "
           "random-circperm | random-convex")
        ->required();
    gen->add_option("--a", cfg.a, "Hsu v-side size");
    gen->add_option("--b", cfg.b, "Hsu u-side size");
    gen->add_option("--p", cfg.p, "chain width");
    gen->add_option("--q", cfg.q, "chain length");
    gen->add_option("--n", cfg.n, "vertex count");
    gen->add_option("--k", cfg.k, "line/circle count (random-interval: load cap)");
    gen->add_option("--nx", cfg.nx, "convex X side size");
    gen->add_option("--ny", cfg.ny, "convex Y side size");
    gen->add_option("--prob", cfg.prob, "edge probability");
    gen->add_option("--seed", cfg.seed, "random seed");
    gen->add_option("-o,--out", cfg.out, "output file (stdout if omitted)");

    auto * realize_cmd = app.add_subcommand("realize", "turn a model file into its intersection graph");
    realize_cmd->add_option("-m,--model", cfg.model_path, "model file")->required();
    realize_cmd->add_option("-o,--out", cfg.out, "output graph file");

    auto * order = app.add_subcommand("order", "build a width-certifying vertex order");
    order->add_option("--class", cfg.cls, "interval | ktrap | perm | circktrap | circperm | convex | "
                                          "dilworth | codegen")
        ->required();
    order->add_option("-m,--model", cfg.model_path, "model file (model-based classes)");
    order->add_option("-g,--graph", cfg.graph_path, "graph file (dilworth, codegen)");
    order->add_option("-p,--point", cfg.point, "start tick for circular classes");
    order->add_option("-o,--out", cfg.out, "order output (stdout if omitted)");
    order->add_option("--tree", cfg.tree_path, "also write the caterpillar decomposition here");

    auto * decomp = app.add_subcommand("decomp", "build a decomposition file");
    decomp->add_option("kind", cfg.family, "caterpillar | random")->required();
    decomp->add_option("--order", cfg.order_text, "vertex order (caterpillar)");
    decomp->add_option("--n", cfg.n, "leaf count (random)");
    decomp->add_option("--seed", cfg.seed, "random seed");
    decomp->add_option("-o,--out", cfg.out, "output file");

    auto * width = app.add_subcommand("width", "evaluate the width of a decomposition");
    width->add_option("-g,--graph", cfg.graph_path, "graph file")->required();
    width->add_option("-t,--tree", cfg.tree_path, "decomposition file");
    width->add_option("--order", cfg.order_text, "caterpillar order instead of a tree file");
    width->add_option("--measure", cfg.measure, "bool | rank");
    width->add_option("--cap", cfg.cap, "class cap per cut");
    width->add_option("--jobs", cfg.jobs, "parallel cut evaluations");

    auto * classes = app.add_subcommand("classes", "dump a d-neighbourhood class table as TSV");
    classes->add_option("-g,--graph", cfg.graph_path, "graph file")->required();
    classes->add_option("-t,--tree", cfg.tree_path, "decomposition file");
    classes->add_option("--order", cfg.order_text, "caterpillar order instead of a tree file");
    classes->add_option("--edge", cfg.edge, "cut = this edge of the tree");
    classes->add_option("--side", cfg.side_text, "explicit cut side, e.g. \"0 1 4\"");
    classes->add_option("-d", cfg.d, "equivalence depth d");
    classes->add_option("--cap", cfg.cap, "class cap");

    auto * solve = app.add_subcommand("solve", "solve a vertex subset or partitioning problem");
    solve->add_option("-g,--graph", cfg.graph_path, "graph file")->required();
    solve->add_option("-t,--tree", cfg.tree_path, "decomposition file");
    solve->add_option("--order", cfg.order_text, "caterpillar order instead of a tree file");
    solve->add_option("-p,--problem", cfg.problem_path, "problem file");
    solve->add_option("--preset", cfg.preset, "named problem preset");
    solve->add_option("--k", cfg.coloring_k, "parameter for k-coloring");
    solve->add_option("-w,--weights", cfg.weights_path, "weights file");
    solve->add_option("--cap", cfg.cap, "class cap");

    auto * verify = app.add_subcommand("verify", "replay oracle comparisons");
    verify->add_option("check", cfg.check,
        "all | cut-bool-oracle | cut-bool-symmetry | solver-sigma-rho | solver-dq | dilworth | "
        "hsu-gap | d-values | chain-models");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed())
            return run_gen(cfg);
        if (realize_cmd->parsed()) {
            write_text(cfg.out, serialize_graph(realize(load_model(cfg.model_path))));
            return 0;
        }
        if (order->parsed())
            return run_order(cfg);
        if (decomp->parsed()) {
            if (cfg.family == "caterpillar")
                write_text(cfg.out,
                    serialize_decomposition(caterpillar_from_order(parse_int_line(cfg.order_text))) + "\n");
            else if (cfg.family == "random")
                write_text(cfg.out, serialize_decomposition(random_decomposition(cfg.n, cfg.seed)) + "\n");
            else
                throw InputError("unknown decomp kind: " + cfg.family);
            return 0;
        }
        if (width->parsed())
            return run_width(cfg);
        if (classes->parsed())
            return run_classes(cfg);
        if (solve->parsed())
            return run_solve(cfg);
        if (verify->parsed())
            return run_verify(cfg);
    }
    catch (const InputError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const ModelError & e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 2;
    }
    catch (const BoundedResourceError & e) {
        std::cerr << "resource cap exceeded: " << e.what() << " (partial count " << e.partial_count << ")\n";
        return 3;
    }
    return 0;
}
