#include <boolw/solver.hpp>
#include <boolw/builders.hpp>
#include <boolw/generators.hpp>
#include <boolw/oracle.hpp>

#include "test_util.hpp"

#include <doctest.h>

using namespace boolw;

namespace {
    SigmaRhoProblem preset_sr(const std::string & name) {
        return std::get<SigmaRhoProblem>(problem_preset(name));
    }

    DecompositionTree some_tree(int n, std::uint64_t seed) {
        return random_decomposition(n, seed);
    }
}

TEST_CASE("dominating set on stars and cycles") {
    auto ds = preset_sr("dominating-set");

    Graph star = testutil::star(4);
    auto sol = solve_sigma_rho(star, some_tree(5, 1), ds);
    REQUIRE(sol.has_value());
    CHECK(sol->value == 1);
    CHECK(sol->chosen == VertexSet::of(5, {0}));

    auto c4 = solve_sigma_rho(testutil::cycle(4), some_tree(4, 2), ds);
    REQUIRE(c4.has_value());
    CHECK(c4->value == 2);
}

TEST_CASE("perfect code") {
    auto pc = preset_sr("perfect-code");
    CHECK(! solve_sigma_rho(testutil::cycle(4), some_tree(4, 3), pc).has_value());

    auto c3 = solve_sigma_rho(testutil::cycle(3), some_tree(3, 4), pc);
    REQUIRE(c3.has_value());
    CHECK(c3->value == 1);
    CHECK(c3->chosen.count() == 1);
}

TEST_CASE("independent set on a path") {
    auto is = preset_sr("independent-set");
    auto sol = solve_sigma_rho(testutil::path(3), some_tree(3, 5), is);
    REQUIRE(sol.has_value());
    CHECK(sol->value == 2);
    CHECK(sol->chosen == VertexSet::of(3, {0, 2}));
}

TEST_CASE("singleton and pair graphs") {
    auto ds = preset_sr("dominating-set");
    Graph k1(1);
    auto sol = solve_sigma_rho(k1, caterpillar_from_order({0}), ds);
    REQUIRE(sol.has_value());
    CHECK(sol->value == 1);

    auto is = preset_sr("independent-set");
    auto pair = solve_sigma_rho(graph_from_edges(2, {{0, 1}}), caterpillar_from_order({0, 1}), is);
    REQUIRE(pair.has_value());
    CHECK(pair->value == 1);

    // perfect code on K1 must pick the vertex
    auto pc = solve_sigma_rho(k1, caterpillar_from_order({0}), preset_sr("perfect-code"));
    REQUIRE(pc.has_value());
    CHECK(pc->chosen.count() == 1);
}

TEST_CASE("weights change the optimum") {
    auto ds = preset_sr("dominating-set");
    ds.weights = {10, 1, 1, 1, 1};
    Graph star = testutil::star(4);
    auto sol = solve_sigma_rho(star, some_tree(5, 6), ds);
    REQUIRE(sol.has_value());
    // the four leaves are cheaper than the centre
    CHECK(sol->value == 4);
    CHECK(sol->chosen == VertexSet::of(5, {1, 2, 3, 4}));
}

TEST_CASE("solver equals brute force on random triples") {
    std::mt19937_64 rng(61);
    const char * names[] = {"dominating-set", "total-dominating-set", "independent-set",
        "independent-dominating-set", "perfect-code"};
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 12);
        Graph g = testutil::random_graph(n, 0.2 + 0.05 * double(rng() % 10), rng);
        auto prob = preset_sr(names[rng() % 5]);
        prob.weights.resize(n);
        for (auto & w : prob.weights)
            w = 1 + std::int64_t(rng() % 100);
        auto tree = some_tree(n, rng());
        auto fast = solve_sigma_rho(g, tree, prob);
        auto slow = brute_sigma_rho(g, prob);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(fast->value == slow->value);
            std::int64_t check = 0;
            CHECK(check_sigma_rho_witness(g, prob, fast->chosen, &check));
            CHECK(check == fast->value);
        }
    }
}

TEST_CASE("optimum is independent of the decomposition") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + int(rng() % 9);
        Graph g = testutil::random_graph(n, 0.4, rng);
        auto prob = preset_sr("dominating-set");
        std::optional<std::int64_t> reference;
        for (int t = 0; t < 5; ++t) {
            auto sol = solve_sigma_rho(g, some_tree(n, rng()), prob);
            std::int64_t value = sol ? sol->value : -1;
            if (! reference)
                reference = value;
            CHECK(*reference == value);
        }
    }
}

TEST_CASE("3-coloring") {
    auto k3 = std::get<DqProblem>(problem_preset("k-coloring", 3));
    CHECK(solve_dq(testutil::clique(3), some_tree(3, 7), k3).has_value());
    CHECK(! solve_dq(testutil::clique(4), some_tree(4, 8), k3).has_value());

    auto sol = solve_dq(testutil::cycle(5), some_tree(5, 9), k3);
    REQUIRE(sol.has_value());
    std::int64_t ignored;
    CHECK(check_dq_witness(testutil::cycle(5), k3, sol->parts, &ignored));
}

TEST_CASE("total dominating set as a q=2 problem") {
    DqProblem p;
    p.q = 2;
    p.constraints = {{FinCofinSet::naturals_except({0}), FinCofinSet::naturals()},
        {FinCofinSet::naturals_except({0}), FinCofinSet::naturals()}};
    p.mode = OptMode::minimize;
    auto sol = solve_dq(testutil::cycle(4), some_tree(4, 10), p);
    REQUIRE(sol.has_value());
    CHECK(sol->value == 2);
}

TEST_CASE("q=2 encoding matches the direct subset solver") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + int(rng() % 10);
        Graph g = testutil::random_graph(n, 0.35, rng);
        auto prob = preset_sr("dominating-set");
        prob.weights.resize(n);
        for (auto & w : prob.weights)
            w = 1 + std::int64_t(rng() % 20);
        auto tree = some_tree(n, rng());
        auto direct = solve_sigma_rho(g, tree, prob);
        auto via_dq = solve_dq(g, tree, sigma_rho_as_dq(prob));
        REQUIRE(direct.has_value() == via_dq.has_value());
        if (direct)
            CHECK(direct->value == via_dq->value);
    }
}

TEST_CASE("dq solver equals brute force") {
    std::mt19937_64 rng(64);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 1 + int(rng() % 8);
        Graph g = testutil::random_graph(n, 0.4, rng);
        DqProblem prob;
        int pick = int(rng() % 3);
        if (pick == 0)
            prob = std::get<DqProblem>(problem_preset("k-coloring", 2 + int(rng() % 2)));
        else if (pick == 1)
            prob = sigma_rho_as_dq(preset_sr("dominating-set"));
        else {
            prob.q = 2;
            prob.constraints = {{FinCofinSet::naturals_except({0}), FinCofinSet::naturals()},
                {FinCofinSet::naturals_except({0}), FinCofinSet::naturals()}};
            prob.mode = OptMode::minimize;
        }
        auto fast = solve_dq(g, some_tree(n, rng()), prob);
        auto slow = brute_dq(g, prob);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast && prob.mode != OptMode::exists)
            CHECK(fast->value == slow->value);
    }
}

TEST_CASE("interval scaling keeps tables within the class-count bound") {
    std::mt19937_64 rng(65);
    for (int n : {60, 120, 240}) {
        auto model = random_interval_model(n, 8, rng());
        Graph g = realize(model);
        auto tree = caterpillar_from_order(order_linear_model(model));
        std::uint64_t c = std::uint64_t(max_point_load(model));
        SolveStats stats;
        auto sol = solve_sigma_rho(g, tree, preset_sr("dominating-set"), &stats);
        REQUIRE(sol.has_value());
        CHECK(stats.max_classes <= c);
        CHECK(stats.max_table_entries <= c * c * c);
    }
}

TEST_CASE("problem presets") {
    auto names = preset_names();
    CHECK(names.size() == 6);
    for (const auto & name : names) {
        if (name == "k-coloring")
            CHECK_THROWS_AS(problem_preset(name), InputError);
        else
            (void) problem_preset(name);
    }
    CHECK_THROWS_AS(problem_preset("no-such-problem"), InputError);

    auto ds = preset_sr("dominating-set");
    CHECK(ds.sigma == FinCofinSet::naturals());
    CHECK(ds.rho == FinCofinSet::naturals_except({0}));
    auto pc = preset_sr("perfect-code");
    CHECK(pc.sigma == FinCofinSet::finite({0}));
    CHECK(pc.rho == FinCofinSet::finite({1}));
}

TEST_CASE("problem file parsing") {
    auto sr = std::get<SigmaRhoProblem>(parse_problem("problem sigma-rho\nsigma {0}\nrho {1}\nmode min\n"));
    CHECK(sr.sigma == FinCofinSet::finite({0}));
    CHECK(sr.rho == FinCofinSet::finite({1}));
    CHECK(sr.mode == OptMode::minimize);

    auto dq = std::get<DqProblem>(parse_problem(
        "problem dq 3\nD 1 1 {0}\nD 2 2 {0}\nD 3 3 {0}\nmode exists\n"));
    CHECK(dq.q == 3);
    CHECK(dq.constraints[0][0] == FinCofinSet::finite({0}));
    CHECK(dq.constraints[0][1] == FinCofinSet::naturals());
    CHECK(dq.mode == OptMode::exists);

    CHECK_THROWS_AS(parse_problem("problem sigma-rho\nsigma N\n"), InputError);
    CHECK_THROWS_AS(parse_problem("problem dq 2\nD 3 1 N\n"), InputError);
    CHECK_THROWS_AS(parse_problem("sigma N\n"), InputError);
}
