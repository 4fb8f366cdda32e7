#include <boolw/builders.hpp>
#include <boolw/decomposition.hpp>
#include <boolw/generators.hpp>
#include <boolw/oracle.hpp>

#include "test_util.hpp"

#include <doctest.h>

using namespace boolw;

namespace {
    KTrapezoidModel intervals(std::vector<std::pair<std::int64_t, std::int64_t>> iv) {
        KTrapezoidModel m;
        m.k = 1;
        for (auto [l, r] : iv)
            m.objects.push_back({{l, r}});
        return m;
    }

    std::uint64_t sat_pow(std::uint64_t base, int exp) {
        std::uint64_t r = 1;
        for (int i = 0; i < exp; ++i) {
            if (r > (std::uint64_t(1) << 40))
                return std::uint64_t(1) << 62;
            r *= base;
        }
        return r;
    }

    // widest boolean cut of the caterpillar over the given order
    std::uint64_t caterpillar_classes(const Graph & g, const VertexOrder & order) {
        return tree_width_of(g, caterpillar_from_order(order), WidthMeasure::boolean).max_classes;
    }
}

TEST_CASE("order_linear_model") {
    CHECK(order_linear_model(intervals({{1, 3}, {2, 4}, {5, 6}})) == VertexOrder{0, 1, 2});

    PermutationModel pm;
    pm.lines = {{5, 1}, {1, 2}, {3, 3}};
    CHECK(order_linear_model(pm) == VertexOrder{1, 2, 0});

    KTrapezoidModel t2;
    t2.k = 2;
    t2.objects = {{{0, 7}, {1, 3}}, {{0, 4}, {2, 3}}, {{1, 9}, {0, 2}}};
    CHECK(order_linear_model(t2) == VertexOrder{1, 0, 2});
}

TEST_CASE("order_circular_model") {
    CircularKTrapezoidModel arcs;
    arcs.k = 1;
    arcs.ticks = 12;
    arcs.arcs = {{{11, 2}}, {{3, 5}}, {{6, 8}}};
    CHECK(order_circular_model(arcs, 0) == VertexOrder{0, 1, 2});

    CircularKTrapezoidModel none;
    none.k = 1;
    none.ticks = 12;
    none.arcs = {{{6, 8}}, {{3, 5}}};
    CHECK(order_circular_model(none, 0) == VertexOrder{1, 0});

    CircularPermutationModel cp;
    cp.ticks = 12;
    cp.chords = {{0, 7, true}, {1, 2, false}, {2, 10, true}};
    CHECK(order_circular_model(cp, 0) == VertexOrder{1, 0, 2});
}

TEST_CASE("order_convex") {
    Graph g = graph_from_edges(4, {{0, 3}, {1, 3}});
    ConvexStructure s{{0, 1, 2}};
    CHECK(order_convex(g, s) == VertexOrder{0, 1, 3, 2});

    Graph two = graph_from_edges(5, {{0, 3}, {1, 3}, {0, 4}, {1, 4}});
    CHECK(order_convex(two, ConvexStructure{{0, 1, 2}}) == VertexOrder{0, 1, 3, 4, 2});

    Graph isolated = graph_from_edges(4, {});
    CHECK(order_convex(isolated, ConvexStructure{{0, 1, 2}}) == VertexOrder{3, 0, 1, 2});

    Graph bad = graph_from_edges(4, {{0, 3}, {2, 3}});
    CHECK_THROWS_AS(order_convex(bad, ConvexStructure{{0, 1, 2}}), InputError);
}

TEST_CASE("dilworth_chain_cover") {
    auto star = dilworth_chain_cover(testutil::star(3));
    CHECK(star.chains.size() == 1);

    auto c4 = dilworth_chain_cover(testutil::cycle(4));
    REQUIRE(c4.chains.size() == 2);
    CHECK(c4.chains[0] == std::vector<int>{0, 2});
    CHECK(c4.chains[1] == std::vector<int>{1, 3});

    CHECK(dilworth_chain_cover(Graph(5)).chains.size() == 1);
}

TEST_CASE("chain cover has the chain property and partitions V") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + int(rng() % 10);
        Graph g = testutil::random_graph(n, 0.45, rng);
        auto cover = dilworth_chain_cover(g);
        std::vector<char> seen(n, 0);
        for (const auto & chain : cover.chains)
            for (std::size_t i = 0; i < chain.size(); ++i) {
                CHECK(! seen[chain[i]]);
                seen[chain[i]] = 1;
                for (std::size_t j = i + 1; j < chain.size(); ++j) {
                    VertexSet closed = g.adj[chain[j]];
                    closed.set(chain[j]);
                    CHECK(g.adj[chain[i]].is_subset_of(closed));
                }
            }
        CHECK(std::count(seen.begin(), seen.end(), 1) == n);
        // Dilworth's theorem: cover size equals the maximum antichain
        CHECK(int(cover.chains.size()) == brute_dilworth(g));
    }
}

TEST_CASE("order_dilworth") {
    CHECK(order_dilworth(testutil::cycle(4)) == VertexOrder{0, 2, 1, 3});
    CHECK(order_dilworth(testutil::clique(5)) == VertexOrder{0, 1, 2, 3, 4});
    CHECK(order_dilworth(testutil::star(3)).size() == 4);
}

TEST_CASE("order_co_degenerate") {
    auto c4 = order_co_degenerate(testutil::cycle(4));
    CHECK(c4.k == 1);

    CHECK(order_co_degenerate(testutil::clique(6)).k == 0);

    // complement of a tree (a path) has k = 1
    Graph co_path = complement(testutil::path(6));
    CHECK(order_co_degenerate(co_path).k == 1);

    // elimination property: at most k later neighbours in the complement
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + int(rng() % 12);
        Graph g = testutil::random_graph(n, 0.5, rng);
        auto [order, k] = order_co_degenerate(g);
        Graph cg = complement(g);
        VertexSet later = VertexSet::full(n);
        for (int v : order) {
            later.reset(v);
            CHECK(cg.adj[v].intersection_count(later) <= k);
        }
    }
}

TEST_CASE("class-count certificates on built caterpillars, small scale") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        int n = 6 + int(rng() % 7);

        auto pm = random_permutation_model(n, rng());
        CHECK(caterpillar_classes(realize(pm), order_linear_model(pm)) <= std::uint64_t(n));

        auto im = random_interval_model(n, 4, rng());
        CHECK(caterpillar_classes(realize(im), order_linear_model(im)) <=
            std::uint64_t(max_point_load(im)));

        auto tm = random_ktrapezoid_model(n, 2, rng());
        CHECK(caterpillar_classes(realize(tm), order_linear_model(tm)) <= sat_pow(n, 2));

        auto cm = random_circular_ktrapezoid_model(n, 1, rng());
        std::uint64_t c = std::uint64_t(max_point_load(cm));
        CHECK(caterpillar_classes(realize(cm), order_circular_model(cm, 0)) <= 4 * c * c);

        auto cpm = random_circular_permutation_model(n, rng());
        CHECK(caterpillar_classes(realize(cpm), order_circular_model(cpm, 0)) <= sat_pow(n, 2));

        auto cvm = random_convex_model(3 + int(rng() % 4), n / 2, rng());
        CHECK(caterpillar_classes(cvm.graph, order_convex(cvm.graph, cvm.structure)) <=
            std::uint64_t(cvm.graph.n));

        Graph g = testutil::random_graph(n, 0.5, rng);
        auto cover = dilworth_chain_cover(g);
        CHECK(caterpillar_classes(g, order_dilworth(g)) <= sat_pow(n, int(cover.chains.size())));

        auto [order, k] = order_co_degenerate(g);
        CHECK(caterpillar_classes(g, order) <= sat_pow(n, k));
    }
}

TEST_CASE("representative-size certificates on built cuts, small scale") {
    std::mt19937_64 rng(44);
    auto worst_rep = [&](const Graph & g, const VertexOrder & order) {
        int worst = 0;
        for (const auto & cut : cuts_of(caterpillar_from_order(order))) {
            if (cut.a.empty() || cut.a.count() == g.n)
                continue;
            const VertexSet & small = cut.a.count() <= g.n / 2 ? cut.a : cut.a.complement();
            worst = std::max(worst, brute_representative_bounds(g, small, 1).max_min_anywhere);
            worst = std::max(worst,
                brute_representative_bounds(g, small.complement(), 1).max_min_anywhere);
        }
        return worst;
    };
    for (int trial = 0; trial < 4; ++trial) {
        int n = 7 + int(rng() % 4);

        auto im = random_interval_model(n, 4, rng());
        CHECK(worst_rep(realize(im), order_linear_model(im)) <= 1);

        auto pm = random_permutation_model(n, rng());
        CHECK(worst_rep(realize(pm), order_linear_model(pm)) <= 1);

        auto tm = random_ktrapezoid_model(n, 2, rng());
        CHECK(worst_rep(realize(tm), order_linear_model(tm)) <= 2);

        auto am = random_circular_ktrapezoid_model(n, 1, rng());
        CHECK(worst_rep(realize(am), order_circular_model(am, 0)) <= 2);

        auto cpm = random_circular_permutation_model(n, rng());
        CHECK(worst_rep(realize(cpm), order_circular_model(cpm, 0)) <= 2);
    }
}

TEST_CASE("linear builders only reorder, never drop vertices") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + int(rng() % 12);
        auto check_perm = [&](VertexOrder order) {
            std::sort(order.begin(), order.end());
            CHECK(order == testutil::identity_order(int(order.size())));
            CHECK(int(order.size()) == n);
        };
        check_perm(order_linear_model(random_interval_model(n, 3, rng())));
        check_perm(order_linear_model(random_permutation_model(n, rng())));
        check_perm(order_circular_model(random_circular_ktrapezoid_model(n, 2, rng()), 0));
        check_perm(order_circular_model(random_circular_permutation_model(n, rng()), 0));
        check_perm(order_dilworth(testutil::random_graph(n, 0.4, rng)));
        check_perm(order_co_degenerate(testutil::random_graph(n, 0.4, rng)).order);
    }
}
