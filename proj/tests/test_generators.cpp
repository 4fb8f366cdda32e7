#include <boolw/generators.hpp>
#include <boolw/builders.hpp>
#include <boolw/decomposition.hpp>

#include "test_util.hpp"

#include <doctest.h>

#include <queue>

using namespace boolw;

namespace {
    int edge_count(const Graph & g) {
        int total = 0;
        for (int v = 0; v < g.n; ++v)
            total += g.degree(v);
        return total / 2;
    }

    bool is_bipartite(const Graph & g) {
        std::vector<int> colour(g.n, -1);
        for (int start = 0; start < g.n; ++start) {
            if (colour[start] >= 0)
                continue;
            colour[start] = 0;
            std::queue<int> queue;
            queue.push(start);
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop();
                bool ok = true;
                g.adj[u].for_each([&](int v) {
                    if (colour[v] < 0) {
                        colour[v] = 1 - colour[u];
                        queue.push(v);
                    }
                    else if (colour[v] == colour[u])
                        ok = false;
                });
                if (! ok)
                    return false;
            }
        }
        return true;
    }

    bool is_chordal_small(const Graph & g) {
        // no induced cycle of length >= 4, by scanning all vertex subsets
        for (std::uint32_t mask = 0; mask < (1U << g.n); ++mask) {
            int size = __builtin_popcount(mask);
            if (size < 4)
                continue;
            bool cycle = true;
            int first = -1;
            for (int v = 0; v < g.n && cycle; ++v) {
                if (! ((mask >> v) & 1))
                    continue;
                if (first < 0)
                    first = v;
                int deg = 0;
                g.adj[v].for_each([&](int w) { deg += (mask >> w) & 1; });
                cycle = deg == 2;
            }
            if (! cycle)
                continue;
            // connected?
            std::uint32_t seen = 1U << first;
            std::queue<int> queue;
            queue.push(first);
            while (! queue.empty()) {
                int u = queue.front();
                queue.pop();
                g.adj[u].for_each([&](int w) {
                    if (((mask >> w) & 1) && ! ((seen >> w) & 1)) {
                        seen |= 1U << w;
                        queue.push(w);
                    }
                });
            }
            if (seen == mask)
                return false;
        }
        return true;
    }
}

TEST_CASE("hsu_graph") {
    Graph h1 = hsu_graph(1, 1);
    CHECK(edge_count(h1) == 1);
    CHECK(h1.adjacent(0, 1));

    Graph h3 = hsu_graph(3, 3);
    CHECK(h3.degree(0) == 3);
    CHECK(h3.degree(1) == 2);
    CHECK(h3.degree(2) == 1);

    CHECK(edge_count(hsu_graph(2, 3)) == 5);
    CHECK_THROWS_AS(hsu_graph(0, 1), InputError);
}

TEST_CASE("hsu_join_chain") {
    Graph p2 = hsu_stable_chain(1, 2);
    CHECK(p2.n == 2);
    CHECK(edge_count(p2) == 1);

    Graph cc = hsu_clique_chain(2, 2);
    CHECK(edge_count(cc) == 5);

    Graph sc = hsu_stable_chain(3, 4);
    CHECK(sc.n == 12);
    CHECK(edge_count(sc) == 18);
    CHECK(is_bipartite(sc));

    // custom pieces: two triangles joined by a width-2 Hsu junction
    HsuChainSpec spec;
    spec.p = 2;
    spec.q = 2;
    spec.kind = HsuKind::custom;
    spec.pieces = {testutil::clique(3), testutil::clique(3)};
    spec.s_sets = {{0, 1}, {1, 2}};
    Graph custom = hsu_join_chain(spec);
    CHECK(custom.n == 6);
    CHECK(edge_count(custom) == 3 + 3 + 3);
    CHECK_THROWS_AS(hsu_join_chain(HsuChainSpec{2, 2, HsuKind::custom, {}, {}}), InputError);
}

TEST_CASE("stable chains are bipartite permutation graphs: model realizations agree") {
    for (auto [p, q] : {std::pair{1, 2}, {2, 3}, {3, 4}, {4, 5}}) {
        Graph expected = hsu_stable_chain(p, q);
        auto model = stable_chain_permutation_model(p, q);
        CHECK(realize(model) == expected);
    }
}

TEST_CASE("clique chains are unit interval graphs: model realizations agree") {
    for (auto [p, q] : {std::pair{1, 4}, {2, 3}, {3, 4}, {4, 13}}) {
        Graph expected = hsu_clique_chain(p, q);
        auto model = clique_chain_interval_model(p, q);
        CHECK(realize(model) == expected);
        // all interval lengths equal (unit interval certificate)
        std::int64_t len = model.objects[0][0].second - model.objects[0][0].first;
        for (const auto & obj : model.objects)
            CHECK(obj[0].second - obj[0].first == len);
    }
    // p=1 clique chains are paths
    Graph p1 = realize(clique_chain_interval_model(1, 5));
    CHECK(p1 == testutil::path(5));
}

TEST_CASE("hsu bipartition cut: boolean classes p+1, rank p") {
    for (int p = 1; p <= 12; ++p) {
        Graph h = hsu_graph(p, p);
        VertexSet a(2 * p);
        for (int i = 0; i < p; ++i)
            a.set(i);
        CHECK(cut_bool(h, a).classes == std::uint64_t(p) + 1);
        CHECK(cut_rank(h, a) == p);
    }
}

TEST_CASE("group-order caterpillar keeps chain cuts small") {
    for (int p = 1; p <= 4; ++p)
        for (int q : {4, 13}) {
            Graph g = hsu_clique_chain(p, q);
            auto width = tree_width_of(g, caterpillar_from_order(testutil::identity_order(g.n)),
                WidthMeasure::boolean);
            CHECK(width.max_classes <= std::uint64_t(p + 1) * std::uint64_t(p + 1));

            Graph s = hsu_stable_chain(p, q);
            auto swidth = tree_width_of(s, caterpillar_from_order(testutil::identity_order(s.n)),
                WidthMeasure::boolean);
            CHECK(swidth.max_classes <= std::uint64_t(p + 1) * std::uint64_t(p + 1));
        }
}

TEST_CASE("balanced group cut of a clique chain has rank p") {
    for (int p : {2, 3, 4})
        for (int q : {6, 13}) {
            Graph g = hsu_clique_chain(p, q);
            VertexSet a(g.n);
            for (int v = 0; v < p * ((q + 1) / 2); ++v)
                a.set(v);
            CHECK(cut_rank(g, a) == p);
        }
}

TEST_CASE("random generators are deterministic per seed") {
    CHECK(random_graph(10, 0.5, 77) == random_graph(10, 0.5, 77));
    CHECK(! (random_graph(10, 0.5, 77) == random_graph(10, 0.5, 78)));
    CHECK(random_graph(6, 0.0, 1) == Graph(6));

    auto m1 = random_interval_model(8, 3, 5);
    auto m2 = random_interval_model(8, 3, 5);
    CHECK(realize(m1) == realize(m2));
}

TEST_CASE("random interval models realize chordal graphs") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + int(rng() % 7);
        CHECK(is_chordal_small(realize(random_interval_model(n, 4, rng()))));
    }
}

TEST_CASE("random interval generator honours its load cap") {
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 20; ++trial) {
        int cap = 1 + int(rng() % 6);
        auto m = random_interval_model(20 + int(rng() % 30), cap, rng());
        CHECK(max_point_load(m) <= cap);
    }
}
