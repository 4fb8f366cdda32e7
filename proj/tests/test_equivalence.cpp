#include <boolw/equivalence.hpp>
#include <boolw/generators.hpp>
#include <boolw/oracle.hpp>

#include "test_util.hpp"

#include <doctest.h>

#include <set>

using namespace boolw;

namespace {
    // the relation of the definition, checked verbatim with exact counts
    bool equivalent_by_definition(const Graph & g, const VertexSet & a, int d, const VertexSet & x,
        const VertexSet & y) {
        bool ok = true;
        a.complement().for_each([&](int v) {
            int cx = g.adj[v].intersection_count(x);
            int cy = g.adj[v].intersection_count(y);
            if (! (cx == cy || (cx >= d && cy >= d)))
                ok = false;
        });
        return ok;
    }

    VertexSet subset_from_mask(const std::vector<int> & members, std::uint32_t mask, int n) {
        VertexSet s(n);
        for (std::size_t i = 0; i < members.size(); ++i)
            if (mask & (1U << i))
                s.set(members[i]);
        return s;
    }
}

TEST_CASE("d_of_set") {
    CHECK(d_of_set(FinCofinSet::naturals()) == 0);
    CHECK(d_of_set(FinCofinSet::finite({0})) == 1);
    CHECK(d_of_set(FinCofinSet::finite({1})) == 2);
    CHECK(d_of_set(FinCofinSet::naturals_except({0})) == 1);
    CHECK(d_of_set(FinCofinSet::finite({})) == 1); // empty set: always false
}

TEST_CASE("member_trunc") {
    FinCofinSet one = FinCofinSet::finite({1});
    CHECK(member_trunc(one, 1, 2));
    CHECK(! member_trunc(one, 2, 2));
    CHECK(! member_trunc(one, 0, 2));

    FinCofinSet pos = FinCofinSet::naturals_except({0});
    CHECK(member_trunc(pos, 1, 1));
    CHECK(! member_trunc(pos, 0, 1));

    CHECK(member_trunc(FinCofinSet::naturals(), 0, 0));

    FinCofinSet empty = FinCofinSet::finite({});
    CHECK(! member_trunc(empty, 0, 1));
    CHECK(! member_trunc(empty, 1, 1));

    CHECK_THROWS_AS(member_trunc(one, 1, 1), InputError); // d below d(mu)
}

TEST_CASE("set syntax round trip") {
    for (const char * text : {"N", "{0}", "{1,2,5}", "N\\{0}", "N\\{2,3}", "{}"}) {
        FinCofinSet s = FinCofinSet::parse(text);
        CHECK(FinCofinSet::parse(s.to_string()) == s);
    }
    CHECK(FinCofinSet::parse(" N \\ {0} ") == FinCofinSet::naturals_except({0}));
    CHECK_THROWS_AS(FinCofinSet::parse("{a}"), InputError);
    CHECK_THROWS_AS(FinCofinSet::parse("X"), InputError);
}

TEST_CASE("signature examples on the Hsu graph") {
    Graph hsu = hsu_graph(3, 3);
    VertexSet a = VertexSet::of(6, {0, 1, 2});

    CHECK(signature(hsu, a, 1, VertexSet(6)) == DSignature{0, 0, 0});
    // X = {v2}: witnesses u1,u2,u3 see counts 0,1,1
    CHECK(signature(hsu, a, 1, VertexSet::of(6, {1})) == DSignature{0, 1, 1});
    // d=2, X = {v1,v2}: counts 1,2,2
    CHECK(signature(hsu, a, 2, VertexSet::of(6, {0, 1})) == DSignature{1, 2, 2});
}

TEST_CASE("enumerate_classes examples") {
    Graph edgeless(5);
    CHECK(enumerate_classes(edgeless, VertexSet::of(5, {0, 1}), 1).size() == 1);
    CHECK(enumerate_classes(edgeless, VertexSet::of(5, {0, 1}), 3).size() == 1);

    Graph hsu = hsu_graph(3, 3);
    auto table = enumerate_classes(hsu, VertexSet::of(6, {0, 1, 2}), 1);
    REQUIRE(table.size() == 4);
    std::set<std::vector<int>> reps;
    for (int c = 0; c < table.size(); ++c) {
        CHECK(table.representative(c).count() <= 1);
        reps.insert(table.representative(c).members());
    }
    CHECK(reps == std::set<std::vector<int>>{{}, {0}, {1}, {2}});

    Graph m3 = graph_from_edges(6, {{0, 3}, {1, 4}, {2, 5}});
    CHECK(enumerate_classes(m3, VertexSet::of(6, {0, 1, 2}), 1).size() == 8);
}

TEST_CASE("class table cap") {
    Graph m = graph_from_edges(12, {{0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}});
    VertexSet a(12);
    for (int i = 0; i < 6; ++i)
        a.set(i);
    CHECK_THROWS_AS(enumerate_classes(m, a, 1, 5), BoundedResourceError);
}

TEST_CASE("class_of basics") {
    Graph hsu = hsu_graph(3, 3);
    auto table = enumerate_classes(hsu, VertexSet::of(6, {0, 1, 2}), 1);
    CHECK(table.class_of(VertexSet(6)) == 0);
    for (int c = 0; c < table.size(); ++c)
        CHECK(table.class_of(table.representative(c)) == c);
    // {v2,v3} unions to the row of v2
    CHECK(table.class_of(VertexSet::of(6, {1, 2})) == table.class_of(VertexSet::of(6, {1})));
}

TEST_CASE("equivalence soundness, exhaustive") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 13);
        Graph g = testutil::random_graph(n, 0.45, rng);
        VertexSet a = testutil::random_proper_subset(n, rng);
        auto members = a.members();
        if (members.size() > 12)
            continue;
        std::uint32_t total = 1U << members.size();
        for (int d = 1; d <= 3; ++d) {
            auto table = enumerate_classes(g, a, d);
            std::vector<int> cls(total);
            for (std::uint32_t mask = 0; mask < total; ++mask)
                cls[mask] = table.class_of(subset_from_mask(members, mask, n));
            // all pairs up to |A| = 9, sampled pairs beyond
            if (members.size() <= 9) {
                for (std::uint32_t x = 0; x < total; ++x)
                    for (std::uint32_t y = x; y < total; ++y) {
                        bool defn = equivalent_by_definition(g, a, d, subset_from_mask(members, x, n),
                            subset_from_mask(members, y, n));
                        CHECK((cls[x] == cls[y]) == defn);
                    }
            }
            else {
                for (int pair = 0; pair < 2000; ++pair) {
                    std::uint32_t x = rng() % total, y = rng() % total;
                    bool defn = equivalent_by_definition(g, a, d, subset_from_mask(members, x, n),
                        subset_from_mask(members, y, n));
                    CHECK((cls[x] == cls[y]) == defn);
                }
                // every subset is definition-equivalent to its stored representative
                for (int check = 0; check < 200; ++check) {
                    std::uint32_t x = rng() % total;
                    CHECK(equivalent_by_definition(g, a, d, subset_from_mask(members, x, n),
                        table.representative(cls[x])));
                }
            }
        }
    }
}

TEST_CASE("d=1 class count equals the union-closure count") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 2 + int(rng() % 13);
        Graph g = testutil::random_graph(n, 0.4, rng);
        VertexSet a = testutil::random_proper_subset(n, rng);
        CHECK(std::uint64_t(enumerate_classes(g, a, 1).size()) == cut_bool(g, a).classes);
    }
}

TEST_CASE("stored representatives have minimum cardinality") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 11);
        Graph g = testutil::random_graph(n, 0.45, rng);
        VertexSet a = testutil::random_proper_subset(n, rng);
        if (a.count() > 12)
            continue;
        for (int d : {1, 2}) {
            auto table = enumerate_classes(g, a, d);
            for (int c = 0; c < table.size(); ++c) {
                auto best = brute_min_representative(g, a, d, table.representative(c));
                CHECK(table.representative(c).count() == best.min_anywhere);
            }
        }
    }
}

TEST_CASE("class count grows monotonically in d") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 11);
        Graph g = testutil::random_graph(n, 0.5, rng);
        VertexSet a = testutil::random_proper_subset(n, rng);
        int prev = 1;
        for (int d = 1; d <= 4; ++d) {
            int count = enumerate_classes(g, a, d).size();
            CHECK(count >= prev);
            prev = count;
        }
    }
}
