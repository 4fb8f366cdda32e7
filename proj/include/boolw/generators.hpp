#pragma once

// Graph families used as lower-bound witnesses, their geometric
// realizations, and seeded random instance generators for fuzzing.
//
// A Hsu-graph on sides a, b joins v_i to u_j exactly when i <= j (indices
// 0-based here, 1-based in the usual definition; the adjacency is the
// same). Chains glue q pieces of p vertices each with Hsu-graphs between
// consecutive pieces; with stable pieces the result is a bipartite
// permutation graph, with clique pieces a unit interval graph.

#include <boolw/core.hpp>
#include <boolw/models.hpp>

#include <random>

namespace boolw {

inline Graph hsu_graph(int a, int b) {
    if (a < 1 || b < 1)
        throw InputError("hsu_graph needs a, b >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = i; j < b; ++j) {
            g.adj[i].set(a + j);
            g.adj[a + j].set(i);
        }
    return g;
}

enum class HsuKind {
    stable,
    clique,
    custom
};

struct HsuChainSpec {
    int p = 1;
    int q = 1;
    HsuKind kind = HsuKind::stable;
    // custom kind: the pieces and, per piece, the chosen p-subset S_i
    // (local vertex indices, ascending).
    std::vector<Graph> pieces;
    std::vector<std::vector<int>> s_sets;
};

inline Graph hsu_join_chain(const HsuChainSpec & spec) {
    if (spec.p < 1 || spec.q < 1)
        throw InputError("chain needs p, q >= 1");

    std::vector<Graph> pieces;
    std::vector<std::vector<int>> s_sets;
    if (spec.kind == HsuKind::custom) {
        if (int(spec.pieces.size()) != spec.q || int(spec.s_sets.size()) != spec.q)
            throw InputError("custom chain needs q pieces and q S-sets");
        pieces = spec.pieces;
        s_sets = spec.s_sets;
        for (int i = 0; i < spec.q; ++i) {
            if (int(s_sets[i].size()) != spec.p)
                throw InputError("S-set of wrong size");
            for (int v : s_sets[i])
                if (v < 0 || v >= pieces[i].n)
                    throw InputError("S-set member out of range");
        }
    }
    else {
        Graph piece = spec.kind == HsuKind::stable ? Graph(spec.p) : [&] {
            Graph k(spec.p);
            for (int u = 0; u < spec.p; ++u)
                for (int v = u + 1; v < spec.p; ++v) {
                    k.adj[u].set(v);
                    k.adj[v].set(u);
                }
            return k;
        }();
        std::vector<int> all(spec.p);
        for (int v = 0; v < spec.p; ++v)
            all[v] = v;
        pieces.assign(spec.q, piece);
        s_sets.assign(spec.q, all);
    }

    std::vector<int> offset(spec.q, 0);
    int n = 0;
    for (int i = 0; i < spec.q; ++i) {
        offset[i] = n;
        n += pieces[i].n;
    }
    Graph g(n);
    for (int i = 0; i < spec.q; ++i)
        for (int u = 0; u < pieces[i].n; ++u)
            pieces[i].adj[u].for_each([&](int v) {
                g.adj[offset[i] + u].set(offset[i] + v);
            });
    // lower piece index is the v-side of each junction Hsu-graph
    for (int i = 0; i + 1 < spec.q; ++i)
        for (int a = 0; a < spec.p; ++a)
            for (int b = a; b < spec.p; ++b) {
                int x = offset[i] + s_sets[i][a];
                int y = offset[i + 1] + s_sets[i + 1][b];
                g.adj[x].set(y);
                g.adj[y].set(x);
            }
    return g;
}

inline Graph hsu_stable_chain(int p, int q) {
    return hsu_join_chain({p, q, HsuKind::stable, {}, {}});
}

inline Graph hsu_clique_chain(int p, int q) {
    return hsu_join_chain({p, q, HsuKind::clique, {}, {}});
}

// Permutation diagram of the stable chain, identical vertex numbering.
// Pieces are drawn as p parallel segments; at each junction the two pieces'
// endpoint runs interleave on one of the two lines, within-piece positions
// descending with member index, the left piece shifted half a step right.
inline PermutationModel stable_chain_permutation_model(int p, int q) {
    if (p < 1 || q < 1)
        throw InputError("need p, q >= 1");
    PermutationModel m;
    m.lines.resize(p * q);
    std::int64_t stride = 4 * std::int64_t(p);
    for (int i = 0; i < q; ++i)
        for (int a = 0; a < p; ++a) {
            std::int64_t r = 2 * std::int64_t(p - 1 - a);
            std::int64_t top = (i % 2 == 0) ? (i / 2) * stride + r + 1 : ((i - 1) / 2) * stride + r;
            std::int64_t bottom = (i % 2 == 0) ? (i / 2) * stride + r : ((i + 1) / 2) * stride + r + 1;
            m.lines[i * p + a] = {top, bottom};
        }
    return m;
}

// Unit interval representation of the clique chain, identical vertex
// numbering: every interval has length 2p+1, members of a piece step left
// by 2 with ascending index, consecutive pieces shifted by 2p ticks.
inline KTrapezoidModel clique_chain_interval_model(int p, int q) {
    if (p < 1 || q < 1)
        throw InputError("need p, q >= 1");
    KTrapezoidModel m;
    m.k = 1;
    std::int64_t unit = 2 * std::int64_t(p) + 1;
    for (int i = 0; i < q; ++i)
        for (int a = 0; a < p; ++a) {
            std::int64_t l = std::int64_t(i) * 2 * p + 2 * std::int64_t(p - 1 - a);
            m.objects.push_back({{l, l + unit}});
        }
    return m;
}

// --- random instances -------------------------------------------------------

inline Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 0)
        throw InputError("need n >= 0");
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(edge_prob);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
    return g;
}

// Interval model whose point load (hence clique number) never exceeds
// max_load: starts march right two ticks per vertex, lengths are odd and
// below 2*max_load.
inline KTrapezoidModel random_interval_model(int n, int max_load, std::uint64_t seed) {
    if (n < 1 || max_load < 1)
        throw InputError("need n >= 1 and max_load >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> len(0, max_load - 1);
    KTrapezoidModel m;
    m.k = 1;
    for (int v = 0; v < n; ++v) {
        std::int64_t l = 2 * std::int64_t(v);
        m.objects.push_back({{l, l + 2 * len(rng) + 1}});
    }
    return canonical_form(m);
}

inline PermutationModel random_permutation_model(int n, std::uint64_t seed) {
    if (n < 1)
        throw InputError("need n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> tops(n);
    for (int v = 0; v < n; ++v)
        tops[v] = v;
    std::shuffle(tops.begin(), tops.end(), rng);
    PermutationModel m;
    for (int v = 0; v < n; ++v)
        m.lines.emplace_back(tops[v], v);
    return m;
}

inline KTrapezoidModel random_ktrapezoid_model(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1)
        throw InputError("need n >= 1 and k >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(0, 4 * std::int64_t(n) - 1);
    KTrapezoidModel m;
    m.k = k;
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<std::int64_t, std::int64_t>> obj;
        for (int i = 0; i < k; ++i) {
            std::int64_t a = coord(rng), b = coord(rng);
            obj.emplace_back(std::min(a, b), std::max(a, b));
        }
        m.objects.push_back(std::move(obj));
    }
    return canonical_form(m);
}

// Arcs jitter mildly from circle to circle so the clockwise sweep between
// circles stays the intended short way around.
inline CircularKTrapezoidModel random_circular_ktrapezoid_model(int n, int k, std::uint64_t seed) {
    if (n < 1 || k < 1)
        throw InputError("need n >= 1 and k >= 1");
    std::mt19937_64 rng(seed);
    CircularKTrapezoidModel m;
    m.k = k;
    m.ticks = 8 * std::int64_t(n);
    std::uniform_int_distribution<std::int64_t> start(0, m.ticks - 1);
    std::uniform_int_distribution<std::int64_t> width(1, std::max<std::int64_t>(1, m.ticks / 3));
    std::uniform_int_distribution<std::int64_t> jitter(-m.ticks / 8, m.ticks / 8);
    auto mod = [&](std::int64_t x) { return (x % m.ticks + m.ticks) % m.ticks; };
    for (int v = 0; v < n; ++v) {
        std::vector<std::pair<std::int64_t, std::int64_t>> obj;
        std::int64_t s = start(rng);
        for (int i = 0; i < k; ++i) {
            std::int64_t w = width(rng);
            obj.emplace_back(mod(s), mod(s + w));
            s = mod(s + jitter(rng));
        }
        m.arcs.push_back(std::move(obj));
    }
    return canonical_form(m);
}

// Chords take the shorter way around between their endpoints, which keeps
// every pair crossing at most once.
inline CircularPermutationModel random_circular_permutation_model(int n, std::uint64_t seed) {
    if (n < 1)
        throw InputError("need n >= 1");
    std::mt19937_64 rng(seed);
    CircularPermutationModel m;
    m.ticks = 2 * std::int64_t(n);
    std::vector<std::int64_t> outer(n), inner(n);
    for (int v = 0; v < n; ++v)
        outer[v] = inner[v] = 2 * v;
    std::shuffle(outer.begin(), outer.end(), rng);
    std::shuffle(inner.begin(), inner.end(), rng);
    for (int v = 0; v < n; ++v) {
        std::int64_t cw = ((outer[v] - inner[v]) % m.ticks + m.ticks) % m.ticks;
        m.chords.push_back({outer[v], inner[v], cw <= m.ticks / 2});
    }
    return m;
}

inline ConvexModel random_convex_model(int nx, int ny, std::uint64_t seed) {
    if (nx < 1 || ny < 0)
        throw InputError("need nx >= 1 and ny >= 0");
    std::mt19937_64 rng(seed);
    int n = nx + ny;
    ConvexModel m;
    std::vector<int> ids(n);
    for (int v = 0; v < n; ++v)
        ids[v] = v;
    std::shuffle(ids.begin(), ids.end(), rng);
    m.structure.x_order.assign(ids.begin(), ids.begin() + nx);
    std::vector<std::pair<int, int>> edges;
    std::uniform_int_distribution<int> pos(0, nx - 1);
    for (int j = 0; j < ny; ++j) {
        int y = ids[nx + j];
        int a = pos(rng), b = pos(rng);
        if (rng() % 4 == 0)
            continue; // occasional isolated Y vertex
        for (int i = std::min(a, b); i <= std::max(a, b); ++i)
            edges.emplace_back(m.structure.x_order[i], y);
    }
    m.graph = graph_from_edges(n, edges);
    return m;
}

} // namespace boolw
