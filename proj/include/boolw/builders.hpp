#pragma once

// Vertex orderings that certify low boolean-width per graph class. Each
// builder returns a permutation of the vertices; the caterpillar
// decomposition over that order realizes the class bound. All sort keys
// break ties by vertex index.

#include <boolw/core.hpp>
#include <boolw/models.hpp>

#include <numeric>

namespace boolw {

using VertexOrder = std::vector<int>;

namespace detail {
    template <typename Key>
    VertexOrder order_by_key(int n, Key key) {
        VertexOrder order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int u, int v) { return key(u) < key(v); });
        return order;
    }
}

// Interval (k=1): ascending left endpoint. k-trapezoid (k>=2): ascending
// rightmost corner, the maximum right endpoint over the k lines.
inline VertexOrder order_linear_model(const KTrapezoidModel & model) {
    validate(model);
    auto m = canonical_form(model);
    return detail::order_by_key(m.size(), [&](int v) {
        if (m.k == 1)
            return m.objects[v][0].first;
        std::int64_t corner = m.objects[v][0].second;
        for (int i = 1; i < m.k; ++i)
            corner = std::max(corner, m.objects[v][i].second);
        return corner;
    });
}

// Permutation diagram: ascending top endpoint.
inline VertexOrder order_linear_model(const PermutationModel & m) {
    validate(m);
    return detail::order_by_key(m.size(), [&](int v) { return m.lines[v].first; });
}

// Objects containing the tick p on the innermost circle come first
// (ascending index), the rest follow by clockwise distance from p to their
// nearest endpoint over all circles.
inline VertexOrder order_circular_model(const CircularKTrapezoidModel & model, std::int64_t p) {
    validate(model);
    const std::int64_t M = model.ticks;
    auto mod = [&](std::int64_t x) { return (x % M + M) % M; };
    auto contains_p = [&](int v) {
        auto [s, e] = model.arcs[v][model.k - 1];
        return mod(p - s) <= mod(e - s);
    };
    auto distance = [&](int v) {
        std::int64_t best = M;
        for (const auto & [s, e] : model.arcs[v])
            best = std::min({best, mod(s - p), mod(e - p)});
        return best;
    };
    return detail::order_by_key(model.size(), [&](int v) {
        return contains_p(v) ? std::make_pair(std::int64_t(0), std::int64_t(0))
                             : std::make_pair(std::int64_t(1), distance(v));
    });
}

// Ascending clockwise inner endpoint starting from tick p.
inline VertexOrder order_circular_model(const CircularPermutationModel & m, std::int64_t p) {
    validate(m);
    const std::int64_t M = m.ticks;
    return detail::order_by_key(m.size(), [&](int v) {
        return ((m.chords[v].inner - p) % M + M) % M;
    });
}

// The X order with every y inserted immediately after its last neighbour;
// isolated y vertices lead, ties among y sharing a last neighbour resolve
// by ascending index.
inline VertexOrder order_convex(const Graph & g, const ConvexStructure & s) {
    int witness = -1;
    if (! validate_convex(g, s, &witness))
        throw InputError("convex structure violated at vertex " + std::to_string(witness));
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < int(s.x_order.size()); ++i)
        pos[s.x_order[i]] = i;

    std::vector<std::vector<int>> after(s.x_order.size());
    VertexOrder order;
    for (int y = 0; y < g.n; ++y) {
        if (pos[y] >= 0)
            continue;
        int last = -1;
        g.adj[y].for_each([&](int x) { last = std::max(last, pos[x]); });
        if (last < 0)
            order.push_back(y);
        else
            after[last].push_back(y);
    }
    for (std::size_t i = 0; i < s.x_order.size(); ++i) {
        order.push_back(s.x_order[i]);
        for (int y : after[i])
            order.push_back(y);
    }
    return order;
}

// --- Dilworth chain machinery -----------------------------------------------

struct ChainCover {
    // Chains partition the vertices; within a chain x before y implies
    // N(x) ⊆ N[y].
    std::vector<std::vector<int>> chains;
};

namespace detail {
    // vicinal preorder x ≼ y  ⟺  N(x) ⊆ N[y]
    inline bool vicinal_leq(const Graph & g, int x, int y) {
        VertexSet closed = g.adj[y];
        closed.set(y);
        return g.adj[x].is_subset_of(closed);
    }

    inline bool kuhn_augment(int u, const std::vector<std::vector<int>> & adj, std::vector<int> & match_left,
        std::vector<int> & match_right, std::vector<char> & visited) {
        for (int v : adj[u]) {
            if (visited[v])
                continue;
            visited[v] = 1;
            if (match_right[v] < 0 || kuhn_augment(match_right[v], adj, match_left, match_right, visited)) {
                match_left[u] = v;
                match_right[v] = u;
                return true;
            }
        }
        return false;
    }
}

// Minimum chain cover of the vicinal preorder; its size is the Dilworth
// number. Mutually comparable vertices collapse into blocks, the block
// partial order is covered by paths via maximum bipartite matching on its
// comparability relation (which is already transitively closed), and blocks
// expand back in ascending index order.
inline ChainCover dilworth_chain_cover(const Graph & g) {
    int n = g.n;
    std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            leq[x][y] = detail::vicinal_leq(g, x, y);

    // blocks of mutual comparability, ordered by smallest member
    std::vector<int> block_of(n, -1);
    std::vector<std::vector<int>> blocks;
    for (int v = 0; v < n; ++v) {
        if (block_of[v] >= 0)
            continue;
        int b = int(blocks.size());
        blocks.emplace_back();
        for (int w = v; w < n; ++w)
            if (block_of[w] < 0 && leq[v][w] && leq[w][v]) {
                block_of[w] = b;
                blocks[b].push_back(w);
            }
    }

    int nb = int(blocks.size());
    std::vector<std::vector<int>> less(nb);
    for (int a = 0; a < nb; ++a)
        for (int b = 0; b < nb; ++b)
            if (a != b && leq[blocks[a][0]][blocks[b][0]] && ! leq[blocks[b][0]][blocks[a][0]])
                less[a].push_back(b);

    std::vector<int> match_left(nb, -1), match_right(nb, -1);
    for (int a = 0; a < nb; ++a) {
        std::vector<char> visited(nb, 0);
        detail::kuhn_augment(a, less, match_left, match_right, visited);
    }

    ChainCover cover;
    for (int a = 0; a < nb; ++a) {
        if (match_right[a] >= 0)
            continue; // a continues some chain
        std::vector<int> chain;
        for (int b = a; b >= 0; b = match_left[b])
            for (int v : blocks[b])
                chain.push_back(v);
        cover.chains.push_back(std::move(chain));
    }
    std::sort(cover.chains.begin(), cover.chains.end(),
        [](const std::vector<int> & c, const std::vector<int> & d) { return c[0] < d[0]; });
    return cover;
}

// Chains concatenated, each in ascending ≼ order.
inline VertexOrder order_dilworth(const Graph & g) {
    VertexOrder order;
    for (const auto & chain : dilworth_chain_cover(g).chains)
        order.insert(order.end(), chain.begin(), chain.end());
    return order;
}

struct DegeneracyOrder {
    VertexOrder order;
    int k = 0; // degeneracy of the complement
};

// Elimination order induced by the degeneracy of the complement graph:
// repeatedly remove a minimum-degree vertex of complement(G), smallest
// index first.
inline DegeneracyOrder order_co_degenerate(const Graph & g) {
    Graph cg = complement(g);
    DegeneracyOrder out;
    VertexSet alive = VertexSet::full(g.n);
    for (int step = 0; step < g.n; ++step) {
        int best = -1, best_deg = g.n;
        alive.for_each([&](int v) {
            int deg = cg.adj[v].intersection_count(alive);
            if (deg < best_deg) {
                best_deg = deg;
                best = v;
            }
        });
        out.order.push_back(best);
        out.k = std::max(out.k, best_deg);
        alive.reset(best);
    }
    return out;
}

} // namespace boolw
