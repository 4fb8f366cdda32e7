#pragma once

// Bottom-up dynamic programming over a rooted decomposition for (sigma,rho)
// vertex subset problems and degree-constraint-matrix (D_q) vertex
// partitioning problems.
//
// At a node w with vertex set A below it, table entries are indexed by the
// d-neighbourhood class of the chosen set (or class tuple, for partitions)
// and by the class of the outer context: entry [c, c'] holds the best
// weight of a set S ⊆ A in class c such that every v in A satisfies its
// degree constraint when the count is taken against S plus the
// representative of outer class c'. Combining two children is pure table
// arithmetic: class representatives act as proxies for whole classes, which
// is exactly the d-neighbour equivalence substitution property; the oracle
// suite enforces it.

#include <boolw/decomposition.hpp>
#include <boolw/equivalence.hpp>

#include <limits>
#include <optional>
#include <variant>

namespace boolw {

enum class OptMode {
    minimize,
    maximize,
    exists
};

struct SigmaRhoProblem {
    FinCofinSet sigma;
    FinCofinSet rho;
    WeightVector weights; // empty means unit weights
    OptMode mode = OptMode::minimize;

    int d() const { return std::max({d_of_set(sigma), d_of_set(rho), 1}); }
};

struct DqProblem {
    int q = 1;
    std::vector<std::vector<FinCofinSet>> constraints; // q x q
    WeightVector weights; // objective counts part 1 (index 0); empty = unit
    OptMode mode = OptMode::exists;

    int d() const {
        int d = 1;
        for (const auto & row : constraints)
            for (const auto & mu : row)
                d = std::max(d, d_of_set(mu));
        return d;
    }
};

struct SigmaRhoSolution {
    std::int64_t value = 0;
    VertexSet chosen;
};

struct DqSolution {
    std::int64_t value = 0;
    std::vector<VertexSet> parts;
};

struct SolveStats {
    std::uint64_t max_classes = 0;       // largest class table over all cuts
    std::uint64_t max_table_entries = 0; // largest per-node DP table
};

// Direct untruncated feasibility checks, used on every solver return and by
// the test oracles.

inline bool check_sigma_rho_witness(const Graph & g, const SigmaRhoProblem & prob, const VertexSet & s,
    std::int64_t * value = nullptr) {
    for (int v = 0; v < g.n; ++v) {
        int cnt = g.adj[v].intersection_count(s);
        if (! (s.test(v) ? prob.sigma : prob.rho).contains(cnt))
            return false;
    }
    if (value) {
        std::int64_t total = 0;
        s.for_each([&](int v) { total += prob.weights.empty() ? 1 : prob.weights[v]; });
        *value = total;
    }
    return true;
}

inline bool check_dq_witness(const Graph & g, const DqProblem & prob, const std::vector<VertexSet> & parts,
    std::int64_t * value = nullptr) {
    if (int(parts.size()) != prob.q)
        return false;
    VertexSet all(g.n);
    int total = 0;
    for (const auto & p : parts) {
        all |= p;
        total += p.count();
    }
    if (total != g.n || all.count() != g.n)
        return false;
    for (int i = 0; i < prob.q; ++i) {
        bool ok = true;
        parts[i].for_each([&](int v) {
            for (int j = 0; j < prob.q && ok; ++j)
                if (! prob.constraints[i][j].contains(g.adj[v].intersection_count(parts[j])))
                    ok = false;
        });
        if (! ok)
            return false;
    }
    if (value) {
        std::int64_t w = 0;
        parts[0].for_each([&](int v) { w += prob.weights.empty() ? 1 : prob.weights[v]; });
        *value = w;
    }
    return true;
}

namespace detail {

    inline constexpr std::int64_t absent_value = std::numeric_limits<std::int64_t>::min();

    inline bool better(OptMode mode, std::int64_t a, std::int64_t b) {
        return mode == OptMode::maximize ? a > b : a < b;
    }

    // Per-node class tables shared by both solvers. Tables are built when a
    // node is first touched and reused during witness reconstruction.
    struct SolveContext {
        const Graph & g;
        RootedDecomposition rooted;
        int d;
        std::uint64_t cap;
        std::vector<ClassTable> inner, outer;
        std::vector<std::vector<std::vector<int>>> inner_members, outer_members; // rep member lists
        SolveStats stats;

        SolveContext(const Graph & graph, const DecompositionTree & t, int d_, std::uint64_t cap_) :
            g(graph),
            rooted(root_at_edge(t, 0)),
            d(d_),
            cap(cap_)
        {
            int m = int(rooted.nodes.size());
            inner.resize(m);
            outer.resize(m);
            inner_members.resize(m);
            outer_members.resize(m);
            for (int w = 0; w < m; ++w) {
                inner[w] = ClassTable(g, rooted.nodes[w].below, d, cap);
                outer[w] = ClassTable(g, rooted.nodes[w].below.complement(), d, cap);
                for (const auto * table : {&inner[w], &outer[w]}) {
                    auto & members = table == &inner[w] ? inner_members[w] : outer_members[w];
                    members.resize(table->size());
                    for (int c = 0; c < table->size(); ++c)
                        members[c] = table->representative(c).members();
                    stats.max_classes = std::max(stats.max_classes, std::uint64_t(table->size()));
                }
            }
        }

        // class in `table` of rep(cls of from_a) ∪ rep(cls of from_b)
        int compose(const ClassTable & table, const std::vector<int> & ma, const std::vector<int> & mb) const {
            int c = table.class_of_union(0, ma);
            return table.class_of_union(c, mb);
        }
    };

} // namespace detail

inline std::optional<SigmaRhoSolution> solve_sigma_rho(const Graph & g, const DecompositionTree & t,
    const SigmaRhoProblem & prob, SolveStats * stats = nullptr, std::uint64_t cap = default_class_cap) {
    if (! prob.weights.empty() && int(prob.weights.size()) != g.n)
        throw InputError("weight vector length does not match graph");
    auto weight = [&](int v) { return prob.weights.empty() ? 1 : prob.weights[v]; };

    if (g.n == 1) {
        // No tree edge to root at; check both candidate sets directly.
        std::optional<SigmaRhoSolution> best;
        for (bool in : {false, true}) {
            VertexSet s(1);
            if (in)
                s.set(0);
            std::int64_t value;
            if (check_sigma_rho_witness(g, prob, s, &value) &&
                (! best || detail::better(prob.mode, value, best->value)))
                best = SigmaRhoSolution{value, s};
        }
        return best;
    }

    t.validate();
    if (t.n_vertices != g.n)
        throw InputError("tree does not match graph");
    detail::SolveContext ctx(g, t, prob.d(), cap);
    const auto & rooted = ctx.rooted;
    int d = ctx.d;

    struct NodeTable {
        int ci = 0, co = 0;
        std::vector<std::int64_t> val;          // ci * co, absent_value when empty
        std::vector<std::pair<int, int>> back;  // internal: (ca, cb); leaf: (in-flag, 0)
        std::int64_t & at(int c, int o) { return val[std::size_t(c) * co + o]; }
        std::pair<int, int> & bk(int c, int o) { return back[std::size_t(c) * co + o]; }
    };
    std::vector<NodeTable> tab(rooted.nodes.size());

    auto upd = [&](NodeTable & nt, int c, int o, std::int64_t v, std::pair<int, int> b) {
        auto & slot = nt.at(c, o);
        if (slot == detail::absent_value || detail::better(prob.mode, v, slot)) {
            slot = v;
            nt.bk(c, o) = b;
        }
    };

    for (int w : rooted.postorder()) {
        auto & nt = tab[w];
        nt.ci = ctx.inner[w].size();
        nt.co = ctx.outer[w].size();
        nt.val.assign(std::size_t(nt.ci) * nt.co, detail::absent_value);
        nt.back.resize(std::size_t(nt.ci) * nt.co);

        if (rooted.is_leaf(w)) {
            int v = rooted.nodes[w].leaf_vertex;
            int cls_full = ctx.inner[w].class_of(rooted.nodes[w].below);
            for (int o = 0; o < nt.co; ++o) {
                int tv = std::min(d, g.adj[v].intersection_count(ctx.outer[w].representative(o)));
                if (member_trunc(prob.rho, tv, d))
                    upd(nt, 0, o, 0, {0, 0});
                if (member_trunc(prob.sigma, tv, d))
                    upd(nt, cls_full, o, weight(v), {1, 0});
            }
            continue;
        }

        int a = rooted.nodes[w].left, b = rooted.nodes[w].right;
        int ca_n = ctx.inner[a].size(), cb_n = ctx.inner[b].size();

        // class-level compose maps; children values are then pure lookups
        std::vector<int> m1(std::size_t(ca_n) * cb_n), m2(std::size_t(cb_n) * nt.co),
            m3(std::size_t(ca_n) * nt.co);
        {
            std::vector<int> pre_a(ca_n), pre_b(cb_n);
            for (int c = 0; c < ca_n; ++c)
                pre_a[c] = ctx.inner[w].class_of_union(0, ctx.inner_members[a][c]);
            for (int c = 0; c < cb_n; ++c)
                for (int e = 0; e < ca_n; ++e)
                    m1[std::size_t(e) * cb_n + c] =
                        ctx.inner[w].class_of_union(pre_a[e], ctx.inner_members[b][c]);
            for (int c = 0; c < cb_n; ++c)
                pre_b[c] = ctx.outer[a].class_of_union(0, ctx.inner_members[b][c]);
            for (int c = 0; c < cb_n; ++c)
                for (int o = 0; o < nt.co; ++o)
                    m2[std::size_t(c) * nt.co + o] =
                        ctx.outer[a].class_of_union(pre_b[c], ctx.outer_members[w][o]);
            for (int c = 0; c < ca_n; ++c)
                pre_a[c] = ctx.outer[b].class_of_union(0, ctx.inner_members[a][c]);
            for (int c = 0; c < ca_n; ++c)
                for (int o = 0; o < nt.co; ++o)
                    m3[std::size_t(c) * nt.co + o] =
                        ctx.outer[b].class_of_union(pre_a[c], ctx.outer_members[w][o]);
        }

        for (int o = 0; o < nt.co; ++o)
            for (int ca = 0; ca < ca_n; ++ca) {
                int key_b = m3[std::size_t(ca) * nt.co + o];
                for (int cb = 0; cb < cb_n; ++cb) {
                    std::int64_t va = tab[a].at(ca, m2[std::size_t(cb) * nt.co + o]);
                    if (va == detail::absent_value)
                        continue;
                    std::int64_t vb = tab[b].at(cb, key_b);
                    if (vb == detail::absent_value)
                        continue;
                    upd(nt, m1[std::size_t(ca) * cb_n + cb], o, va + vb, {ca, cb});
                }
            }
        // children can be large; values are no longer needed once combined,
        // but witness reconstruction walks back pointers, so keep them.
    }

    if (stats) {
        *stats = ctx.stats;
        for (const auto & nt : tab) {
            std::uint64_t entries = 0;
            for (auto v : nt.val)
                entries += v != detail::absent_value;
            stats->max_table_entries = std::max(stats->max_table_entries, entries);
        }
    }

    auto & root_tab = tab[rooted.root];
    if (root_tab.at(0, 0) == detail::absent_value)
        return std::nullopt;

    SigmaRhoSolution sol;
    sol.value = root_tab.at(0, 0);
    sol.chosen = VertexSet(g.n);
    auto descend = [&](auto && self, int w, int c, int o) -> void {
        if (rooted.is_leaf(w)) {
            if (tab[w].bk(c, o).first)
                sol.chosen.set(rooted.nodes[w].leaf_vertex);
            return;
        }
        auto [ca, cb] = tab[w].bk(c, o);
        int a = rooted.nodes[w].left, b = rooted.nodes[w].right;
        int oa = ctx.outer[a].class_of_union(
            ctx.outer[a].class_of_union(0, ctx.inner_members[b][cb]), ctx.outer_members[w][o]);
        int ob = ctx.outer[b].class_of_union(
            ctx.outer[b].class_of_union(0, ctx.inner_members[a][ca]), ctx.outer_members[w][o]);
        self(self, a, ca, oa);
        self(self, b, cb, ob);
    };
    descend(descend, rooted.root, 0, 0);

    std::int64_t check_value = 0;
    if (! check_sigma_rho_witness(g, prob, sol.chosen, &check_value) || check_value != sol.value)
        throw InternalError("solver witness failed verification");
    return sol;
}

// --- D_q vertex partitioning -------------------------------------------------

namespace detail {

    using ClassTuple = std::vector<std::uint16_t>;

    struct ClassTupleHash {
        std::size_t operator()(const ClassTuple & t) const {
            std::uint64_t h = 1469598103934665603ULL;
            for (auto x : t) {
                h ^= x;
                h *= 1099511628211ULL;
            }
            return std::size_t(h);
        }
    };

    struct TupleSet {
        std::vector<ClassTuple> list;
        std::unordered_map<ClassTuple, int, ClassTupleHash> id;

        int add(const ClassTuple & t) {
            auto [it, fresh] = id.emplace(t, int(list.size()));
            if (fresh)
                list.push_back(t);
            return it->second;
        }

        int find(const ClassTuple & t) const {
            auto it = id.find(t);
            if (it == id.end())
                throw InternalError("composed tuple missing from reachable set");
            return it->second;
        }

        int size() const { return int(list.size()); }
    };

} // namespace detail

inline std::optional<DqSolution> solve_dq(const Graph & g, const DecompositionTree & t, const DqProblem & prob,
    SolveStats * stats = nullptr, std::uint64_t cap = default_class_cap) {
    if (prob.q < 1 || int(prob.constraints.size()) != prob.q)
        throw InputError("constraint matrix must be q x q");
    for (const auto & row : prob.constraints)
        if (int(row.size()) != prob.q)
            throw InputError("constraint matrix must be q x q");
    if (! prob.weights.empty() && int(prob.weights.size()) != g.n)
        throw InputError("weight vector length does not match graph");
    auto weight = [&](int v) { return prob.weights.empty() ? 1 : prob.weights[v]; };
    const int q = prob.q;

    if (g.n == 1) {
        std::optional<DqSolution> best;
        for (int i = 0; i < q; ++i) {
            std::vector<VertexSet> parts(q, VertexSet(1));
            parts[i].set(0);
            std::int64_t value;
            if (check_dq_witness(g, prob, parts, &value) &&
                (! best || detail::better(prob.mode, value, best->value)))
                best = DqSolution{value, parts};
        }
        return best;
    }

    t.validate();
    if (t.n_vertices != g.n)
        throw InputError("tree does not match graph");
    detail::SolveContext ctx(g, t, prob.d(), cap);
    const auto & rooted = ctx.rooted;
    const int d = ctx.d;
    const int m = int(rooted.nodes.size());

    // class-level compose maps per internal node
    std::vector<std::vector<int>> m1(m), m2(m), m3(m);
    for (int w = 0; w < m; ++w) {
        if (rooted.is_leaf(w))
            continue;
        int a = rooted.nodes[w].left, b = rooted.nodes[w].right;
        int ca_n = ctx.inner[a].size(), cb_n = ctx.inner[b].size(), co_n = ctx.outer[w].size();
        m1[w].resize(std::size_t(ca_n) * cb_n);
        m2[w].resize(std::size_t(cb_n) * co_n);
        m3[w].resize(std::size_t(ca_n) * co_n);
        std::vector<int> pre(std::max(ca_n, cb_n));
        for (int c = 0; c < ca_n; ++c)
            pre[c] = ctx.inner[w].class_of_union(0, ctx.inner_members[a][c]);
        for (int c = 0; c < ca_n; ++c)
            for (int e = 0; e < cb_n; ++e)
                m1[w][std::size_t(c) * cb_n + e] = ctx.inner[w].class_of_union(pre[c], ctx.inner_members[b][e]);
        for (int c = 0; c < cb_n; ++c)
            pre[c] = ctx.outer[a].class_of_union(0, ctx.inner_members[b][c]);
        for (int c = 0; c < cb_n; ++c)
            for (int o = 0; o < co_n; ++o)
                m2[w][std::size_t(c) * co_n + o] = ctx.outer[a].class_of_union(pre[c], ctx.outer_members[w][o]);
        for (int c = 0; c < ca_n; ++c)
            pre[c] = ctx.outer[b].class_of_union(0, ctx.inner_members[a][c]);
        for (int c = 0; c < ca_n; ++c)
            for (int o = 0; o < co_n; ++o)
                m3[w][std::size_t(c) * co_n + o] = ctx.outer[b].class_of_union(pre[c], ctx.outer_members[w][o]);
    }

    // pass 1: reachable inner tuples, bottom-up
    std::vector<detail::TupleSet> inner_tuples(m);
    auto post = rooted.postorder();
    for (int w : post) {
        if (rooted.is_leaf(w)) {
            int cls_full = ctx.inner[w].class_of(rooted.nodes[w].below);
            for (int i = 0; i < q; ++i) {
                detail::ClassTuple tup(q, 0);
                tup[i] = std::uint16_t(cls_full);
                inner_tuples[w].add(tup);
            }
            continue;
        }
        int a = rooted.nodes[w].left, b = rooted.nodes[w].right;
        int cb_n = ctx.inner[b].size();
        detail::ClassTuple tup(q);
        for (const auto & ta : inner_tuples[a].list)
            for (const auto & tb : inner_tuples[b].list) {
                for (int j = 0; j < q; ++j)
                    tup[j] = std::uint16_t(m1[w][std::size_t(ta[j]) * cb_n + tb[j]]);
                inner_tuples[w].add(tup);
            }
    }

    // pass 2: reachable outer tuples, top-down
    std::vector<detail::TupleSet> outer_tuples(m);
    outer_tuples[rooted.root].add(detail::ClassTuple(q, 0));
    for (auto it = post.rbegin(); it != post.rend(); ++it) {
        int w = *it;
        if (rooted.is_leaf(w))
            continue;
        int a = rooted.nodes[w].left, b = rooted.nodes[w].right;
        int co_n = ctx.outer[w].size();
        detail::ClassTuple tup(q);
        for (const auto & to : outer_tuples[w].list) {
            for (const auto & tb : inner_tuples[b].list) {
                for (int j = 0; j < q; ++j)
                    tup[j] = std::uint16_t(m2[w][std::size_t(tb[j]) * co_n + to[j]]);
                outer_tuples[a].add(tup);
            }
            for (const auto & ta : inner_tuples[a].list) {
                for (int j = 0; j < q; ++j)
                    tup[j] = std::uint16_t(m3[w][std::size_t(ta[j]) * co_n + to[j]]);
                outer_tuples[b].add(tup);
            }
        }
    }

    // pass 3: the DP itself
    struct NodeTable {
        int ci = 0, co = 0;
        std::vector<std::int64_t> val;
        std::vector<std::pair<int, int>> back; // internal: (ta, tb) ids; leaf: (part, 0)
        std::int64_t & at(int c, int o) { return val[std::size_t(c) * co + o]; }
        std::pair<int, int> & bk(int c, int o) { return back[std::size_t(c) * co + o]; }
    };
    std::vector<NodeTable> tab(m);
    auto upd = [&](NodeTable & nt, int c, int o, std::int64_t v, std::pair<int, int> b) {
        auto & slot = nt.at(c, o);
        if (slot == detail::absent_value || detail::better(prob.mode, v, slot)) {
            slot = v;
            nt.bk(c, o) = b;
        }
    };

    for (int w : post) {
        auto & nt = tab[w];
        nt.ci = inner_tuples[w].size();
        nt.co = outer_tuples[w].size();
        nt.val.assign(std::size_t(nt.ci) * nt.co, detail::absent_value);
        nt.back.resize(std::size_t(nt.ci) * nt.co);

        if (rooted.is_leaf(w)) {
            int v = rooted.nodes[w].leaf_vertex;
            int cls_full = ctx.inner[w].class_of(rooted.nodes[w].below);
            for (int o = 0; o < nt.co; ++o) {
                const auto & to = outer_tuples[w].list[o];
                for (int i = 0; i < q; ++i) {
                    bool ok = true;
                    for (int j = 0; j < q && ok; ++j) {
                        int tv = std::min(d,
                            g.adj[v].intersection_count(ctx.outer[w].representative(to[j])));
                        ok = member_trunc(prob.constraints[i][j], tv, d);
                    }
                    if (! ok)
                        continue;
                    detail::ClassTuple tup(q, 0);
                    tup[i] = std::uint16_t(cls_full);
                    upd(nt, inner_tuples[w].find(tup), o, i == 0 ? weight(v) : 0, {i, 0});
                }
            }
            continue;
        }

        int a = rooted.nodes[w].left, b = rooted.nodes[w].right;
        int ta_n = inner_tuples[a].size(), tb_n = inner_tuples[b].size();
        int cb_n = ctx.inner[b].size(), co_n = ctx.outer[w].size();

        // tuple-level compose tables
        std::vector<int> key_a(std::size_t(tb_n) * nt.co), key_b(std::size_t(ta_n) * nt.co),
            key_w(std::size_t(ta_n) * tb_n);
        detail::ClassTuple tup(q);
        for (int tb = 0; tb < tb_n; ++tb)
            for (int o = 0; o < nt.co; ++o) {
                for (int j = 0; j < q; ++j)
                    tup[j] = std::uint16_t(
                        m2[w][std::size_t(inner_tuples[b].list[tb][j]) * co_n + outer_tuples[w].list[o][j]]);
                key_a[std::size_t(tb) * nt.co + o] = outer_tuples[a].find(tup);
            }
        for (int ta = 0; ta < ta_n; ++ta)
            for (int o = 0; o < nt.co; ++o) {
                for (int j = 0; j < q; ++j)
                    tup[j] = std::uint16_t(
                        m3[w][std::size_t(inner_tuples[a].list[ta][j]) * co_n + outer_tuples[w].list[o][j]]);
                key_b[std::size_t(ta) * nt.co + o] = outer_tuples[b].find(tup);
            }
        for (int ta = 0; ta < ta_n; ++ta)
            for (int tb = 0; tb < tb_n; ++tb) {
                for (int j = 0; j < q; ++j)
                    tup[j] = std::uint16_t(
                        m1[w][std::size_t(inner_tuples[a].list[ta][j]) * cb_n + inner_tuples[b].list[tb][j]]);
                key_w[std::size_t(ta) * tb_n + tb] = inner_tuples[w].find(tup);
            }

        for (int o = 0; o < nt.co; ++o)
            for (int ta = 0; ta < ta_n; ++ta) {
                int kb = key_b[std::size_t(ta) * nt.co + o];
                for (int tb = 0; tb < tb_n; ++tb) {
                    std::int64_t va = tab[a].at(ta, key_a[std::size_t(tb) * nt.co + o]);
                    if (va == detail::absent_value)
                        continue;
                    std::int64_t vb = tab[b].at(tb, kb);
                    if (vb == detail::absent_value)
                        continue;
                    upd(nt, key_w[std::size_t(ta) * tb_n + tb], o, va + vb, {ta, tb});
                }
            }
    }

    if (stats) {
        *stats = ctx.stats;
        for (const auto & nt : tab) {
            std::uint64_t entries = 0;
            for (auto v : nt.val)
                entries += v != detail::absent_value;
            stats->max_table_entries = std::max(stats->max_table_entries, entries);
        }
    }

    // root: single outer tuple; best inner tuple wins
    auto & root_tab = tab[rooted.root];
    int best_tuple = -1;
    for (int c = 0; c < root_tab.ci; ++c) {
        std::int64_t v = root_tab.at(c, 0);
        if (v == detail::absent_value)
            continue;
        if (best_tuple < 0 || detail::better(prob.mode, v, root_tab.at(best_tuple, 0)))
            best_tuple = c;
    }
    if (best_tuple < 0)
        return std::nullopt;

    DqSolution sol;
    sol.value = root_tab.at(best_tuple, 0);
    sol.parts.assign(q, VertexSet(g.n));
    auto descend = [&](auto && self, int w, int ti, int to) -> void {
        if (rooted.is_leaf(w)) {
            sol.parts[tab[w].bk(ti, to).first].set(rooted.nodes[w].leaf_vertex);
            return;
        }
        auto [ta, tb] = tab[w].bk(ti, to);
        int a = rooted.nodes[w].left, b = rooted.nodes[w].right;
        int co_n = ctx.outer[w].size();
        detail::ClassTuple tup(q);
        for (int j = 0; j < q; ++j)
            tup[j] = std::uint16_t(
                m2[w][std::size_t(inner_tuples[b].list[tb][j]) * co_n + outer_tuples[w].list[to][j]]);
        int oa = outer_tuples[a].find(tup);
        for (int j = 0; j < q; ++j)
            tup[j] = std::uint16_t(
                m3[w][std::size_t(inner_tuples[a].list[ta][j]) * co_n + outer_tuples[w].list[to][j]]);
        int ob = outer_tuples[b].find(tup);
        self(self, a, ta, oa);
        self(self, b, tb, ob);
    };
    descend(descend, rooted.root, best_tuple, 0);

    std::int64_t check_value = 0;
    if (! check_dq_witness(g, prob, sol.parts, &check_value) || check_value != sol.value)
        throw InternalError("solver witness failed verification");
    return sol;
}

// --- presets and the problem file format -------------------------------------

using Problem = std::variant<SigmaRhoProblem, DqProblem>;

inline std::vector<std::string> preset_names() {
    return {"dominating-set", "total-dominating-set", "independent-set", "independent-dominating-set",
        "perfect-code", "k-coloring"};
}

// Named standard problems; k-coloring takes the colour count as parameter.
inline Problem problem_preset(const std::string & name, int k = 0) {
    auto sr = [](FinCofinSet sigma, FinCofinSet rho, OptMode mode) {
        return SigmaRhoProblem{std::move(sigma), std::move(rho), {}, mode};
    };
    if (name == "dominating-set")
        return sr(FinCofinSet::naturals(), FinCofinSet::naturals_except({0}), OptMode::minimize);
    if (name == "total-dominating-set")
        return sr(FinCofinSet::naturals_except({0}), FinCofinSet::naturals_except({0}), OptMode::minimize);
    if (name == "independent-set")
        return sr(FinCofinSet::finite({0}), FinCofinSet::naturals(), OptMode::maximize);
    if (name == "independent-dominating-set")
        return sr(FinCofinSet::finite({0}), FinCofinSet::naturals_except({0}), OptMode::minimize);
    if (name == "perfect-code")
        return sr(FinCofinSet::finite({0}), FinCofinSet::finite({1}), OptMode::minimize);
    if (name == "k-coloring") {
        if (k < 1)
            throw InputError("k-coloring needs k >= 1");
        DqProblem p;
        p.q = k;
        p.constraints.assign(k, std::vector<FinCofinSet>(k, FinCofinSet::naturals()));
        for (int i = 0; i < k; ++i)
            p.constraints[i][i] = FinCofinSet::finite({0});
        p.mode = OptMode::exists;
        return p;
    }
    throw InputError("unknown preset: " + name);
}

// The q=2 encoding of a subset problem, used as a cross-check path.
inline DqProblem sigma_rho_as_dq(const SigmaRhoProblem & p) {
    DqProblem q2;
    q2.q = 2;
    q2.constraints = {{p.sigma, FinCofinSet::naturals()}, {p.rho, FinCofinSet::naturals()}};
    q2.weights = p.weights;
    q2.mode = p.mode;
    return q2;
}

// Problem file:
//   problem sigma-rho          problem dq <q>
//   sigma <set>                D <i> <j> <set>     (1-based parts)
//   rho <set>                  mode exists|min|max
//   mode min|max|exists
// Set syntax: N, {a,b,c}, N\{a,b,c}. Unlisted D entries default to N.
inline Problem parse_problem(std::istream & in) {
    std::string line, kind;
    int q = 0;
    bool header = false;
    SigmaRhoProblem sr;
    DqProblem dq;
    bool saw_sigma = false, saw_rho = false;
    OptMode mode = OptMode::minimize;
    bool saw_mode = false;

    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "problem") {
            if (header)
                throw InputError("duplicate problem header");
            ls >> kind;
            if (kind == "dq") {
                if (! (ls >> q) || q < 1)
                    throw InputError("bad part count: " + line);
                dq.q = q;
                dq.constraints.assign(q, std::vector<FinCofinSet>(q, FinCofinSet::naturals()));
            }
            else if (kind != "sigma-rho")
                throw InputError("unknown problem kind: " + kind);
            header = true;
        }
        else if (tag == "sigma" || tag == "rho") {
            if (kind != "sigma-rho")
                throw InputError("sigma/rho lines need a sigma-rho problem");
            std::string rest;
            std::getline(ls, rest);
            (tag == "sigma" ? sr.sigma : sr.rho) = FinCofinSet::parse(rest);
            (tag == "sigma" ? saw_sigma : saw_rho) = true;
        }
        else if (tag == "D") {
            if (kind != "dq")
                throw InputError("D lines need a dq problem");
            int i, j;
            if (! (ls >> i >> j) || i < 1 || i > q || j < 1 || j > q)
                throw InputError("bad constraint indices: " + line);
            std::string rest;
            std::getline(ls, rest);
            dq.constraints[i - 1][j - 1] = FinCofinSet::parse(rest);
        }
        else if (tag == "mode") {
            std::string word;
            ls >> word;
            if (word == "min")
                mode = OptMode::minimize;
            else if (word == "max")
                mode = OptMode::maximize;
            else if (word == "exists")
                mode = OptMode::exists;
            else
                throw InputError("unknown mode: " + word);
            saw_mode = true;
        }
        else
            throw InputError("unrecognised line: " + line);
    }
    if (! header)
        throw InputError("missing problem header");
    if (kind == "sigma-rho") {
        if (! saw_sigma || ! saw_rho)
            throw InputError("sigma-rho problem needs sigma and rho lines");
        sr.mode = saw_mode ? mode : OptMode::minimize;
        return sr;
    }
    dq.mode = saw_mode ? mode : OptMode::exists;
    return dq;
}

inline Problem parse_problem(const std::string & text) {
    std::istringstream in(text);
    return parse_problem(in);
}

} // namespace boolw
