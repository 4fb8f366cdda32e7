#pragma once

// Brute-force reference implementations. These are the ground truth the
// optimized paths are tested against, so they deliberately use nothing but
// the graph primitives and problem types: no union closure, no class
// tables, no DP.

#include <boolw/core.hpp>
#include <boolw/solver.hpp>

#include <numeric>

namespace boolw {

// Distinct external neighbourhoods over all 2^|A| subsets.
inline std::uint64_t brute_cut_bool(const Graph & g, const VertexSet & a) {
    auto members = a.members();
    if (members.size() > 20)
        throw InputError("brute_cut_bool limited to |A| <= 20");
    VertexSet a_bar = a.complement();
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (std::uint64_t mask = 0; mask < (1ULL << members.size()); ++mask) {
        VertexSet nb(g.n);
        for (std::size_t i = 0; i < members.size(); ++i)
            if (mask & (1ULL << i))
                nb |= g.adj[members[i]];
        seen.insert(nb & a_bar);
    }
    return seen.size();
}

// GF(2) rank of the cut matrix, by elimination over explicit 0/1 rows.
inline int brute_cut_rank(const Graph & g, const VertexSet & a) {
    auto cols = a.complement().members();
    std::vector<std::vector<int>> rows;
    a.for_each([&](int v) {
        std::vector<int> row(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            row[j] = g.adjacent(v, cols[j]);
        rows.push_back(std::move(row));
    });
    int rank = 0;
    for (std::size_t col = 0; col < cols.size() && rank < int(rows.size()); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0)
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (int(r) != rank && rows[r][col])
                for (std::size_t j = 0; j < cols.size(); ++j)
                    rows[r][j] ^= rows[rank][j];
        ++rank;
    }
    return rank;
}

// Optimum of a (sigma,rho) problem by scanning all subsets, constraints
// checked with true untruncated counts. The constraint loop is written out
// here rather than shared with the solver's witness checker.
inline std::optional<SigmaRhoSolution> brute_sigma_rho(const Graph & g, const SigmaRhoProblem & prob) {
    if (g.n > 16)
        throw InputError("brute_sigma_rho limited to n <= 16");
    std::optional<SigmaRhoSolution> best;
    for (std::uint64_t mask = 0; mask < (1ULL << g.n); ++mask) {
        VertexSet s(g.n);
        for (int v = 0; v < g.n; ++v)
            if (mask & (1ULL << v))
                s.set(v);
        bool feasible = true;
        std::int64_t value = 0;
        for (int v = 0; v < g.n && feasible; ++v) {
            int count = 0;
            g.adj[v].for_each([&](int w) { count += s.test(w); });
            feasible = (s.test(v) ? prob.sigma : prob.rho).contains(count);
            if (s.test(v))
                value += prob.weights.empty() ? 1 : prob.weights[v];
        }
        if (! feasible)
            continue;
        if (! best || detail::better(prob.mode, value, best->value))
            best = SigmaRhoSolution{value, s};
    }
    return best;
}

// Optimum of a D_q problem by scanning all q^n part assignments.
inline std::optional<DqSolution> brute_dq(const Graph & g, const DqProblem & prob) {
    std::uint64_t assignments = 1;
    for (int v = 0; v < g.n; ++v) {
        assignments *= std::uint64_t(prob.q);
        if (assignments > 20000000ULL)
            throw InputError("brute_dq limited to q^n <= 2e7");
    }
    std::optional<DqSolution> best;
    std::vector<int> part(g.n, 0);
    for (std::uint64_t code = 0; code < assignments; ++code) {
        std::uint64_t c = code;
        for (int v = 0; v < g.n; ++v) {
            part[v] = int(c % prob.q);
            c /= prob.q;
        }
        bool feasible = true;
        std::int64_t value = 0;
        for (int v = 0; v < g.n && feasible; ++v) {
            std::vector<int> counts(prob.q, 0);
            g.adj[v].for_each([&](int w) { ++counts[part[w]]; });
            for (int j = 0; j < prob.q && feasible; ++j)
                feasible = prob.constraints[part[v]][j].contains(counts[j]);
            if (part[v] == 0)
                value += prob.weights.empty() ? 1 : prob.weights[v];
        }
        if (! feasible)
            continue;
        std::vector<VertexSet> parts(prob.q, VertexSet(g.n));
        for (int v = 0; v < g.n; ++v)
            parts[part[v]].set(v);
        if (! best || detail::better(prob.mode, value, best->value))
            best = DqSolution{value, parts};
    }
    return best;
}

// Size of a maximum antichain of the vicinal preorder (equals the minimum
// chain cover size by Dilworth's theorem).
inline int brute_dilworth(const Graph & g) {
    if (g.n > 16)
        throw InputError("brute_dilworth limited to n <= 16");
    auto leq = [&](int x, int y) {
        VertexSet closed = g.adj[y];
        closed.set(y);
        return g.adj[x].is_subset_of(closed);
    };
    std::vector<std::uint32_t> comparable(g.n, 0);
    for (int x = 0; x < g.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (x != y && (leq(x, y) || leq(y, x)))
                comparable[x] |= 1U << y;
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1U << g.n); ++mask) {
        bool antichain = true;
        for (int x = 0; x < g.n && antichain; ++x)
            if ((mask >> x) & 1U)
                antichain = (mask & comparable[x]) == 0;
        if (antichain)
            best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

namespace oracle_detail {
    // Capped per-external-vertex counts for every subset of A, built
    // incrementally over the mask lattice.
    struct SubsetSignatures {
        std::vector<int> members;                   // of A, ascending
        std::vector<std::vector<std::uint8_t>> sig; // per mask
        std::vector<int> min_anywhere;              // per mask: smallest |R|, R ⊆ A, R ≡ mask
        std::vector<int> min_within;                // per mask: smallest |R|, R ⊆ mask, R ≡ mask

        SubsetSignatures(const Graph & g, const VertexSet & a, int d) {
            members = a.members();
            if (members.size() > 20)
                throw InputError("exhaustive representative check limited to |A| <= 20");
            std::vector<int> external = a.complement().members();
            std::vector<std::vector<std::uint8_t>> column(members.size());
            for (std::size_t i = 0; i < members.size(); ++i) {
                column[i].resize(external.size());
                for (std::size_t j = 0; j < external.size(); ++j)
                    column[i][j] = g.adjacent(members[i], external[j]);
            }
            std::size_t total = std::size_t(1) << members.size();
            sig.resize(total);
            sig[0].assign(external.size(), 0);
            for (std::size_t mask = 1; mask < total; ++mask) {
                std::size_t low = std::size_t(__builtin_ctzll(mask));
                sig[mask] = sig[mask & (mask - 1)];
                for (std::size_t j = 0; j < external.size(); ++j)
                    sig[mask][j] = std::uint8_t(std::min<int>(d, sig[mask][j] + column[low][j]));
            }

            std::unordered_map<std::vector<std::uint8_t>, int, DSignatureHash> smallest;
            std::vector<std::size_t> order(total);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [](std::size_t x, std::size_t y) {
                return __builtin_popcountll(x) < __builtin_popcountll(y);
            });
            min_anywhere.assign(total, 0);
            for (std::size_t mask : order) {
                auto [it, fresh] = smallest.emplace(sig[mask], __builtin_popcountll(mask));
                (void) fresh;
                min_anywhere[mask] = it->second;
            }

            // min over R ⊆ mask: removing any element outside a smaller
            // equivalent subset keeps the signature, so following
            // signature-preserving single deletions reaches the minimum.
            min_within.assign(total, 0);
            for (std::size_t mask : order) {
                int best = __builtin_popcountll(mask);
                for (std::size_t bits = mask; bits != 0; bits &= bits - 1) {
                    std::size_t without = mask & ~(bits & (0 - bits));
                    if (sig[without] == sig[mask])
                        best = std::min(best, min_within[without]);
                }
                min_within[mask] = best;
            }
        }

        std::size_t mask_of(const VertexSet & x) const {
            std::size_t mask = 0;
            for (std::size_t i = 0; i < members.size(); ++i)
                if (x.test(members[i]))
                    mask |= std::size_t(1) << i;
            return mask;
        }
    };
}

struct MinRepresentative {
    int min_anywhere; // smallest |R| with R ⊆ A and R ≡ X
    int min_within;   // smallest |R| with R ⊆ X and R ≡ X
};

inline MinRepresentative brute_min_representative(const Graph & g, const VertexSet & a, int d,
    const VertexSet & x) {
    oracle_detail::SubsetSignatures table(g, a, d);
    std::size_t mask = table.mask_of(x);
    return {table.min_anywhere[mask], table.min_within[mask]};
}

// Worst representative sizes over every subset of A at once.
struct RepresentativeBounds {
    int max_min_anywhere = 0;
    int max_min_within = 0;
    std::uint64_t class_count = 0;
};

inline RepresentativeBounds brute_representative_bounds(const Graph & g, const VertexSet & a, int d) {
    oracle_detail::SubsetSignatures table(g, a, d);
    RepresentativeBounds out;
    std::unordered_set<std::vector<std::uint8_t>, DSignatureHash> classes;
    for (std::size_t mask = 0; mask < table.sig.size(); ++mask) {
        out.max_min_anywhere = std::max(out.max_min_anywhere, table.min_anywhere[mask]);
        out.max_min_within = std::max(out.max_min_within, table.min_within[mask]);
        classes.insert(table.sig[mask]);
    }
    out.class_count = classes.size();
    return out;
}

struct CaterpillarSearch {
    std::uint64_t best_classes = 1; // boolean measure
    double bits = 0.0;
    int best_rank = 0;              // rank measure
    std::vector<int> best_order;
};

// Minimum caterpillar width over all n! vertex orderings; every cut is
// evaluated by direct enumeration.
inline CaterpillarSearch exhaustive_caterpillar_width(const Graph & g, WidthMeasure measure) {
    if (g.n > 8)
        throw InputError("exhaustive_caterpillar_width limited to n <= 8");
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    CaterpillarSearch out;
    bool first = true;
    do {
        std::uint64_t worst_classes = 1;
        int worst_rank = 0;
        // cuts of the caterpillar: singletons and proper prefixes
        auto consider = [&](const VertexSet & a) {
            if (a.empty() || a.count() == g.n)
                return;
            if (measure == WidthMeasure::boolean)
                worst_classes = std::max(worst_classes, brute_cut_bool(g, a));
            else
                worst_rank = std::max(worst_rank, brute_cut_rank(g, a));
        };
        for (int v = 0; v < g.n; ++v)
            consider(VertexSet::of(g.n, {v}));
        VertexSet prefix(g.n);
        for (int i = 0; i + 1 < g.n; ++i) {
            prefix.set(order[i]);
            consider(prefix);
        }
        bool improves = measure == WidthMeasure::boolean ? worst_classes < out.best_classes
                                                         : worst_rank < out.best_rank;
        if (first || improves) {
            out.best_classes = worst_classes;
            out.best_rank = worst_rank;
            out.best_order = order;
            first = false;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    out.bits = std::log2(double(out.best_classes));
    return out;
}

} // namespace boolw
