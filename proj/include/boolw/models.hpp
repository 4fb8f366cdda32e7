#pragma once

// Intersection models: k-trapezoids on parallel lines, circular
// k-trapezoids on concentric circles, (circular) permutation diagrams and
// convex bipartite structures, together with realize() turning each model
// into its intersection graph.
//
// Geometry conventions used throughout:
//  * linear coordinates are integers; an object on line i is the closed
//    interval [l_i, r_i];
//  * circular coordinates are integer ticks modulo M, "clockwise" means
//    increasing tick; an arc (s, e) runs clockwise from s to e;
//  * circle k-1 is the innermost circle;
//  * a circular k-trapezoid is swept between consecutive circles by moving
//    both arc endpoints clockwise by their (offset mod M); intersection is
//    decided per wrap shift in the universal cover by the same
//    entirely-before test as the linear case.

#include <boolw/core.hpp>

#include <array>
#include <variant>

namespace boolw {

struct KTrapezoidModel {
    int k = 1;
    // objects[v][i] = (l, r) on line i.
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> objects;

    int size() const { return int(objects.size()); }
};

struct CircularKTrapezoidModel {
    int k = 1;
    std::int64_t ticks = 0; // M
    // arcs[v][i] = (start, end) ticks, clockwise, on circle i.
    std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> arcs;

    int size() const { return int(arcs.size()); }
};

struct PermutationModel {
    // lines[v] = (top, bottom) endpoint positions.
    std::vector<std::pair<std::int64_t, std::int64_t>> lines;

    int size() const { return int(lines.size()); }
};

struct CircularPermutationModel {
    struct Chord {
        std::int64_t outer = 0;
        std::int64_t inner = 0;
        bool clockwise = true; // direction of the sweep from inner to outer
    };

    std::int64_t ticks = 0;
    std::vector<Chord> chords;

    int size() const { return int(chords.size()); }

    // Signed angular span of the sweep from the inner to the outer endpoint.
    std::int64_t span(int v) const {
        std::int64_t d = ((chords[v].outer - chords[v].inner) % ticks + ticks) % ticks;
        return chords[v].clockwise ? d : d - ticks;
    }
};

struct ConvexStructure {
    std::vector<int> x_order; // the X side, in order; Y is everything else
};

// The convex model file carries both the structure and the bipartite graph.
struct ConvexModel {
    ConvexStructure structure;
    Graph graph;
};

using Model = std::variant<KTrapezoidModel, CircularKTrapezoidModel, PermutationModel,
    CircularPermutationModel, ConvexModel>;

// --- validation ----------------------------------------------------------

inline void validate(const KTrapezoidModel & m) {
    if (m.k < 1)
        throw ModelError("k-trapezoid model needs k >= 1");
    for (const auto & obj : m.objects) {
        if (int(obj.size()) != m.k)
            throw ModelError("object with wrong number of lines");
        for (auto [l, r] : obj)
            if (l > r)
                throw ModelError("interval with l > r");
    }
}

inline void validate(const CircularKTrapezoidModel & m) {
    if (m.k < 1 || m.ticks < 2)
        throw ModelError("circular model needs k >= 1 and M >= 2");
    for (const auto & obj : m.arcs) {
        if (int(obj.size()) != m.k)
            throw ModelError("object with wrong number of circles");
        for (auto [s, e] : obj) {
            if (s < 0 || s >= m.ticks || e < 0 || e >= m.ticks)
                throw ModelError("arc endpoint outside [0, M)");
            if (s == e)
                throw ModelError("arc with coinciding endpoints");
        }
    }
}

inline void validate(const PermutationModel & m) {
    auto distinct = [&](auto key) {
        std::vector<std::int64_t> xs;
        for (const auto & l : m.lines)
            xs.push_back(key(l));
        std::sort(xs.begin(), xs.end());
        return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
    };
    if (! distinct([](const auto & l) { return l.first; }))
        throw ModelError("duplicate top endpoints");
    if (! distinct([](const auto & l) { return l.second; }))
        throw ModelError("duplicate bottom endpoints");
}

namespace detail {
    // Crossings of two chords in the annulus: both chords sweep linearly in
    // angle from inner (t=0) to outer (t=1); they meet whenever the angle
    // difference passes a multiple of M strictly inside (0,1).
    inline int circ_perm_crossings(const CircularPermutationModel & m, int u, int v) {
        std::int64_t M = m.ticks;
        std::int64_t a = ((m.chords[u].inner - m.chords[v].inner) % M + M) % M; // in (0, M)
        std::int64_t b = m.span(u) - m.span(v);
        std::int64_t lo = std::min(a, a + b), hi = std::max(a, a + b);
        // multiples of M strictly between lo and hi
        auto below = [&](std::int64_t x) { return x >= 0 ? x / M : -((-x + M - 1) / M); };
        std::int64_t strictly_less_hi = (hi % M == 0) ? hi / M - 1 : below(hi);
        std::int64_t at_most_lo = (lo % M == 0) ? lo / M : below(lo);
        return int(std::max<std::int64_t>(0, strictly_less_hi - at_most_lo));
    }
}

inline void validate(const CircularPermutationModel & m) {
    if (m.ticks < 2)
        throw ModelError("circular permutation model needs M >= 2");
    std::vector<std::int64_t> inner, outer;
    for (const auto & c : m.chords) {
        if (c.inner < 0 || c.inner >= m.ticks || c.outer < 0 || c.outer >= m.ticks)
            throw ModelError("chord endpoint outside [0, M)");
        inner.push_back(c.inner);
        outer.push_back(c.outer);
    }
    auto dup = [](std::vector<std::int64_t> xs) {
        std::sort(xs.begin(), xs.end());
        return std::adjacent_find(xs.begin(), xs.end()) != xs.end();
    };
    if (dup(inner))
        throw ModelError("duplicate inner endpoints");
    if (dup(outer))
        throw ModelError("duplicate outer endpoints");
    for (int u = 0; u < m.size(); ++u)
        for (int v = u + 1; v < m.size(); ++v)
            if (detail::circ_perm_crossings(m, u, v) > 1)
                throw ModelError("chords " + std::to_string(u) + " and " + std::to_string(v) +
                    " cross more than once");
}

// --- canonicalization ----------------------------------------------------
//
// Tied endpoint coordinates are separated deterministically by vertex
// index: every coordinate becomes c * 2n + 2v (+1 for a right/end point).
// The relative order of distinct coordinates is preserved.

inline KTrapezoidModel canonical_form(const KTrapezoidModel & m) {
    KTrapezoidModel out = m;
    std::int64_t s = 2 * std::max(1, m.size());
    for (int v = 0; v < m.size(); ++v)
        for (auto & [l, r] : out.objects[v]) {
            l = l * s + 2 * v;
            r = r * s + 2 * v + 1;
        }
    return out;
}

inline CircularKTrapezoidModel canonical_form(const CircularKTrapezoidModel & m) {
    CircularKTrapezoidModel out = m;
    std::int64_t s = 2 * std::max(1, m.size());
    out.ticks = m.ticks * s;
    for (int v = 0; v < m.size(); ++v)
        for (auto & [b, e] : out.arcs[v]) {
            b = b * s + 2 * v;
            e = e * s + 2 * v + 1;
        }
    return out;
}

// --- realization ----------------------------------------------------------

inline Graph realize(const KTrapezoidModel & model) {
    validate(model);
    auto m = canonical_form(model);
    int n = m.size();
    Graph g(n);
    // u and v are disjoint iff one is strictly left of the other on every line.
    auto before = [&](int u, int v) {
        for (int i = 0; i < m.k; ++i)
            if (m.objects[u][i].second >= m.objects[v][i].first)
                return false;
        return true;
    };
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (! before(u, v) && ! before(v, u)) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
    return g;
}

inline Graph realize(const PermutationModel & m) {
    validate(m);
    int n = m.size();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            auto [tu, bu] = m.lines[u];
            auto [tv, bv] = m.lines[v];
            if ((tu < tv) != (bu < bv)) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
        }
    return g;
}

namespace detail {
    // Lift of a circular k-trapezoid to the universal cover. The leading
    // boundary advances from circle to circle by the start offset taken the
    // shorter way around (ties clockwise); the trailing boundary is always
    // start plus the true arc width, so the swept solid never pinches.
    struct LiftedTrapezoid {
        std::vector<std::int64_t> start, end;
    };

    inline LiftedTrapezoid lift(const CircularKTrapezoidModel & m, int v) {
        LiftedTrapezoid t;
        std::int64_t M = m.ticks;
        auto mod = [&](std::int64_t x) { return (x % M + M) % M; };
        auto short_way = [&](std::int64_t x) {
            std::int64_t d = mod(x);
            return d <= M / 2 ? d : d - M;
        };
        std::int64_t s = m.arcs[v][0].first;
        for (int i = 0; i < m.k; ++i) {
            if (i > 0)
                s += short_way(m.arcs[v][i].first - m.arcs[v][i - 1].first);
            t.start.push_back(s);
            t.end.push_back(s + mod(m.arcs[v][i].second - m.arcs[v][i].first));
        }
        return t;
    }
}

inline Graph realize(const CircularKTrapezoidModel & model) {
    validate(model);
    auto m = canonical_form(model);
    int n = m.size();
    std::int64_t M = m.ticks;
    std::vector<detail::LiftedTrapezoid> lifted;
    lifted.reserve(n);
    for (int v = 0; v < n; ++v)
        lifted.push_back(detail::lift(m, v));

    // u before v+jM on every circle, for the linear entirely-before test.
    auto before = [&](const detail::LiftedTrapezoid & u, const detail::LiftedTrapezoid & v, std::int64_t shift) {
        for (int i = 0; i < m.k; ++i)
            if (u.end[i] >= v.start[i] + shift)
                return false;
        return true;
    };
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            bool edge = false;
            for (std::int64_t j = -(m.k + 2); j <= m.k + 2 && ! edge; ++j)
                if (! before(lifted[u], lifted[v], j * M) && ! before(lifted[v], lifted[u], -j * M))
                    edge = true;
            if (edge) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
        }
    return g;
}

inline Graph realize(const CircularPermutationModel & m) {
    validate(m);
    int n = m.size();
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (detail::circ_perm_crossings(m, u, v) == 1) {
                g.adj[u].set(v);
                g.adj[v].set(u);
            }
    return g;
}

// True iff g is bipartite with parts (X, Y) given by the structure and
// every N(y) is a consecutive run in the X order. On failure, *witness (if
// given) names an offending vertex.
inline bool validate_convex(const Graph & g, const ConvexStructure & s, int * witness = nullptr) {
    auto fail = [&](int y) {
        if (witness)
            *witness = y;
        return false;
    };
    VertexSet x_side(g.n);
    std::vector<int> pos(g.n, -1);
    for (int i = 0; i < int(s.x_order.size()); ++i) {
        int x = s.x_order[i];
        if (x < 0 || x >= g.n || pos[x] >= 0)
            return fail(x < 0 || x >= g.n ? -1 : x);
        pos[x] = i;
        x_side.set(x);
    }
    for (int x : s.x_order)
        if (g.adj[x].intersects(x_side))
            return fail(x);
    for (int y = 0; y < g.n; ++y) {
        if (x_side.test(y))
            continue;
        if (g.adj[y].intersects(x_side.complement()))
            return fail(y);
        int lo = g.n, hi = -1, deg = 0;
        g.adj[y].for_each([&](int x) {
            lo = std::min(lo, pos[x]);
            hi = std::max(hi, pos[x]);
            ++deg;
        });
        if (deg > 0 && hi - lo + 1 != deg)
            return fail(y);
    }
    return true;
}

inline Graph realize(const ConvexModel & m) {
    int witness = -1;
    if (! validate_convex(m.graph, m.structure, &witness))
        throw ModelError("convex structure violated at vertex " + std::to_string(witness));
    return m.graph;
}

inline Graph realize(const Model & m) {
    return std::visit([](const auto & mm) { return realize(mm); }, m);
}

// --- max point load --------------------------------------------------------

// Maximum number of intervals (k=1 linear model) containing a common point;
// for interval graphs this is the clique number.
inline int max_point_load(const KTrapezoidModel & model) {
    if (model.k != 1)
        throw InputError("max_point_load needs a k=1 model");
    validate(model);
    auto m = canonical_form(model);
    std::vector<std::pair<std::int64_t, int>> events;
    for (const auto & obj : m.objects) {
        events.emplace_back(obj[0].first, +1);
        events.emplace_back(obj[0].second + 1, -1);
    }
    std::sort(events.begin(), events.end());
    int load = 0, best = 0;
    for (auto [x, d] : events)
        best = std::max(best, load += d);
    return best;
}

// Circular variant: maximum number of arcs over a common tick.
inline int max_point_load(const CircularKTrapezoidModel & model) {
    if (model.k != 1)
        throw InputError("max_point_load needs a k=1 model");
    validate(model);
    auto m = canonical_form(model);
    std::int64_t M = m.ticks;
    // Count arcs covering each arc start; the maximum over starts equals the
    // maximum over all ticks since the load only changes at endpoints.
    int best = 0;
    for (int u = 0; u < m.size(); ++u) {
        std::int64_t p = m.arcs[u][0].first;
        int load = 0;
        for (int v = 0; v < m.size(); ++v) {
            auto [s, e] = m.arcs[v][0];
            std::int64_t off = ((p - s) % M + M) % M;
            std::int64_t width = ((e - s) % M + M) % M;
            load += off <= width;
        }
        best = std::max(best, load);
    }
    return best;
}

// --- model file format -----------------------------------------------------
//
//   model <kind> <n> [k] [M]     kind in {interval, ktrap, circktrap, perm,
//                                circperm, convex}
//   o <coords...>                2k coords per object line; perm: top bottom;
//                                circperm: outer inner flag
//   X <order...>                 convex only: the ordered X side
//   e <x> <y>                    convex only: edges
//
// interval is shorthand for ktrap with k=1. The parser rejects lines whose
// arity does not match the declared kind.

inline Model parse_model(std::istream & in) {
    std::string line, kind;
    int n = -1, k = 1;
    std::int64_t ticks = 0;
    bool header_done = false;

    KTrapezoidModel ktrap;
    CircularKTrapezoidModel circktrap;
    PermutationModel perm;
    CircularPermutationModel circperm;
    ConvexModel convex;
    std::vector<std::pair<int, int>> convex_edges;
    int objects_seen = 0;
    bool x_line_seen = false;

    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "model") {
            if (header_done)
                throw InputError("duplicate model header");
            if (! (ls >> kind >> n) || n < 0)
                throw InputError("bad model header: " + line);
            if (kind == "interval")
                k = 1;
            else if (kind == "ktrap" || kind == "circktrap") {
                if (! (ls >> k) || k < 1)
                    throw InputError("missing line count k in header");
            }
            if (kind == "circktrap" || kind == "circperm") {
                if (! (ls >> ticks) || ticks < 2)
                    throw InputError("missing modulus M in header");
            }
            if (kind != "interval" && kind != "ktrap" && kind != "circktrap" && kind != "perm" &&
                kind != "circperm" && kind != "convex")
                throw InputError("unknown model kind: " + kind);
            header_done = true;
        }
        else if (tag == "o") {
            if (! header_done)
                throw InputError("object line before model header");
            std::vector<std::int64_t> xs;
            std::int64_t x;
            while (ls >> x)
                xs.push_back(x);
            if (kind == "interval" || kind == "ktrap" || kind == "circktrap") {
                if (int(xs.size()) != 2 * k)
                    throw InputError("expected " + std::to_string(2 * k) + " coordinates: " + line);
                std::vector<std::pair<std::int64_t, std::int64_t>> obj;
                for (int i = 0; i < k; ++i)
                    obj.emplace_back(xs[2 * i], xs[2 * i + 1]);
                if (kind == "circktrap")
                    circktrap.arcs.push_back(std::move(obj));
                else
                    ktrap.objects.push_back(std::move(obj));
            }
            else if (kind == "perm") {
                if (xs.size() != 2)
                    throw InputError("permutation object needs top and bottom: " + line);
                perm.lines.emplace_back(xs[0], xs[1]);
            }
            else if (kind == "circperm") {
                if (xs.size() != 3 || (xs[2] != 0 && xs[2] != 1))
                    throw InputError("circular permutation object needs outer inner flag: " + line);
                circperm.chords.push_back({xs[0], xs[1], xs[2] == 1});
            }
            else
                throw InputError("object line not valid for kind " + kind);
            ++objects_seen;
        }
        else if (tag == "X") {
            if (kind != "convex")
                throw InputError("X line only valid for convex models");
            int v;
            while (ls >> v)
                convex.structure.x_order.push_back(v);
            x_line_seen = true;
        }
        else if (tag == "e") {
            if (kind != "convex")
                throw InputError("edge lines only valid for convex models");
            int u, v;
            if (! (ls >> u >> v))
                throw InputError("bad edge line: " + line);
            convex_edges.emplace_back(u, v);
        }
        else
            throw InputError("unrecognised line: " + line);
    }
    if (! header_done)
        throw InputError("missing model header");

    if (kind == "convex") {
        if (! x_line_seen)
            throw InputError("convex model missing X line");
        convex.graph = graph_from_edges(n, convex_edges);
        return convex;
    }
    if (objects_seen != n)
        throw InputError("expected " + std::to_string(n) + " objects, got " + std::to_string(objects_seen));
    if (kind == "interval" || kind == "ktrap") {
        ktrap.k = k;
        validate(ktrap);
        return ktrap;
    }
    if (kind == "circktrap") {
        circktrap.k = k;
        circktrap.ticks = ticks;
        validate(circktrap);
        return circktrap;
    }
    if (kind == "perm") {
        validate(perm);
        return perm;
    }
    circperm.ticks = ticks;
    validate(circperm);
    return circperm;
}

inline Model parse_model(const std::string & text) {
    std::istringstream in(text);
    return parse_model(in);
}

inline void serialize_model(const Model & m, std::ostream & out) {
    if (const auto * kt = std::get_if<KTrapezoidModel>(&m)) {
        if (kt->k == 1)
            out << "model interval " << kt->size() << '\n';
        else
            out << "model ktrap " << kt->size() << ' ' << kt->k << '\n';
        for (const auto & obj : kt->objects) {
            out << 'o';
            for (auto [l, r] : obj)
                out << ' ' << l << ' ' << r;
            out << '\n';
        }
    }
    else if (const auto * ct = std::get_if<CircularKTrapezoidModel>(&m)) {
        out << "model circktrap " << ct->size() << ' ' << ct->k << ' ' << ct->ticks << '\n';
        for (const auto & obj : ct->arcs) {
            out << 'o';
            for (auto [s, e] : obj)
                out << ' ' << s << ' ' << e;
            out << '\n';
        }
    }
    else if (const auto * pm = std::get_if<PermutationModel>(&m)) {
        out << "model perm " << pm->size() << '\n';
        for (auto [t, b] : pm->lines)
            out << "o " << t << ' ' << b << '\n';
    }
    else if (const auto * cp = std::get_if<CircularPermutationModel>(&m)) {
        out << "model circperm " << cp->size() << ' ' << cp->ticks << '\n';
        for (const auto & c : cp->chords)
            out << "o " << c.outer << ' ' << c.inner << ' ' << (c.clockwise ? 1 : 0) << '\n';
    }
    else {
        const auto & cv = std::get<ConvexModel>(m);
        out << "model convex " << cv.graph.n << '\n';
        out << 'X';
        for (int x : cv.structure.x_order)
            out << ' ' << x;
        out << '\n';
        for (int u = 0; u < cv.graph.n; ++u)
            cv.graph.adj[u].for_each([&](int v) {
                if (u < v)
                    out << "e " << u << ' ' << v << '\n';
            });
    }
}

inline std::string serialize_model(const Model & m) {
    std::ostringstream out;
    serialize_model(m, out);
    return out.str();
}

} // namespace boolw
