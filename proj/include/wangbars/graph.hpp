#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wangbars/core.hpp"

namespace wangbars {

// Directed multigraph with vertices = horizontal colors and edges labeled by
// equal-length (north, south) word pairs. Word length 1 everywhere makes it
// the tile view; longer words make it the bar view. Each edge remembers the
// original tile indices its label letters came from, so every reduction can
// be inverted on witnesses.
struct LabeledEdge {
    Color from, to;
    std::vector<Color> north, south;
    std::vector<int> provenance;

    int length() const { return static_cast<int>(north.size()); }
};

struct LabeledGraph {
    std::vector<Color> vertices;
    std::vector<LabeledEdge> edges;

    bool one_labeled() const {
        return std::all_of(edges.begin(), edges.end(),
                           [](const LabeledEdge& e) { return e.length() == 1; });
    }

    bool has_vertex(const Color& c) const {
        return std::find(vertices.begin(), vertices.end(), c) != vertices.end();
    }
};

struct ClassPartition {
    std::vector<std::vector<Color>> classes; // each sorted by token; classes sorted by first member
    std::map<Color, int> classOf;

    bool same_class(const Color& a, const Color& b) const {
        return classOf.at(a) == classOf.at(b);
    }
};

// One vertex per east/west color, one edge per tile from its west color to
// its east color labeled (north, south).
inline LabeledGraph to_graph(const Tileset& ts) {
    LabeledGraph g;
    auto add_vertex = [&g](const Color& c) {
        if (!g.has_vertex(c)) g.vertices.push_back(c);
    };
    for (int i = 0; i < ts.size(); ++i) {
        const WangTile& t = ts[i];
        add_vertex(t.west);
        add_vertex(t.east);
        g.edges.push_back(LabeledEdge{t.west, t.east, {t.north}, {t.south}, {i}});
    }
    return g;
}

// One bar per edge: west = source, east = target, words copied.
inline Barset from_graph(const LabeledGraph& g) {
    std::vector<WangBar> bars;
    for (const LabeledEdge& e : g.edges) bars.emplace_back(e.to, e.from, e.north, e.south);
    return Barset(std::move(bars));
}

// Strongly connected components (iterative Tarjan). Classes are reported
// with members sorted by token and the class list sorted by its least
// member, so the partition is reproducible.
inline ClassPartition scc(const LabeledGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::map<Color, int> vid;
    for (int i = 0; i < n; ++i) vid[g.vertices[static_cast<std::size_t>(i)]] = i;

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const LabeledEdge& e : g.edges)
        adj[static_cast<std::size_t>(vid.at(e.from))].push_back(vid.at(e.to));

    std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        comp(static_cast<std::size_t>(n), -1);
    std::vector<bool> onStack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    int counter = 0, ncomp = 0;

    struct Frame {
        int v;
        std::size_t edge;
    };
    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
        stack.push_back(root);
        onStack[static_cast<std::size_t>(root)] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = adj[static_cast<std::size_t>(f.v)];
            if (f.edge < out.size()) {
                int w = out[f.edge++];
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] =
                        counter++;
                    stack.push_back(w);
                    onStack[static_cast<std::size_t>(w)] = true;
                    frames.push_back({w, 0});
                } else if (onStack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)],
                                 index[static_cast<std::size_t>(w)]);
                }
            } else {
                if (low[static_cast<std::size_t>(f.v)] == index[static_cast<std::size_t>(f.v)]) {
                    int w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        onStack[static_cast<std::size_t>(w)] = false;
                        comp[static_cast<std::size_t>(w)] = ncomp;
                    } while (w != f.v);
                    ++ncomp;
                }
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    low[static_cast<std::size_t>(frames.back().v)] =
                        std::min(low[static_cast<std::size_t>(frames.back().v)],
                                 low[static_cast<std::size_t>(v)]);
            }
        }
    }

    std::vector<std::vector<Color>> classes(static_cast<std::size_t>(ncomp));
    for (int i = 0; i < n; ++i)
        classes[static_cast<std::size_t>(comp[static_cast<std::size_t>(i)])].push_back(
            g.vertices[static_cast<std::size_t>(i)]);
    for (auto& c : classes) std::sort(c.begin(), c.end());
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    ClassPartition part;
    part.classes = std::move(classes);
    for (int id = 0; id < static_cast<int>(part.classes.size()); ++id)
        for (const Color& c : part.classes[static_cast<std::size_t>(id)]) part.classOf[c] = id;
    return part;
}

struct PruneResult {
    LabeledGraph graph;
    std::vector<LabeledEdge> removedEdges;
};

// An edge whose target cannot reach back to its source can never occur on a
// row of a tiling, so it can be deleted without changing tileability. The
// fixpoint of applying that rule one edge at a time is exactly: delete every
// edge whose endpoints lie in different strongly connected components, then
// drop vertices left without incident edges.
inline PruneResult prune_unreturnable(const LabeledGraph& g) {
    ClassPartition part = scc(g);
    PruneResult res;
    for (const LabeledEdge& e : g.edges) {
        if (part.same_class(e.from, e.to))
            res.graph.edges.push_back(e);
        else
            res.removedEdges.push_back(e);
    }
    for (const Color& v : g.vertices) {
        bool incident = false;
        for (const LabeledEdge& e : res.graph.edges)
            if (e.from == v || e.to == v) {
                incident = true;
                break;
            }
        if (incident) res.graph.vertices.push_back(v);
    }
    return res;
}

struct EliminateResult {
    LabeledGraph graph;
    std::vector<std::vector<Color>> removedClasses;
    std::vector<LabeledEdge> removedEdges;
};

// Removes every class in which all vertices have outdegree exactly one (a
// pure cycle). This step does NOT preserve tileability on its own; callers
// must remember the trichotomy: either the removed tiles were unnecessary,
// or the original set tiles periodically, or it does not tile at all.
// Applied once: classes are disjoint and removal leaves the surviving
// classes' edge sets untouched, so no new all-outdegree-one class can appear.
inline EliminateResult eliminate_cycle_classes(const LabeledGraph& g) {
    ClassPartition part = scc(g);
    for (const LabeledEdge& e : g.edges)
        if (!part.same_class(e.from, e.to))
            throw std::invalid_argument("graph not pruned: inter-class edge present");

    std::map<Color, int> outdeg;
    for (const Color& v : g.vertices) outdeg[v] = 0;
    for (const LabeledEdge& e : g.edges) ++outdeg[e.from];

    std::vector<bool> drop(part.classes.size(), false);
    for (std::size_t i = 0; i < part.classes.size(); ++i)
        drop[i] = std::all_of(part.classes[i].begin(), part.classes[i].end(),
                              [&](const Color& v) { return outdeg.at(v) == 1; });

    EliminateResult res;
    for (std::size_t i = 0; i < part.classes.size(); ++i)
        if (drop[i]) res.removedClasses.push_back(part.classes[i]);
    for (const Color& v : g.vertices)
        if (!drop[static_cast<std::size_t>(part.classOf.at(v))]) res.graph.vertices.push_back(v);
    for (const LabeledEdge& e : g.edges) {
        if (drop[static_cast<std::size_t>(part.classOf.at(e.from))])
            res.removedEdges.push_back(e);
        else
            res.graph.edges.push_back(e);
    }
    return res;
}

// Repeatedly, while some class has fewer than twice as many edges as
// vertices: take the outdegree-one vertex u with the smallest token, delete
// its unique out-edge u -> v, and re-target every edge w -> u to w -> v with
// the deleted edge's label appended. Each step removes exactly one vertex
// and one edge, so e - v is preserved; the paper leaves the order open and
// the smallest-token rule makes runs reproducible.
inline LabeledGraph contract(const LabeledGraph& g) {
    {
        EliminateResult probe = eliminate_cycle_classes(g); // also checks the pruned precondition
        if (!probe.removedClasses.empty())
            throw std::invalid_argument("contract: a cycle class is present");
    }
    LabeledGraph cur = g;
    for (;;) {
        ClassPartition part = scc(cur);
        std::map<Color, int> outdeg;
        for (const Color& v : cur.vertices) outdeg[v] = 0;
        std::vector<int> classEdges(part.classes.size(), 0);
        for (const LabeledEdge& e : cur.edges) {
            ++outdeg[e.from];
            assert(part.same_class(e.from, e.to));
            ++classEdges[static_cast<std::size_t>(part.classOf.at(e.from))];
        }

        std::optional<Color> pick;
        for (const Color& v : cur.vertices) {
            const std::size_t cls = static_cast<std::size_t>(part.classOf.at(v));
            if (classEdges[cls] >= 2 * static_cast<int>(part.classes[cls].size())) continue;
            if (outdeg.at(v) != 1) continue;
            if (!pick || v < *pick) pick = v;
        }
        if (!pick) break;

        const Color u = *pick;
        std::size_t outIdx = cur.edges.size();
        for (std::size_t i = 0; i < cur.edges.size(); ++i)
            if (cur.edges[i].from == u) {
                outIdx = i;
                break;
            }
        assert(outIdx < cur.edges.size());
        const LabeledEdge dropped = cur.edges[outIdx];
        // The proof guarantees the unique out-edge is not a self-loop.
        assert(!(dropped.to == u));

        LabeledGraph next;
        for (const Color& v : cur.vertices)
            if (!(v == u)) next.vertices.push_back(v);
        for (std::size_t i = 0; i < cur.edges.size(); ++i) {
            if (i == outIdx) continue;
            LabeledEdge e = cur.edges[i];
            if (e.to == u) {
                e.to = dropped.to;
                e.north.insert(e.north.end(), dropped.north.begin(), dropped.north.end());
                e.south.insert(e.south.end(), dropped.south.begin(), dropped.south.end());
                e.provenance.insert(e.provenance.end(), dropped.provenance.begin(),
                                    dropped.provenance.end());
            }
            next.edges.push_back(e);
        }
        assert(next.vertices.size() + 1 == cur.vertices.size());
        assert(next.edges.size() + 1 == cur.edges.size());
        cur = std::move(next);
    }
    return cur;
}

// Full reduction from a tileset to a barset of at most 2 * parameter bars.
struct ReductionOutcome {
    Barset barset;
    std::vector<LabeledEdge> removedEdges;          // pruning step
    std::vector<std::vector<Color>> removedClasses; // cycle elimination step
    std::vector<std::vector<int>> provenance;       // bar -> original tile index per cell
    Tileset canonical;                              // rotated input the pipeline ran on
    int quarterTurns = 0;
};

inline ReductionOutcome wang_to_bars(const Tileset& ts) {
    if (ts.empty()) throw std::invalid_argument("empty input");
    ReductionOutcome out;
    out.quarterTurns = canonical_west_turns(ts);
    out.canonical = rotate(ts, out.quarterTurns);

    LabeledGraph g = to_graph(out.canonical);
    PruneResult pruned = prune_unreturnable(g);
    out.removedEdges = std::move(pruned.removedEdges);
    EliminateResult elim = eliminate_cycle_classes(pruned.graph);
    out.removedClasses = std::move(elim.removedClasses);
    LabeledGraph contracted = contract(elim.graph);

    out.barset = from_graph(contracted);
    for (const LabeledEdge& e : contracted.edges) out.provenance.push_back(e.provenance);

    const int k = parameter(ts).parameter;
    if (out.barset.size() > 2 * k)
        throw std::logic_error("reduction produced more than 2k bars");
    return out;
}

inline std::string to_dot(const LabeledGraph& g) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (const Color& v : g.vertices) os << "  \"" << v.str() << "\";\n";
    for (const LabeledEdge& e : g.edges) {
        os << "  \"" << e.from.str() << "\" -> \"" << e.to.str() << "\" [label=\"(";
        for (std::size_t i = 0; i < e.north.size(); ++i) {
            if (i) os << ",";
            os << e.north[i].str();
        }
        os << "),(";
        for (std::size_t i = 0; i < e.south.size(); ++i) {
            if (i) os << ",";
            os << e.south[i].str();
        }
        os << ")\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace wangbars
