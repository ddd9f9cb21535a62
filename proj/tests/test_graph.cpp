#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>

#include "wangbars/graph.hpp"
#include "wangbars/io.hpp"

using namespace wangbars;

namespace {

Tileset worked_example() {
    return parse("tile 1 3 2 3\n"
                 "tile 3 1 2 2\n"
                 "tile 3 5 2 3\n"
                 "tile 2 6 1 2\n"
                 "tile 2 4 1 3\n"
                 "tile 6 4 1 2\n"
                 "tile 4 2 4 1\n"
                 "tile 7 4 3 2\n"
                 "tile 7 8 2 1\n"
                 "tile 8 9 2 4\n"
                 "tile 8 9 4 1\n"
                 "tile 9 7 3 2\n")
        .tileset;
}

std::set<std::set<std::string>> class_sets(const ClassPartition& part) {
    std::set<std::set<std::string>> out;
    for (const auto& cls : part.classes) {
        std::set<std::string> s;
        for (const Color& c : cls) s.insert(c.str());
        out.insert(s);
    }
    return out;
}

std::set<std::set<std::string>> class_sets(const std::vector<std::vector<Color>>& classes) {
    std::set<std::set<std::string>> out;
    for (const auto& cls : classes) {
        std::set<std::string> s;
        for (const Color& c : cls) s.insert(c.str());
        out.insert(s);
    }
    return out;
}

// Exhaustive reachability by repeated relaxation; the oracle for scc().
std::set<std::set<std::string>> reachability_classes(const LabeledGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    std::map<Color, int> id;
    for (int i = 0; i < n; ++i) id[g.vertices[static_cast<std::size_t>(i)]] = i;
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (const LabeledEdge& e : g.edges)
        reach[static_cast<std::size_t>(id[e.from])][static_cast<std::size_t>(id[e.to])] = true;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                    for (int k = 0; k < n; ++k)
                        if (reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] &&
                            !reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) {
                            reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = true;
                            changed = true;
                        }
    }
    std::set<std::set<std::string>> classes;
    for (int i = 0; i < n; ++i) {
        std::set<std::string> cls;
        for (int j = 0; j < n; ++j)
            if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
                cls.insert(g.vertices[static_cast<std::size_t>(j)].str());
        classes.insert(cls);
    }
    return classes;
}

LabeledGraph random_graph(std::mt19937& rng) {
    std::uniform_int_distribution<int> nv(1, 6), ne(0, 10), pick(0, 5), lab(0, 2);
    LabeledGraph g;
    const int n = nv(rng);
    for (int i = 0; i < n; ++i) g.vertices.push_back(Color("v" + std::to_string(i)));
    const int m = ne(rng);
    for (int i = 0; i < m; ++i) {
        Color from = g.vertices[static_cast<std::size_t>(pick(rng) % n)];
        Color to = g.vertices[static_cast<std::size_t>(pick(rng) % n)];
        g.edges.push_back(LabeledEdge{from, to, {Color(std::string(1, 'a' + static_cast<char>(lab(rng))))},
                                      {Color(std::string(1, 'x' + static_cast<char>(lab(rng))))},
                                      {i}});
    }
    return g;
}

} // namespace

TEST_CASE("to_graph on the thirteen-tile aperiodic set") {
    Document doc = parse("tile 2 1 2 3\ntile 3 1 2 2\ntile 3 2 2 3\ntile 1 2 1 2\n"
                         "tile 1 3 1 3\ntile 2 3 1 2\ntile 4 4 4 1\ntile 4 4 3 2\n"
                         "tile 5 4 2 1\ntile 5 4 2 4\ntile 5 5 4 1\ntile 5 5 3 2\n"
                         "tile 4 5 2 2\n");
    LabeledGraph g = to_graph(doc.tileset);
    CHECK(g.vertices.size() == 5);
    CHECK(g.edges.size() == 13);
    CHECK(g.one_labeled());
    // Two connected components, both strongly connected.
    auto classes = class_sets(scc(g));
    CHECK(classes == std::set<std::set<std::string>>{{"1", "2", "3"}, {"4", "5"}});
}

TEST_CASE("single tile gives one edge west to east") {
    Tileset ts = parse("tile a b n s\n").tileset;
    LabeledGraph g = to_graph(ts);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].from == Color("b"));
    CHECK(g.edges[0].to == Color("a"));
    CHECK(g.edges[0].north == std::vector<Color>{Color("n")});
    CHECK(g.edges[0].south == std::vector<Color>{Color("s")});
    CHECK(g.vertices.size() == 2);
}

TEST_CASE("worked example graph has nine vertices and twelve edges") {
    LabeledGraph g = to_graph(worked_example());
    CHECK(g.vertices.size() == 9);
    CHECK(g.edges.size() == 12);
}

TEST_CASE("scc of the worked example") {
    LabeledGraph g = to_graph(worked_example());
    auto classes = class_sets(scc(g));
    CHECK(classes == std::set<std::set<std::string>>{
                         {"1", "3"}, {"2", "4", "6"}, {"7", "8", "9"}, {"5"}});
}

TEST_CASE("scc trivia") {
    LabeledGraph g;
    g.vertices.push_back(Color("u"));
    CHECK(scc(g).classes.size() == 1);

    g.vertices.push_back(Color("v"));
    g.edges.push_back(LabeledEdge{Color("u"), Color("v"), {Color("a")}, {Color("b")}, {0}});
    g.edges.push_back(LabeledEdge{Color("v"), Color("u"), {Color("a")}, {Color("b")}, {1}});
    auto classes = class_sets(scc(g));
    CHECK(classes == std::set<std::set<std::string>>{{"u", "v"}});
}

TEST_CASE("scc agrees with exhaustive reachability on random graphs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 300; ++trial) {
        LabeledGraph g = random_graph(rng);
        CHECK(class_sets(scc(g)) == reachability_classes(g));
    }
}

TEST_CASE("pruning removes exactly the unreturnable edges of the worked example") {
    LabeledGraph g = to_graph(worked_example());
    PruneResult pr = prune_unreturnable(g);
    REQUIRE(pr.removedEdges.size() == 2);
    std::set<std::pair<std::string, std::string>> removed;
    for (const LabeledEdge& e : pr.removedEdges) removed.insert({e.from.str(), e.to.str()});
    CHECK(removed == std::set<std::pair<std::string, std::string>>{{"5", "3"}, {"4", "7"}});
    CHECK(pr.graph.vertices.size() == 8); // vertex 5 dropped
    CHECK(pr.graph.edges.size() == 10);
    CHECK_FALSE(pr.graph.has_vertex(Color("5")));
}

TEST_CASE("pruning leaves strongly connected graphs alone") {
    LabeledGraph g;
    g.vertices = {Color("u"), Color("v")};
    g.edges.push_back(LabeledEdge{Color("u"), Color("v"), {Color("a")}, {Color("b")}, {0}});
    g.edges.push_back(LabeledEdge{Color("v"), Color("u"), {Color("a")}, {Color("b")}, {1}});
    PruneResult pr = prune_unreturnable(g);
    CHECK(pr.removedEdges.empty());
    CHECK(pr.graph.edges.size() == 2);
}

TEST_CASE("pruning a single unreturnable edge empties the graph") {
    LabeledGraph g;
    g.vertices = {Color("u"), Color("v")};
    g.edges.push_back(LabeledEdge{Color("u"), Color("v"), {Color("a")}, {Color("b")}, {0}});
    PruneResult pr = prune_unreturnable(g);
    CHECK(pr.removedEdges.size() == 1);
    CHECK(pr.graph.vertices.empty());
    CHECK(pr.graph.edges.empty());
}

TEST_CASE("cycle class elimination on the worked example removes {1,3}") {
    PruneResult pr = prune_unreturnable(to_graph(worked_example()));
    EliminateResult er = eliminate_cycle_classes(pr.graph);
    CHECK(class_sets(er.removedClasses) == std::set<std::set<std::string>>{{"1", "3"}});
    CHECK(er.graph.vertices.size() == 6);
    CHECK(er.graph.edges.size() == 8);
}

TEST_CASE("a single self-loop vertex is a cycle class") {
    LabeledGraph g;
    g.vertices = {Color("u")};
    g.edges.push_back(LabeledEdge{Color("u"), Color("u"), {Color("a")}, {Color("b")}, {0}});
    EliminateResult er = eliminate_cycle_classes(g);
    CHECK(er.graph.vertices.empty());
    CHECK(er.removedClasses.size() == 1);
}

TEST_CASE("graphs without all-outdegree-one classes are unchanged") {
    LabeledGraph g;
    g.vertices = {Color("u")};
    g.edges.push_back(LabeledEdge{Color("u"), Color("u"), {Color("a")}, {Color("b")}, {0}});
    g.edges.push_back(LabeledEdge{Color("u"), Color("u"), {Color("c")}, {Color("d")}, {1}});
    EliminateResult er = eliminate_cycle_classes(g);
    CHECK(er.removedClasses.empty());
    CHECK(er.graph.edges.size() == 2);
}

TEST_CASE("contraction reproduces the worked example's final graph") {
    PruneResult pr = prune_unreturnable(to_graph(worked_example()));
    EliminateResult er = eliminate_cycle_classes(pr.graph);
    LabeledGraph g = contract(er.graph);

    REQUIRE(g.vertices.size() == 2);
    REQUIRE(g.edges.size() == 4);
    std::multiset<std::string> loops;
    auto word = [](const std::vector<Color>& w) {
        std::string s;
        for (const Color& c : w) s += c.str();
        return s;
    };
    for (const LabeledEdge& e : g.edges) {
        CHECK(e.from == e.to);
        loops.insert(e.from.str() + ":" + word(e.north) + "/" + word(e.south));
    }
    CHECK(loops == std::multiset<std::string>{"4:114/221", "4:14/31", "9:223/412", "9:423/112"});
}

TEST_CASE("contraction preserves e minus v and reaches e >= 2v per class") {
    // Triangle with a doubled edge.
    LabeledGraph g;
    for (const char* v : {"a", "b", "c"}) g.vertices.push_back(Color(v));
    auto edge = [](const char* f, const char* t, int i) {
        return LabeledEdge{Color(f), Color(t), {Color("n")}, {Color("s")}, {i}};
    };
    g.edges = {edge("a", "b", 0), edge("b", "c", 1), edge("c", "a", 2), edge("a", "b", 3)};
    LabeledGraph out = contract(g);
    CHECK(static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) ==
          static_cast<int>(out.edges.size()) - static_cast<int>(out.vertices.size()));
    ClassPartition part = scc(out);
    for (const auto& cls : part.classes) {
        int e = 0;
        for (const LabeledEdge& ed : out.edges)
            if (part.classOf.at(ed.from) == part.classOf.at(cls.front())) ++e;
        CHECK(e >= 2 * static_cast<int>(cls.size()));
    }
}

TEST_CASE("contract rejects graphs with cycle classes") {
    LabeledGraph g;
    g.vertices = {Color("u")};
    g.edges.push_back(LabeledEdge{Color("u"), Color("u"), {Color("a")}, {Color("b")}, {0}});
    CHECK_THROWS_AS(contract(g), std::invalid_argument);
}

TEST_CASE("wang_to_bars reproduces the four bars of the worked example") {
    ReductionOutcome out = wang_to_bars(worked_example());
    REQUIRE(out.barset.size() == 4);
    CHECK(out.quarterTurns == 0);

    Barset expected = parse("bar 4 4 1,1,4 2,2,1\n"
                            "bar 4 4 1,4 3,1\n"
                            "bar 9 9 2,2,3 4,1,2\n"
                            "bar 9 9 4,2,3 1,1,2\n")
                          .barset;
    std::multiset<std::string> got, want;
    for (int i = 0; i < 4; ++i) {
        got.insert(serialize(Barset(std::vector<WangBar>{out.barset[i]})));
        want.insert(serialize(Barset(std::vector<WangBar>{expected[i]})));
    }
    CHECK(got == want);
}

TEST_CASE("wang_to_bars keeps tiles as length-1 bars when nothing fires") {
    // One class {a,b} with four edges: e >= 2v already, west side maximal.
    Tileset ts = parse("tile b a x x\ntile a b x x\ntile b a y y\ntile a b y y\n").tileset;
    ReductionOutcome out = wang_to_bars(ts);
    CHECK(out.removedEdges.empty());
    CHECK(out.removedClasses.empty());
    REQUIRE(out.barset.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(out.barset[i].length() == 1);
}

TEST_CASE("wang_to_bars respects the 2k bound on random tilesets") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ntiles(1, 5), col(0, 3);
    int nontrivial = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<WangTile> tiles;
        const int n = ntiles(rng);
        for (int i = 0; i < n && static_cast<int>(tiles.size()) < n;) {
            WangTile t{Color("c" + std::to_string(col(rng))), Color("c" + std::to_string(col(rng))),
                       Color("c" + std::to_string(col(rng))), Color("c" + std::to_string(col(rng)))};
            if (std::find(tiles.begin(), tiles.end(), t) == tiles.end()) {
                tiles.push_back(t);
                ++i;
            } else {
                ++i; // collision: accept a smaller set
            }
        }
        Tileset ts(std::move(tiles));
        const int k = parameter(ts).parameter;
        ReductionOutcome out = wang_to_bars(ts);
        CHECK(out.barset.size() <= 2 * k);
        if (out.barset.size() > 0) ++nontrivial;
    }
    CHECK(nontrivial > 0);
}

TEST_CASE("provenance expands bars back to original tiles") {
    ReductionOutcome out = wang_to_bars(worked_example());
    const Tileset& canon = out.canonical;
    for (int i = 0; i < out.barset.size(); ++i) {
        const WangBar& b = out.barset[i];
        const auto& prov = out.provenance[static_cast<std::size_t>(i)];
        REQUIRE(static_cast<int>(prov.size()) == b.length());
        // Each bar cell carries the tile whose north/south labels it shows,
        // and consecutive tiles chain west to east.
        for (int j = 0; j < b.length(); ++j) {
            const WangTile& t = canon[prov[static_cast<std::size_t>(j)]];
            CHECK(t.north == b.north[static_cast<std::size_t>(j)]);
            CHECK(t.south == b.south[static_cast<std::size_t>(j)]);
            if (j > 0) CHECK(canon[prov[static_cast<std::size_t>(j - 1)]].east == t.west);
        }
        CHECK(canon[prov.front()].west == b.west);
        CHECK(canon[prov.back()].east == b.east);
    }
}

TEST_CASE("dot export lists every edge") {
    LabeledGraph g = to_graph(parse("tile a b n s\n").tileset);
    std::string dot = to_dot(g);
    CHECK(dot.find("\"b\" -> \"a\"") != std::string::npos);
    CHECK(dot.find("label=\"(n),(s)\"") != std::string::npos);
}
