#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "wangbars/encode.hpp"
#include "wangbars/graph.hpp"
#include "wangbars/io.hpp"
#include "wangbars/render.hpp"

using namespace wangbars;

TEST_CASE("parse a tile line in declared E W N S order") {
    Document doc = parse("tile 1 3 2 1\n");
    REQUIRE(doc.is_tileset());
    const WangTile& t = doc.tileset[0];
    CHECK(t.east == Color("1"));
    CHECK(t.west == Color("3"));
    CHECK(t.north == Color("2"));
    CHECK(t.south == Color("1"));
}

TEST_CASE("parse a bar line with comma words") {
    Document doc = parse("bar 0 0 1,0,2 0,1,0\n");
    REQUIRE_FALSE(doc.is_tileset());
    const WangBar& b = doc.barset[0];
    CHECK(b.east == Color("0"));
    CHECK(b.west == Color("0"));
    CHECK(b.length() == 3);
    CHECK(b.north[0] == Color("1"));
    CHECK(b.south[2] == Color("0"));
}

TEST_CASE("comments and blank lines are skipped") {
    Document doc = parse("# heading\n\n  \ntile a b c d\n# trailing\n");
    CHECK(doc.tileset.size() == 1);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse("tile a b c d\nbar 0 0 a a\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("bar line in a tile file") != std::string::npos);
    }

    CHECK_THROWS_WITH_AS(parse("bar 0 0 a a,b\n"), "line 1: unequal word lengths", ParseError);
    CHECK_THROWS_AS(parse("tile a b c\n"), ParseError);
    CHECK_THROWS_AS(parse("tiles a b c d\n"), ParseError);
    CHECK_THROWS_AS(parse("tile a b c d\ntile a b c d\n"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("tile @x b c d\n"), ParseError);
    CHECK_THROWS_AS(parse("bar 0 0 a,@y a,b\n"), ParseError);
    CHECK_THROWS_AS(parse("tile a- b c d\n"), ParseError);
}

TEST_CASE("serialize is canonical and round-trips") {
    const std::string text = "tile 1 3 2 1\ntile a b c d\n";
    Document doc = parse(text);
    CHECK(serialize(doc) == text);

    const std::string bars = "bar 0 0 1,0,2 0,1,0\nbar 1 0 1,0 2,1\n";
    CHECK(serialize(parse(bars)) == bars);
}

TEST_CASE("round-trip property on random documents") {
    std::mt19937 rng(20240101);
    std::uniform_int_distribution<int> kind(0, 1), n(1, 6), len(1, 4), col(0, 4);
    auto token = [&] { return "t" + std::to_string(col(rng)); };
    for (int trial = 0; trial < 200; ++trial) {
        std::string text;
        if (kind(rng) == 0) {
            std::set<std::string> seen;
            const int k = n(rng);
            for (int i = 0; i < k; ++i) {
                std::string line =
                    "tile " + token() + " " + token() + " " + token() + " " + token() + "\n";
                if (seen.insert(line).second) text += line;
            }
        } else {
            std::set<std::string> seen;
            const int k = n(rng);
            for (int i = 0; i < k; ++i) {
                const int L = len(rng);
                std::string nw, sw;
                for (int j = 0; j < L; ++j) {
                    nw += (j ? "," : "") + token();
                    sw += (j ? "," : "") + token();
                }
                std::string line = "bar " + token() + " " + token() + " " + nw + " " + sw + "\n";
                if (seen.insert(line).second) text += line;
            }
        }
        Document doc = parse(text);
        CHECK(serialize(doc) == text);
        // parse(serialize(d)) == d
        Document again = parse(serialize(doc));
        CHECK(serialize(again) == serialize(doc));
    }
}

TEST_CASE("svg output is deterministic") {
    Tileset ts = parse("tile a a b b\n").tileset;
    Patch p(1, 1);
    std::string a = render_svg(p, ts);
    CHECK(a == render_svg(p, ts));
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(a.find("NaN") == std::string::npos);
}

TEST_CASE("bar patch svg marks bar boundaries") {
    Barset bs = parse("bar 0 0 a,b x,y\n").barset;
    BarPatch bp(2, 1);
    bp.set(0, 0, 0, 1);
    bp.set(1, 0, 0, 2);
    std::string svg = render_svg(bp, bs);
    CHECK(svg == render_svg(bp, bs));
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("torus svg unrolls the requested number of repeats") {
    Tileset ts = parse("tile a a b b\n").tileset;
    TorusTiling tt(1, 1);
    std::string svg = render_svg(tt, ts, 3);
    CHECK(svg.find("width=\"144\"") != std::string::npos); // 3 cells * 48
}

TEST_CASE("ascii renders are line-per-row") {
    Tileset ts = parse("tile a a b b\n").tileset;
    Patch p(2, 2);
    CHECK(render_ascii(p, ts) == "0 0\n0 0\n");
    TorusTiling tt(2, 1);
    CHECK(render_ascii(tt) == "0 0\n");
    Barset bs = parse("bar 0 0 a x\n").barset;
    BarPatch bp(1, 1);
    CHECK(render_ascii(bp, bs) == "0:1\n");
}

TEST_CASE("reduction output serializes to a stable golden file") {
    Tileset I = parse("tile 1 3 2 3\ntile 3 1 2 2\ntile 3 5 2 3\ntile 2 6 1 2\n"
                      "tile 2 4 1 3\ntile 6 4 1 2\ntile 4 2 4 1\ntile 7 4 3 2\n"
                      "tile 7 8 2 1\ntile 8 9 2 4\ntile 8 9 4 1\ntile 9 7 3 2\n")
                    .tileset;
    ReductionOutcome out = wang_to_bars(I);
    CHECK(serialize(out.barset) == "bar 4 4 1,4 3,1\n"
                                   "bar 4 4 1,1,4 2,2,1\n"
                                   "bar 9 9 2,2,3 4,1,2\n"
                                   "bar 9 9 4,2,3 1,1,2\n");
}
