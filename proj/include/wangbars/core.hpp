#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wangbars/color.hpp"

namespace wangbars {

// A unit square with a color on each edge, as the quadruplet (e, w, n, s).
struct WangTile {
    Color east, west, north, south;

    bool operator==(const WangTile& o) const {
        return east == o.east && west == o.west && north == o.north && south == o.south;
    }
};

// A horizontally elongated tile: single east/west colors, equal-length
// north/south color words. A tile is exactly a bar of length 1.
struct WangBar {
    Color east, west;
    std::vector<Color> north, south;

    WangBar(Color e, Color w, std::vector<Color> n, std::vector<Color> s)
        : east(e), west(w), north(std::move(n)), south(std::move(s)) {
        if (north.size() != south.size() || north.empty())
            throw std::invalid_argument("bar words must be nonempty and of equal length");
    }

    int length() const { return static_cast<int>(north.size()); }

    bool operator==(const WangBar& o) const {
        return east == o.east && west == o.west && north == o.north && south == o.south;
    }
};

inline WangBar bar_of_tile(const WangTile& t) {
    return WangBar(t.east, t.west, {t.north}, {t.south});
}

// Ordered collection of distinct tiles. Duplicates are rejected: sets are
// the underlying model, the order only fixes indices and file layout.
class Tileset {
public:
    Tileset() = default;
    explicit Tileset(std::vector<WangTile> tiles) : tiles_(std::move(tiles)) {
        for (std::size_t i = 0; i < tiles_.size(); ++i)
            for (std::size_t j = i + 1; j < tiles_.size(); ++j)
                if (tiles_[i] == tiles_[j])
                    throw std::invalid_argument("duplicate tile at indices " + std::to_string(i) +
                                                " and " + std::to_string(j));
    }

    int size() const { return static_cast<int>(tiles_.size()); }
    bool empty() const { return tiles_.empty(); }
    const WangTile& operator[](int i) const { return tiles_.at(static_cast<std::size_t>(i)); }
    const std::vector<WangTile>& tiles() const { return tiles_; }

private:
    std::vector<WangTile> tiles_;
};

class Barset {
public:
    Barset() = default;
    explicit Barset(std::vector<WangBar> bars) : bars_(std::move(bars)) {
        for (std::size_t i = 0; i < bars_.size(); ++i)
            for (std::size_t j = i + 1; j < bars_.size(); ++j)
                if (bars_[i] == bars_[j])
                    throw std::invalid_argument("duplicate bar at indices " + std::to_string(i) +
                                                " and " + std::to_string(j));
    }

    int size() const { return static_cast<int>(bars_.size()); }
    bool empty() const { return bars_.empty(); }
    const WangBar& operator[](int i) const { return bars_.at(static_cast<std::size_t>(i)); }
    const std::vector<WangBar>& bars() const { return bars_; }

private:
    std::vector<WangBar> bars_;
};

// A finite rectangular window of a tile assignment. Total: every cell holds
// a tileset index. (x, y) with 0 <= x < width, 0 <= y < height; y grows
// northward.
struct Patch {
    int width = 0, height = 0;
    std::vector<int> cells; // row-major: cells[y * width + x]

    Patch() = default;
    Patch(int w, int h) : width(w), height(h), cells(static_cast<std::size_t>(w) * h, 0) {
        if (w <= 0 || h <= 0) throw std::invalid_argument("patch dimensions must be positive");
    }

    int& at(int x, int y) { return cells[static_cast<std::size_t>(y) * width + x]; }
    int at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
};

// A finite window of a bar tiling: per cell, the bar covering it and the
// 1-based position inside that bar. Bars may be truncated at the left and
// right window edges (a window is a partial view of a plane tiling).
struct BarPatch {
    int width = 0, height = 0;
    std::vector<int> bar; // row-major bar indices
    std::vector<int> pos; // row-major 1-based positions

    BarPatch() = default;
    BarPatch(int w, int h)
        : width(w), height(h), bar(static_cast<std::size_t>(w) * h, 0),
          pos(static_cast<std::size_t>(w) * h, 1) {
        if (w <= 0 || h <= 0) throw std::invalid_argument("patch dimensions must be positive");
    }

    int barAt(int x, int y) const { return bar[static_cast<std::size_t>(y) * width + x]; }
    int posAt(int x, int y) const { return pos[static_cast<std::size_t>(y) * width + x]; }
    void set(int x, int y, int b, int p) {
        bar[static_cast<std::size_t>(y) * width + x] = b;
        pos[static_cast<std::size_t>(y) * width + x] = p;
    }
};

struct Violation {
    int x = 0, y = 0;
    std::string kind; // "horizontal", "vertical", "interior continuation", ...
    std::string detail;
};

// Tile count, per-side distinct color counts, their maximum c, and the
// difference n - c. All four counts are kept so a rotation step is auditable.
struct ParameterReport {
    int n = 0;
    int eastColors = 0, westColors = 0, northColors = 0, southColors = 0;
    int c = 0;
    int parameter = 0;
};

inline ParameterReport parameter(const Tileset& ts) {
    if (ts.empty()) throw std::invalid_argument("empty input");
    std::set<Color> e, w, n, s;
    for (const WangTile& t : ts.tiles()) {
        e.insert(t.east);
        w.insert(t.west);
        n.insert(t.north);
        s.insert(t.south);
    }
    ParameterReport r;
    r.n = ts.size();
    r.eastColors = static_cast<int>(e.size());
    r.westColors = static_cast<int>(w.size());
    r.northColors = static_cast<int>(n.size());
    r.southColors = static_cast<int>(s.size());
    r.c = std::max({r.eastColors, r.westColors, r.northColors, r.southColors});
    r.parameter = r.n - r.c;
    assert(r.c <= r.n && r.parameter >= 0);
    return r;
}

// One counterclockwise quarter turn maps (e, w, n, s) -> (n, s, w, e).
// Any consistent convention works; everything downstream relies only on
// consistency and on the parameter being rotation-invariant.
inline WangTile rotate(const WangTile& t, int quarterTurns) {
    WangTile r = t;
    for (int k = ((quarterTurns % 4) + 4) % 4; k > 0; --k)
        r = WangTile{r.north, r.south, r.west, r.east};
    return r;
}

inline Tileset rotate(const Tileset& ts, int quarterTurns) {
    std::vector<WangTile> out;
    out.reserve(ts.tiles().size());
    for (const WangTile& t : ts.tiles()) out.push_back(rotate(t, quarterTurns));
    return Tileset(std::move(out));
}

// Smallest k in 0..3 such that after k quarter turns the west side carries
// the maximal number of distinct colors.
inline int canonical_west_turns(const Tileset& ts) {
    ParameterReport r = parameter(ts);
    const int counts[4] = {r.westColors, r.southColors, r.eastColors, r.northColors};
    // One CCW turn moves the old south side to west, then east, then north.
    for (int k = 0; k < 4; ++k)
        if (counts[k] == r.c) return k;
    assert(false);
    return 0;
}

inline Tileset canonical_west(const Tileset& ts) { return rotate(ts, canonical_west_turns(ts)); }

inline std::vector<Violation> validate_patch(const Patch& p, const Tileset& ts) {
    std::vector<Violation> out;
    for (int idx : p.cells)
        if (idx < 0 || idx >= ts.size())
            throw std::out_of_range("tile index " + std::to_string(idx) + " out of range");
    for (int y = 0; y < p.height; ++y) {
        for (int x = 0; x < p.width; ++x) {
            const WangTile& t = ts[p.at(x, y)];
            if (x + 1 < p.width) {
                const WangTile& r = ts[p.at(x + 1, y)];
                if (t.east != r.west)
                    out.push_back({x, y, "horizontal",
                                   "east of (" + std::to_string(x) + "," + std::to_string(y) +
                                       ")=" + t.east.str() + " vs west of east neighbor=" +
                                       r.west.str()});
            }
            if (y + 1 < p.height) {
                const WangTile& u = ts[p.at(x, y + 1)];
                if (t.north != u.south)
                    out.push_back({x, y, "vertical",
                                   "north of (" + std::to_string(x) + "," + std::to_string(y) +
                                       ")=" + t.north.str() + " vs south of north neighbor=" +
                                       u.south.str()});
            }
        }
    }
    return out;
}

// Checks the four conditions of a bar tiling on every cell whose relevant
// neighbor lies inside the window. Bars truncated at the window's left or
// right edge are fine: posAt may start above 1 at x = 0 and stop short of
// the bar length at x = width - 1.
inline std::vector<Violation> validate_bar_patch(const BarPatch& bp, const Barset& bs) {
    std::vector<Violation> out;
    for (int b : bp.bar)
        if (b < 0 || b >= bs.size())
            throw std::out_of_range("bar index " + std::to_string(b) + " out of range");
    auto cellstr = [](int x, int y) {
        return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    };
    for (int y = 0; y < bp.height; ++y) {
        for (int x = 0; x < bp.width; ++x) {
            const WangBar& b = bs[bp.barAt(x, y)];
            const int p = bp.posAt(x, y);
            if (p < 1 || p > b.length()) {
                out.push_back({x, y, "position range",
                               "pos " + std::to_string(p) + " outside 1.." +
                                   std::to_string(b.length()) + " at " + cellstr(x, y)});
                continue;
            }
            if (x + 1 < bp.width) {
                const WangBar& r = bs[bp.barAt(x + 1, y)];
                const int rp = bp.posAt(x + 1, y);
                if (p < b.length()) {
                    if (bp.barAt(x + 1, y) != bp.barAt(x, y) || rp != p + 1)
                        out.push_back({x, y, "interior continuation",
                                       "bar must continue east of " + cellstr(x, y)});
                } else {
                    if (rp != 1)
                        out.push_back({x, y, "bar start",
                                       "a new bar must start east of " + cellstr(x, y)});
                    else if (b.east != r.west)
                        out.push_back({x, y, "horizontal",
                                       "east color " + b.east.str() + " vs west color " +
                                           r.west.str() + " at " + cellstr(x, y)});
                }
            }
            if (y + 1 < bp.height) {
                const WangBar& u = bs[bp.barAt(x, y + 1)];
                const int up = bp.posAt(x, y + 1);
                if (up >= 1 && up <= u.length() &&
                    b.north[static_cast<std::size_t>(p - 1)] !=
                        u.south[static_cast<std::size_t>(up - 1)])
                    out.push_back({x, y, "vertical",
                                   "north " + b.north[static_cast<std::size_t>(p - 1)].str() +
                                       " vs south " + u.south[static_cast<std::size_t>(up - 1)].str() +
                                       " at " + cellstr(x, y)});
            }
        }
    }
    return out;
}

// Result of splitting bars into tiles: each bar of length L becomes L tiles
// chained by L - 1 fresh '@'-colors, so the provenance map is invertible.
struct SplitResult {
    Tileset tiles;
    std::vector<std::pair<int, int>> origin; // tile index -> (bar index, 1-based position)
    std::vector<int> firstTile;              // bar index -> index of its position-1 tile

    int tile_of(int barIndex, int position) const {
        return firstTile[static_cast<std::size_t>(barIndex)] + position - 1;
    }
};

// Wang bars reduce to Wang tiles by cutting every bar into unit cells.
// Fresh seam colors are "@b<bar>_<seam>"; '@' never occurs in parsed input,
// so they collide with nothing.
inline SplitResult split_bars(const Barset& bs) {
    if (bs.empty()) throw std::invalid_argument("empty input");
    SplitResult res;
    std::vector<WangTile> tiles;
    for (int bi = 0; bi < bs.size(); ++bi) {
        const WangBar& b = bs[bi];
        res.firstTile.push_back(static_cast<int>(tiles.size()));
        const int len = b.length();
        std::vector<Color> seams;
        for (int j = 1; j < len; ++j)
            seams.push_back(Color("@b" + std::to_string(bi) + "_" + std::to_string(j)));
        for (int j = 1; j <= len; ++j) {
            Color west = (j == 1) ? b.west : seams[static_cast<std::size_t>(j - 2)];
            Color east = (j == len) ? b.east : seams[static_cast<std::size_t>(j - 1)];
            tiles.push_back(WangTile{east, west, b.north[static_cast<std::size_t>(j - 1)],
                                     b.south[static_cast<std::size_t>(j - 1)]});
            res.origin.emplace_back(bi, j);
        }
    }
    res.tiles = Tileset(std::move(tiles));
    return res;
}

} // namespace wangbars
