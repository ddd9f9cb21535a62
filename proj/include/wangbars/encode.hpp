#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wangbars/core.hpp"
#include "wangbars/search.hpp"

namespace wangbars {

// Sizes of the 44-bar encoding of a tileset with n tiles and colors
// renumbered 1..C. unit is the length of one unary tile block; armLen the
// length of each horizontal arm of the box.
struct EncodingParams {
    int n = 0;
    int C = 0;
    int unit = 0;   // 2C + 1
    int armLen = 0; // (2C + 1)(n - 1)

    EncodingParams() = default;
    EncodingParams(int n_, int C_) : n(n_), C(C_), unit(2 * C_ + 1), armLen((2 * C_ + 1) * (n_ - 1)) {
        if (n < 1 || C < 1) throw std::invalid_argument("need at least one tile and one color");
    }

    int boxWidth() const { return 2 * armLen + 3; }
    int contentLength() const { return n * unit + 2; }
    int macroWidth() const { return boxWidth() + unit; }      // horizontal box spacing
    int macroShear() const { return armLen + C + 2; }         // = macroWidth()/2, shift per row up
};

namespace enc {

// Marker colors. '@' keeps them out of any parsed tileset's color space.
inline Color blank() { return Color("@w"); }   // exposed empty cell edge
inline Color nzero() { return Color("@n0"); }  // unary filler, north words
inline Color szero() { return Color("@s0"); }  // unary filler, south words
inline Color tick() { return Color("@yk"); }   // handle attachment marker
inline Color anchor() { return Color("@bx"); } // box attachment marker
inline Color lid() { return Color("@lg"); }    // underside of the box top
inline Color floor_() { return Color("@fg"); } // upper side of the box bottom
inline Color band() { return Color("@rd"); }   // interface right below a box bottom
inline Color shared_ew() { return Color("@ew"); }

// Identities of the 44 bars, in emission order.
enum BarId : int {
    kSpacerLo = 0, // 2-cell column over an exposed north zero
    kSpacerHi,
    kRiserLo, // 3-cell column over a north zero, reaching the band
    kRiserMid,
    kRiserHi,
    kDropLo, // 2-cell column under an exposed south zero
    kDropHi,
    kSinkerLo, // 3-cell column under a south zero, reaching lid blanks
    kSinkerMid,
    kSinkerHi,
    kCapZero, // readers between content north and a lid arm
    kCapAnchor,
    kCapTick,
    kBaseZero, // readers between a floor arm and content south
    kBaseAnchor,
    kBaseTick,
    kBoxFloor, // the box: bottom, three center bars, top, two stems
    kBoxRow1,
    kBoxRow2,
    kBoxRow3,
    kBoxLid,
    kStemDn1, // hangs from the floor down to a content anchor (bottom..top)
    kStemDn2,
    kStemDn3,
    kStemUp1, // stands on the lid up to the next content anchor
    kStemUp2,
    kStemUp3,
    kFillerLo, // left-leaning three-row staircase filling box arms
    kFillerMid,
    kFillerHi,
    kFillerSymLo, // its mirror image
    kFillerSymMid,
    kFillerSymHi,
    kHandleLo, // left-reaching handle: 2 up, long bar, 2 up again
    kHandleMid,
    kHandleBar,
    kHandleHi1,
    kHandleHi2,
    kHandleSymLo, // right-reaching mirror
    kHandleSymMid,
    kHandleSymBar,
    kHandleSymHi1,
    kHandleSymHi2,
    kContent = 43,
};

} // namespace enc

// The finished barset plus everything needed to audit it.
struct EncodedBarset {
    EncodingParams params;
    Barset all; // exactly 44 bars, indexed by enc::BarId
    Color sharedEastWest = enc::shared_ew();
    std::vector<Color> pairingColors;    // each occurs on exactly two bar sides
    std::vector<Color> renumbered;       // number 1..C -> original color
    std::map<Color, int> colorNumber;    // original color -> 1..C

    const WangBar& content() const { return all[enc::kContent]; }
};

// (n_t, s_t) for a tile with (north, west, east, south) numbered (a, b, c, d):
// the colors in unary, one block of length 2C+1 per side pair.
inline std::pair<std::vector<Color>, std::vector<Color>> unary_words(int a, int b, int c, int d,
                                                                     int C) {
    for (int v : {a, b, c, d})
        if (v < 1 || v > C) throw std::out_of_range("color number outside 1..C");
    auto word = [C](Color zero, int first, int second) {
        std::vector<Color> w;
        w.reserve(static_cast<std::size_t>(2 * C + 1));
        for (int i = 1; i <= C; ++i) w.push_back(i == first ? enc::tick() : zero);
        w.push_back(enc::anchor());
        for (int i = 1; i <= C; ++i) w.push_back(i == second ? enc::tick() : zero);
        return w;
    };
    return {word(enc::nzero(), a, b), word(enc::szero(), c, d)};
}

namespace enc {

// Deterministic 1..C numbering: first appearance, scanning tiles in order
// and sides in (e, w, n, s) order.
inline std::pair<std::vector<Color>, std::map<Color, int>> renumber_colors(const Tileset& ts) {
    std::vector<Color> order;
    std::map<Color, int> num;
    auto see = [&](const Color& c) {
        if (num.emplace(c, static_cast<int>(order.size()) + 1).second) order.push_back(c);
    };
    for (const WangTile& t : ts.tiles()) {
        see(t.east);
        see(t.west);
        see(t.north);
        see(t.south);
    }
    return {order, num};
}

struct TileNumbers {
    int a, b, c, d; // north, west, east, south
};

inline TileNumbers numbers_of(const WangTile& t, const std::map<Color, int>& num) {
    return {num.at(t.north), num.at(t.west), num.at(t.east), num.at(t.south)};
}

} // namespace enc

// The one tileset-dependent bar: all (n_t, s_t) blocks concatenated in tile
// order, one blank cell added at each end.
inline WangBar build_content(const Tileset& ts, const EncodingParams& params,
                             const std::map<Color, int>& colorNumber) {
    std::vector<Color> north{enc::blank()}, south{enc::blank()};
    for (const WangTile& t : ts.tiles()) {
        enc::TileNumbers tn = enc::numbers_of(t, colorNumber);
        auto [nt, st] = unary_words(tn.a, tn.b, tn.c, tn.d, params.C);
        north.insert(north.end(), nt.begin(), nt.end());
        south.insert(south.end(), st.begin(), st.end());
    }
    north.push_back(enc::blank());
    south.push_back(enc::blank());
    WangBar bar(enc::shared_ew(), enc::shared_ew(), std::move(north), std::move(south));
    assert(bar.length() == params.contentLength());
    return bar;
}

// The 43 bars that depend only on n and C: the 16 single-cell columns and
// readers, the 11-bar box, the 6 filler bars, and the 10 handle bars.
// pairingOut collects the colors that must occur on exactly two bar sides.
inline std::vector<WangBar> build_fixed_bars(const EncodingParams& params,
                                             std::vector<Color>* pairingOut = nullptr) {
    const int A = params.armLen;
    const int u = params.unit;
    const Color ew = enc::shared_ew();
    const Color W_ = enc::blank(), N0 = enc::nzero(), S0 = enc::szero(), YK = enc::tick(),
                BX = enc::anchor(), LG = enc::lid(), FG = enc::floor_(), RD = enc::band();

    std::vector<Color> pairing;
    auto pc = [&pairing](const char* token) {
        Color c(token);
        pairing.push_back(c);
        return c;
    };
    const Color sp = pc("@sp");
    const Color ri1 = pc("@ri1"), ri2 = pc("@ri2");
    const Color dp = pc("@dp");
    const Color sk1 = pc("@sk1"), sk2 = pc("@sk2");
    const Color ld1 = pc("@ld1"), ld2 = pc("@ld2"), ld3 = pc("@ld3");
    const Color bx1 = pc("@bx1"), bx2 = pc("@bx2"), bx3 = pc("@bx3"), bx4 = pc("@bx4");
    const Color lu0 = pc("@lu0"), lu1 = pc("@lu1"), lu2 = pc("@lu2");
    const Color fl1 = pc("@fl1"), fl2 = pc("@fl2"), fr1 = pc("@fr1"), fr2 = pc("@fr2");
    const Color hl1 = pc("@hl1"), hl2 = pc("@hl2"), hl3 = pc("@hl3"), hl4 = pc("@hl4");
    const Color hr1 = pc("@hr1"), hr2 = pc("@hr2"), hr3 = pc("@hr3"), hr4 = pc("@hr4");

    auto unit1 = [&ew](Color n, Color s) {
        return WangBar(ew, ew, std::vector<Color>{n}, std::vector<Color>{s});
    };
    auto rep = [](Color c, int k) { return std::vector<Color>(static_cast<std::size_t>(k), c); };
    auto cat = [](std::vector<Color> a, const std::vector<Color>& b) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
    };

    std::vector<WangBar> bars;
    bars.reserve(43);

    // 16 tileset-independent single-cell bars.
    bars.push_back(unit1(sp, N0));  // kSpacerLo
    bars.push_back(unit1(W_, sp));  // kSpacerHi
    bars.push_back(unit1(ri1, N0)); // kRiserLo
    bars.push_back(unit1(ri2, ri1));
    bars.push_back(unit1(RD, ri2));
    bars.push_back(unit1(dp, RD)); // kDropLo
    bars.push_back(unit1(S0, dp));
    bars.push_back(unit1(sk1, W_)); // kSinkerLo
    bars.push_back(unit1(sk2, sk1));
    bars.push_back(unit1(S0, sk2));
    bars.push_back(unit1(LG, N0)); // kCapZero
    bars.push_back(unit1(LG, BX));
    bars.push_back(unit1(LG, YK));
    bars.push_back(unit1(S0, FG)); // kBaseZero
    bars.push_back(unit1(BX, FG));
    bars.push_back(unit1(YK, FG));

    // The box. Floor and lid are 2A+3 long with a 3-cell center; the stems
    // are 3-cell columns through which a box hangs onto the content below
    // and carries the content above.
    bars.emplace_back(ew, ew, // kBoxFloor
                      cat(cat(rep(FG, A), rep(bx1, 3)), rep(FG, A)),
                      cat(cat(rep(RD, A + 1), rep(ld3, 1)), rep(RD, A + 1)));
    bars.emplace_back(ew, ew, std::vector<Color>{W_, bx2, W_}, rep(bx1, 3)); // kBoxRow1
    bars.push_back(unit1(bx3, bx2));                                         // kBoxRow2
    bars.emplace_back(ew, ew, rep(bx4, 3), std::vector<Color>{W_, bx3, W_}); // kBoxRow3
    bars.emplace_back(ew, ew,                                                // kBoxLid
                      cat(cat(rep(W_, A + 1), rep(lu0, 1)), rep(W_, A + 1)),
                      cat(cat(rep(LG, A), rep(bx4, 3)), rep(LG, A)));
    bars.push_back(unit1(ld1, BX)); // kStemDn1 (bottom of the hanging stem)
    bars.push_back(unit1(ld2, ld1));
    bars.push_back(unit1(ld3, ld2));
    bars.push_back(unit1(lu1, lu0)); // kStemUp1 (bottom of the standing stem)
    bars.push_back(unit1(lu2, lu1));
    bars.push_back(unit1(BX, lu2));

    // Fillers: three rows of length 2C+1 each, middle row shifted one cell
    // (left for the plain filler, right for the mirrored one). The blank
    // ends are what neighbouring fillers, box centers and content ends see.
    bars.emplace_back(ew, ew, cat(rep(fl1, u - 1), rep(W_, 1)), rep(FG, u)); // kFillerLo
    bars.emplace_back(ew, ew, cat(rep(W_, 1), rep(fl2, u - 1)),
                      cat(rep(W_, 1), rep(fl1, u - 1)));                     // kFillerMid
    bars.emplace_back(ew, ew, rep(LG, u), cat(rep(fl2, u - 1), rep(W_, 1))); // kFillerHi
    bars.emplace_back(ew, ew, cat(rep(W_, 1), rep(fr1, u - 1)), rep(FG, u)); // kFillerSymLo
    bars.emplace_back(ew, ew, cat(rep(fr2, u - 1), rep(W_, 1)),
                      cat(rep(fr1, u - 1), rep(W_, 1)));                     // kFillerSymMid
    bars.emplace_back(ew, ew, rep(LG, u), cat(rep(W_, 1), rep(fr2, u - 1))); // kFillerSymHi

    // Handles: a 2-cell column on a content tick, a bar of length A+2
    // reaching over a whole arm, and a 2-cell column up to the next
    // content's tick, armLen+1 cells to the side.
    bars.push_back(unit1(hl1, YK)); // kHandleLo
    bars.push_back(unit1(hl2, hl1));
    bars.emplace_back(ew, ew, cat(rep(hl3, 1), rep(RD, A + 1)),
                      cat(rep(W_, A + 1), rep(hl2, 1))); // kHandleBar
    bars.push_back(unit1(hl4, hl3));
    bars.push_back(unit1(YK, hl4));
    bars.push_back(unit1(hr1, YK)); // kHandleSymLo
    bars.push_back(unit1(hr2, hr1));
    bars.emplace_back(ew, ew, cat(rep(RD, A + 1), rep(hr3, 1)),
                      cat(rep(hr2, 1), rep(W_, A + 1))); // kHandleSymBar
    bars.push_back(unit1(hr4, hr3));
    bars.push_back(unit1(YK, hr4));

    assert(bars.size() == 43);
    if (pairingOut) *pairingOut = std::move(pairing);
    return bars;
}

inline EncodedBarset encode44(const Tileset& ts) {
    if (ts.empty()) throw std::invalid_argument("empty input");
    EncodedBarset enc;
    auto [order, num] = enc::renumber_colors(ts);
    enc.renumbered = order;
    enc.colorNumber = num;
    enc.params = EncodingParams(ts.size(), static_cast<int>(order.size()));

    std::vector<WangBar> bars = build_fixed_bars(enc.params, &enc.pairingColors);
    bars.push_back(build_content(ts, enc.params, enc.colorNumber));
    enc.all = Barset(std::move(bars));
    assert(enc.all.size() == 44);
    return enc;
}

namespace enc {

// Where the simulated plane tiling places bars. Boxes of macro-row J start
// at x = K*width + J*shear for integer K, with their floor on bar row 6J.
// The content in the gap right of box K displays the simulated tile at
// (-K - J, -K): sliding the content chooses which unary block sits in the
// exposed chimney between two boxes, and the handles carry its tick marks
// to the next macro-row, which is how edge matching of the simulated tiles
// is enforced.
struct Layout {
    const Tileset& ts;
    const TorusTiling& torus;
    EncodingParams params;
    std::map<Color, int> colorNumber;

    static long floordiv(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
    static long floormod(long a, long b) { return a - floordiv(a, b) * b; }

    // Tileset index (0-based) displayed in gap K of macro-row J.
    int displayed(long K, long J) const {
        const int sx = static_cast<int>(floormod(-K - J, torus.p));
        const int sy = static_cast<int>(floormod(-K, torus.q));
        return torus.at(sx, sy);
    }

    struct Cell {
        int bar;
        int pos;
    };

    Cell at(long x, long y) const {
        const int A = params.armLen, u = params.unit, C = params.C, n = params.n;
        const long W = params.macroWidth(), S = params.macroShear();
        const long J = floordiv(y, 6);
        const int rr = static_cast<int>(y - 6 * J);
        const long rel = x - J * S;

        auto gapAt = [&](long anchor, long* zeta) {
            const long K = floordiv(rel - anchor, W);
            *zeta = rel - anchor - K * W;
            return K;
        };
        auto tileData = [&](long K) {
            const int idx = displayed(K, J);
            TileNumbers tn = numbers_of(ts[idx], colorNumber);
            return std::pair<int, TileNumbers>(idx, tn);
        };

        switch (rr) {
        case 0: {
            long z;
            const long K = gapAt(0, &z);
            if (z < params.boxWidth()) return {kBoxFloor, static_cast<int>(z) + 1};
            const int rho = static_cast<int>(z - params.boxWidth()) + 1; // 1..u
            auto [idx, tn] = tileData(K);
            (void)idx;
            if (rho < tn.c) return {kDropLo, 1};
            if (rho == tn.c) return {kHandleSymHi1, 1};
            if (rho <= C) return {kSinkerMid, 1};
            if (rho == C + 1) return {kStemUp2, 1};
            if (rho < C + 1 + tn.d) return {kSinkerMid, 1};
            if (rho == C + 1 + tn.d) return {kHandleHi1, 1};
            return {kDropLo, 1};
        }
        case 1:
        case 3: {
            const bool lower = (rr == 1);
            long z;
            const long K = gapAt(A, &z);
            if (z < 3) return {lower ? kBoxRow1 : kBoxRow3, static_cast<int>(z) + 1};
            auto [idx, tn] = tileData(K);
            const int i1 = idx + 1;
            const long f = n - i1;
            if (z < 3 + f * u)
                return {lower ? kFillerLo : kFillerHi, static_cast<int>((z - 3) % u) + 1};
            if (z < 3 + f * u + static_cast<long>(n) * u) {
                const long off = z - (3 + f * u); // 0-based within the content interior
                const int block = static_cast<int>(off / u) + 1;
                const int rho = static_cast<int>(off % u) + 1;
                if (block == i1) {
                    // The selected block: the chimney machinery.
                    if (lower) {
                        if (rho < tn.c) return {kDropHi, 1};
                        if (rho == tn.c) return {kHandleSymHi2, 1};
                        if (rho <= C) return {kSinkerHi, 1};
                        if (rho == C + 1) return {kStemUp3, 1};
                        if (rho < C + 1 + tn.d) return {kSinkerHi, 1};
                        if (rho == C + 1 + tn.d) return {kHandleHi2, 1};
                        return {kDropHi, 1};
                    }
                    if (rho < tn.a) return {kSpacerLo, 1};
                    if (rho == tn.a) return {kHandleLo, 1};
                    if (rho <= C) return {kRiserLo, 1};
                    if (rho == C + 1) return {kStemDn1, 1};
                    if (rho < C + 1 + tn.b) return {kRiserLo, 1};
                    if (rho == C + 1 + tn.b) return {kHandleSymLo, 1};
                    return {kSpacerLo, 1};
                }
                // A passive block: single-cell readers against the box arms.
                TileNumbers bn = numbers_of(ts[block - 1], colorNumber);
                if (lower) {
                    if (rho == bn.c || rho == C + 1 + bn.d) return {kBaseTick, 1};
                    if (rho == C + 1) return {kBaseAnchor, 1};
                    return {kBaseZero, 1};
                }
                if (rho == bn.a || rho == C + 1 + bn.b) return {kCapTick, 1};
                if (rho == C + 1) return {kCapAnchor, 1};
                return {kCapZero, 1};
            }
            const long off = z - (3 + f * u + static_cast<long>(n) * u);
            return {lower ? kFillerSymLo : kFillerSymHi, static_cast<int>(off % u) + 1};
        }
        case 2: {
            long z;
            const long K = gapAt(A + 1, &z);
            if (z == 0) return {kBoxRow2, 1};
            auto [idx, tn] = tileData(K);
            (void)tn;
            const long f = n - (idx + 1);
            if (z < 1 + f * u) return {kFillerMid, static_cast<int>((z - 1) % u) + 1};
            const long clen = params.contentLength();
            if (z < 1 + f * u + clen) return {kContent, static_cast<int>(z - (1 + f * u)) + 1};
            return {kFillerSymMid, static_cast<int>((z - (1 + f * u + clen)) % u) + 1};
        }
        case 4: {
            long z;
            const long K = gapAt(0, &z);
            if (z < params.boxWidth()) return {kBoxLid, static_cast<int>(z) + 1};
            const int rho = static_cast<int>(z - params.boxWidth()) + 1;
            auto [idx, tn] = tileData(K);
            (void)idx;
            if (rho < tn.a) return {kSpacerHi, 1};
            if (rho == tn.a) return {kHandleMid, 1};
            if (rho <= C) return {kRiserMid, 1};
            if (rho == C + 1) return {kStemDn2, 1};
            if (rho < C + 1 + tn.b) return {kRiserMid, 1};
            if (rho == C + 1 + tn.b) return {kHandleSymMid, 1};
            return {kSpacerHi, 1};
        }
        default: { // rr == 5
            long z;
            const long K = gapAt(A + 1, &z);
            if (z == 0) return {kStemUp1, 1};
            auto [idx, tn] = tileData(K);
            (void)idx;
            if (z < tn.a) return {kSinkerLo, 1};
            if (z < tn.a + A + 2) return {kHandleBar, static_cast<int>(z - tn.a) + 1};
            const long zS = A + C + 2 + tn.b; // first cell of the mirrored handle bar
            if (z < zS) {
                const int rho = static_cast<int>(z - (A + 1));
                if (rho == C + 1) return {kStemDn3, 1};
                return {kRiserHi, 1};
            }
            if (z < zS + A + 2) return {kHandleSymBar, static_cast<int>(z - zS) + 1};
            return {kSinkerLo, 1};
        }
        }
    }
};

} // namespace enc

// Builds, cell by cell, the bar tiling that the encoded barset forms when
// the input tileset tiles the plane with the given torus: one box chain per
// simulated tile, contents slid so the simulated tile's unary block is the
// exposed one. The window spans one horizontal period of the bar tiling and
// one vertical period of macro-rows plus one seam.
inline BarPatch simulate(const Tileset& ts, const TorusTiling& torus, const EncodedBarset& enc) {
    if (!validate_torus(torus, ts).empty())
        throw std::invalid_argument("input torus does not validate");
    enc::Layout layout{ts, torus, enc.params, enc.colorNumber};

    const long width = static_cast<long>(std::lcm(torus.p, torus.q)) * enc.params.macroWidth();
    const long height = 6L * torus.p + 7;
    BarPatch bp(static_cast<int>(width), static_cast<int>(height));
    for (long y = 0; y < height; ++y)
        for (long x = 0; x < width; ++x) {
            enc::Layout::Cell c = layout.at(x, y);
            bp.set(static_cast<int>(x), static_cast<int>(y), c.bar, c.pos);
        }
    return bp;
}

inline BarPatch simulate(const Tileset& ts, const TorusTiling& torus) {
    return simulate(ts, torus, encode44(ts));
}

// Human-auditable table of the encoding: parameters, marker legend, and
// every bar with its exact words.
inline std::string encoding_ledger(const EncodedBarset& e) {
    static const char* names[44] = {
        "spacer.lo",     "spacer.hi",     "riser.lo",      "riser.mid",      "riser.hi",
        "drop.lo",       "drop.hi",       "sinker.lo",     "sinker.mid",     "sinker.hi",
        "cap.zero",      "cap.anchor",    "cap.tick",      "base.zero",      "base.anchor",
        "base.tick",     "box.floor",     "box.row1",      "box.row2",       "box.row3",
        "box.lid",       "box.stemdn1",   "box.stemdn2",   "box.stemdn3",    "box.stemup1",
        "box.stemup2",   "box.stemup3",   "filler.lo",     "filler.mid",     "filler.hi",
        "fillersym.lo",  "fillersym.mid", "fillersym.hi",  "handle.lo",      "handle.mid",
        "handle.bar",    "handle.hi1",    "handle.hi2",    "handlesym.lo",   "handlesym.mid",
        "handlesym.bar", "handlesym.hi1", "handlesym.hi2", "content",
    };
    std::ostringstream os;
    os << "44-bar encoding ledger\n";
    os << "n=" << e.params.n << " C=" << e.params.C << " unit=" << e.params.unit
       << " armLen=" << e.params.armLen << " boxWidth=" << e.params.boxWidth()
       << " contentLength=" << e.params.contentLength() << "\n";
    os << "shared east/west color: " << e.sharedEastWest.str() << "\n";
    os << "color numbering:";
    for (std::size_t i = 0; i < e.renumbered.size(); ++i)
        os << " " << e.renumbered[i].str() << "=" << (i + 1);
    os << "\n";
    os << "markers: blank=@w northzero=@n0 southzero=@s0 tick=@yk anchor=@bx"
          " lid=@lg floor=@fg band=@rd\n";
    os << "unary block: northword 0^(a-1) Y 0^(C-a) B 0^(b-1) Y 0^(C-b) with"
          " (a,b)=(north,west); southword likewise over @s0 with (c,d)=(east,south)\n";
    os << "figure readings fixed here: one blank cell per content end; handle"
          " bars span armLen+2 cells; filler middles shift one cell toward the"
          " box center; all unlabeled figure cells are blank\n";
    os << "bars (index name length | north | south):\n";
    for (int i = 0; i < 44; ++i) {
        const WangBar& b = e.all[i];
        os << i << " " << names[i] << " " << b.length() << " |";
        for (const Color& c : b.north) os << " " << c.str();
        os << " |";
        for (const Color& c : b.south) os << " " << c.str();
        os << "\n";
    }
    os << "pairing colors (each on exactly two bar sides):";
    for (const Color& c : e.pairingColors) os << " " << c.str();
    os << "\n";
    return os.str();
}

} // namespace wangbars
