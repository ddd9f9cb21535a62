#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "wangbars/core.hpp"
#include "wangbars/search.hpp"

namespace wangbars {

// Deterministic SVG 1.1 / ASCII pictures of patches, bar patches and
// unrolled tori. Integer coordinates only, so identical inputs give
// byte-identical output.

namespace render_detail {

constexpr int kCell = 48;

inline void svg_open(std::ostringstream& os, int wCells, int hCells) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << wCells * kCell << "\" height=\"" << hCells * kCell << "\" viewBox=\"0 0 "
       << wCells * kCell << " " << hCells * kCell << "\">\n";
    os << "<rect width=\"" << wCells * kCell << "\" height=\"" << hCells * kCell
       << "\" fill=\"white\"/>\n";
}

inline void text_at(std::ostringstream& os, int x, int y, const std::string& s, int size) {
    os << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << size
       << "\" font-family=\"monospace\" text-anchor=\"middle\">" << s << "</text>\n";
}

// Row y of the model maps to SVG row (hCells - 1 - y): north is up.
inline int svg_row(int y, int hCells) { return hCells - 1 - y; }

inline void tile_cell(std::ostringstream& os, int cx, int cy, const WangTile& t) {
    const int x0 = cx * kCell, y0 = cy * kCell;
    os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << kCell << "\" height=\""
       << kCell << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 + kCell << "\" y2=\""
       << y0 + kCell << "\" stroke=\"lightgray\"/>\n";
    os << "<line x1=\"" << x0 + kCell << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\""
       << y0 + kCell << "\" stroke=\"lightgray\"/>\n";
    text_at(os, x0 + kCell / 2, y0 + 12, t.north.str(), 10);
    text_at(os, x0 + kCell / 2, y0 + kCell - 4, t.south.str(), 10);
    text_at(os, x0 + 8, y0 + kCell / 2 + 4, t.west.str(), 10);
    text_at(os, x0 + kCell - 8, y0 + kCell / 2 + 4, t.east.str(), 10);
}

} // namespace render_detail

inline std::string render_svg(const Patch& p, const Tileset& ts) {
    using namespace render_detail;
    std::ostringstream os;
    svg_open(os, p.width, p.height);
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x) tile_cell(os, x, svg_row(y, p.height), ts[p.at(x, y)]);
    os << "</svg>\n";
    return os.str();
}

inline std::string render_svg(const TorusTiling& tt, const Tileset& ts, int repeats = 2) {
    if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
    Patch p(tt.p * repeats, tt.q * repeats);
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x) p.at(x, y) = tt.at(x % tt.p, y % tt.q);
    return render_svg(p, ts);
}

// Bars drawn as 1-cell-tall rectangles; heavy borders where a bar starts or
// ends, light dividers between cells of one bar.
inline std::string render_svg(const BarPatch& bp, const Barset& bs) {
    using namespace render_detail;
    std::ostringstream os;
    svg_open(os, bp.width, bp.height);
    for (int y = 0; y < bp.height; ++y) {
        const int ry = svg_row(y, bp.height);
        for (int x = 0; x < bp.width; ++x) {
            const WangBar& b = bs[bp.barAt(x, y)];
            const int pos = bp.posAt(x, y);
            const int x0 = x * kCell, y0 = ry * kCell;
            os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << kCell
               << "\" height=\"" << kCell << "\" fill=\"none\" stroke=\"lightgray\"/>\n";
            // Heavy walls: top, bottom, and the bar's outer ends.
            os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 + kCell
               << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n";
            os << "<line x1=\"" << x0 << "\" y1=\"" << y0 + kCell << "\" x2=\"" << x0 + kCell
               << "\" y2=\"" << y0 + kCell << "\" stroke=\"black\"/>\n";
            if (pos == 1)
                os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\""
                   << y0 + kCell << "\" stroke=\"black\"/>\n";
            if (pos == b.length())
                os << "<line x1=\"" << x0 + kCell << "\" y1=\"" << y0 << "\" x2=\"" << x0 + kCell
                   << "\" y2=\"" << y0 + kCell << "\" stroke=\"black\"/>\n";
            text_at(os, x0 + kCell / 2, y0 + 12, b.north[static_cast<std::size_t>(pos - 1)].str(),
                    9);
            text_at(os, x0 + kCell / 2, y0 + kCell - 4,
                    b.south[static_cast<std::size_t>(pos - 1)].str(), 9);
            if (pos == 1) text_at(os, x0 + 8, y0 + kCell / 2 + 4, b.west.str(), 9);
            if (pos == b.length()) text_at(os, x0 + kCell - 8, y0 + kCell / 2 + 4, b.east.str(), 9);
        }
    }
    os << "</svg>\n";
    return os.str();
}

// A tileset or barset on its own renders as a strip, one entry per column.
inline std::string render_svg(const Tileset& ts) {
    using namespace render_detail;
    std::ostringstream os;
    svg_open(os, 2 * ts.size() - 1, 1);
    for (int i = 0; i < ts.size(); ++i) tile_cell(os, 2 * i, 0, ts[i]);
    os << "</svg>\n";
    return os.str();
}

inline std::string render_svg(const Barset& bs) {
    using namespace render_detail;
    int w = 0;
    for (const WangBar& b : bs.bars()) w = std::max(w, b.length());
    std::ostringstream os;
    svg_open(os, w, 2 * bs.size() - 1);
    for (int i = 0; i < bs.size(); ++i) {
        const int ry = 2 * i; // one bar per row, one blank row between

        for (int x = 0; x < bs[i].length(); ++x) {
            const WangBar& b = bs[i];
            const int x0 = x * kCell, y0 = ry * kCell;
            os << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << kCell
               << "\" height=\"" << kCell << "\" fill=\"none\" stroke=\""
               << (x == 0 || x == b.length() - 1 ? "black" : "lightgray") << "\"/>\n";
            text_at(os, x0 + kCell / 2, y0 + 12, b.north[static_cast<std::size_t>(x)].str(), 9);
            text_at(os, x0 + kCell / 2, y0 + kCell - 4, b.south[static_cast<std::size_t>(x)].str(),
                    9);
            if (x == 0) text_at(os, x0 + 8, y0 + kCell / 2 + 4, b.west.str(), 9);
            if (x == b.length() - 1)
                text_at(os, x0 + kCell - 8, y0 + kCell / 2 + 4, b.east.str(), 9);
        }
    }
    os << "</svg>\n";
    return os.str();
}

inline std::string render_ascii(const Patch& p, const Tileset&) {
    std::ostringstream os;
    for (int y = p.height - 1; y >= 0; --y) {
        for (int x = 0; x < p.width; ++x) {
            if (x) os << " ";
            os << p.at(x, y);
        }
        os << "\n";
    }
    return os.str();
}

inline std::string render_ascii(const TorusTiling& tt) {
    std::ostringstream os;
    for (int y = tt.q - 1; y >= 0; --y) {
        for (int x = 0; x < tt.p; ++x) {
            if (x) os << " ";
            os << tt.at(x, y);
        }
        os << "\n";
    }
    return os.str();
}

inline std::string render_ascii(const BarPatch& bp, const Barset&) {
    std::ostringstream os;
    for (int y = bp.height - 1; y >= 0; --y) {
        for (int x = 0; x < bp.width; ++x) {
            if (x) os << " ";
            os << bp.barAt(x, y) << ":" << bp.posAt(x, y);
        }
        os << "\n";
    }
    return os.str();
}

} // namespace wangbars
