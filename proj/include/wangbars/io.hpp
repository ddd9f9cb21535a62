#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wangbars/core.hpp"

namespace wangbars {

// Line-oriented text format. Each nonblank, noncomment line is either
//   tile <E> <W> <N> <S>
//   bar <E> <W> <N-word> <S-word>
// where words are comma-separated color tokens. One file holds one kind.
// Tokens are [A-Za-z0-9_]+; the '@' prefix is reserved for generated colors
// and rejected here, which is what keeps generated colors fresh.
struct Document {
    enum class Kind { TilesetDoc, BarsetDoc };
    Kind kind = Kind::TilesetDoc;
    Tileset tileset;
    Barset barset;
    std::string sourcePath;

    bool is_tileset() const { return kind == Kind::TilesetDoc; }
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

namespace io_detail {

inline std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

inline Color parse_color(const std::string& tok, int lineno) {
    if (!tok.empty() && tok.front() == '@')
        throw ParseError(lineno, "token '" + tok + "' uses the reserved '@' prefix");
    if (!Color::valid_token(tok))
        throw ParseError(lineno, "invalid color token '" + tok + "'");
    return Color(tok);
}

inline std::vector<Color> parse_word(const std::string& word, int lineno) {
    std::vector<Color> out;
    std::size_t start = 0;
    while (start <= word.size()) {
        std::size_t comma = word.find(',', start);
        if (comma == std::string::npos) comma = word.size();
        out.push_back(parse_color(word.substr(start, comma - start), lineno));
        start = comma + 1;
        if (comma == word.size()) break;
    }
    return out;
}

} // namespace io_detail

inline Document parse(const std::string& text, const std::string& sourcePath = "") {
    Document doc;
    doc.sourcePath = sourcePath;
    std::vector<WangTile> tiles;
    std::vector<WangBar> bars;

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto toks = io_detail::split_ws(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "tile") {
            if (!bars.empty()) throw ParseError(lineno, "tile line in a bar file");
            if (toks.size() != 5) throw ParseError(lineno, "expected: tile E W N S");
            WangTile t{io_detail::parse_color(toks[1], lineno),
                       io_detail::parse_color(toks[2], lineno),
                       io_detail::parse_color(toks[3], lineno),
                       io_detail::parse_color(toks[4], lineno)};
            for (const WangTile& prev : tiles)
                if (prev == t) throw ParseError(lineno, "duplicate tile");
            tiles.push_back(t);
        } else if (toks[0] == "bar") {
            if (!tiles.empty()) throw ParseError(lineno, "bar line in a tile file");
            if (toks.size() != 5) throw ParseError(lineno, "expected: bar E W NWORD SWORD");
            auto north = io_detail::parse_word(toks[3], lineno);
            auto south = io_detail::parse_word(toks[4], lineno);
            if (north.size() != south.size()) throw ParseError(lineno, "unequal word lengths");
            WangBar b(io_detail::parse_color(toks[1], lineno),
                      io_detail::parse_color(toks[2], lineno), std::move(north), std::move(south));
            for (const WangBar& prev : bars)
                if (prev == b) throw ParseError(lineno, "duplicate bar");
            bars.push_back(std::move(b));
        } else {
            throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
        }
    }
    if (tiles.empty() && bars.empty()) throw ParseError(lineno, "no entries");
    try {
        if (!tiles.empty()) {
            doc.kind = Document::Kind::TilesetDoc;
            doc.tileset = Tileset(std::move(tiles));
        } else {
            doc.kind = Document::Kind::BarsetDoc;
            doc.barset = Barset(std::move(bars));
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
    return doc;
}

inline std::string serialize(const Tileset& ts) {
    std::ostringstream os;
    for (const WangTile& t : ts.tiles())
        os << "tile " << t.east.str() << " " << t.west.str() << " " << t.north.str() << " "
           << t.south.str() << "\n";
    return os.str();
}

inline std::string serialize(const Barset& bs) {
    std::ostringstream os;
    for (const WangBar& b : bs.bars()) {
        os << "bar " << b.east.str() << " " << b.west.str() << " ";
        for (int i = 0; i < b.length(); ++i) {
            if (i) os << ",";
            os << b.north[static_cast<std::size_t>(i)].str();
        }
        os << " ";
        for (int i = 0; i < b.length(); ++i) {
            if (i) os << ",";
            os << b.south[static_cast<std::size_t>(i)].str();
        }
        os << "\n";
    }
    return os.str();
}

inline std::string serialize(const Document& doc) {
    return doc.is_tileset() ? serialize(doc.tileset) : serialize(doc.barset);
}

} // namespace wangbars
