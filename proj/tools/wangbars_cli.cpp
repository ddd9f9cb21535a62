// Command-line front end: tileset/barset inspection, the graph reduction,
// bar splitting, the 44-bar encoding, tiling deciders and renderers.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wangbars/encode.hpp"
#include "wangbars/graph.hpp"
#include "wangbars/io.hpp"
#include "wangbars/render.hpp"
#include "wangbars/search.hpp"

namespace {

using namespace wangbars;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void emit(const std::string& outPath, const std::string& content) {
    if (outPath.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(outPath, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + outPath + "'");
    out << content;
}

Document load(const std::string& path) { return parse(slurp(path), path); }

std::pair<int, int> parse_dims(const std::string& s) {
    const auto x = s.find('x');
    if (x == std::string::npos) throw std::runtime_error("expected PxQ, got '" + s + "'");
    const int p = std::stoi(s.substr(0, x));
    const int q = std::stoi(s.substr(x + 1));
    if (p < 1 || q < 1) throw std::runtime_error("periods must be positive");
    return {p, q};
}

void print_verdict(const Verdict& v, const SplitResult* split) {
    if (v.tiles()) {
        std::cout << "TILES\n";
        const TorusTiling& tt = *v.witness;
        std::cout << "torus " << tt.p << "x" << tt.q << "\n";
        std::cout << render_ascii(tt);
        if (split) {
            std::cout << "bars (index:position per cell)\n";
            for (int y = tt.q - 1; y >= 0; --y) {
                for (int x = 0; x < tt.p; ++x) {
                    auto [b, p] = split->origin[static_cast<std::size_t>(tt.at(x, y))];
                    std::cout << (x ? " " : "") << b << ":" << p;
                }
                std::cout << "\n";
            }
        }
    } else if (v.no_tiling()) {
        std::cout << "NO_TILING\n";
        std::cout << "refuted " << v.refutedSize << "x" << v.refutedSize << "\n";
    } else {
        std::cout << "UNKNOWN\n";
        std::cout << "budget spent " << v.budgetSpent << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wang tiles and Wang bars: reductions, encodings and tiling deciders"};
    app.require_subcommand(1);

    std::string file, out, ledgerOut, torusDims;
    std::uint64_t steps = 1'000'000;
    int maxPeriod = 64, maxPatch = 4096, repeats = 2, patchN = 0;
    bool dot = false, ascii = false;

    auto* info = app.add_subcommand("info", "parameter report of a tileset, or bar stats");
    info->add_option("FILE", file)->required();

    auto* reduce = app.add_subcommand("reduce", "reduce a tileset to at most 2k bars");
    reduce->add_option("FILE", file)->required();
    reduce->add_option("-o,--output", out, "write the barset here instead of stdout");

    auto* split = app.add_subcommand("split", "split bars into unit tiles with fresh seams");
    split->add_option("FILE", file)->required();
    split->add_option("-o,--output", out);

    auto* encode = app.add_subcommand("encode44", "encode a tileset as a 44-bar barset");
    encode->add_option("FILE", file)->required();
    encode->add_option("-o,--output", out);
    encode->add_option("--ledger", ledgerOut, "also write the encoding ledger");

    auto* decideCmd = app.add_subcommand("decide", "dovetailed tiling decider");
    decideCmd->add_option("FILE", file)->required();
    decideCmd->add_option("--steps", steps, "node expansion quota");
    decideCmd->add_option("--max-period", maxPeriod, "per-axis torus cap");
    decideCmd->add_option("--max-patch", maxPatch, "refutation size cap");

    auto* decide2 = app.add_subcommand("decide2", "total decider for one or two bars");
    decide2->add_option("FILE", file)->required();

    auto* simulateCmd =
        app.add_subcommand("simulate", "build the 44-bar tiling from a periodic tiling");
    simulateCmd->add_option("FILE", file)->required();
    simulateCmd->add_option("--torus", torusDims, "search bound PxQ for the input torus")
        ->required();
    simulateCmd->add_option("-o,--output", out, "write an SVG (or ASCII with --ascii)");
    simulateCmd->add_flag("--ascii", ascii);

    auto* render = app.add_subcommand("render", "draw a tileset, barset, torus or patch");
    render->add_option("FILE", file)->required();
    render->add_option("-o,--output", out);
    render->add_flag("--dot", dot, "emit the labeled graph in DOT format");
    render->add_option("--torus", torusDims, "find and draw a torus within PxQ");
    render->add_option("--patch", patchN, "find and draw an NxN patch");
    render->add_option("--repeats", repeats, "how often to unroll a torus");
    render->add_flag("--ascii", ascii);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) {
            Document doc = load(file);
            if (doc.is_tileset()) {
                ParameterReport r = parameter(doc.tileset);
                std::cout << "n=" << r.n << " c=" << r.c << " parameter=" << r.parameter << "\n";
                std::cout << "side colors east=" << r.eastColors << " west=" << r.westColors
                          << " north=" << r.northColors << " south=" << r.southColors << "\n";
            } else {
                const Barset& bs = doc.barset;
                int minLen = bs[0].length(), maxLen = bs[0].length(), cells = 0;
                std::set<Color> colors;
                for (const WangBar& b : bs.bars()) {
                    minLen = std::min(minLen, b.length());
                    maxLen = std::max(maxLen, b.length());
                    cells += b.length();
                    colors.insert(b.east);
                    colors.insert(b.west);
                    colors.insert(b.north.begin(), b.north.end());
                    colors.insert(b.south.begin(), b.south.end());
                }
                std::cout << "bars=" << bs.size() << " cells=" << cells << " minlen=" << minLen
                          << " maxlen=" << maxLen << " colors=" << colors.size() << "\n";
                std::cout << "split parameter=" << parameter(split_bars(bs).tiles).parameter
                          << "\n";
            }
        } else if (*reduce) {
            Document doc = load(file);
            if (!doc.is_tileset()) throw std::runtime_error("reduce expects a tileset file");
            ReductionOutcome red = wang_to_bars(doc.tileset);
            emit(out, serialize(red.barset));
            std::cerr << "bars=" << red.barset.size()
                      << " removed_edges=" << red.removedEdges.size()
                      << " removed_classes=" << red.removedClasses.size()
                      << " rotation=" << red.quarterTurns << "\n";
        } else if (*split) {
            Document doc = load(file);
            if (doc.is_tileset()) throw std::runtime_error("split expects a barset file");
            SplitResult res = split_bars(doc.barset);
            emit(out, serialize(res.tiles));
            std::cerr << "tiles=" << res.tiles.size() << "\n";
        } else if (*encode) {
            Document doc = load(file);
            if (!doc.is_tileset()) throw std::runtime_error("encode44 expects a tileset file");
            EncodedBarset enc = encode44(doc.tileset);
            emit(out, serialize(enc.all));
            if (!ledgerOut.empty()) emit(ledgerOut, encoding_ledger(enc));
            std::cerr << "bars=" << enc.all.size() << " content=" << enc.content().length()
                      << "\n";
        } else if (*decideCmd) {
            Document doc = load(file);
            DecideOptions opt;
            opt.stepQuota = steps;
            opt.maxPeriod = maxPeriod;
            opt.maxPatch = maxPatch;
            if (doc.is_tileset()) {
                print_verdict(decide(doc.tileset, opt), nullptr);
            } else {
                BarDecision d = decide_bars(doc.barset, opt);
                print_verdict(d.verdict, &d.split);
            }
        } else if (*decide2) {
            Document doc = load(file);
            if (doc.is_tileset()) throw std::runtime_error("decide2 expects a barset file");
            SplitResult sp = split_bars(doc.barset);
            Verdict v = decide_two_bars(doc.barset);
            print_verdict(v, &sp);
        } else if (*simulateCmd) {
            Document doc = load(file);
            if (!doc.is_tileset()) throw std::runtime_error("simulate expects a tileset file");
            auto [pMax, qMax] = parse_dims(torusDims);
            auto tt = find_torus(doc.tileset, pMax, qMax);
            if (!tt) throw std::runtime_error("no torus within " + torusDims);
            EncodedBarset enc = encode44(doc.tileset);
            BarPatch bp = simulate(doc.tileset, *tt, enc);
            const auto violations = validate_bar_patch(bp, enc.all);
            std::cout << "torus " << tt->p << "x" << tt->q << "\n";
            std::cout << "barpatch " << bp.width << "x" << bp.height
                      << " violations=" << violations.size() << "\n";
            if (!out.empty())
                emit(out, ascii ? render_ascii(bp, enc.all) : render_svg(bp, enc.all));
        } else if (*render) {
            Document doc = load(file);
            if (dot) {
                if (!doc.is_tileset()) {
                    LabeledGraph g;
                    for (const WangBar& b : doc.barset.bars()) {
                        if (!g.has_vertex(b.west)) g.vertices.push_back(b.west);
                        if (!g.has_vertex(b.east)) g.vertices.push_back(b.east);
                        g.edges.push_back(LabeledEdge{b.west, b.east, b.north, b.south, {}});
                    }
                    emit(out, to_dot(g));
                } else {
                    emit(out, to_dot(to_graph(doc.tileset)));
                }
            } else if (!torusDims.empty()) {
                if (!doc.is_tileset()) throw std::runtime_error("--torus needs a tileset file");
                auto [pMax, qMax] = parse_dims(torusDims);
                auto tt = find_torus(doc.tileset, pMax, qMax);
                if (!tt) throw std::runtime_error("no torus within " + torusDims);
                emit(out, ascii ? render_ascii(*tt) : render_svg(*tt, doc.tileset, repeats));
            } else if (patchN > 0) {
                if (!doc.is_tileset()) throw std::runtime_error("--patch needs a tileset file");
                auto p = find_patch(doc.tileset, patchN);
                if (!p) throw std::runtime_error("no patch of that size");
                emit(out, ascii ? render_ascii(*p, doc.tileset) : render_svg(*p, doc.tileset));
            } else if (doc.is_tileset()) {
                emit(out, render_svg(doc.tileset));
            } else {
                emit(out, render_svg(doc.barset));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
