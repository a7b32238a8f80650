// Command-line front end: every subcommand is a thin shell over one library
// pipeline, reading the documented text formats and writing one record per
// line (or one JSON object per record with --format json).

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "lg/cyclic3.hpp"
#include "lg/graph.hpp"
#include "lg/grid.hpp"
#include "lg/letters.hpp"
#include "lg/permutations.hpp"
#include "lg/width.hpp"

using json = nlohmann::json;

namespace {

struct Options {
    bool json_format = false;
    unsigned seed = 12345;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string join_ints(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

void print_graph(const lg::Graph& g, const Options& opt) {
    if (!opt.json_format) {
        std::cout << lg::emit_graph(g);
        return;
    }
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    std::cout << json{{"n", g.vertex_count()}, {"edges", edges}} << "\n";
}

std::string pairs_tokens(const lg::Decoder& d) {
    std::string out;
    bool compact = d.single_char_alphabet();
    for (auto [i, j] : d.pairs()) {
        if (!out.empty()) out += ',';
        out += compact ? d.alphabet[i] + d.alphabet[j] : d.alphabet[i] + ":" + d.alphabet[j];
    }
    return out;
}

lg::SignVector require_signs(const lg::GridMatrix& m) {
    auto s = lg::infer_signs(m);
    if (!s) throw std::runtime_error("matrix is not a partial multiplication matrix");
    return *s;
}

int cmd_realize(const std::string& input, const Options& opt) {
    auto doc = lg::parse_representation_doc(read_input(input));
    if (!doc.word) throw std::runtime_error("representation document has no word line");
    print_graph(lg::realize(doc.decoder, *doc.word), opt);
    return 0;
}

int cmd_recognize3(const std::string& input, const Options& opt) {
    lg::Graph g = lg::parse_graph(read_input(input));
    auto witness = lg::recognize_cyclic3(g);
    if (witness) {
        const auto& rep = witness->rep;
        if (opt.json_format)
            std::cout << json{{"representable", true},
                              {"word", lg::format_word(rep.decoder, rep.word)},
                              {"vertices", rep.vertex_of}}
                      << "\n";
        else
            std::cout << "representable word=" << lg::format_word(rep.decoder, rep.word)
                      << " vertices=" << join_ints(rep.vertex_of) << "\n";
        return 0;
    }
    for (const auto& hit : lg::mfis_check(g)) {
        if (opt.json_format)
            std::cout << json{{"representable", false},
                              {"pattern", std::string(lg::pattern_name(hit.pattern))},
                              {"witness", hit.witness}}
                      << "\n";
        else
            std::cout << "not-representable " << lg::pattern_name(hit.pattern)
                      << " witness=" << join_ints(hit.witness) << "\n";
    }
    return 1;
}

int cmd_mfis(const std::string& input, const Options& opt) {
    lg::Graph g = lg::parse_graph(read_input(input));
    auto hits = lg::mfis_check(g);
    if (hits.empty()) {
        std::cout << (opt.json_format ? json{{"forbidden", "none"}}.dump() + "\n" : "forbidden=none\n");
        return 0;
    }
    for (const auto& hit : hits) {
        if (opt.json_format)
            std::cout << json{{"forbidden", std::string(lg::pattern_name(hit.pattern))},
                              {"witness", hit.witness}}
                      << "\n";
        else
            std::cout << "forbidden=" << lg::pattern_name(hit.pattern)
                      << " witness=" << join_ints(hit.witness) << "\n";
    }
    return 1;
}

int cmd_lettericity(const std::string& input, int k_max, int max_n, const Options& opt) {
    lg::Graph g = lg::parse_graph(read_input(input));
    lg::LettericityOptions lo;
    lo.k_max = k_max;
    lo.max_n = max_n;
    auto res = lg::lettericity_exact(g, lo);
    if (!res) {
        if (opt.json_format)
            std::cout << json{{"lettericity", nullptr}, {"k_max", k_max}} << "\n";
        else
            std::cout << "lettericity=none k-max=" << k_max << "\n";
        return 1;
    }
    const auto& rep = res->rep;
    std::string alphabet;
    for (const auto& l : rep.decoder.alphabet) alphabet += l;
    if (opt.json_format)
        std::cout << json{{"lettericity", res->k},
                          {"alphabet", alphabet},
                          {"pairs", pairs_tokens(rep.decoder)},
                          {"word", lg::format_word(rep.decoder, rep.word)},
                          {"vertices", rep.vertex_of}}
                  << "\n";
    else
        std::cout << "lettericity=" << res->k << " alphabet=" << alphabet
                  << " pairs=" << pairs_tokens(rep.decoder)
                  << " word=" << lg::format_word(rep.decoder, rep.word)
                  << " vertices=" << join_ints(rep.vertex_of) << "\n";
    return 0;
}

int cmd_permgraph(const std::string& perm, const Options& opt) {
    print_graph(lg::perm_graph(lg::Permutation::parse(perm)), opt);
    return 0;
}

int cmd_pattern(const std::string& p, const std::string& q, const Options& opt) {
    bool contains = lg::contains_pattern(lg::Permutation::parse(p), lg::Permutation::parse(q));
    if (opt.json_format)
        std::cout << json{{"contains", contains}} << "\n";
    else
        std::cout << (contains ? "contains=yes\n" : "contains=no\n");
    return contains ? 0 : 1;
}

int cmd_grid_decoder(const std::string& matrix_path, const Options& opt) {
    lg::GridMatrix m = lg::GridMatrix::parse(read_input(matrix_path));
    auto signs = lg::infer_signs(m);
    if (!signs) {
        std::cout << (opt.json_format ? json{{"signs", "none"}}.dump() + "\n" : "signs=none\n");
        return 1;
    }
    lg::Decoder d = lg::decoder_from_matrix(m, *signs);
    if (opt.json_format) {
        json pairs = json::array();
        for (auto [i, j] : d.pairs()) pairs.push_back({d.alphabet[i], d.alphabet[j]});
        std::cout << json{{"alphabet", d.alphabet},
                          {"pairs", pairs},
                          {"col_signs", signs->col},
                          {"row_signs", signs->row}}
                  << "\n";
    } else {
        std::cout << lg::emit_representation_doc(d, std::nullopt);
    }
    return 0;
}

int cmd_grid_decode(const std::string& matrix_path, const std::string& input, const Options& opt) {
    lg::GridMatrix m = lg::GridMatrix::parse(read_input(matrix_path));
    lg::CellWord w = lg::parse_cell_word(m, read_input(input));
    lg::Permutation p = lg::psi(m, require_signs(m), w);
    if (opt.json_format)
        std::cout << json{{"permutation", p.to_string()}, {"n", p.size()}} << "\n";
    else
        std::cout << p.to_string() << "\n";
    return 0;
}

lg::Drawing parse_drawing(const std::string& text) {
    lg::Drawing d;
    std::istringstream in(text);
    std::string cell, dist;
    int lineno = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        if (!(ls >> cell)) continue;
        if (!(ls >> dist)) throw lg::ParseError(lineno, "expected \"<cell> <num>/<den>\"");
        size_t slash = dist.find('/');
        if (slash == std::string::npos) throw lg::ParseError(lineno, "distance must be a fraction p/q");
        long long num = std::stoll(dist.substr(0, slash));
        long long den = std::stoll(dist.substr(slash + 1));
        if (cell.size() != 3 || cell[0] != 'a') throw lg::ParseError(lineno, "cell token must look like a21");
        lg::CellLetter c{cell[1] - '0', cell[2] - '0'};
        d.points.push_back({c, {num, den}});
    }
    return d;
}

int cmd_grid_encode(const std::string& matrix_path, const std::string& input, const Options& opt) {
    lg::GridMatrix m = lg::GridMatrix::parse(read_input(matrix_path));
    lg::Drawing d = parse_drawing(read_input(input));
    lg::CellWord w = lg::phi(m, require_signs(m), d);
    if (opt.json_format) {
        std::vector<std::string> tokens;
        for (auto c : w) tokens.push_back(lg::cell_name(c));
        std::cout << json{{"word", tokens}} << "\n";
    } else {
        std::cout << lg::format_cell_word(w) << "\n";
    }
    return 0;
}

int cmd_grid_check(const std::string& matrix_path, const std::string& input, const Options& opt) {
    lg::GridMatrix m = lg::GridMatrix::parse(read_input(matrix_path));
    lg::CellWord w = lg::parse_cell_word(m, read_input(input));
    bool ok = lg::check_grid_letter_bridge(m, require_signs(m), w);
    if (opt.json_format)
        std::cout << json{{"bridge", ok ? "ok" : "fail"}, {"n", w.size()}} << "\n";
    else
        std::cout << (ok ? "bridge=ok" : "bridge=fail") << " n=" << w.size() << "\n";
    return ok ? 0 : 1;
}

int cmd_two_letter_matrix(const std::string& input, const Options& opt) {
    auto doc = lg::parse_representation_doc(read_input(input));
    lg::TwoLetterGrid tg = lg::two_letter_grid_matrix(doc.decoder);
    if (opt.json_format) {
        json mats = json::array();
        for (const auto& m : tg.matrices) mats.push_back(m.to_text());
        std::cout << json{{"class", std::string(lg::two_letter_class_name(tg.cls))},
                          {"complement", tg.complement},
                          {"matrices", mats}}
                  << "\n";
    } else {
        std::cout << "class=" << lg::two_letter_class_name(tg.cls)
                  << " complement=" << (tg.complement ? "yes" : "no")
                  << " matrices=" << tg.matrices.size() << "\n";
        for (const auto& m : tg.matrices) std::cout << m.to_text();
    }
    return 0;
}

int cmd_nd(const std::string& input, bool emit_rep, const Options& opt) {
    lg::Graph g = lg::parse_graph(read_input(input));
    if (emit_rep) {
        lg::LetterRepresentation rep = lg::nd_representation(g);
        std::cout << lg::emit_representation_doc(rep.decoder, rep.word);
        return 0;
    }
    lg::SimilarityPartition sp = lg::neighbourhood_diversity(g);
    if (opt.json_format) {
        json classes = json::array();
        for (size_t i = 0; i < sp.classes.size(); ++i)
            classes.push_back({{"kind", sp.clique[i] ? "clique" : "independent"},
                               {"vertices", sp.classes[i]}});
        std::cout << json{{"diversity", sp.diversity()}, {"classes", classes}} << "\n";
    } else {
        std::cout << "diversity=" << sp.diversity() << "\n";
        for (size_t i = 0; i < sp.classes.size(); ++i)
            std::cout << "class=" << i << " kind=" << (sp.clique[i] ? "clique" : "independent")
                      << " vertices=" << join_ints(sp.classes[i]) << "\n";
    }
    return 0;
}

int cmd_lcw(const std::string& input, const Options& opt) {
    auto doc = lg::parse_representation_doc(read_input(input));
    if (!doc.word) throw std::runtime_error("representation document has no word line");
    lg::Graph target = lg::realize(doc.decoder, *doc.word);
    lg::CwExpr e = lg::lcw_expression_from_letters(
        target, lg::LetterRepresentation::identity(doc.decoder, *doc.word));
    if (opt.json_format)
        std::cout << json{{"expression", lg::cw_to_text(e)}, {"labels", lg::cw_label_count(e)}} << "\n";
    else
        std::cout << lg::cw_to_text(e) << "\n";
    return 0;
}

int cmd_eval_cw(const std::string& input, bool with_names, const Options& opt) {
    lg::CwEval ev = lg::eval_expression(lg::parse_cw(read_input(input)));
    if (opt.json_format) {
        json edges = json::array();
        for (auto [u, v] : ev.graph.edges()) edges.push_back({u, v});
        std::cout << json{{"n", ev.graph.vertex_count()},
                          {"edges", edges},
                          {"names", ev.names},
                          {"labels", ev.labels}}
                  << "\n";
        return 0;
    }
    std::cout << lg::emit_graph(ev.graph);
    if (with_names) {
        std::cout << "names=";
        for (size_t i = 0; i < ev.names.size(); ++i) std::cout << (i ? "," : "") << ev.names[i];
        std::cout << "\n";
    }
    return 0;
}

int cmd_sweep(int max_n, long long trials, int rand_min, int rand_max, const Options& opt) {
    auto rows = lg::equivalence_sweep(max_n);
    long long total = 0;
    for (const auto& row : rows) {
        total += row.discrepancies;
        if (opt.json_format)
            std::cout << json{{"n", row.n},
                              {"graphs", row.graphs},
                              {"representable", row.representable},
                              {"discrepancies", row.discrepancies}}
                      << "\n";
        else
            std::cout << "n=" << row.n << " graphs=" << row.graphs
                      << " representable=" << row.representable
                      << " discrepancies=" << row.discrepancies << "\n";
    }
    if (trials > 0) {
        std::mt19937 rng(opt.seed);
        std::uniform_int_distribution<int> size(rand_min, rand_max);
        std::bernoulli_distribution coin(0.5);
        long long bad = 0;
        for (long long t = 0; t < trials; ++t) {
            int n = size(rng);
            lg::Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (coin(rng)) g.add_edge(u, v);
            auto witness = lg::recognize_cyclic3(g);
            bool ok = witness.has_value() == lg::mfis_check(g).empty() &&
                      (!witness || lg::verify_representation(g, witness->rep));
            if (!ok) ++bad;
        }
        total += bad;
        if (opt.json_format)
            std::cout << json{{"random_min", rand_min},
                              {"random_max", rand_max},
                              {"trials", trials},
                              {"discrepancies", bad}}
                      << "\n";
        else
            std::cout << "random n=" << rand_min << ".." << rand_max << " trials=" << trials
                      << " discrepancies=" << bad << "\n";
    }
    if (!opt.json_format) std::cout << "total discrepancies=" << total << "\n";
    return total == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"letter graphs, cyclic 3-letter recognition, permutation grid encodings"};
    app.require_subcommand(1);

    Options opt;
    std::string format = "text";
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opt.seed, "seed for randomized trials");

    std::string input = "-";
    std::string matrix_path;
    std::string perm_arg, perm_arg2;
    int k_max = -1, max_n = 10, sweep_max_n = 6, rand_min = 7, rand_max = 9;
    long long trials = 0;
    bool nd_rep = false, eval_names = false;

    auto* realize_cmd = app.add_subcommand("realize", "letter graph of a decoder/word document");
    realize_cmd->add_option("input", input, "input file (default: stdin)");

    auto* rec = app.add_subcommand("recognize3", "recognize 3-letter graphs over the cyclic decoder");
    rec->add_option("input", input);

    auto* mfis = app.add_subcommand("mfis", "scan for the four forbidden induced subgraphs");
    mfis->add_option("input", input);

    auto* let = app.add_subcommand("lettericity", "exact lettericity by bounded search");
    let->add_option("input", input);
    let->add_option("--k-max", k_max, "largest alphabet size to try (default: n)");
    let->add_option("--max-n", max_n, "search guard on the vertex count");

    auto* pg = app.add_subcommand("permgraph", "permutation graph of a one-line permutation");
    pg->add_option("perm", perm_arg)->required();

    auto* pat = app.add_subcommand("pattern", "does the first permutation contain the second?");
    pat->add_option("perm", perm_arg)->required();
    pat->add_option("pattern", perm_arg2)->required();

    auto* gdec = app.add_subcommand("grid-decoder", "decoder of a partial multiplication matrix");
    gdec->add_option("matrix", matrix_path, "matrix file (default: stdin)");

    auto* gde = app.add_subcommand("grid-decode", "permutation of a cell word");
    gde->add_option("-m,--matrix", matrix_path)->required();
    gde->add_option("input", input);

    auto* gen = app.add_subcommand("grid-encode", "cell word of a drawing");
    gen->add_option("-m,--matrix", matrix_path)->required();
    gen->add_option("input", input);

    auto* gch = app.add_subcommand("grid-check", "letter graph vs permutation graph of a cell word");
    gch->add_option("-m,--matrix", matrix_path)->required();
    gch->add_option("input", input);

    auto* two = app.add_subcommand("two-letter-matrix", "grid matrices of a 2-letter decoder");
    two->add_option("input", input);

    auto* nd = app.add_subcommand("nd", "neighbourhood diversity and similarity classes");
    nd->add_option("input", input);
    nd->add_flag("--rep", nd_rep, "emit the class-based letter representation instead");

    auto* lcw = app.add_subcommand("lcw", "caterpillar clique-width expression of a representation");
    lcw->add_option("input", input);

    auto* ev = app.add_subcommand("eval-cw", "evaluate a clique-width expression");
    ev->add_option("input", input);
    ev->add_flag("--names", eval_names, "append the vertex names line");

    auto* sw = app.add_subcommand("sweep", "exhaustive recognition/forbidden-subgraph agreement");
    sw->add_option("--max-n", sweep_max_n, "largest exhaustive vertex count (default 6)");
    sw->add_option("--random-trials", trials, "extra random graphs to test");
    sw->add_option("--random-min", rand_min);
    sw->add_option("--random-max", rand_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    opt.json_format = format == "json";

    try {
        if (*realize_cmd) return cmd_realize(input, opt);
        if (*rec) return cmd_recognize3(input, opt);
        if (*mfis) return cmd_mfis(input, opt);
        if (*let) return cmd_lettericity(input, k_max, max_n, opt);
        if (*pg) return cmd_permgraph(perm_arg, opt);
        if (*pat) return cmd_pattern(perm_arg, perm_arg2, opt);
        if (*gdec) return cmd_grid_decoder(matrix_path, opt);
        if (*gde) return cmd_grid_decode(matrix_path, input, opt);
        if (*gen) return cmd_grid_encode(matrix_path, input, opt);
        if (*gch) return cmd_grid_check(matrix_path, input, opt);
        if (*two) return cmd_two_letter_matrix(input, opt);
        if (*nd) return cmd_nd(input, nd_rep, opt);
        if (*lcw) return cmd_lcw(input, opt);
        if (*ev) return cmd_eval_cw(input, eval_names, opt);
        if (*sw) return cmd_sweep(sweep_max_n, trials, rand_min, rand_max, opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
