#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "circulant/circulant.hpp"

namespace circulant::cli {
namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct negative_verdict {};

struct Options {
    std::string format;
    std::string out_path;
    std::uint64_t budget_states = Budget{}.states;
    std::uint64_t budget_words = Budget{}.words;
    std::string distances;
    int n = 0;
    std::size_t t = 0;
    int k = 0;
    bool infinite = false;
    std::string coloring;
    std::string input;
    std::string spec;
    std::string symmetry;
    bool theorem_k2 = false;
    bool conjecture = false;
    bool lemmas = false;
    std::size_t vertex_limit = default_dot_vertex_limit;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    for (std::string item; std::getline(in, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty()) {
            throw usage_error("empty entry in list \"" + text + "\"");
        }
        out.push_back(item);
    }
    return out;
}

std::int64_t parse_int(const std::string& s, const char* what) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || s.empty()) {
        throw usage_error(std::string(what) + ": \"" + s + "\" is not an integer");
    }
    return v;
}

ColorWord parse_word(const std::string& text) {
    ColorWord w;
    for (const auto& item : split_list(text)) {
        const auto c = parse_int(item, "--coloring");
        if (c < 1 || c > 255) {
            throw usage_error("--coloring: colors must lie in 1..255");
        }
        w.push_back(static_cast<Color>(c));
    }
    return w;
}

DistanceSet parse_distances(const std::string& text) {
    std::vector<std::int64_t> d;
    for (const auto& item : split_list(text)) {
        d.push_back(parse_int(item, "--distances"));
    }
    return DistanceSet(std::move(d));
}

Symmetry parse_symmetry(const std::string& text, Symmetry fallback) {
    if (text.empty()) {
        return fallback;
    }
    Symmetry s{false, false, false};
    if (text == "none") {
        return s;
    }
    for (const auto& item : split_list(text)) {
        if (item == "rotation") {
            s.rotation = true;
        } else if (item == "reflection") {
            s.reflection = true;
        } else if (item == "colors") {
            s.color_permutation = true;
        } else {
            throw usage_error("--symmetry: unknown group \"" + item + "\" (use rotation, reflection, colors or none)");
        }
    }
    return s;
}

std::string symmetry_name(Symmetry s) {
    std::vector<std::string> parts;
    if (s.rotation) {
        parts.emplace_back("rotation");
    }
    if (s.reflection) {
        parts.emplace_back("reflection");
    }
    if (s.color_permutation) {
        parts.emplace_back("colors");
    }
    if (parts.empty()) {
        return "none";
    }
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        out += "," + parts[i];
    }
    return out;
}

std::string word_text(std::span<const Color> word, int k) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (k > 9 && i > 0) {
            out += ',';
        }
        out += std::to_string(word[i]);
    }
    return out;
}

void print_matrix(std::ostream& os, const ParameterMatrix& m) {
    for (Color i = 1; i <= m.colors(); ++i) {
        os << "  " << std::setw(2) << static_cast<int>(i) << " |";
        for (int v : m.row(i)) {
            os << ' ' << std::setw(2) << v;
        }
        os << '\n';
    }
}

std::string matrix_inline(const ParameterMatrix& m) {
    return matrix_to_json(m).dump();
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw usage_error("cannot open \"" + path + "\"");
    }
    return json::parse(in);
}

Budget budget_of(const Options& o) {
    return Budget{o.budget_words, o.budget_states};
}

DistanceSet distances_for(const Options& o) {
    if (!o.distances.empty()) {
        return parse_distances(o.distances);
    }
    if (o.n > 0) {
        return make_odd_distance_set(static_cast<std::size_t>(o.n));
    }
    throw usage_error("give --distances or --n");
}

/// Coloring from --input, or from --coloring with --distances / --n.
ColoringDocument load_coloring(const Options& o) {
    if (!o.input.empty()) {
        if (!o.coloring.empty()) {
            throw usage_error("give either --coloring or --input, not both");
        }
        return coloring_from_json(read_json_file(o.input));
    }
    if (o.coloring.empty()) {
        throw usage_error("give --coloring or --input");
    }
    auto word = parse_word(o.coloring);
    const int k = o.k > 0 ? o.k : static_cast<int>(*std::ranges::max_element(word));
    auto d = distances_for(o);
    if (o.infinite) {
        return {PeriodicColoring(k, word), std::move(d), std::nullopt};
    }
    if (o.t != 0 && o.t != word.size()) {
        throw usage_error("--t " + std::to_string(o.t) + " differs from the coloring length " +
                          std::to_string(word.size()));
    }
    return {FiniteColoring(k, std::move(word)), std::move(d), std::nullopt};
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed) {
        if (format == a) {
            return;
        }
    }
    throw usage_error("--format " + format + " is not available for this subcommand");
}

void cmd_verify(const Options& o, std::ostream& out) {
    require_format(o.format, {"json", "table"});
    auto doc = load_coloring(o);
    const auto verdict = std::visit([&](const auto& c) { return check_perfect(c, doc.distances); }, doc.coloring);
    const int k = std::visit([](const auto& c) { return c.colors(); }, doc.coloring);
    const auto word = std::visit([](const auto& c) { return c.word(); }, doc.coloring);
    if (o.format == "json") {
        doc.matrix = verdict.matrix;
        json j{{"perfect", verdict.is_perfect()}, {"coloring", to_json(doc)}};
        if (verdict.witness) {
            j["witness"] = {verdict.witness->first, verdict.witness->second};
        }
        out << j.dump(2) << '\n';
    } else {
        out << (doc.is_finite() ? "finite" : "periodic") << " coloring " << word_text(word, k) << '\n';
        if (verdict.is_perfect()) {
            out << "perfect: yes\nmatrix:\n";
            print_matrix(out, *verdict.matrix);
        } else {
            out << "perfect: no\nwitness: vertices " << verdict.witness->first << " and " << verdict.witness->second
                << " share a color but see different neighbor colors\n";
        }
    }
    if (!verdict.is_perfect()) {
        throw negative_verdict{};
    }
}

void cmd_induce(const Options& o, std::ostream& out) {
    require_format(o.format, {"json", "table"});
    if (o.infinite) {
        throw usage_error("induce takes a finite coloring");
    }
    const auto doc = load_coloring(o);
    if (!doc.is_finite()) {
        throw usage_error("induce takes a finite coloring");
    }
    const auto& f = std::get<FiniteColoring>(doc.coloring);
    const auto verdict = check_perfect(f, doc.distances);
    if (!verdict.is_perfect()) {
        if (o.format == "json") {
            out << json{{"perfect", false}, {"witness", {verdict.witness->first, verdict.witness->second}}}.dump(2)
                << '\n';
        } else {
            out << "perfect: no\nnothing to induce\n";
        }
        throw negative_verdict{};
    }
    const auto p = induce(f, doc.distances);
    if (o.format == "json") {
        out << to_json(p, doc.distances, verdict.matrix).dump(2) << '\n';
    } else {
        out << "period " << word_text(p.word(), p.colors()) << " (length " << p.period() << ")\nmatrix:\n";
        print_matrix(out, *verdict.matrix);
    }
}

void cmd_export_dot(const Options& o, std::ostream& out) {
    require_format(o.format, {"dot"});
    if (o.infinite) {
        throw usage_error("export-dot draws finite circulants only");
    }
    const auto doc = load_coloring(o);
    if (!doc.is_finite()) {
        throw usage_error("export-dot draws finite circulants only");
    }
    const auto& f = std::get<FiniteColoring>(doc.coloring);
    out << export_dot(FiniteCirculant(f.order(), doc.distances), f, o.vertex_limit);
}

void cmd_construct(const Options& o, std::ostream& out) {
    require_format(o.format, {"json", "table"});
    if (o.spec.empty()) {
        throw usage_error("construct needs --spec FILE");
    }
    const auto docs = construct_from_json(read_json_file(o.spec));
    bool all_perfect = true;
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& d : docs) {
            arr.push_back(to_json(d));
            all_perfect = all_perfect && d.matrix.has_value();
        }
        out << arr.dump(2) << '\n';
    } else {
        for (const auto& d : docs) {
            const auto word = std::visit([](const auto& c) { return c.word(); }, d.coloring);
            const int k = std::visit([](const auto& c) { return c.colors(); }, d.coloring);
            out << (d.is_finite() ? "finite " : "periodic ") << word_text(word, k) << "  "
                << (d.matrix ? matrix_inline(*d.matrix) : std::string("not perfect")) << '\n';
            all_perfect = all_perfect && d.matrix.has_value();
        }
    }
    if (!all_perfect) {
        throw negative_verdict{};
    }
}

void cmd_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
    require_format(o.format, {"json", "table"});
    if (o.k < 1) {
        throw usage_error("enumerate needs --k");
    }
    const auto start = Clock::now();
    struct Row {
        ColorWord word;
        ParameterMatrix matrix;
    };
    std::vector<Row> rows;
    json graph;
    Symmetry sym{};
    DistanceSet d = make_odd_distance_set(1);
    if (o.infinite) {
        if (o.n < 1) {
            throw usage_error("enumerate --infinite needs --n");
        }
        if (!o.distances.empty() && !parse_distances(o.distances).is_odd_continuous(static_cast<std::size_t>(o.n))) {
            throw usage_error("enumerate --infinite works on D_n = {1,3,...,2n-1}");
        }
        // Periodic colorings are always taken up to translation.
        sym = parse_symmetry(o.symmetry, Symmetry{true, false, true});
        sym.rotation = true;
        d = make_odd_distance_set(static_cast<std::size_t>(o.n));
        const auto r = enumerate_periodic_perfect(o.n, o.k, std::nullopt, budget_of(o));
        std::set<ColorWord> seen;
        for (const auto& f : r.colorings) {
            auto w = canonical_form(f.coloring.word(), sym);
            if (seen.insert(w).second) {
                auto m = *check_perfect(PeriodicColoring(o.k, w), d).matrix;
                rows.push_back({std::move(w), std::move(m)});
            }
        }
        std::ranges::sort(rows, {}, &Row::word);
        graph = {{"kind", "periodic"}, {"n", o.n}, {"distances", detail::distances_json(d)}};
        err << "enumerate: " << r.stats.matrices_tried << " matrices, " << r.stats.states_explored
            << " states, " << r.stats.cycles_found << " cycles\n";
    } else {
        if (o.t < 1) {
            throw usage_error("enumerate needs --t (or --infinite --n)");
        }
        sym = parse_symmetry(o.symmetry, no_symmetry);
        d = distances_for(o);
        const auto r = enumerate_perfect_finite(o.t, d, o.k, sym, budget_of(o));
        for (const auto& f : r.colorings) {
            rows.push_back({ColorWord(f.coloring.word().begin(), f.coloring.word().end()), f.matrix});
        }
        graph = {{"kind", "finite"}, {"t", o.t}, {"distances", detail::distances_json(d)}};
        err << "enumerate: " << r.stats.words_examined << " words examined\n";
    }
    err << "elapsed: " << std::fixed << std::setprecision(3) << seconds_since(start) << " s\n";

    if (o.format == "json") {
        json list = json::array();
        for (const auto& r : rows) {
            list.push_back({{"word", detail::word_json(r.word)}, {"matrix", matrix_to_json(r.matrix)}});
        }
        out << json{{"graph", graph},
                    {"k", o.k},
                    {"symmetry", symmetry_name(sym)},
                    {"count", rows.size()},
                    {"colorings", list}}
                   .dump(2)
            << '\n';
    } else {
        out << "count: " << rows.size() << "  (symmetry: " << symmetry_name(sym) << ")\n";
        for (const auto& r : rows) {
            out << word_text(r.word, o.k) << "  " << matrix_inline(r.matrix) << '\n';
        }
    }
}

void print_report_table(std::ostream& out, const CheckReport& r) {
    auto list = [&](const char* label, const std::vector<PeriodicColoring>& cs) {
        out << label << ": " << cs.size();
        for (const auto& c : cs) {
            out << ' ' << word_text(c.word(), c.colors());
        }
        out << '\n';
    };
    out << "n=" << r.n << " k=" << r.k << " verdict: " << to_string(r.verdict) << '\n'
        << "enumerated: " << r.enumerated_count << '\n'
        << "induced: " << r.induced_count << '\n';
    list("missing", r.missing);
    list("unsound", r.unsound);
    list("path-only", r.path_only);
}

void cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
    require_format(o.format, {"json", "table"});
    const int modes = int{o.theorem_k2} + int{o.conjecture} + int{o.lemmas};
    if (modes != 1) {
        throw usage_error("check needs exactly one of --theorem-k2, --conjecture, --lemmas");
    }
    if (o.n < 1) {
        throw usage_error("check needs --n");
    }
    if (o.lemmas) {
        const auto start = Clock::now();
        const auto r = lemma_regression_suite(o.n, budget_of(o));
        err << "elapsed: " << std::fixed << std::setprecision(3) << seconds_since(start) << " s\n";
        if (o.format == "json") {
            out << to_json(r).dump(2) << '\n';
        } else {
            out << "n=" << r.n << " colorings: " << r.colorings << " realized sums:";
            for (int s : r.realized_sums) {
                out << ' ' << s;
            }
            out << '\n';
            for (const auto& c : r.checks) {
                out << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.witnesses.size()
                    << " witnesses)\n";
            }
        }
        if (!r.passed()) {
            throw negative_verdict{};
        }
        return;
    }
    if (o.conjecture && o.k < 1) {
        throw usage_error("check --conjecture needs --k");
    }
    if (o.theorem_k2 && o.k != 0 && o.k != 2) {
        throw usage_error("check --theorem-k2 is the k = 2 case; drop --k or use --conjecture");
    }
    const auto r = o.theorem_k2 ? check_theorem_k2(o.n, budget_of(o)) : check_conjecture(o.n, o.k, budget_of(o));
    err << "enumeration: " << std::fixed << std::setprecision(3) << r.enumeration_seconds
        << " s, induction: " << r.induction_seconds << " s\n";
    if (o.format == "json") {
        out << to_json(r).dump(2) << '\n';
    } else {
        print_report_table(out, r);
    }
    if (r.verdict != Verdict::confirmed) {
        throw negative_verdict{};
    }
}

void add_coloring_options(CLI::App* sub, Options& o) {
    sub->add_option("--coloring", o.coloring, "Coloring as a comma list of colors 1..k");
    sub->add_option("--input", o.input, "Coloring JSON file");
    sub->add_option("--distances", o.distances, "Distance set, e.g. 1,3");
    sub->add_option("--n", o.n, "Use D_n = {1,3,...,2n-1}")->check(CLI::PositiveNumber);
    sub->add_option("--t", o.t, "Order of the finite circulant")->check(CLI::PositiveNumber);
    sub->add_option("--k", o.k, "Number of colors")->check(CLI::Range(1, 255));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Perfect colorings of circulant graphs"};
    app.name("circulant");
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table", "dot"}));
    app.add_option("--out", o.out_path, "Write results to this file");
    app.add_option("--budget-states", o.budget_states, "Window-state budget for the automaton")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-words", o.budget_words, "Word budget k^t for finite enumeration")
        ->check(CLI::PositiveNumber);

    auto* construct = app.add_subcommand("construct", "Build colorings from a construction spec (JSON)");
    construct->add_option("--spec", o.spec, "Construction spec file")->required();

    auto* verify = app.add_subcommand("verify", "Check whether a coloring is perfect");
    add_coloring_options(verify, o);
    verify->add_flag("--infinite", o.infinite, "Treat the coloring as a period of Ci_inf(D)");

    auto* enumerate = app.add_subcommand("enumerate", "List all perfect colorings");
    enumerate->add_option("--distances", o.distances, "Distance set, e.g. 1,3");
    enumerate->add_option("--n", o.n, "Use D_n = {1,3,...,2n-1}")->check(CLI::PositiveNumber);
    enumerate->add_option("--t", o.t, "Order of the finite circulant")->check(CLI::PositiveNumber);
    enumerate->add_option("--k", o.k, "Number of colors")->check(CLI::Range(1, 255))->required();
    enumerate->add_flag("--infinite", o.infinite, "Enumerate periodic colorings of Ci_inf(D_n)");
    enumerate->add_option("--symmetry", o.symmetry,
                          "Reduce by rotation,reflection,colors (or none); default none for finite, "
                          "rotation,colors for --infinite");

    auto* induce_cmd = app.add_subcommand("induce", "Lift a perfect finite coloring to Ci_inf(D)");
    add_coloring_options(induce_cmd, o);

    auto* check = app.add_subcommand("check", "Compare complete enumeration with induced colorings");
    check->add_flag("--theorem-k2", o.theorem_k2, "Two-color classification at --n");
    check->add_flag("--conjecture", o.conjecture, "Classification claim at --n, --k");
    check->add_flag("--lemmas", o.lemmas, "Structural claims about perfect 2-colorings at --n");
    check->add_option("--n", o.n, "Distance set D_n")->check(CLI::PositiveNumber);
    check->add_option("--k", o.k, "Number of colors")->check(CLI::Range(1, 255));

    auto* dot = app.add_subcommand("export-dot", "Render a colored finite circulant as Graphviz DOT");
    add_coloring_options(dot, o);
    dot->add_option("--vertex-limit", o.vertex_limit, "Largest t to render")->check(CLI::PositiveNumber);

    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
    }

    // CLI11 reports a stray first word only as a missing subcommand.
    for (std::size_t i = 0; i < args.size(); ++i) {
        const auto& a = args[i];
        if (a.rfind("-", 0) == 0) {
            const bool takes_value = a == "--format" || a == "--out" || a == "--budget-states" || a == "--budget-words";
            i += takes_value && a.find('=') == std::string::npos ? 1 : 0;
            continue;
        }
        if (app.get_subcommand_no_throw(a) == nullptr) {
            err << "error: usage: unknown subcommand \"" << a << "\"\n";
            return exit_usage;
        }
        break;
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (o.format.empty()) {
        o.format = dot->parsed() ? "dot" : "json";
    }

    std::ostringstream buffer;
    int status = exit_ok;
    try {
        if (construct->parsed()) {
            cmd_construct(o, buffer);
        } else if (verify->parsed()) {
            cmd_verify(o, buffer);
        } else if (enumerate->parsed()) {
            cmd_enumerate(o, buffer, err);
        } else if (induce_cmd->parsed()) {
            cmd_induce(o, buffer);
        } else if (check->parsed()) {
            cmd_check(o, buffer, err);
        } else if (dot->parsed()) {
            cmd_export_dot(o, buffer);
        }
    } catch (const negative_verdict&) {
        status = exit_negative;
    } catch (const usage_error& e) {
        err << "error: usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const resource_limit_error& e) {
        err << "error: resource limit: " << e.what() << '\n';
        return exit_usage;
    } catch (const json::exception& e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: invalid input: " << e.what() << '\n';
        return exit_usage;
    }

    if (o.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(o.out_path, std::ios::binary);
        if (!file || !(file << buffer.str())) {
            err << "error: cannot write \"" << o.out_path << "\"\n";
            return exit_usage;
        }
    }
    return status;
}

} // namespace circulant::cli
