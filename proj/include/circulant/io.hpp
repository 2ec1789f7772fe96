#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "circulant/constructors.hpp"
#include "circulant/core.hpp"
#include "circulant/verification.hpp"

namespace circulant {

using json = nlohmann::json;

/// One coloring with the distance set of its graph, as exchanged on disk:
/// {"kind", "t_or_period", "k", "word", "distances"} plus an optional "matrix".
struct ColoringDocument {
    std::variant<FiniteColoring, PeriodicColoring> coloring;
    DistanceSet distances;
    std::optional<ParameterMatrix> matrix;

    bool is_finite() const noexcept { return std::holds_alternative<FiniteColoring>(coloring); }
};

inline json matrix_to_json(const ParameterMatrix& m) {
    json rows = json::array();
    for (Color i = 1; i <= m.colors(); ++i) {
        auto r = m.row(i);
        rows.push_back(std::vector<int>(r.begin(), r.end()));
    }
    return rows;
}

inline ParameterMatrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("matrix must be a nonempty array of rows");
    }
    const auto k = static_cast<int>(j.size());
    ParameterMatrix m(k);
    for (Color i = 1; i <= k; ++i) {
        const auto row = j.at(i - 1u).get<std::vector<int>>();
        if (row.size() != j.size()) {
            throw std::invalid_argument("matrix must be square");
        }
        m.set_row(i, row);
    }
    return m;
}

namespace detail {

inline json word_json(std::span<const Color> word) {
    json out = json::array();
    for (Color c : word) {
        out.push_back(static_cast<int>(c));
    }
    return out;
}

inline json distances_json(const DistanceSet& d) {
    return std::vector<std::int64_t>(d.distances().begin(), d.distances().end());
}

} // namespace detail

inline json to_json(const FiniteColoring& c, const DistanceSet& d,
                    const std::optional<ParameterMatrix>& matrix = std::nullopt) {
    json j{{"kind", "finite"},
           {"t_or_period", c.order()},
           {"k", c.colors()},
           {"word", detail::word_json(c.word())},
           {"distances", detail::distances_json(d)}};
    if (matrix) {
        j["matrix"] = matrix_to_json(*matrix);
    }
    return j;
}

inline json to_json(const PeriodicColoring& c, const DistanceSet& d,
                    const std::optional<ParameterMatrix>& matrix = std::nullopt) {
    json j{{"kind", "periodic"},
           {"t_or_period", c.period()},
           {"k", c.colors()},
           {"word", detail::word_json(c.word())},
           {"distances", detail::distances_json(d)}};
    if (matrix) {
        j["matrix"] = matrix_to_json(*matrix);
    }
    return j;
}

inline json to_json(const ColoringDocument& doc) {
    return std::visit([&](const auto& c) { return to_json(c, doc.distances, doc.matrix); }, doc.coloring);
}

inline ColoringDocument coloring_from_json(const json& j) {
    try {
        const auto kind = j.at("kind").get<std::string>();
        const auto length = j.at("t_or_period").get<std::int64_t>();
        const auto k = j.at("k").get<int>();
        ColorWord word;
        for (int c : j.at("word").get<std::vector<int>>()) {
            if (c < 1 || c > 255) {
                throw std::invalid_argument("word entries must be colors in 1..255");
            }
            word.push_back(static_cast<Color>(c));
        }
        if (length < 1 || static_cast<std::size_t>(length) != word.size()) {
            throw std::invalid_argument("t_or_period must equal the word length");
        }
        DistanceSet d(j.at("distances").get<std::vector<std::int64_t>>());
        std::optional<ParameterMatrix> matrix;
        if (j.contains("matrix")) {
            matrix = matrix_from_json(j.at("matrix"));
        }
        if (kind == "finite") {
            return {FiniteColoring(k, std::move(word)), std::move(d), std::move(matrix)};
        }
        if (kind == "periodic") {
            return {PeriodicColoring(k, word), std::move(d), std::move(matrix)};
        }
        throw std::invalid_argument("kind must be \"finite\" or \"periodic\"");
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed coloring JSON: ") + e.what());
    }
}

/// Builds the colorings a construction spec describes. Families:
///   {"family": "4n", "n", "k", "even": [...], "odd": [...]}
///   {"family": "4n+2" | "4n-2", "n",
///    "split": {"kind": "mixed" | "bipartite", "monochrome": [...], "pairs": [[x, y], ...]},
///    "matching": {"monochrome": [[edge, color], ...], "swaps": [[edge_a, edge_b, pair], ...],
///                 "bipartite": [[edge, pair], ...]}}
///   {"family": "path", "k"}  -- all four path periods, on D_1 unless "n" is given
inline std::vector<ColoringDocument> construct_from_json(const json& spec) {
    auto colors = [](const json& j) {
        ColorWord w;
        for (int c : j.get<std::vector<int>>()) {
            if (c < 1 || c > 255) {
                throw std::invalid_argument("colors must be in 1..255");
            }
            w.push_back(static_cast<Color>(c));
        }
        return w;
    };
    try {
        const auto family = spec.at("family").get<std::string>();
        if (family == "path") {
            const int k = spec.at("k").get<int>();
            const auto n = spec.value("n", 1);
            const auto d = make_odd_distance_set(static_cast<std::size_t>(n));
            std::vector<ColoringDocument> out;
            for (auto& p : path_colorings(k)) {
                auto m = check_perfect(p, d).matrix;
                out.push_back({std::move(p), d, std::move(m)});
            }
            return out;
        }
        const int n = spec.at("n").get<int>();
        if (n < 1) {
            throw std::invalid_argument("n must be positive");
        }
        const auto d = make_odd_distance_set(static_cast<std::size_t>(n));
        auto finish = [&](FiniteColoring c) {
            auto m = check_perfect(c, d).matrix;
            return std::vector<ColoringDocument>{{std::move(c), d, std::move(m)}};
        };
        if (family == "4n") {
            return finish(construct_4n(n, spec.at("k").get<int>(), colors(spec.at("even")), colors(spec.at("odd"))));
        }
        if (family != "4n+2" && family != "4n-2") {
            throw std::invalid_argument("unknown family \"" + family + "\"");
        }
        const json& js = spec.at("split");
        ColorSplit split;
        const auto kind = js.value("kind", std::string("mixed"));
        if (kind == "bipartite") {
            split.kind = ColorSplit::Kind::bipartite;
        } else if (kind != "mixed") {
            throw std::invalid_argument("split kind must be \"mixed\" or \"bipartite\"");
        }
        if (js.contains("monochrome")) {
            split.monochrome = colors(js.at("monochrome"));
        }
        for (const auto& p : js.value("pairs", json::array())) {
            const auto xy = colors(p);
            if (xy.size() != 2) {
                throw std::invalid_argument("color pairs must have two entries");
            }
            split.pairs.emplace_back(xy[0], xy[1]);
        }
        const json& jm = spec.at("matching");
        MatchingSplit msplit;
        for (const auto& e : jm.value("monochrome", json::array())) {
            const auto c = e.at(1).get<int>();
            if (c < 1 || c > 255) {
                throw std::invalid_argument("colors must be in 1..255");
            }
            msplit.monochrome.emplace_back(e.at(0).get<std::size_t>(), static_cast<Color>(c));
        }
        for (const auto& e : jm.value("swaps", json::array())) {
            msplit.swaps.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<std::size_t>()});
        }
        for (const auto& e : jm.value("bipartite", json::array())) {
            msplit.bipartite.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        }
        return finish(family == "4n+2" ? construct_4n_plus_2(n, split, msplit)
                                       : construct_4n_minus_2(n, split, msplit));
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed construction JSON: ") + e.what());
    }
}

inline json to_json(const CheckReport& r) {
    const auto d = make_odd_distance_set(static_cast<std::size_t>(r.n));
    auto list = [&](const std::vector<PeriodicColoring>& cs) {
        json out = json::array();
        for (const auto& c : cs) {
            out.push_back(detail::word_json(c.word()));
        }
        return out;
    };
    return json{{"n", r.n},
                {"k", r.k},
                {"verdict", std::string(to_string(r.verdict))},
                {"enumerated_count", r.enumerated_count},
                {"induced_count", r.induced_count},
                {"missing", list(r.missing)},
                {"unsound", list(r.unsound)},
                {"path_only", list(r.path_only)}};
}

inline json to_json(const LemmaReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) {
        json witnesses = json::array();
        for (const auto& w : c.witnesses) {
            witnesses.push_back(detail::word_json(w.word()));
        }
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witnesses", witnesses}});
    }
    return json{{"n", r.n},
                {"colorings", r.colorings},
                {"realized_sums", std::vector<int>(r.realized_sums.begin(), r.realized_sums.end())},
                {"passed", r.passed()},
                {"checks", checks}};
}

} // namespace circulant
