#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "circulant/constructors.hpp"
#include "circulant/core.hpp"
#include "circulant/enumeration.hpp"
#include "circulant/perfection.hpp"

namespace circulant {

enum class Provenance { from_4n_minus_2, from_4n, from_4n_plus_2, from_path };

inline std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::from_4n_minus_2:
        return "from_4n-2";
    case Provenance::from_4n:
        return "from_4n";
    case Provenance::from_4n_plus_2:
        return "from_4n+2";
    case Provenance::from_path:
        return "from_path";
    }
    return "unknown";
}

/// The periodic coloring of Z that repeats a perfect coloring of Ci_t(D).
/// Reduction mod t is a covering map, so the matrix carries over.
inline PeriodicColoring induce(const FiniteColoring& coloring, const DistanceSet& dset) {
    if (!check_perfect(coloring, dset).is_perfect()) {
        throw std::invalid_argument("induce: source coloring is not perfect");
    }
    return PeriodicColoring(coloring.colors(), coloring.word());
}

struct InducedSet {
    int n = 0;
    int k = 0;
    std::map<PeriodicColoring, std::set<Provenance>> colorings;

    bool contains(const PeriodicColoring& c) const { return colorings.contains(c); }

    /// Members with at least one finite-circulant source.
    std::set<PeriodicColoring> from_finite() const {
        std::set<PeriodicColoring> out;
        for (const auto& [c, tags] : colorings) {
            if (tags.size() > 1 || !tags.contains(Provenance::from_path)) {
                out.insert(c);
            }
        }
        return out;
    }

    std::set<PeriodicColoring> path_only() const {
        std::set<PeriodicColoring> out;
        for (const auto& [c, tags] : colorings) {
            if (tags.size() == 1 && tags.contains(Provenance::from_path)) {
                out.insert(c);
            }
        }
        return out;
    }
};

/// Colorings of Ci_inf(D_n) induced from Ci_t(D_n), t = 4n-2, 4n, 4n+2, plus
/// every relabeling of the path colorings, with every source recorded.
inline InducedSet build_induced_set(int n, int k, Budget budget = {}) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("build_induced_set: n and k must be positive");
    }
    InducedSet out{n, k, {}};
    const auto dset = make_odd_distance_set(static_cast<std::size_t>(n));
    const auto nn = static_cast<std::size_t>(n);
    const std::pair<std::size_t, Provenance> sources[] = {
        {4 * nn - 2, Provenance::from_4n_minus_2},
        {4 * nn, Provenance::from_4n},
        {4 * nn + 2, Provenance::from_4n_plus_2},
    };
    for (auto [t, tag] : sources) {
        const auto finite = enumerate_perfect_finite(t, dset, k, no_symmetry, budget);
        for (const auto& f : finite.colorings) {
            out.colorings[PeriodicColoring(k, f.coloring.word())].insert(tag);
        }
    }
    // The path periods are listed up to renaming colors.
    ColorWord perm(static_cast<std::size_t>(k));
    for (const auto& p : path_colorings(k)) {
        std::iota(perm.begin(), perm.end(), Color{1});
        ColorWord image(p.period());
        do {
            for (std::size_t i = 0; i < image.size(); ++i) {
                image[i] = perm[p.word()[i] - 1u];
            }
            out.colorings[PeriodicColoring(k, image)].insert(Provenance::from_path);
        } while (std::ranges::next_permutation(perm).found);
    }
    return out;
}

enum class Verdict { confirmed, counterexample };

inline std::string_view to_string(Verdict v) {
    return v == Verdict::confirmed ? "confirmed" : "counterexample";
}

/// Comparison of the complete enumeration with the induced set at one (n, k).
struct CheckReport {
    int n = 0;
    int k = 0;
    Verdict verdict = Verdict::confirmed;
    std::size_t enumerated_count = 0;
    std::size_t induced_count = 0;
    /// Enumerated but not induced; nonempty means the claim fails at (n, k).
    std::vector<PeriodicColoring> missing;
    /// Induced but not enumerated; nonempty would mean an unsound induction.
    std::vector<PeriodicColoring> unsound;
    /// Induced only from the path graph.
    std::vector<PeriodicColoring> path_only;
    double enumeration_seconds = 0.0;
    double induction_seconds = 0.0;
};

/// Exhaustive agreement check at (n, k). The automaton runs over every
/// row-sum matrix so the result does not lean on the k = 2 matrix families.
inline CheckReport check_conjecture(int n, int k, Budget budget = {}) {
    using clock = std::chrono::steady_clock;
    CheckReport report;
    report.n = n;
    report.k = k;

    const auto t0 = clock::now();
    const auto enumerated = enumerate_periodic_perfect(n, k, all_row_sum_matrices(n, k), budget);
    const auto t1 = clock::now();
    const auto induced = build_induced_set(n, k, budget);
    const auto t2 = clock::now();

    report.enumeration_seconds = std::chrono::duration<double>(t1 - t0).count();
    report.induction_seconds = std::chrono::duration<double>(t2 - t1).count();
    report.enumerated_count = enumerated.size();
    report.induced_count = induced.colorings.size();

    const auto all = enumerated.coloring_set();
    for (const auto& c : all) {
        if (!induced.contains(c)) {
            report.missing.push_back(c);
        }
    }
    for (const auto& [c, tags] : induced.colorings) {
        if (!all.contains(c)) {
            report.unsound.push_back(c);
        }
    }
    for (const auto& c : induced.path_only()) {
        report.path_only.push_back(c);
    }
    report.verdict = report.missing.empty() ? Verdict::confirmed : Verdict::counterexample;
    return report;
}

inline CheckReport check_theorem_k2(int n, Budget budget = {}) {
    return check_conjecture(n, 2, budget);
}

struct LemmaCheck {
    std::string name;
    bool passed = true;
    std::vector<PeriodicColoring> witnesses;
};

struct LemmaReport {
    int n = 0;
    std::size_t colorings = 0;
    std::set<int> realized_sums;
    std::vector<LemmaCheck> checks;

    bool passed() const {
        return std::ranges::all_of(checks, [](const LemmaCheck& c) { return c.passed; });
    }
    const LemmaCheck& check(std::string_view name) const {
        for (const auto& c : checks) {
            if (c.name == name) {
                return c;
            }
        }
        throw std::out_of_range("LemmaReport: no check named " + std::string(name));
    }
};

/// Runs every structural claim about perfect 2-colorings of Ci_inf(D_n)
/// against the complete (unpruned) enumeration.
inline LemmaReport lemma_regression_suite(int n, Budget budget = {}) {
    const auto dset = make_odd_distance_set(static_cast<std::size_t>(n));
    const auto enumerated = enumerate_periodic_perfect(n, 2, all_row_sum_matrices(n, 2), budget);

    LemmaReport report;
    report.n = n;
    report.colorings = enumerated.size();
    LemmaCheck sums{"outer_degree_sums", true, {}};
    LemmaCheck patterns{"local_patterns", true, {}};
    LemmaCheck periods{"period_lengths", true, {}};
    LemmaCheck balance{"even_odd_balance", true, {}};
    const std::set<int> admissible{4 * n, 2 * n, 2 * n + 1, 2 * n - 1};

    auto fail = [](LemmaCheck& check, const PeriodicColoring& c) {
        check.passed = false;
        check.witnesses.push_back(c);
    };

    for (const auto& [coloring, matrix] : enumerated.colorings) {
        const int sum = outer_degrees(matrix, n).sum();
        report.realized_sums.insert(sum);
        if (!admissible.contains(sum)) {
            fail(sums, coloring);
            continue;
        }
        if (!check_local_patterns(coloring, n)) {
            fail(patterns, coloring);
        }
        if (is_bipartite_coloring(coloring, dset)) {
            continue;
        }
        if (!check_period_length_claim(coloring, n)) {
            fail(periods, coloring);
        }
        if (coloring.period() % 2 == 0 && !check_even_odd_balance(coloring)) {
            fail(balance, coloring);
        }
    }
    report.checks = {sums, patterns, periods, balance};
    return report;
}

} // namespace circulant
