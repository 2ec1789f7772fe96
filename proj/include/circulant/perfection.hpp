#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "circulant/core.hpp"

namespace circulant {

/// Outcome of a perfection check. Exactly one of `matrix` and `witness` is set.
struct PerfectionVerdict {
    std::optional<ParameterMatrix> matrix;
    /// Two vertices of equal color whose neighborhoods are colored differently.
    std::optional<std::pair<std::int64_t, std::int64_t>> witness;

    bool is_perfect() const noexcept { return matrix.has_value(); }
};

namespace detail {

/// Perfection test on a cyclic word whose neighbors sit at `offsets`
/// (residues modulo word.size()). Hot path for the enumerators.
inline std::optional<ParameterMatrix>
cyclic_matrix(std::span<const Color> word, int k, std::span<const std::size_t> offsets,
              std::pair<std::size_t, std::size_t>* witness = nullptr) {
    const std::size_t t = word.size();
    const auto kk = static_cast<std::size_t>(k);
    std::vector<int> rows(kk * kk, 0);
    std::vector<std::size_t> first(kk + 1, t);
    std::vector<int> counts(kk);
    for (std::size_t v = 0; v < t; ++v) {
        std::ranges::fill(counts, 0);
        for (auto o : offsets) {
            std::size_t u = v + o;
            if (u >= t) {
                u -= t;
            }
            ++counts[word[u] - 1u];
        }
        const Color c = word[v];
        int* row = rows.data() + (c - 1u) * kk;
        if (first[c] == t) {
            first[c] = v;
            std::ranges::copy(counts, row);
        } else if (!std::equal(counts.begin(), counts.end(), row)) {
            if (witness != nullptr) {
                *witness = {first[c], v};
            }
            return std::nullopt;
        }
    }
    ParameterMatrix m(k);
    for (Color i = 1; i <= k; ++i) {
        m.set_row(i, std::span<const int>(rows).subspan((i - 1u) * kk, kk));
    }
    return m;
}

} // namespace detail

inline PerfectionVerdict check_perfect(const FiniteColoring& coloring, const DistanceSet& dset) {
    const auto offsets = neighbor_offsets(dset, coloring.order());
    std::pair<std::size_t, std::size_t> w{};
    PerfectionVerdict verdict;
    verdict.matrix = detail::cyclic_matrix(coloring.word(), coloring.colors(), offsets, &w);
    if (!verdict.matrix) {
        verdict.witness = {static_cast<std::int64_t>(w.first), static_cast<std::int64_t>(w.second)};
    }
    return verdict;
}

/// Checks vertices 0..p-1 of Ci_inf(D); translation by the period covers the rest.
inline PerfectionVerdict check_perfect(const PeriodicColoring& coloring, const DistanceSet& dset) {
    const int k = coloring.colors();
    std::vector<std::optional<ColorCounts>> rows(static_cast<std::size_t>(k) + 1);
    std::vector<std::int64_t> first(static_cast<std::size_t>(k) + 1, 0);
    PerfectionVerdict verdict;
    const auto p = static_cast<std::int64_t>(coloring.period());
    for (std::int64_t v = 0; v < p; ++v) {
        const Color c = coloring.at(v);
        auto counts = neighbor_color_counts(coloring, dset, v);
        if (!rows[c]) {
            rows[c] = std::move(counts);
            first[c] = v;
        } else if (*rows[c] != counts) {
            verdict.witness = {first[c], v};
            return verdict;
        }
    }
    ParameterMatrix m(k);
    for (Color i = 1; i <= k; ++i) {
        m.set_row(i, rows[i]->values());
    }
    verdict.matrix = std::move(m);
    return verdict;
}

namespace detail {

inline void require_bipartite_graph(const DistanceSet& dset) {
    if (!dset.all_odd()) {
        throw std::invalid_argument("graph is not bipartite: distance set has an even entry");
    }
}

/// Color sets on even and odd positions of a cyclic word of even length are disjoint.
inline bool parity_classes_disjoint(std::span<const Color> word) {
    std::vector<bool> on_even(256, false);
    for (std::size_t i = 0; i < word.size(); i += 2) {
        on_even[word[i]] = true;
    }
    for (std::size_t i = 1; i < word.size(); i += 2) {
        if (on_even[word[i]]) {
            return false;
        }
    }
    return true;
}

inline bool even_odd_balance(std::span<const Color> word) {
    if (word.size() % 2 != 0) {
        throw std::invalid_argument("even/odd balance needs an even period");
    }
    if (parity_classes_disjoint(word)) {
        return true;
    }
    std::vector<int> diff(256, 0);
    for (std::size_t i = 0; i < word.size(); ++i) {
        diff[word[i]] += (i % 2 == 0) ? 1 : -1;
    }
    return std::ranges::all_of(diff, [](int x) { return x == 0; });
}

} // namespace detail

/// True iff the colors on even and odd vertices are disjoint.
inline bool is_bipartite_coloring(const FiniteColoring& coloring, const DistanceSet& dset) {
    detail::require_bipartite_graph(dset);
    if (coloring.order() % 2 != 0) {
        throw std::invalid_argument("Ci_t(D) with odd t is not bipartite");
    }
    return detail::parity_classes_disjoint(coloring.word());
}

/// A coloring with odd period puts every color on both parities, so it is
/// never bipartite.
inline bool is_bipartite_coloring(const PeriodicColoring& coloring, const DistanceSet& dset) {
    detail::require_bipartite_graph(dset);
    if (coloring.period() % 2 != 0) {
        return false;
    }
    return detail::parity_classes_disjoint(coloring.word());
}

inline bool check_even_odd_balance(const FiniteColoring& coloring) {
    return detail::even_odd_balance(coloring.word());
}

inline bool check_even_odd_balance(const PeriodicColoring& coloring) {
    return detail::even_odd_balance(coloring.word());
}

/// Outer degrees of a 2-coloring; b belongs to color 1 ("black").
struct OuterDegrees {
    int n = 0;
    int b = 0;
    int c = 0;

    int sum() const noexcept { return b + c; }
    friend bool operator==(const OuterDegrees&, const OuterDegrees&) = default;
};

inline OuterDegrees outer_degrees(const ParameterMatrix& m, int n) {
    if (m.colors() != 2) {
        throw std::invalid_argument("outer degrees are defined for 2-colorings only");
    }
    return OuterDegrees{n, m(1, 2), m(2, 1)};
}

enum class SumFamily { bipartite, balanced, plus_one, minus_one };

/// One admissible family of 2x2 parameter matrices on Ci_inf(D_n), indexed by b.
struct MatrixTemplate {
    SumFamily family;
    int n;
    int sum;
    int b_min;
    int b_max;

    bool empty() const noexcept { return b_min > b_max; }

    /// ((2n-b, b), (c, 2n-c)) with c = sum - b. For the four families this is
    /// ((0,2n),(2n,0)), ((c,b),(c,b)), ((c-1,b),(c,b-1)) and ((c+1,b),(c,b+1)).
    ParameterMatrix at(int b) const {
        if (b < b_min || b > b_max) {
            throw std::out_of_range("MatrixTemplate: b outside the family's range");
        }
        const int c = sum - b;
        return ParameterMatrix{{2 * n - b, b}, {c, 2 * n - c}};
    }
};

inline std::vector<MatrixTemplate> admissible_matrix_templates(int n) {
    if (n < 1) {
        throw std::invalid_argument("admissible_matrix_templates: n must be positive");
    }
    auto make = [n](SumFamily f, int sum) {
        // b and c are both in 1..2n.
        return MatrixTemplate{f, n, sum, std::max(1, sum - 2 * n), std::min(2 * n, sum - 1)};
    };
    return {make(SumFamily::bipartite, 4 * n), make(SumFamily::balanced, 2 * n),
            make(SumFamily::plus_one, 2 * n + 1), make(SumFamily::minus_one, 2 * n - 1)};
}

namespace detail {

inline OuterDegrees perfect_two_coloring_degrees(const PeriodicColoring& coloring, int n,
                                                 const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": n must be positive");
    }
    if (coloring.colors() != 2) {
        throw std::invalid_argument(std::string(what) + ": needs a 2-coloring");
    }
    const auto verdict = check_perfect(coloring, make_odd_distance_set(static_cast<std::size_t>(n)));
    if (!verdict.is_perfect()) {
        throw std::invalid_argument(std::string(what) + ": coloring is not perfect");
    }
    return outer_degrees(*verdict.matrix, n);
}

} // namespace detail

/// Local color patterns forced around every pair (i, i+2) of a perfect 2-coloring.
inline bool check_local_patterns(const PeriodicColoring& coloring, int n) {
    const int sum = detail::perfect_two_coloring_degrees(coloring, n, "check_local_patterns").sum();
    const auto p = static_cast<std::int64_t>(coloring.period());
    auto phi = [&](std::int64_t i) { return coloring.at(i); };
    for (std::int64_t i = 0; i < p; ++i) {
        const Color left = phi(i - 2 * n + 1);
        const Color right = phi(i + 2 * n + 1);
        if (phi(i) == phi(i + 2)) {
            if (left != right) {
                return false;
            }
        } else if (sum == 2 * n + 1) {
            if (left != phi(i + 2) || right != phi(i)) {
                return false;
            }
        } else if (sum == 2 * n - 1) {
            if (left != phi(i) || right != phi(i + 2)) {
                return false;
            }
        }
    }
    return true;
}

/// Period each admissible sum forces: 2 (bipartite), 4n, 2n+1 or 2n-1.
/// Tests that the forced length is a period, not that it is minimal.
inline bool check_period_length_claim(const PeriodicColoring& coloring, int n) {
    const int sum = detail::perfect_two_coloring_degrees(coloring, n, "check_period_length_claim").sum();
    std::int64_t length = 0;
    if (sum == 4 * n) {
        length = 2;
    } else if (sum == 2 * n) {
        length = 4 * n;
    } else if (sum == 2 * n + 1) {
        length = 2 * n + 1;
    } else if (sum == 2 * n - 1) {
        length = 2 * n - 1;
    } else {
        return false;
    }
    const auto p = static_cast<std::int64_t>(coloring.period());
    for (std::int64_t i = 0; i < p; ++i) {
        if (coloring.at(i) != coloring.at(i + length)) {
            return false;
        }
    }
    return true;
}

} // namespace circulant
