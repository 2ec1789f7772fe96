#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "circulant/core.hpp"
#include "circulant/errors.hpp"
#include "circulant/perfection.hpp"

namespace circulant {

inline constexpr Symmetry no_symmetry{false, false, false};

/// Search limits. `words` caps k^t for finite brute force; `states` caps
/// k^(4n-1) window states per matrix for the automaton.
struct Budget {
    std::uint64_t words = std::uint64_t{1} << 32;
    std::uint64_t states = std::uint64_t{1} << 24;
};

struct EnumerationStats {
    std::uint64_t words_examined = 0;
    std::uint64_t matrices_tried = 0;
    std::uint64_t states_explored = 0;
    std::uint64_t cycles_found = 0;
};

template <class Coloring>
struct Found {
    Coloring coloring;
    ParameterMatrix matrix;
};

/// Colorings sorted by word, pairwise distinct, each with its parameter matrix.
template <class Coloring>
struct EnumerationResult {
    std::vector<Found<Coloring>> colorings;
    EnumerationStats stats;

    std::size_t size() const noexcept { return colorings.size(); }

    bool contains(const Coloring& c) const {
        return std::ranges::any_of(colorings, [&](const auto& f) { return f.coloring == c; });
    }

    std::set<Coloring> coloring_set() const {
        std::set<Coloring> out;
        for (const auto& f : colorings) {
            out.insert(f.coloring);
        }
        return out;
    }
};

namespace detail {

/// base^exponent, saturating at UINT64_MAX.
inline std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (base != 0 && r > UINT64_MAX / base) {
            return UINT64_MAX;
        }
        r *= base;
    }
    return r;
}

/// Restricted growth strings of length t using exactly k colors: color c+1
/// first appears after color c. One representative per color-permutation orbit.
inline void for_each_growth_string(std::size_t t, int k, const std::function<void(const ColorWord&)>& visit) {
    if (k < 1 || static_cast<std::size_t>(k) > t) {
        return;
    }
    ColorWord word(t, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == t) {
            if (used == k) {
                visit(word);
            }
            return;
        }
        if (t - i < static_cast<std::size_t>(k - used)) {
            return;
        }
        const int top = std::min(used + 1, k);
        for (int c = 1; c <= top; ++c) {
            word[i] = static_cast<Color>(c);
            rec(i + 1, std::max(used, c));
        }
    };
    rec(0, 0);
}

} // namespace detail

/// Every perfect surjective k-coloring of Ci_t(D), optionally reduced to one
/// representative per orbit of the selected symmetries (length stays t).
inline EnumerationResult<FiniteColoring>
enumerate_perfect_finite(std::size_t t, const DistanceSet& dset, int k, Symmetry reduce = no_symmetry,
                         Budget budget = {}) {
    if (t == 0 || k < 1 || k > 255) {
        throw std::invalid_argument("enumerate_perfect_finite: need t >= 1 and 1 <= k <= 255");
    }
    const auto space = detail::saturating_power(static_cast<std::uint64_t>(k), t);
    if (space > budget.words) {
        throw resource_limit_error("enumerate_perfect_finite: search space k^t = " + std::to_string(k) +
                                   "^" + std::to_string(t) + " = " +
                                   (space == UINT64_MAX ? std::string("overflow") : std::to_string(space)) +
                                   " exceeds word budget " + std::to_string(budget.words));
    }

    const auto offsets = neighbor_offsets(dset, t);
    const bool reducing = reduce.rotation || reduce.reflection || reduce.color_permutation;
    EnumerationResult<FiniteColoring> result;
    std::set<ColorWord> words;

    ColorWord perm(static_cast<std::size_t>(k));
    detail::for_each_growth_string(t, k, [&](const ColorWord& rgs) {
        ++result.stats.words_examined;
        if (!detail::cyclic_matrix(rgs, k, offsets)) {
            return;
        }
        // Perfection is invariant under renaming colors.
        std::iota(perm.begin(), perm.end(), Color{1});
        ColorWord image(t);
        do {
            for (std::size_t i = 0; i < t; ++i) {
                image[i] = perm[rgs[i] - 1u];
            }
            words.insert(reducing ? repeat_to(canonical_form(image, reduce), t) : image);
        } while (!reduce.color_permutation && std::ranges::next_permutation(perm).found);
    });

    result.colorings.reserve(words.size());
    for (const auto& w : words) {
        auto m = detail::cyclic_matrix(w, k, offsets);
        result.colorings.push_back({FiniteColoring(k, w), std::move(*m)});
    }
    return result;
}

/// All k x k nonnegative matrices with every row summing to 2n.
inline std::vector<ParameterMatrix> all_row_sum_matrices(int n, int k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("all_row_sum_matrices: n and k must be positive");
    }
    std::vector<std::vector<int>> rows;
    std::vector<int> row(static_cast<std::size_t>(k), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == row.size()) {
            row[i] = left;
            rows.push_back(row);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            row[i] = x;
            rec(i + 1, left - x);
        }
    };
    rec(0, 2 * n);

    std::vector<ParameterMatrix> out;
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    while (true) {
        ParameterMatrix m(k);
        for (Color i = 1; i <= k; ++i) {
            m.set_row(i, rows[pick[i - 1u]]);
        }
        out.push_back(std::move(m));
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == rows.size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) {
            break;
        }
    }
    return out;
}

/// Matrices the automaton tries. k = 2 keeps only the admissible families;
/// other k keep every matrix with row sums 2n.
inline std::vector<ParameterMatrix> candidate_matrices(int n, int k) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("candidate_matrices: n and k must be positive");
    }
    if (k != 2) {
        return all_row_sum_matrices(n, k);
    }
    std::vector<ParameterMatrix> out;
    for (const auto& family : admissible_matrix_templates(n)) {
        for (int b = family.b_min; b <= family.b_max; ++b) {
            out.push_back(family.at(b));
        }
    }
    return out;
}

/// Forced-extension automaton on windows of 4n-1 consecutive colors of
/// Ci_inf(D_n). Window offset 2n-1 is the center.
class Automaton {
public:
    Automaton(int n, ParameterMatrix matrix) : n_(n), matrix_(std::move(matrix)) {
        if (n_ < 1) {
            throw std::invalid_argument("Automaton: n must be positive");
        }
        for (Color i = 1; i <= matrix_.colors(); ++i) {
            if (matrix_.row_sum(i) != 2 * n_) {
                throw std::invalid_argument("Automaton: matrix rows must sum to 2n");
            }
        }
    }

    int n() const noexcept { return n_; }
    int colors() const noexcept { return matrix_.colors(); }
    const ParameterMatrix& matrix() const noexcept { return matrix_; }
    std::size_t window_length() const noexcept { return static_cast<std::size_t>(4 * n_ - 1); }

    /// The center's whole neighborhood lies in the window; its counts must match its row.
    bool center_consistent(std::span<const Color> window) const {
        validate(window);
        const auto center = static_cast<std::size_t>(2 * n_ - 1);
        std::vector<int> counts(static_cast<std::size_t>(colors()), 0);
        for (int d = 1; d < 2 * n_; d += 2) {
            ++counts[window[center - static_cast<std::size_t>(d)] - 1u];
            ++counts[window[center + static_cast<std::size_t>(d)] - 1u];
        }
        return std::ranges::equal(counts, matrix_.row(window[center]));
    }

    /// Color forced at offset 4n-1, the one neighbor of offset 2n outside the
    /// window. nullopt (Dead) when the window admits no continuation.
    std::optional<Color> step(std::span<const Color> window) const {
        if (!center_consistent(window)) {
            return std::nullopt;
        }
        const auto probe = static_cast<std::size_t>(2 * n_);
        const auto row = matrix_.row(window[probe]);
        std::vector<int> deficit(row.begin(), row.end());
        for (int d = 1; d < 2 * n_; d += 2) {
            --deficit[window[probe - static_cast<std::size_t>(d)] - 1u];
            if (d < 2 * n_ - 1) {
                --deficit[window[probe + static_cast<std::size_t>(d)] - 1u];
            }
        }
        std::optional<Color> next;
        for (std::size_t j = 0; j < deficit.size(); ++j) {
            if (deficit[j] == 0) {
                continue;
            }
            if (deficit[j] != 1 || next) {
                return std::nullopt;
            }
            next = static_cast<Color>(j + 1);
        }
        return next;
    }

private:
    void validate(std::span<const Color> window) const {
        if (window.size() != window_length()) {
            throw std::invalid_argument("Automaton: window must have length 4n-1");
        }
        for (Color c : window) {
            if (c < 1 || c > colors()) {
                throw std::invalid_argument("Automaton: window color out of range");
            }
        }
    }

    int n_;
    ParameterMatrix matrix_;
};

inline std::optional<Color> step_window(const Automaton& automaton, std::span<const Color> window) {
    return automaton.step(window);
}

/// All perfect k-colorings of Ci_inf(D_n). For each matrix, every consistent
/// window is followed forward; each cycle of the functional graph is one
/// periodic coloring. Non-surjective cycles are dropped.
inline EnumerationResult<PeriodicColoring>
enumerate_periodic_perfect(int n, int k, std::optional<std::vector<ParameterMatrix>> matrices = std::nullopt,
                           Budget budget = {}) {
    if (n < 1 || k < 1 || k > 255) {
        throw std::invalid_argument("enumerate_periodic_perfect: need n >= 1 and 1 <= k <= 255");
    }
    const auto length = static_cast<std::size_t>(4 * n - 1);
    const auto states = detail::saturating_power(static_cast<std::uint64_t>(k), length);
    if (states > budget.states || states > UINT32_MAX) {
        throw resource_limit_error("enumerate_periodic_perfect: k^(4n-1) = " + std::to_string(k) + "^" +
                                   std::to_string(length) + " window states exceed state budget " +
                                   std::to_string(budget.states));
    }
    if (!matrices) {
        matrices = candidate_matrices(n, k);
    }

    const auto kk = static_cast<std::uint64_t>(k);
    const std::uint64_t top_place = detail::saturating_power(kk, length - 1);
    const DistanceSet dset = make_odd_distance_set(static_cast<std::size_t>(n));

    EnumerationResult<PeriodicColoring> result;
    std::map<PeriodicColoring, ParameterMatrix> found;

    // stamp[s] >= base marks a state visited under the current matrix;
    // stamp[s] == walk marks it on the current walk.
    std::vector<std::uint32_t> stamp(states, 0);
    std::uint32_t walk = 0;
    ColorWord window(length);
    std::vector<std::uint64_t> path;

    for (const auto& m : *matrices) {
        if (m.colors() != k) {
            throw std::invalid_argument("enumerate_periodic_perfect: matrix size differs from k");
        }
        const Automaton automaton(n, m);
        ++result.stats.matrices_tried;
        if (walk > UINT32_MAX - states - 1) {
            std::ranges::fill(stamp, 0);
            walk = 0;
        }
        const std::uint32_t base = walk + 1;

        auto decode = [&](std::uint64_t s) {
            for (std::size_t i = 0; i < length; ++i) {
                window[i] = static_cast<Color>(s % kk + 1);
                s /= kk;
            }
        };

        for (std::uint64_t start = 0; start < states; ++start) {
            if (stamp[start] >= base) {
                continue;
            }
            decode(start);
            if (!automaton.center_consistent(window)) {
                continue;
            }
            ++walk;
            path.clear();
            std::uint64_t s = start;
            while (true) {
                if (stamp[s] >= base) {
                    if (stamp[s] == walk) {
                        const auto at = std::ranges::find(path, s);
                        ColorWord period;
                        for (auto it = at; it != path.end(); ++it) {
                            period.push_back(static_cast<Color>(*it % kk + 1));
                        }
                        ++result.stats.cycles_found;
                        ColorWord distinct = period;
                        std::ranges::sort(distinct);
                        if (std::ranges::unique(distinct).begin() - distinct.begin() == k) {
                            PeriodicColoring coloring(k, period);
                            const auto verdict = check_perfect(coloring, dset);
                            if (!verdict.is_perfect() || *verdict.matrix != m) {
                                throw std::logic_error("automaton cycle is not perfect with its matrix");
                            }
                            found.emplace(std::move(coloring), m);
                        }
                    }
                    break;
                }
                stamp[s] = walk;
                path.push_back(s);
                ++result.stats.states_explored;
                decode(s);
                const auto next = automaton.step(window);
                if (!next) {
                    break;
                }
                s = s / kk + static_cast<std::uint64_t>(*next - 1u) * top_place;
            }
        }
    }

    result.colorings.reserve(found.size());
    for (auto& [coloring, matrix] : found) {
        result.colorings.push_back({coloring, matrix});
    }
    return result;
}

} // namespace circulant
