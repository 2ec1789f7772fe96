#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "circulant/core.hpp"
#include "circulant/perfection.hpp"

namespace circulant {

/// The four perfect periods of the infinite path with k colors, canonicalized,
/// in template order with later duplicates dropped.
inline std::vector<PeriodicColoring> path_colorings(int k) {
    if (k < 1) {
        throw std::invalid_argument("path_colorings: k must be positive");
    }
    if (k == 1) {
        return {PeriodicColoring(1, {1})};
    }
    const auto top = static_cast<Color>(k);
    ColorWord ascending;
    for (Color c = 1; c <= top; ++c) {
        ascending.push_back(c);
    }
    // k (k-1) ... 2 followed by the given middle and then 2 ... (k-1) [k]
    auto mirrored = [top](ColorWord middle, bool close_with_top) {
        ColorWord w;
        for (Color c = top; c >= 2; --c) {
            w.push_back(c);
        }
        w.insert(w.end(), middle.begin(), middle.end());
        for (Color c = 2; c < top; ++c) {
            w.push_back(c);
        }
        if (close_with_top) {
            w.push_back(top);
        }
        return w;
    };
    const std::vector<ColorWord> templates{ascending, mirrored({1}, false), mirrored({1}, true),
                                           mirrored({1, 1}, true)};
    std::vector<PeriodicColoring> out;
    for (const auto& w : templates) {
        PeriodicColoring p(k, w);
        if (std::ranges::find(out, p) == out.end()) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

/// Ci_4n(D_n) = K_{2n,2n}: `even_part[i]` colors vertex 2i and `odd_part[i]`
/// colors vertex 2i+1. The parts must use disjoint color sets (bipartite) or
/// hold every color equally often.
inline FiniteColoring construct_4n(int n, int k, std::span<const Color> even_part,
                                   std::span<const Color> odd_part) {
    if (n < 1) {
        throw std::invalid_argument("construct_4n: n must be positive");
    }
    const auto half = static_cast<std::size_t>(2 * n);
    if (even_part.size() != half || odd_part.size() != half) {
        throw std::invalid_argument("construct_4n: each part needs exactly 2n colors");
    }
    ColorWord word(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
        word[2 * i] = even_part[i];
        word[2 * i + 1] = odd_part[i];
    }
    if (!detail::parity_classes_disjoint(word) && !detail::even_odd_balance(word)) {
        throw std::invalid_argument(
            "construct_4n: parts share a color but differ in color counts");
    }
    return FiniteColoring(k, std::move(word));
}

/// Color side of a K_{m,m} +/- perfect matching construction.
///
/// mixed: `monochrome` is C1 and `pairs` pairs up C2 for crosswise edges.
/// bipartite: `pairs` is the pairing (C_e color, C_o color); `monochrome` is empty.
struct ColorSplit {
    enum class Kind { mixed, bipartite };

    Kind kind = Kind::mixed;
    std::vector<Color> monochrome;
    std::vector<std::pair<Color, Color>> pairs;

    int colors() const noexcept {
        return static_cast<int>(monochrome.size() + 2 * pairs.size());
    }
};

/// Edge side of the construction. Matching edge e joins e and e + m where m is
/// the matching size (2n+1 or 2n-1).
struct MatchingSplit {
    /// Two P2 edges colored crosswise with `ColorSplit::pairs[pair]` = (x, y):
    /// `first_edge` gets x at its even end, `second_edge` gets y at its even end.
    struct Swap {
        std::size_t first_edge;
        std::size_t second_edge;
        std::size_t pair;
    };

    std::vector<std::pair<std::size_t, Color>> monochrome;
    std::vector<Swap> swaps;
    /// Bipartite kind: edge -> index into `ColorSplit::pairs`.
    std::vector<std::pair<std::size_t, std::size_t>> bipartite;
};

namespace detail {

inline void validate_color_split(const ColorSplit& split, const char* what) {
    const int k = split.colors();
    if (k < 1) {
        throw std::invalid_argument(std::string(what) + ": color split is empty");
    }
    std::vector<int> seen(static_cast<std::size_t>(k) + 1, 0);
    auto mark = [&](Color c) {
        if (c < 1 || c > k) {
            throw std::invalid_argument(std::string(what) + ": colors must be exactly 1..k");
        }
        if (++seen[c] > 1) {
            throw std::invalid_argument(std::string(what) + ": color " + std::to_string(c) +
                                        " appears twice in the split");
        }
    };
    if (split.kind == ColorSplit::Kind::bipartite && !split.monochrome.empty()) {
        throw std::invalid_argument(std::string(what) + ": bipartite split has monochrome colors");
    }
    for (Color c : split.monochrome) {
        mark(c);
    }
    for (auto [x, y] : split.pairs) {
        mark(x);
        mark(y);
    }
}

inline FiniteColoring construct_with_matching(int n, std::size_t matching, const ColorSplit& split,
                                              const MatchingSplit& msplit, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + ": n must be positive");
    }
    validate_color_split(split, what);
    const std::size_t t = 2 * matching;
    const bool bipartite = split.kind == ColorSplit::Kind::bipartite;
    if (bipartite && (!msplit.monochrome.empty() || !msplit.swaps.empty())) {
        throw std::invalid_argument(std::string(what) + ": bipartite split takes per-edge pairs only");
    }
    if (!bipartite && !msplit.bipartite.empty()) {
        throw std::invalid_argument(std::string(what) + ": per-edge pairs need a bipartite split");
    }

    ColorWord word(t, 0);
    std::vector<bool> used(matching, false);
    auto paint = [&](std::size_t edge, Color even_end, Color odd_end) {
        if (edge >= matching) {
            throw std::invalid_argument(std::string(what) + ": matching edge " +
                                        std::to_string(edge) + " does not exist");
        }
        if (used[edge]) {
            throw std::invalid_argument(std::string(what) + ": matching edge " +
                                        std::to_string(edge) + " assigned twice");
        }
        used[edge] = true;
        const std::size_t a = edge;
        const std::size_t b = edge + matching;
        const bool a_even = a % 2 == 0;
        word[a_even ? a : b] = even_end;
        word[a_even ? b : a] = odd_end;
    };
    auto pair_at = [&](std::size_t index) {
        if (index >= split.pairs.size()) {
            throw std::invalid_argument(std::string(what) + ": color pair index out of range");
        }
        return split.pairs[index];
    };

    for (auto [edge, c] : msplit.monochrome) {
        if (std::ranges::find(split.monochrome, c) == split.monochrome.end()) {
            throw std::invalid_argument(std::string(what) + ": monochrome edge color not in C1");
        }
        paint(edge, c, c);
    }
    for (const auto& s : msplit.swaps) {
        if (s.first_edge == s.second_edge) {
            throw std::invalid_argument(std::string(what) + ": swap pairs an edge with itself");
        }
        const auto [x, y] = pair_at(s.pair);
        paint(s.first_edge, x, y);
        paint(s.second_edge, y, x);
    }
    for (auto [edge, index] : msplit.bipartite) {
        const auto [even_color, odd_color] = pair_at(index);
        paint(edge, even_color, odd_color);
    }
    if (!std::ranges::all_of(used, [](bool u) { return u; })) {
        throw std::invalid_argument(std::string(what) + ": some matching edge is left uncolored");
    }
    return FiniteColoring(split.colors(), std::move(word));
}

} // namespace detail

/// Ci_{4n+2}(D_n): K_{2n+1,2n+1} minus the matching {(i, i+2n+1)}.
inline FiniteColoring construct_4n_plus_2(int n, const ColorSplit& split, const MatchingSplit& msplit) {
    return detail::construct_with_matching(n, static_cast<std::size_t>(2 * n + 1), split, msplit,
                                           "construct_4n_plus_2");
}

/// Ci_{4n-2}(D_n): K_{2n-1,2n-1} plus the doubled matching {(i, i+2n-1)}.
inline FiniteColoring construct_4n_minus_2(int n, const ColorSplit& split, const MatchingSplit& msplit) {
    return detail::construct_with_matching(n, static_cast<std::size_t>(2 * n - 1), split, msplit,
                                           "construct_4n_minus_2");
}

/// Perfect 2-colorings of Ci_t(D_n), t = 4n +/- 2, split into the two families.
struct TwoColorFamilies {
    std::vector<FiniteColoring> monochrome_matching;
    std::vector<FiniteColoring> bipartite;

    std::size_t size() const noexcept { return monochrome_matching.size() + bipartite.size(); }
};

inline TwoColorFamilies two_color_cases(int n, std::size_t t) {
    if (n < 1) {
        throw std::invalid_argument("two_color_cases: n must be positive");
    }
    const auto nn = static_cast<std::size_t>(n);
    if (t != 4 * nn - 2 && t != 4 * nn + 2) {
        throw std::invalid_argument("two_color_cases: t must be 4n-2 or 4n+2");
    }
    const std::size_t matching = t / 2;
    auto build = [&](const ColorSplit& split, const MatchingSplit& msplit) {
        return t == 4 * nn + 2 ? construct_4n_plus_2(n, split, msplit)
                               : construct_4n_minus_2(n, split, msplit);
    };

    TwoColorFamilies out;
    const ColorSplit mono{ColorSplit::Kind::mixed, {1, 2}, {}};
    const std::uint64_t masks = std::uint64_t{1} << matching;
    for (std::uint64_t mask = 1; mask + 1 < masks; ++mask) {
        MatchingSplit msplit;
        for (std::size_t e = 0; e < matching; ++e) {
            msplit.monochrome.emplace_back(e, ((mask >> e) & 1u) ? Color{1} : Color{2});
        }
        out.monochrome_matching.push_back(build(mono, msplit));
    }
    for (auto [even_color, odd_color] : {std::pair<Color, Color>{1, 2}, {2, 1}}) {
        const ColorSplit split{ColorSplit::Kind::bipartite, {}, {{even_color, odd_color}}};
        MatchingSplit msplit;
        for (std::size_t e = 0; e < matching; ++e) {
            msplit.bipartite.emplace_back(e, 0);
        }
        out.bipartite.push_back(build(split, msplit));
    }
    std::ranges::sort(out.monochrome_matching);
    std::ranges::sort(out.bipartite);
    return out;
}

namespace detail {

inline void for_each_word(std::size_t length, std::span<const Color> alphabet,
                          const std::function<void(const ColorWord&)>& visit) {
    ColorWord word(length, alphabet.empty() ? Color{0} : alphabet.front());
    std::vector<std::size_t> digit(length, 0);
    if (alphabet.empty()) {
        return;
    }
    while (true) {
        visit(word);
        std::size_t i = 0;
        while (i < length && ++digit[i] == alphabet.size()) {
            digit[i] = 0;
            word[i] = alphabet[0];
            ++i;
        }
        if (i == length) {
            return;
        }
        word[i] = alphabet[digit[i]];
    }
}

inline bool uses_all(std::span<const Color> word, std::span<const Color> alphabet) {
    return std::ranges::all_of(alphabet, [&](Color c) { return std::ranges::find(word, c) != word.end(); });
}

/// All distinct arrangements of a multiset given as per-color counts.
inline std::vector<ColorWord> multiset_arrangements(std::span<const int> counts) {
    ColorWord base;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        base.insert(base.end(), static_cast<std::size_t>(counts[j]), static_cast<Color>(j + 1));
    }
    std::vector<ColorWord> out;
    do {
        out.push_back(base);
    } while (std::ranges::next_permutation(base).found);
    return out;
}

/// Compositions of `total` into `parts` summands, each at least `minimum`.
inline void for_each_composition(int total, std::size_t parts, int minimum,
                                 const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> current(parts, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == parts) {
            if (left >= minimum) {
                current[i] = left;
                visit(current);
            }
            return;
        }
        for (int x = minimum; x <= left; ++x) {
            current[i] = x;
            rec(i + 1, left - x);
        }
    };
    if (parts > 0) {
        rec(0, total);
    }
}

} // namespace detail

/// Number of labeled non-bipartite perfect colorings of Ci_4n(D_n) with
/// counts[j-1] vertices of color j in each part, by exhaustive generation.
inline std::uint64_t count_nonbipartite_4n(int n, int k, std::span<const int> counts) {
    if (n < 1 || k < 1) {
        throw std::invalid_argument("count_nonbipartite_4n: n and k must be positive");
    }
    if (counts.size() != static_cast<std::size_t>(k)) {
        throw std::invalid_argument("count_nonbipartite_4n: need one count per color");
    }
    if (std::ranges::any_of(counts, [](int m) { return m < 0; })) {
        throw std::invalid_argument("count_nonbipartite_4n: counts must be nonnegative");
    }
    if (std::accumulate(counts.begin(), counts.end(), 0) != 2 * n) {
        throw std::invalid_argument("count_nonbipartite_4n: counts must sum to 2n");
    }
    if (std::ranges::count_if(counts, [](int m) { return m > 0; }) < 2) {
        throw std::invalid_argument("count_nonbipartite_4n: at least two colors must be present");
    }
    const auto parts = detail::multiset_arrangements(counts);
    const auto offsets = neighbor_offsets(make_odd_distance_set(static_cast<std::size_t>(n)),
                                          static_cast<std::size_t>(4 * n));
    std::uint64_t total = 0;
    ColorWord word(static_cast<std::size_t>(4 * n));
    for (const auto& even : parts) {
        for (const auto& odd : parts) {
            for (std::size_t i = 0; i < even.size(); ++i) {
                word[2 * i] = even[i];
                word[2 * i + 1] = odd[i];
            }
            if (!detail::parity_classes_disjoint(word) && detail::cyclic_matrix(word, k, offsets)) {
                ++total;
            }
        }
    }
    return total;
}

/// Every coloring the K_{2n,2n} recipe yields with exactly k colors, sorted.
inline std::vector<FiniteColoring> all_constructions_4n(int n, int k) {
    if (n < 1 || k < 1 || k > 16) {
        throw std::invalid_argument("all_constructions_4n: need n >= 1 and 1 <= k <= 16");
    }
    const auto half = static_cast<std::size_t>(2 * n);
    std::set<FiniteColoring> out;

    // Bipartite: nonempty proper C_e, C_o = complement.
    for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        ColorWord even_colors;
        ColorWord odd_colors;
        for (int c = 1; c <= k; ++c) {
            ((mask >> (c - 1)) & 1u ? even_colors : odd_colors).push_back(static_cast<Color>(c));
        }
        std::vector<ColorWord> evens;
        detail::for_each_word(half, even_colors, [&](const ColorWord& w) {
            if (detail::uses_all(w, even_colors)) {
                evens.push_back(w);
            }
        });
        detail::for_each_word(half, odd_colors, [&](const ColorWord& odd) {
            if (!detail::uses_all(odd, odd_colors)) {
                return;
            }
            for (const auto& even : evens) {
                out.insert(construct_4n(n, k, even, odd));
            }
        });
    }

    // Non-bipartite: equal per-part counts, every color present.
    detail::for_each_composition(2 * n, static_cast<std::size_t>(k), 1, [&](const std::vector<int>& m) {
        const auto parts = detail::multiset_arrangements(m);
        for (const auto& even : parts) {
            for (const auto& odd : parts) {
                out.insert(construct_4n(n, k, even, odd));
            }
        }
    });
    return {out.begin(), out.end()};
}

/// Every coloring the matching recipe yields on Ci_t(D_n), t = 4n +/- 2, with
/// exactly k colors, over all color splits and matching splits. Sorted.
inline std::vector<FiniteColoring> all_matching_constructions(int n, int k, std::size_t t) {
    if (n < 1 || k < 1 || k > 16) {
        throw std::invalid_argument("all_matching_constructions: need n >= 1 and 1 <= k <= 16");
    }
    const auto nn = static_cast<std::size_t>(n);
    if (t != 4 * nn - 2 && t != 4 * nn + 2) {
        throw std::invalid_argument("all_matching_constructions: t must be 4n-2 or 4n+2");
    }
    const std::size_t matching = t / 2;
    auto build = [&](const ColorSplit& split, const MatchingSplit& msplit) {
        return t == 4 * nn + 2 ? construct_4n_plus_2(n, split, msplit)
                               : construct_4n_minus_2(n, split, msplit);
    };
    std::set<FiniteColoring> out;
    ColorWord all_colors(static_cast<std::size_t>(k));
    std::iota(all_colors.begin(), all_colors.end(), Color{1});

    // Perfect matchings (unordered pairs x < y) of a color list.
    std::function<void(ColorWord, std::vector<std::pair<Color, Color>>&,
                       const std::function<void(const std::vector<std::pair<Color, Color>>&)>&)>
        pairings = [&](ColorWord rest, std::vector<std::pair<Color, Color>>& acc, const auto& visit) {
            if (rest.empty()) {
                visit(acc);
                return;
            }
            const Color x = rest.front();
            for (std::size_t i = 1; i < rest.size(); ++i) {
                ColorWord next;
                for (std::size_t j = 1; j < rest.size(); ++j) {
                    if (j != i) {
                        next.push_back(rest[j]);
                    }
                }
                acc.emplace_back(x, rest[i]);
                pairings(next, acc, visit);
                acc.pop_back();
            }
        };

    // Mixed splits. Each edge gets a label: a C1 color, or a C2 pair with the
    // orientation of its even end. Orientations must balance per pair so the
    // crosswise edges can be paired off.
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        ColorWord c1;
        ColorWord c2;
        for (Color c : all_colors) {
            ((mask >> (c - 1)) & 1u ? c1 : c2).push_back(c);
        }
        if (c2.size() % 2 != 0) {
            continue;
        }
        std::vector<std::pair<Color, Color>> acc;
        pairings(c2, acc, [&](const std::vector<std::pair<Color, Color>>& pairs) {
            ColorSplit split{ColorSplit::Kind::mixed, c1, pairs};
            const std::size_t labels = c1.size() + 2 * pairs.size();
            std::vector<std::size_t> label(matching, 0);
            while (true) {
                std::vector<int> balance(pairs.size(), 0);
                std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
                for (auto l : label) {
                    if (l < c1.size()) {
                        seen[c1[l]] = true;
                    } else {
                        const auto p = (l - c1.size()) / 2;
                        balance[p] += ((l - c1.size()) % 2 == 0) ? 1 : -1;
                        seen[pairs[p].first] = seen[pairs[p].second] = true;
                    }
                }
                const bool balanced = std::ranges::all_of(balance, [](int b) { return b == 0; });
                const bool surjective = std::all_of(seen.begin() + 1, seen.end(), [](bool s) { return s; });
                if (balanced && surjective) {
                    MatchingSplit msplit;
                    std::vector<std::vector<std::size_t>> forward(pairs.size());
                    std::vector<std::vector<std::size_t>> backward(pairs.size());
                    for (std::size_t e = 0; e < matching; ++e) {
                        const auto l = label[e];
                        if (l < c1.size()) {
                            msplit.monochrome.emplace_back(e, c1[l]);
                        } else {
                            const auto p = (l - c1.size()) / 2;
                            ((l - c1.size()) % 2 == 0 ? forward : backward)[p].push_back(e);
                        }
                    }
                    for (std::size_t p = 0; p < pairs.size(); ++p) {
                        for (std::size_t i = 0; i < forward[p].size(); ++i) {
                            msplit.swaps.push_back({forward[p][i], backward[p][i], p});
                        }
                    }
                    out.insert(build(split, msplit));
                }
                std::size_t i = 0;
                while (i < matching && ++label[i] == labels) {
                    label[i] = 0;
                    ++i;
                }
                if (i == matching || labels == 0) {
                    break;
                }
            }
        });
    }

    // Bipartite splits: |C_e| = |C_o| = k/2 with a bijection between them.
    if (k % 2 == 0) {
        const auto half = static_cast<std::size_t>(k / 2);
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            if (static_cast<std::size_t>(std::popcount(mask)) != half) {
                continue;
            }
            ColorWord even_colors;
            ColorWord odd_colors;
            for (Color c : all_colors) {
                ((mask >> (c - 1)) & 1u ? even_colors : odd_colors).push_back(c);
            }
            do {
                ColorSplit split{ColorSplit::Kind::bipartite, {}, {}};
                for (std::size_t i = 0; i < half; ++i) {
                    split.pairs.emplace_back(even_colors[i], odd_colors[i]);
                }
                std::vector<std::size_t> assignment(matching, 0);
                while (true) {
                    std::vector<bool> hit(half, false);
                    for (auto a : assignment) {
                        hit[a] = true;
                    }
                    if (std::ranges::all_of(hit, [](bool h) { return h; })) {
                        MatchingSplit msplit;
                        for (std::size_t e = 0; e < matching; ++e) {
                            msplit.bipartite.emplace_back(e, assignment[e]);
                        }
                        out.insert(build(split, msplit));
                    }
                    std::size_t i = 0;
                    while (i < matching && ++assignment[i] == half) {
                        assignment[i] = 0;
                        ++i;
                    }
                    if (i == matching) {
                        break;
                    }
                }
            } while (std::ranges::next_permutation(odd_colors).found);
        }
    }
    return {out.begin(), out.end()};
}

} // namespace circulant
