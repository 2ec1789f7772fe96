#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace circulant {

/// Colors are 1-based: a k-coloring uses the values 1..k.
using Color = std::uint8_t;
using ColorWord = std::vector<Color>;

/// Which symmetries `canonical_form` folds away.
struct Symmetry {
    bool rotation = true;
    bool reflection = false;
    bool color_permutation = false;

    friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

inline constexpr Symmetry rotation_only{true, false, false};

/// Length of the shortest u with word == u^m (prefix-function border test).
inline std::size_t primitive_period(std::span<const Color> word) {
    const std::size_t n = word.size();
    if (n == 0) {
        return 0;
    }
    std::vector<std::size_t> border(n, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t j = border[i - 1];
        while (j > 0 && word[i] != word[j]) {
            j = border[j - 1];
        }
        if (word[i] == word[j]) {
            ++j;
        }
        border[i] = j;
    }
    const std::size_t p = n - border[n - 1];
    return n % p == 0 ? p : n;
}

/// Start index of the lexicographically least rotation (two-pointer scan, O(n)).
inline std::size_t least_rotation(std::span<const Color> word) {
    const std::size_t n = word.size();
    std::size_t i = 0;
    std::size_t j = 1;
    std::size_t k = 0;
    while (i < n && j < n && k < n) {
        const Color a = word[(i + k) % n];
        const Color b = word[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b) {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if (i == j) {
            ++j;
        }
        k = 0;
    }
    return std::min(i, j);
}

inline ColorWord rotate(std::span<const Color> word, std::size_t shift) {
    ColorWord out(word.begin(), word.end());
    if (!out.empty()) {
        std::ranges::rotate(out, out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()));
    }
    return out;
}

inline ColorWord reversed(std::span<const Color> word) {
    return ColorWord(word.rbegin(), word.rend());
}

/// Renames colors in order of first appearance, which is the least image of
/// the word under color permutations.
inline ColorWord relabel_by_first_occurrence(std::span<const Color> word) {
    std::vector<Color> rename(256, 0);
    Color next = 1;
    ColorWord out;
    out.reserve(word.size());
    for (Color c : word) {
        if (rename[c] == 0) {
            rename[c] = next++;
        }
        out.push_back(rename[c]);
    }
    return out;
}

/// Primitive period of `word`, then the lexicographically least image under
/// the selected symmetry group. Idempotent.
inline ColorWord canonical_form(std::span<const Color> word, Symmetry sym = rotation_only) {
    ColorWord base(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(primitive_period(word)));
    if (base.empty()) {
        return base;
    }

    std::vector<ColorWord> seeds{base};
    if (sym.reflection) {
        seeds.push_back(reversed(base));
    }

    ColorWord best;
    auto consider = [&](ColorWord candidate) {
        if (sym.color_permutation) {
            candidate = relabel_by_first_occurrence(candidate);
        }
        if (best.empty() || candidate < best) {
            best = std::move(candidate);
        }
    };

    for (const ColorWord& seed : seeds) {
        if (!sym.rotation) {
            consider(seed);
        } else if (!sym.color_permutation) {
            consider(rotate(seed, least_rotation(seed)));
        } else {
            for (std::size_t s = 0; s < seed.size(); ++s) {
                consider(rotate(seed, s));
            }
        }
    }
    return best;
}

/// `word` repeated until it has length `length` (which it must divide).
inline ColorWord repeat_to(std::span<const Color> word, std::size_t length) {
    ColorWord out;
    out.reserve(length);
    while (out.size() < length) {
        out.insert(out.end(), word.begin(), word.end());
    }
    out.resize(length);
    return out;
}

} // namespace circulant
