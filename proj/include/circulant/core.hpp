#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "circulant/words.hpp"

namespace circulant {

/// Nonnegative residue of i modulo t.
inline std::size_t covering_reduction(std::int64_t i, std::size_t t) {
    if (t == 0) {
        throw std::invalid_argument("covering_reduction: modulus must be positive");
    }
    const auto m = static_cast<std::int64_t>(t);
    auto r = i % m;
    if (r < 0) {
        r += m;
    }
    return static_cast<std::size_t>(r);
}

/// Strictly increasing set of positive distances defining a circulant.
class DistanceSet {
public:
    explicit DistanceSet(std::vector<std::int64_t> distances) : distances_(std::move(distances)) {
        if (distances_.empty()) {
            throw std::invalid_argument("DistanceSet: must be nonempty");
        }
        for (std::size_t i = 0; i < distances_.size(); ++i) {
            if (distances_[i] < 1) {
                throw std::invalid_argument("DistanceSet: distances must be positive");
            }
            if (i > 0 && distances_[i] <= distances_[i - 1]) {
                throw std::invalid_argument("DistanceSet: distances must be strictly increasing");
            }
        }
    }

    std::span<const std::int64_t> distances() const noexcept { return distances_; }
    std::size_t size() const noexcept { return distances_.size(); }
    int degree() const noexcept { return 2 * static_cast<int>(distances_.size()); }

    /// True iff the set is exactly {1, 3, ..., 2n-1}.
    bool is_odd_continuous(std::size_t n) const noexcept {
        if (distances_.size() != n) {
            return false;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (distances_[i] != static_cast<std::int64_t>(2 * i + 1)) {
                return false;
            }
        }
        return true;
    }

    /// n such that the set is {1, 3, ..., 2n-1}, if any.
    std::optional<std::size_t> odd_parameter() const noexcept {
        if (is_odd_continuous(distances_.size())) {
            return distances_.size();
        }
        return std::nullopt;
    }

    bool all_odd() const noexcept {
        return std::ranges::all_of(distances_, [](std::int64_t d) { return d % 2 == 1; });
    }

    friend bool operator==(const DistanceSet&, const DistanceSet&) = default;

private:
    std::vector<std::int64_t> distances_;
};

inline DistanceSet make_odd_distance_set(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("make_odd_distance_set: n must be at least 1");
    }
    std::vector<std::int64_t> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = static_cast<std::int64_t>(2 * i + 1);
    }
    return DistanceSet(std::move(d));
}

/// Offsets {+d, -d : d in D} of Ci_inf(D); 2|D| distinct integers.
inline std::vector<std::int64_t> neighbor_offsets(const DistanceSet& dset) {
    std::vector<std::int64_t> out;
    out.reserve(2 * dset.size());
    for (auto d : dset.distances()) {
        out.push_back(d);
        out.push_back(-d);
    }
    std::ranges::sort(out);
    return out;
}

/// Offset multiset of Ci_t(D), one entry per incidence. Colliding offsets
/// stay as repeated entries and an offset of 0 appears twice (loop).
inline std::vector<std::size_t> neighbor_offsets(const DistanceSet& dset, std::size_t t) {
    if (t == 0) {
        throw std::invalid_argument("neighbor_offsets: order must be positive");
    }
    std::vector<std::size_t> out;
    out.reserve(2 * dset.size());
    for (auto d : dset.distances()) {
        out.push_back(covering_reduction(d, t));
        out.push_back(covering_reduction(-d, t));
    }
    std::ranges::sort(out);
    return out;
}

/// Ci_t(D) on vertex set Z_t.
class FiniteCirculant {
public:
    FiniteCirculant(std::size_t order, DistanceSet dset)
        : order_(order), dset_(std::move(dset)), offsets_() {
        if (order_ == 0) {
            throw std::invalid_argument("FiniteCirculant: order must be positive");
        }
        offsets_ = neighbor_offsets(dset_, order_);
    }

    std::size_t order() const noexcept { return order_; }
    const DistanceSet& distances() const noexcept { return dset_; }
    std::span<const std::size_t> offsets() const noexcept { return offsets_; }
    int degree() const noexcept { return dset_.degree(); }

    /// Neighbor multiset of v, sorted.
    std::vector<std::size_t> neighbors(std::size_t v) const {
        std::vector<std::size_t> out;
        out.reserve(offsets_.size());
        for (auto o : offsets_) {
            out.push_back((v + o) % order_);
        }
        std::ranges::sort(out);
        return out;
    }

private:
    std::size_t order_;
    DistanceSet dset_;
    std::vector<std::size_t> offsets_;
};

namespace detail {

inline void validate_surjective_word(std::span<const Color> word, int k, const char* what) {
    if (k < 1 || k > 255) {
        throw std::invalid_argument(std::string(what) + ": color count must be in 1..255");
    }
    if (word.empty()) {
        throw std::invalid_argument(std::string(what) + ": word must be nonempty");
    }
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    for (Color c : word) {
        if (c < 1 || c > k) {
            throw std::invalid_argument(std::string(what) + ": color " + std::to_string(c) +
                                        " outside 1.." + std::to_string(k));
        }
        seen[c] = true;
    }
    for (int c = 1; c <= k; ++c) {
        if (!seen[static_cast<std::size_t>(c)]) {
            throw std::invalid_argument(std::string(what) + ": color " + std::to_string(c) +
                                        " is never used");
        }
    }
}

} // namespace detail

/// Surjective coloring of Z_t with colors 1..k.
class FiniteColoring {
public:
    FiniteColoring(int k, ColorWord word) : k_(k), word_(std::move(word)) {
        detail::validate_surjective_word(word_, k_, "FiniteColoring");
    }

    std::size_t order() const noexcept { return word_.size(); }
    int colors() const noexcept { return k_; }
    std::span<const Color> word() const noexcept { return word_; }
    Color at(std::int64_t v) const { return word_[covering_reduction(v, word_.size())]; }

    friend bool operator==(const FiniteColoring&, const FiniteColoring&) = default;
    friend auto operator<=>(const FiniteColoring& a, const FiniteColoring& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) {
            return c;
        }
        return a.word_ <=> b.word_;
    }

private:
    int k_;
    ColorWord word_;
};

/// Periodic coloring of Z, stored as the least rotation of its primitive period.
class PeriodicColoring {
public:
    PeriodicColoring(int k, std::span<const Color> word) : k_(k), word_(canonical_form(word)) {
        detail::validate_surjective_word(word_, k_, "PeriodicColoring");
    }
    PeriodicColoring(int k, std::initializer_list<Color> word)
        : PeriodicColoring(k, std::span<const Color>(word.begin(), word.size())) {}

    std::size_t period() const noexcept { return word_.size(); }
    int colors() const noexcept { return k_; }
    std::span<const Color> word() const noexcept { return word_; }
    Color at(std::int64_t i) const { return word_[covering_reduction(i, word_.size())]; }

    friend bool operator==(const PeriodicColoring&, const PeriodicColoring&) = default;
    friend auto operator<=>(const PeriodicColoring& a, const PeriodicColoring& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) {
            return c;
        }
        return a.word_ <=> b.word_;
    }

private:
    int k_;
    ColorWord word_;
};

/// Per-color tally, indexed by color 1..k.
class ColorCounts {
public:
    explicit ColorCounts(int k) : counts_(static_cast<std::size_t>(k), 0) {}
    ColorCounts(std::initializer_list<int> counts) : counts_(counts) {}

    int colors() const noexcept { return static_cast<int>(counts_.size()); }
    int& operator[](Color c) { return counts_.at(static_cast<std::size_t>(c) - 1); }
    int operator[](Color c) const { return counts_.at(static_cast<std::size_t>(c) - 1); }
    int total() const noexcept {
        int s = 0;
        for (int x : counts_) {
            s += x;
        }
        return s;
    }
    std::span<const int> values() const noexcept { return counts_; }

    friend bool operator==(const ColorCounts&, const ColorCounts&) = default;

private:
    std::vector<int> counts_;
};

/// k x k matrix; entry (i, j) is the number of color-j neighbors of a color-i vertex.
class ParameterMatrix {
public:
    explicit ParameterMatrix(int k) : k_(k), entries_(static_cast<std::size_t>(k * k), 0) {
        if (k < 1) {
            throw std::invalid_argument("ParameterMatrix: k must be positive");
        }
    }
    ParameterMatrix(std::initializer_list<std::initializer_list<int>> rows)
        : ParameterMatrix(static_cast<int>(rows.size())) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != static_cast<std::size_t>(k_)) {
                throw std::invalid_argument("ParameterMatrix: rows must have length k");
            }
            for (int x : row) {
                if (x < 0) {
                    throw std::invalid_argument("ParameterMatrix: entries must be nonnegative");
                }
                entries_[i++] = x;
            }
        }
    }

    int colors() const noexcept { return k_; }
    int& operator()(Color i, Color j) { return entries_.at(index(i, j)); }
    int operator()(Color i, Color j) const { return entries_.at(index(i, j)); }

    std::span<const int> row(Color i) const {
        return std::span<const int>(entries_).subspan(index(i, 1), static_cast<std::size_t>(k_));
    }
    void set_row(Color i, std::span<const int> values) {
        std::ranges::copy(values, entries_.begin() + static_cast<std::ptrdiff_t>(index(i, 1)));
    }
    int row_sum(Color i) const {
        int s = 0;
        for (int x : row(i)) {
            s += x;
        }
        return s;
    }

    /// Relabels colors: color c becomes perm[c-1].
    ParameterMatrix permuted(std::span<const Color> perm) const {
        ParameterMatrix out(k_);
        for (Color i = 1; i <= k_; ++i) {
            for (Color j = 1; j <= k_; ++j) {
                out(perm[i - 1], perm[j - 1]) = (*this)(i, j);
            }
        }
        return out;
    }

    std::span<const int> entries() const noexcept { return entries_; }

    friend bool operator==(const ParameterMatrix&, const ParameterMatrix&) = default;
    friend auto operator<=>(const ParameterMatrix& a, const ParameterMatrix& b) {
        if (auto c = a.k_ <=> b.k_; c != 0) {
            return c;
        }
        return a.entries_ <=> b.entries_;
    }

private:
    std::size_t index(Color i, Color j) const {
        if (i < 1 || j < 1 || i > k_ || j > k_) {
            throw std::out_of_range("ParameterMatrix: color index out of range");
        }
        return static_cast<std::size_t>((i - 1) * k_ + (j - 1));
    }

    int k_;
    std::vector<int> entries_;
};

/// Colors seen from vertex v of Ci_t(D) under a finite coloring on Z_t.
inline ColorCounts neighbor_color_counts(const FiniteColoring& coloring, const DistanceSet& dset,
                                         std::int64_t v) {
    const std::size_t t = coloring.order();
    const std::size_t base = covering_reduction(v, t);
    ColorCounts counts(coloring.colors());
    for (auto o : neighbor_offsets(dset, t)) {
        ++counts[coloring.word()[(base + o) % t]];
    }
    return counts;
}

/// Colors seen from vertex v of Ci_inf(D), walking the integer offsets.
inline ColorCounts neighbor_color_counts(const PeriodicColoring& coloring, const DistanceSet& dset,
                                         std::int64_t v) {
    ColorCounts counts(coloring.colors());
    for (auto o : neighbor_offsets(dset)) {
        ++counts[coloring.at(v + o)];
    }
    return counts;
}

/// Checks that i -> i mod t maps every neighborhood of Ci_inf(D) bijectively
/// onto the neighbor multiset of Ci_t(D). Vertices in [-t, 2t) cover every
/// residue from both sides.
inline bool verify_covering(const DistanceSet& dset, std::size_t t) {
    const auto infinite = neighbor_offsets(dset);
    const FiniteCirculant finite(t, dset);
    const auto span = static_cast<std::int64_t>(t);
    for (std::int64_t i = -span; i < 2 * span; ++i) {
        std::vector<std::size_t> image;
        image.reserve(infinite.size());
        for (auto o : infinite) {
            image.push_back(covering_reduction(i + o, t));
        }
        std::ranges::sort(image);
        if (image != finite.neighbors(covering_reduction(i, t))) {
            return false;
        }
    }
    return true;
}

} // namespace circulant
