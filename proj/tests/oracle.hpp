#pragma once

// Brute-force reference implementations for tests. Deliberately naive and
// kept apart from the library's code paths: adjacency is built from the edge
// multiset {(i, i+d mod t)}, periodic colorings are checked on Z directly,
// and canonical forms try every rotation.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Matrix = std::vector<std::vector<int>>;

inline std::vector<std::vector<int>> adjacency(int t, const std::vector<int>& dists) {
    std::vector<std::vector<int>> adj(t, std::vector<int>(t, 0));
    for (int i = 0; i < t; ++i) {
        for (int d : dists) {
            const int j = (i + d) % t;
            adj[i][j] += 1;
            adj[j][i] += 1;
        }
    }
    return adj;
}

inline std::optional<Matrix> finite_matrix(const Word& w, int k, const std::vector<std::vector<int>>& adj) {
    Matrix rows(k);
    const int t = static_cast<int>(w.size());
    for (int v = 0; v < t; ++v) {
        std::vector<int> counts(k, 0);
        for (int u = 0; u < t; ++u) {
            counts[w[u] - 1] += adj[v][u];
        }
        auto& row = rows[w[v] - 1];
        if (row.empty()) {
            row = counts;
        } else if (row != counts) {
            return std::nullopt;
        }
    }
    for (auto& r : rows) {
        if (r.empty()) {
            r.assign(k, 0);
        }
    }
    return rows;
}

inline bool surjective(const Word& w, int k) {
    std::set<int> s(w.begin(), w.end());
    return static_cast<int>(s.size()) == k;
}

/// Every word in {1..k}^t, in lexicographic order.
template <class F>
void for_each_word(int t, int k, F&& f) {
    Word w(t, 1);
    while (true) {
        f(w);
        int i = t - 1;
        while (i >= 0 && w[i] == k) {
            w[i] = 1;
            --i;
        }
        if (i < 0) {
            return;
        }
        ++w[i];
    }
}

inline std::set<Word> perfect_finite(int t, const std::vector<int>& dists, int k) {
    const auto adj = adjacency(t, dists);
    std::set<Word> out;
    for_each_word(t, k, [&](const Word& w) {
        if (surjective(w, k) && finite_matrix(w, k, adj)) {
            out.insert(w);
        }
    });
    return out;
}

inline std::optional<Matrix> periodic_matrix(const Word& w, int k, const std::vector<int>& dists) {
    const auto p = static_cast<std::int64_t>(w.size());
    auto at = [&](std::int64_t i) { return w[((i % p) + p) % p]; };
    Matrix rows(k);
    for (std::int64_t v = 0; v < p; ++v) {
        std::vector<int> counts(k, 0);
        for (int d : dists) {
            counts[at(v + d) - 1] += 1;
            counts[at(v - d) - 1] += 1;
        }
        auto& row = rows[at(v) - 1];
        if (row.empty()) {
            row = counts;
        } else if (row != counts) {
            return std::nullopt;
        }
    }
    return rows;
}

inline Word canonical_rotation(const Word& w) {
    const auto n = w.size();
    std::size_t p = 1;
    for (; p <= n; ++p) {
        if (n % p != 0) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = p; i < n && ok; ++i) {
            ok = w[i] == w[i - p];
        }
        if (ok) {
            break;
        }
    }
    Word base(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    Word best = base;
    for (std::size_t s = 1; s < p; ++s) {
        Word r(base.begin() + static_cast<std::ptrdiff_t>(s), base.end());
        r.insert(r.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(s));
        best = std::min(best, r);
    }
    return best;
}

/// Perfect surjective k-colorings of Ci_inf(D) with period at most max_period.
inline std::set<Word> perfect_periodic(const std::vector<int>& dists, int k, int max_period) {
    std::set<Word> out;
    for (int p = 1; p <= max_period; ++p) {
        for_each_word(p, k, [&](const Word& w) {
            if (surjective(w, k) && periodic_matrix(w, k, dists)) {
                out.insert(canonical_rotation(w));
            }
        });
    }
    return out;
}

inline std::vector<int> odd_distances(int n) {
    std::vector<int> d;
    for (int i = 1; i < 2 * n; i += 2) {
        d.push_back(i);
    }
    return d;
}

} // namespace oracle
