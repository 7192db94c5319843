#pragma once

// Brute-force reference implementations used only by the tests. None of them
// calls into the library beyond its value types.

#include "schubert/bumpless.hpp"
#include "schubert/permutation.hpp"
#include "schubert/pipe_dream.hpp"
#include "schubert/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using schubert::Cell;
using schubert::Integer;
using schubert::Monomial;
using schubert::Permutation;
using schubert::Polynomial;
using schubert::Tile;
using schubert::TileGrid;

// Number of adjacent swaps bubble sort needs.
inline int bubble_length(std::vector<int> w) {
    int swaps = 0;
    for (bool again = true; again;) {
        again = false;
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] > w[k + 1]) {
                std::swap(w[k], w[k + 1]);
                ++swaps;
                again = true;
            }
        }
    }
    return swaps;
}

inline std::vector<int> padded(const Permutation& p, int n) {
    std::vector<int> w(n);
    for (int i = 1; i <= n; ++i) w[i - 1] = p(i);
    return w;
}

// s_{a_1} ... s_{a_k} as a one-line word of length n: acting on positions
// from the right means swapping adjacent entries in reading order.
inline std::vector<int> word_to_oneline(const std::vector<int>& word, int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    for (int a : word) std::swap(w[a - 1], w[a]);
    return w;
}

inline std::set<std::vector<int>> brute_reduced_words(const Permutation& p) {
    int n = std::max(p.size(), 1);
    auto target = padded(p, n);
    int len = bubble_length(target);
    std::set<std::vector<int>> out;
    std::vector<int> word(len, 1);
    if (n < 2) {
        if (len == 0) out.insert(std::vector<int>{});
        return out;
    }
    while (true) {
        if (word_to_oneline(word, n) == target) out.insert(word);
        int k = len - 1;
        while (k >= 0 && word[k] == n - 1) word[k--] = 1;
        if (k < 0) break;
        ++word[k];
    }
    return out;
}

// d_i of a single monomial by the closed form for x_i^a x_{i+1}^b.
inline Polynomial closed_form_dd(const Polynomial& f, int i) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        int a = static_cast<int>(m[i]), b = static_cast<int>(m[i + 1]);
        if (a == b) continue;
        int lo = std::min(a, b), hi = std::max(a, b);
        Integer sign = a > b ? 1 : -1;
        for (int k = 0; k < hi - lo; ++k) {
            Monomial t = m.with(i, lo + k).with(i + 1, hi - 1 - k);
            out.add_term(t, sign * c);
        }
    }
    return out;
}

inline Polynomial schubert_by_closed_form(const Permutation& p) {
    int n = std::max(p.size(), 1);
    std::vector<unsigned> e;
    for (int k = 1; k < n; ++k) e.push_back(n - k);
    Polynomial f = Polynomial::monomial(Monomial(e));
    // Walk down from w0 by adjacent swaps, applying d_i at each step.
    std::vector<int> cur(n);
    for (int k = 0; k < n; ++k) cur[k] = n - k;
    auto target = padded(p, n);
    while (cur != target) {
        bool moved = false;
        for (int i = 0; i + 1 < n && !moved; ++i) {
            if (cur[i] < cur[i + 1]) continue;
            auto next = cur;
            std::swap(next[i], next[i + 1]);
            // stay above target in right weak order: its value inversions persist
            auto inverted = [](const std::vector<int>& w, int lo, int hi) {
                return std::find(w.begin(), w.end(), hi) < std::find(w.begin(), w.end(), lo);
            };
            bool above = true;
            for (int lo = 1; lo <= n && above; ++lo)
                for (int hi = lo + 1; hi <= n && above; ++hi)
                    if (inverted(target, lo, hi) && !inverted(next, lo, hi)) above = false;
            if (!above) continue;
            f = closed_form_dd(f, i + 1);
            cur = next;
            moved = true;
        }
        if (!moved) throw std::logic_error("closed form walk stuck");
    }
    return f;
}

// Reads the crosses of a pipe dream as a word (rows top to bottom, right to left).
inline std::vector<int> pd_word(const std::set<Cell>& crosses) {
    std::vector<Cell> v(crosses.begin(), crosses.end());
    std::sort(v.begin(), v.end(), [](const Cell& a, const Cell& b) {
        return a.row != b.row ? a.row < b.row : a.col > b.col;
    });
    std::vector<int> w;
    for (const auto& c : v) w.push_back(c.row + c.col - 1);
    return w;
}

// All reduced pipe dreams inside the staircase i+j <= n, by subset search.
inline std::map<std::vector<int>, std::set<std::set<Cell>>> brute_pipe_dreams(int n) {
    std::vector<Cell> cells;
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j) cells.push_back({i, j});
    std::map<std::vector<int>, std::set<std::set<Cell>>> out;
    for (unsigned mask = 0; mask < (1u << cells.size()); ++mask) {
        std::set<Cell> s;
        for (std::size_t k = 0; k < cells.size(); ++k)
            if (mask & (1u << k)) s.insert(cells[k]);
        auto w = word_to_oneline(pd_word(s), n);
        if (bubble_length(w) != static_cast<int>(s.size())) continue;
        out[w].insert(s);
    }
    return out;
}

// Follows every pipe of a tile grid; returns the one-line word (pipe label
// per exit row), or an empty vector if the grid is not a reduced BPD.
inline std::vector<int> trace_bpd(const TileGrid& g) {
    int n = g.size();
    std::vector<int> exit(n + 1, 0);
    std::map<Cell, int> visits;
    for (int p = 1; p <= n; ++p) {
        int r = n, c = p;
        bool up = true, done = false;
        for (int guard = 0; guard < 4 * n; ++guard) {
            Tile t = g.at(r, c);
            ++visits[{r, c}];
            bool go_up;
            if (t == Tile::Cross) go_up = up;
            else if (t == Tile::Vertical && up) go_up = true;
            else if (t == Tile::Horizontal && !up) go_up = false;
            else if (t == Tile::RTurn && up) go_up = false;
            else if (t == Tile::JTurn && !up) go_up = true;
            else return {};
            if (go_up) {
                if (r == 1) return {};
                --r;
            } else {
                if (c == n) {
                    if (exit[r]) return {};
                    exit[r] = p;
                    done = true;
                    break;
                }
                ++c;
            }
            up = go_up;
        }
        if (!done) return {};
    }
    std::vector<int> w(exit.begin() + 1, exit.end());
    std::vector<int> sorted = w;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < n; ++k)
        if (sorted[k] != k + 1) return {};
    // every non-blank tile must be used: count visits against tile arity
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            Tile t = g.at(r, c);
            int need = t == Tile::Blank ? 0 : t == Tile::Cross ? 2 : 1;
            if (visits[{r, c}] != need) return {};
        }
    // reduced iff number of crosses equals the length
    if (g.count(Tile::Cross) != bubble_length(w)) return {};
    return w;
}

// Every tiling of an n x n grid whose edges match (no bump tiles), built
// bottom row first. Reduced or not.
inline std::vector<TileGrid> consistent_tilings(int n) {
    std::vector<TileGrid> out;
    TileGrid g(n);
    // below[c]: a pipe enters the current row from the south in column c
    std::function<void(int, int, std::vector<bool>&, std::vector<bool>&, bool)> fill;
    fill = [&](int r, int c, std::vector<bool>& below, std::vector<bool>& above, bool west) {
        if (c > n) {
            if (!west) return;
            if (r == 1) {
                for (int k = 0; k < n; ++k)
                    if (above[k]) return;
                out.push_back(g);
                return;
            }
            std::vector<bool> next_above(n, false);
            fill(r - 1, 1, above, next_above, false);
            return;
        }
        bool south = below[c - 1];
        auto place = [&](Tile t, bool north, bool east) {
            g.set(r, c, t);
            above[c - 1] = north;
            fill(r, c + 1, below, above, east);
            above[c - 1] = false;
        };
        if (!south && !west) place(Tile::Blank, false, false);
        if (south && !west) {
            place(Tile::Vertical, true, false);
            place(Tile::RTurn, false, true);
        }
        if (!south && west) {
            place(Tile::Horizontal, false, true);
            place(Tile::JTurn, true, false);
        }
        if (south && west) place(Tile::Cross, true, true);
    };
    std::vector<bool> below(n, true), above(n, false);
    fill(n, 1, below, above, false);
    return out;
}

// The reduced tilings grouped by permutation, keyed by their grid text.
inline std::map<std::vector<int>, std::set<std::string>> brute_bpds(int n) {
    std::map<std::vector<int>, std::set<std::string>> out;
    for (const auto& g : consistent_tilings(n)) {
        auto w = trace_bpd(g);
        if (!w.empty()) out[w].insert(g.key());
    }
    return out;
}

} // namespace oracle
