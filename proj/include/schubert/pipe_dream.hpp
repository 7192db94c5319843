#pragma once

// Reduced pipe dreams (RC-graphs) and compatible sequences.
//
// A pipe dream is a finite set of cross tiles on the positive quadrant in
// matrix coordinates; every other tile is an elbow. Pipes enter at the top
// of each column and leave through the west border. A pipe dream belongs to
// pi when the pipe leaving row k entered at column pi(k). The cross at
// (i,j) contributes the simple transposition s_{i+j-1}.
//
// Grid order: (i,j) < (i',j') iff i < i', or i = i' and j > j'.

#include "errors.hpp"
#include "permutation.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace schubert {

struct Cell {
    int row = 0;
    int col = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Strict "comes before" in the pipe dream grid order.
inline bool grid_order_less(const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
}

struct CompatibleSequence {
    std::vector<int> a;
    std::vector<int> r;
    friend bool operator==(const CompatibleSequence&, const CompatibleSequence&) = default;
    friend auto operator<=>(const CompatibleSequence&, const CompatibleSequence&) = default;
};

/// Conditions (2)-(4) of a compatible sequence; condition (1) needs a permutation.
inline bool satisfies_row_conditions(const CompatibleSequence& cs) {
    if (cs.a.size() != cs.r.size()) return false;
    for (std::size_t j = 0; j < cs.a.size(); ++j) {
        if (cs.r[j] < 1 || cs.r[j] > cs.a[j]) return false;
        if (j + 1 < cs.a.size()) {
            if (cs.r[j] > cs.r[j + 1]) return false;
            if (cs.a[j] < cs.a[j + 1] && cs.r[j] >= cs.r[j + 1]) return false;
        }
    }
    return true;
}

/// Is a reduced word (every prefix product strictly grows in length)?
inline bool is_reduced_word(const std::vector<int>& a) {
    Permutation p;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        if (*it < 1 || p.is_left_descent(*it)) return false;
        p = p.left_simple(*it);
    }
    return true;
}

/// All four conditions against a given permutation.
inline bool is_compatible_sequence_of(const CompatibleSequence& cs, const Permutation& pi) {
    return satisfies_row_conditions(cs) && is_reduced_word(cs.a) && word_product(cs.a) == pi &&
           static_cast<int>(cs.a.size()) == pi.length();
}

namespace detail {

// Which two pipes meet at each cross, plus the exit row of every pipe.
struct PdTrace {
    std::map<Cell, std::pair<int, int>> pair_at; // (smaller label, larger label)
    std::vector<int> exit_row;                   // exit_row[c] for pipe c, 1-based
};

inline PdTrace trace_pipe_dream(const std::set<Cell>& crosses) {
    int span = 1;
    for (const auto& c : crosses) span = std::max(span, c.row + c.col);
    PdTrace out;
    out.exit_row.assign(span + 1, 0);
    std::map<Cell, std::vector<int>> seen;
    for (int pipe = 1; pipe <= span; ++pipe) {
        int i = 1, j = pipe;
        bool south = true;
        while (j > 0) {
            bool cross = crosses.count({i, j}) > 0;
            if (cross) seen[{i, j}].push_back(pipe);
            if (south) {
                if (cross) ++i;
                else { --j; south = false; }
            } else {
                if (cross) --j;
                else { ++i; south = true; }
            }
        }
        out.exit_row[pipe] = i;
    }
    for (auto& [cell, pipes] : seen) {
        if (pipes.size() != 2) throw internal_error("cross not visited by exactly two pipes");
        out.pair_at[cell] = {std::min(pipes[0], pipes[1]), std::max(pipes[0], pipes[1])};
    }
    return out;
}

} // namespace detail

class PipeDream {
public:
    PipeDream() = default;

    // Validates: throws invalid_diagram on bad coordinates or double crossings.
    explicit PipeDream(std::set<Cell> crosses) : crosses_(std::move(crosses)) { perm_ = compute_perm(); }

    template <typename Range>
    static PipeDream from_cells(const Range& cells) {
        std::set<Cell> s;
        for (const auto& c : cells) {
            if (!s.insert(Cell{c.row, c.col}).second) throw invalid_diagram("repeated cross");
        }
        return PipeDream(std::move(s));
    }

    const std::set<Cell>& crosses() const { return crosses_; }
    const Permutation& perm() const { return perm_; }
    bool contains(const Cell& c) const { return crosses_.count(c) > 0; }
    std::size_t size() const { return crosses_.size(); }
    bool empty() const { return crosses_.empty(); }

    // Crosses sorted in grid order.
    std::vector<Cell> ordered_crosses() const {
        std::vector<Cell> v(crosses_.begin(), crosses_.end());
        std::sort(v.begin(), v.end(), grid_order_less);
        return v;
    }

    // Traces all pipes, returning perm(D); the one place that decides it.
    static Permutation validate(const std::set<Cell>& crosses) {
        for (const auto& c : crosses)
            if (c.row < 1 || c.col < 1) throw invalid_diagram("cross outside the positive quadrant");
        auto tr = detail::trace_pipe_dream(crosses);
        std::set<std::pair<int, int>> pairs;
        for (const auto& [cell, pr] : tr.pair_at)
            if (!pairs.insert(pr).second) throw invalid_diagram("two pipes cross twice");
        int span = static_cast<int>(tr.exit_row.size()) - 1;
        Permutation::Word w(span, 0);
        for (int pipe = 1; pipe <= span; ++pipe) {
            int row = tr.exit_row[pipe];
            if (row < 1 || row > span || w[row - 1] != 0) throw internal_error("pipe exits out of range");
            w[row - 1] = pipe;
        }
        return Permutation(std::move(w));
    }

    friend bool operator==(const PipeDream& a, const PipeDream& b) { return a.crosses_ == b.crosses_; }
    friend auto operator<=>(const PipeDream& a, const PipeDream& b) { return a.crosses_ <=> b.crosses_; }

private:
    Permutation compute_perm() const { return validate(crosses_); }

    std::set<Cell> crosses_;
    Permutation perm_;
};

inline Permutation pd_validate(const std::set<Cell>& crosses) { return PipeDream::validate(crosses); }

/// prod over crosses (i,j) of x_i.
inline Polynomial pd_weight(const PipeDream& d) {
    std::vector<unsigned> e;
    for (const auto& c : d.crosses()) {
        if (static_cast<int>(e.size()) < c.row) e.resize(c.row, 0);
        ++e[c.row - 1];
    }
    return Polynomial::monomial(Monomial(std::move(e)));
}

inline CompatibleSequence pd_to_compatible(const PipeDream& d) {
    CompatibleSequence cs;
    for (const auto& c : d.ordered_crosses()) {
        cs.r.push_back(c.row);
        cs.a.push_back(c.row + c.col - 1);
    }
    return cs;
}

inline PipeDream compatible_to_pd(const CompatibleSequence& cs) {
    if (!satisfies_row_conditions(cs)) throw invalid_sequence("row conditions violated");
    if (!is_reduced_word(cs.a)) throw invalid_sequence("a is not a reduced word");
    std::set<Cell> crosses;
    for (std::size_t k = 0; k < cs.a.size(); ++k) crosses.insert({cs.r[k], cs.a[k] - cs.r[k] + 1});
    if (crosses.size() != cs.a.size()) throw invalid_sequence("two letters map to one cell");
    return PipeDream(std::move(crosses));
}

namespace detail {

inline void extend_compatible(const Permutation& pi, int prev_a, int prev_r, CompatibleSequence& cur,
                              std::vector<CompatibleSequence>& out) {
    if (pi.is_identity()) {
        out.push_back(cur);
        return;
    }
    for (int a : pi.left_descents()) {
        int lo = prev_a == 0 ? 1 : (prev_a < a ? prev_r + 1 : prev_r);
        for (int r = lo; r <= a; ++r) {
            cur.a.push_back(a);
            cur.r.push_back(r);
            extend_compatible(pi.left_simple(a), a, r, cur, out);
            cur.a.pop_back();
            cur.r.pop_back();
        }
    }
}

} // namespace detail

/// Every compatible sequence of pi, built letter by letter along reduced words.
inline std::vector<CompatibleSequence> compatible_sequences(const Permutation& pi) {
    std::vector<CompatibleSequence> out;
    CompatibleSequence cur;
    detail::extend_compatible(pi, 0, 0, cur, out);
    return out;
}

/// PD(pi) in sorted order.
inline std::vector<PipeDream> enumerate_pd(const Permutation& pi) {
    std::set<PipeDream> found;
    for (const auto& cs : compatible_sequences(pi)) found.insert(compatible_to_pd(cs));
    return {found.begin(), found.end()};
}

struct PdPop {
    int a = 0;
    int r = 0;
    PipeDream result;
};

/// Removes the first cross in grid order; the result lies in PD(s_a pi).
inline PdPop pd_pop(const PipeDream& d) {
    if (d.empty()) throw empty_diagram("pop needs at least one cross");
    Cell first = d.ordered_crosses().front();
    std::set<Cell> rest = d.crosses();
    rest.erase(first);
    return {first.row + first.col - 1, first.row, PipeDream(std::move(rest))};
}

} // namespace schubert
