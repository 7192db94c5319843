#pragma once

// Bumpless pipe dreams on an n x n tile grid.
//
// Pipes enter through the south edge, one per column, travel north and
// east, and leave through the east edge, one per row. Pipes are labelled by
// the column they enter; a diagram belongs to pi when the pipe leaving row
// k is pipe pi(k). The weight is the product of x_row over blank tiles.
//
// Every move in this file is expressed as a reroute of whole pipe segments:
// the old segment's edges are cleared from the grid, the new segment's edges
// are laid down, and tiles are rebuilt from the resulting edge sets. Edge
// collisions surface as move_error.

#include "errors.hpp"
#include "permutation.hpp"
#include "pipe_dream.hpp"
#include "polynomial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace schubert {

enum class Tile : std::uint8_t { Blank, Cross, Horizontal, Vertical, RTurn, JTurn, Bump };

enum Side : std::uint8_t { North = 1, South = 2, East = 4, West = 8 };

constexpr std::uint8_t tile_edges(Tile t) {
    switch (t) {
    case Tile::Blank: return 0;
    case Tile::Cross: return North | South | East | West;
    case Tile::Horizontal: return East | West;
    case Tile::Vertical: return North | South;
    case Tile::RTurn: return South | East;
    case Tile::JTurn: return North | West;
    case Tile::Bump: return North | South | East | West;
    }
    return 0;
}

constexpr char tile_letter(Tile t) {
    switch (t) {
    case Tile::Blank: return '.';
    case Tile::Cross: return '+';
    case Tile::Horizontal: return '-';
    case Tile::Vertical: return '|';
    case Tile::RTurn: return 'r';
    case Tile::JTurn: return 'j';
    case Tile::Bump: return 'b';
    }
    return '?';
}

inline std::optional<Tile> tile_from_letter(char c) {
    switch (c) {
    case '.': return Tile::Blank;
    case '+': return Tile::Cross;
    case '-': return Tile::Horizontal;
    case '|': return Tile::Vertical;
    case 'r': return Tile::RTurn;
    case 'j': return Tile::JTurn;
    case 'b': return Tile::Bump;
    default: return std::nullopt;
    }
}

/// Square grid of tiles, 1-indexed. Holds bumpless and almost bumpless diagrams alike.
class TileGrid {
public:
    TileGrid() = default;
    explicit TileGrid(int n, Tile fill = Tile::Blank) : n_(n), tiles_(static_cast<std::size_t>(n) * n, fill) {
        if (n < 0) throw argument_error("negative grid size");
    }

    int size() const { return n_; }
    bool in_range(const Cell& c) const { return c.row >= 1 && c.col >= 1 && c.row <= n_ && c.col <= n_; }

    Tile at(int row, int col) const { return tiles_[index(row, col)]; }
    Tile at(const Cell& c) const { return at(c.row, c.col); }
    void set(int row, int col, Tile t) { tiles_[index(row, col)] = t; }
    void set(const Cell& c, Tile t) { set(c.row, c.col, t); }

    // Appends identity rows and columns: new pipe k rises in column k and
    // turns east on the diagonal; old pipes continue straight through.
    void grow(int target) {
        if (target <= n_) return;
        TileGrid g(target);
        for (int r = 1; r <= target; ++r) {
            for (int c = 1; c <= target; ++c) {
                Tile t;
                if (r <= n_ && c <= n_) t = at(r, c);
                else if (r == c) t = Tile::RTurn;
                else if (r > c) t = Tile::Vertical;
                else t = Tile::Horizontal;
                g.set(r, c, t);
            }
        }
        *this = std::move(g);
    }

    // Drops the last row and column; caller ensures they are trivial.
    void shrink_by_one() {
        TileGrid g(n_ - 1);
        for (int r = 1; r < n_; ++r)
            for (int c = 1; c < n_; ++c) g.set(r, c, at(r, c));
        *this = std::move(g);
    }

    bool last_row_and_column_trivial() const {
        if (n_ == 0 || at(n_, n_) != Tile::RTurn) return false;
        for (int k = 1; k < n_; ++k)
            if (at(n_, k) != Tile::Vertical || at(k, n_) != Tile::Horizontal) return false;
        return true;
    }

    std::vector<Cell> cells_with(Tile t) const {
        std::vector<Cell> out;
        for (int r = 1; r <= n_; ++r)
            for (int c = 1; c <= n_; ++c)
                if (at(r, c) == t) out.push_back({r, c});
        return out;
    }

    int count(Tile t) const { return static_cast<int>(std::count(tiles_.begin(), tiles_.end(), t)); }

    // Row-major tile letters, rows separated by '/'.
    std::string key() const {
        std::string s;
        for (int r = 1; r <= n_; ++r) {
            if (r > 1) s += '/';
            for (int c = 1; c <= n_; ++c) s += tile_letter(at(r, c));
        }
        return s;
    }

    friend bool operator==(const TileGrid&, const TileGrid&) = default;

private:
    std::size_t index(int row, int col) const {
        if (row < 1 || col < 1 || row > n_ || col > n_) throw argument_error("tile coordinate out of range");
        return static_cast<std::size_t>(row - 1) * n_ + (col - 1);
    }

    int n_ = 0;
    std::vector<Tile> tiles_;
};

using AlmostBpd = TileGrid;

/// identity-BPD(n): pipe k rises in column k and turns east at (k,k).
inline TileGrid identity_grid(int n) {
    TileGrid g;
    g.grow(n);
    return g;
}

struct PipeStep {
    Cell cell;
    Side in;
    Side out;
};

/// Pipe-by-pipe reading of a grid. Bump tiles are traversed as an r-turn
/// (south to east) plus a j-turn (west to north).
struct GridTrace {
    int n = 0;
    std::vector<std::vector<PipeStep>> paths; // paths[p] for pipe p = 1..n
    std::vector<int> exit_row;                // exit_row[p]
    std::vector<std::array<int, 16>> owner;   // owner[cell][side] = pipe, 0 if none

    int owner_of(const Cell& c, Side s) const { return owner[cell_index(c)][s]; }

    std::size_t path_index(int pipe, const Cell& c) const {
        const auto& path = paths.at(pipe);
        for (std::size_t k = 0; k < path.size(); ++k)
            if (path[k].cell == c) return k;
        throw internal_error("pipe does not visit the requested cell");
    }

    Permutation perm() const {
        Permutation::Word w(n, 0);
        for (int p = 1; p <= n; ++p) w[exit_row[p] - 1] = p;
        return Permutation(std::move(w));
    }

    // Pipes meeting at each cross tile as (smaller, larger).
    std::map<Cell, std::pair<int, int>> crossings(const TileGrid& g) const {
        std::map<Cell, std::pair<int, int>> out;
        for (const auto& c : g.cells_with(Tile::Cross)) {
            int a = owner_of(c, North), b = owner_of(c, West);
            out[c] = {std::min(a, b), std::max(a, b)};
        }
        return out;
    }

    std::optional<Cell> crossing_of(const TileGrid& g, int p, int q) const {
        std::optional<Cell> found;
        for (const auto& [c, pr] : crossings(g)) {
            if (pr == std::pair{std::min(p, q), std::max(p, q)}) {
                if (found) throw internal_error("pipes cross twice");
                found = c;
            }
        }
        return found;
    }

    std::size_t cell_index(const Cell& c) const { return static_cast<std::size_t>(c.row - 1) * n + (c.col - 1); }
};

namespace detail {

inline std::optional<Side> exit_side(Tile t, Side in) {
    switch (t) {
    case Tile::Cross:
        if (in == South) return North;
        if (in == West) return East;
        break;
    case Tile::Vertical:
        if (in == South) return North;
        break;
    case Tile::Horizontal:
        if (in == West) return East;
        break;
    case Tile::RTurn:
        if (in == South) return East;
        break;
    case Tile::JTurn:
        if (in == West) return North;
        break;
    case Tile::Bump:
        if (in == South) return East;
        if (in == West) return North;
        break;
    case Tile::Blank: break;
    }
    return std::nullopt;
}

} // namespace detail

/// Traces every pipe; throws invalid_diagram on any edge inconsistency.
inline GridTrace trace_grid(const TileGrid& g) {
    GridTrace tr;
    int n = g.size();
    tr.n = n;
    tr.paths.assign(n + 1, {});
    tr.exit_row.assign(n + 1, 0);
    tr.owner.assign(static_cast<std::size_t>(n) * n, {});
    for (int p = 1; p <= n; ++p) {
        Cell c{n, p};
        Side in = South;
        for (int guard = 0;; ++guard) {
            if (guard > 2 * n + 2) throw invalid_diagram("pipe does not terminate");
            auto out = detail::exit_side(g.at(c), in);
            if (!out) throw invalid_diagram("pipe " + std::to_string(p) + " cannot pass tile at (" +
                                            std::to_string(c.row) + "," + std::to_string(c.col) + ")");
            auto& own = tr.owner[tr.cell_index(c)];
            if (own[in] || own[*out]) throw invalid_diagram("two pipes share an edge");
            own[in] = p;
            own[*out] = p;
            tr.paths[p].push_back({c, in, *out});
            if (*out == North) {
                if (c.row == 1) throw invalid_diagram("pipe leaves through the north edge");
                c = {c.row - 1, c.col};
                in = South;
            } else {
                if (c.col == n) {
                    tr.exit_row[p] = c.row;
                    break;
                }
                c = {c.row, c.col + 1};
                in = West;
            }
        }
    }
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            std::uint8_t edges = tile_edges(g.at(r, c));
            const auto& own = tr.owner[tr.cell_index({r, c})];
            for (Side s : {North, South, East, West})
                if ((edges & s) && !own[s]) throw invalid_diagram("tile edge not used by any pipe");
        }
    }
    std::vector<bool> row_used(n + 1, false);
    for (int p = 1; p <= n; ++p) {
        if (row_used[tr.exit_row[p]]) throw invalid_diagram("two pipes exit the same row");
        row_used[tr.exit_row[p]] = true;
    }
    return tr;
}

/// Returns perm(D); throws invalid_diagram on inconsistent edges, a double
/// crossing, or (unless allowed) a bump tile.
inline Permutation bpd_validate(const TileGrid& g, bool allow_bump = false) {
    int bumps = g.count(Tile::Bump);
    if (bumps > (allow_bump ? 1 : 0)) throw invalid_diagram(allow_bump ? "more than one bump" : "bump tile present");
    GridTrace tr = trace_grid(g);
    std::set<std::pair<int, int>> seen;
    for (const auto& [cell, pr] : tr.crossings(g))
        if (!seen.insert(pr).second) throw invalid_diagram("two pipes cross twice");
    return tr.perm();
}

/// A validated bumpless pipe dream stored at the minimal grid size of its permutation.
class Bpd {
public:
    Bpd() = default;

    explicit Bpd(TileGrid grid) : grid_(std::move(grid)) {
        perm_ = bpd_validate(grid_);
        while (grid_.size() > perm_.size()) {
            if (!grid_.last_row_and_column_trivial())
                throw internal_error("fixed last pipe with a nontrivial last row or column");
            grid_.shrink_by_one();
        }
    }

    const TileGrid& grid() const { return grid_; }
    const Permutation& perm() const { return perm_; }
    int size() const { return grid_.size(); }
    Tile at(int r, int c) const { return grid_.at(r, c); }
    std::string key() const { return grid_.key(); }

    // Grid padded with identity rows and columns up to n.
    TileGrid padded(int n) const {
        TileGrid g = grid_;
        g.grow(n);
        return g;
    }

    friend bool operator==(const Bpd& a, const Bpd& b) { return a.grid_ == b.grid_; }
    friend bool operator<(const Bpd& a, const Bpd& b) { return a.key() < b.key(); }

private:
    TileGrid grid_;
    Permutation perm_;
};

inline Polynomial bpd_weight(const Bpd& d) {
    std::vector<unsigned> e(d.size(), 0);
    for (const auto& c : d.grid().cells_with(Tile::Blank)) ++e[c.row - 1];
    return Polynomial::monomial(Monomial(std::move(e)));
}

/// Pipe pi(k) rises straight to row k and turns east; blanks fill the Rothe diagram.
inline Bpd rothe_bpd(const Permutation& pi) {
    int n = pi.size();
    Permutation inv = pi.inverse();
    TileGrid g(n);
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            bool vertical = r > inv(c);   // pipe c below its turning row
            bool horizontal = c > pi(r);  // pipe pi(r) east of its turning column
            Tile t = Tile::Blank;
            if (c == pi(r)) t = Tile::RTurn;
            else if (vertical && horizontal) t = Tile::Cross;
            else if (vertical) t = Tile::Vertical;
            else if (horizontal) t = Tile::Horizontal;
            g.set(r, c, t);
        }
    }
    return Bpd(std::move(g));
}

namespace detail {

inline Side step_direction(const Cell& from, const Cell& to) {
    if (to.row == from.row - 1 && to.col == from.col) return North;
    if (to.row == from.row && to.col == from.col + 1) return East;
    throw internal_error("reroute path is not a north/east lattice path");
}

inline Side opposite(Side s) {
    switch (s) {
    case North: return South;
    case South: return North;
    case East: return West;
    case West: return East;
    }
    return North;
}

/// A pipe segment replaced by a new lattice path with the same first and last cells.
struct Reroute {
    std::vector<PipeStep> old_steps;
    std::vector<Cell> new_cells;
};

inline std::vector<PipeStep> segment(const GridTrace& tr, int pipe, std::size_t from, std::size_t to) {
    const auto& path = tr.paths.at(pipe);
    if (from > to || to >= path.size()) throw internal_error("bad segment bounds");
    return {path.begin() + static_cast<std::ptrdiff_t>(from), path.begin() + static_cast<std::ptrdiff_t>(to) + 1};
}

/// Applies all removals, then all additions, and rebuilds affected tiles.
inline void apply_reroutes(TileGrid& g, const std::vector<Reroute>& moves) {
    int n = g.size();
    auto idx = [n](const Cell& c) { return static_cast<std::size_t>(c.row - 1) * n + (c.col - 1); };
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(n) * n);
    std::vector<std::uint8_t> hint(static_cast<std::size_t>(n) * n, 0); // 1 straight, 2 turning
    std::vector<bool> touched(static_cast<std::size_t>(n) * n, false);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) mask[idx({r, c})] = tile_edges(g.at(r, c));

    for (const auto& mv : moves) {
        for (const auto& st : mv.old_steps) {
            if (!g.in_range(st.cell)) throw move_error("segment leaves the grid");
            std::uint8_t m = st.in | st.out;
            auto& cur = mask[idx(st.cell)];
            if ((cur & m) != m) throw move_error("segment edge missing from tile");
            cur &= static_cast<std::uint8_t>(~m);
            touched[idx(st.cell)] = true;
        }
    }
    for (const auto& mv : moves) {
        const auto& cells = mv.new_cells;
        if (cells.empty() || cells.front() != mv.old_steps.front().cell || cells.back() != mv.old_steps.back().cell)
            throw internal_error("reroute endpoints differ");
        for (std::size_t k = 0; k < cells.size(); ++k) {
            if (!g.in_range(cells[k])) throw move_error("reroute leaves the grid");
            Side in = k == 0 ? mv.old_steps.front().in : opposite(step_direction(cells[k - 1], cells[k]));
            Side out = k + 1 == cells.size() ? mv.old_steps.back().out : step_direction(cells[k], cells[k + 1]);
            std::uint8_t m = in | out;
            auto& cur = mask[idx(cells[k])];
            if (cur & m) throw move_error("reroute collides with another pipe");
            cur |= m;
            touched[idx(cells[k])] = true;
            bool straight = (in == South && out == North) || (in == West && out == East);
            hint[idx(cells[k])] = straight ? 1 : 2;
        }
    }
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= n; ++c) {
            std::size_t i = idx({r, c});
            if (!touched[i]) continue;
            Tile t;
            switch (mask[i]) {
            case 0: t = Tile::Blank; break;
            case North | South: t = Tile::Vertical; break;
            case East | West: t = Tile::Horizontal; break;
            case South | East: t = Tile::RTurn; break;
            case North | West: t = Tile::JTurn; break;
            case North | South | East | West:
                if (hint[i] == 2) t = Tile::Bump;
                else if (hint[i] == 1) t = Tile::Cross;
                else t = g.at(r, c);
                break;
            default: throw move_error("reroute leaves a dangling pipe end");
            }
            g.set(r, c, t);
        }
    }
}

inline std::vector<Cell> column_then_row(Cell start, int top_row, int right_col) {
    // north from start to top_row, then east to right_col
    std::vector<Cell> v;
    for (int r = start.row; r >= top_row; --r) v.push_back({r, start.col});
    for (int c = start.col + 1; c <= right_col; ++c) v.push_back({top_row, c});
    return v;
}

inline std::vector<Cell> row_then_column(Cell start, int right_col, int top_row) {
    // east from start to right_col, then north to top_row
    std::vector<Cell> v;
    for (int c = start.col; c <= right_col; ++c) v.push_back({start.row, c});
    for (int r = start.row - 1; r >= top_row; --r) v.push_back({r, right_col});
    return v;
}

inline bool segment_matches(const std::vector<PipeStep>& seg, const std::vector<Cell>& cells) {
    if (seg.size() != cells.size()) return false;
    for (std::size_t k = 0; k < seg.size(); ++k)
        if (seg[k].cell != cells[k]) return false;
    return true;
}

/// Moves the corner of pipe p from the NW corner (a,b) to the SE corner (c,d).
/// The pipe must run up column b from row c and along row a to column d.
inline void droop_pipe(TileGrid& g, const GridTrace& tr, int p, Cell nw, Cell se) {
    std::size_t k = tr.path_index(p, nw);
    int down = se.row - nw.row, right = se.col - nw.col;
    if (k < static_cast<std::size_t>(down)) throw move_error("pipe does not rise through the rectangle");
    auto seg = segment(tr, p, k - down, k + right);
    if (!segment_matches(seg, column_then_row({se.row, nw.col}, nw.row, se.col)))
        throw move_error("pipe has another turn inside the rectangle");
    apply_reroutes(g, {{seg, row_then_column({se.row, nw.col}, se.col, nw.row)}});
}

/// Inverse of droop_pipe: moves the corner from (c,d) back to (a,b).
inline void undroop_pipe(TileGrid& g, const GridTrace& tr, int p, Cell se, Cell nw) {
    std::size_t k = tr.path_index(p, se);
    int up = se.row - nw.row, left = se.col - nw.col;
    if (k < static_cast<std::size_t>(left)) throw move_error("pipe does not cross the rectangle");
    auto seg = segment(tr, p, k - left, k + up);
    if (!segment_matches(seg, row_then_column({se.row, nw.col}, se.col, nw.row)))
        throw move_error("pipe has another turn inside the rectangle");
    apply_reroutes(g, {{seg, column_then_row({se.row, nw.col}, nw.row, se.col)}});
}

// Index of the step where the pipe walking backward from `from` first
// entered column `col` from the west.
inline std::size_t entry_into_column(const GridTrace& tr, int pipe, std::size_t from, int col) {
    const auto& path = tr.paths.at(pipe);
    std::size_t k = from;
    while (path[k].cell.col == col && path[k].in == South) {
        if (k == 0) return static_cast<std::size_t>(-1);
        --k;
    }
    if (path[k].cell.col != col || path[k].in != West) return static_cast<std::size_t>(-1);
    return k;
}

/**
 * One column move between columns y and y+1 spanning rows x..xp. The pipe p
 * entering (xp,y+1) from the west and rising to row x is pulled left into
 * column y so that it turns east at (x,y); each pipe with an r-turn at (z,y),
 * x < z < xp, has its vertical run shifted from column y to column y+1.
 */
inline void forward_column_move(TileGrid& g, int x, int y, int xp) {
    GridTrace tr = trace_grid(g);
    int p = tr.owner_of({xp, y + 1}, West);
    if (!p) throw internal_error("column move without an incoming pipe");
    std::size_t kj = tr.path_index(p, {xp, y + 1});
    if (kj == 0) throw internal_error("column move pipe starts at its turn");
    auto pseg = segment(tr, p, kj - 1, kj + (xp - x));
    std::vector<Cell> expect{{xp, y}};
    for (int r = xp; r >= x; --r) expect.push_back({r, y + 1});
    if (!segment_matches(pseg, expect)) throw internal_error("column move pipe has an unexpected shape");

    std::vector<Reroute> moves;
    moves.push_back({pseg, column_then_row({xp, y}, x, y + 1)});
    for (int z = x + 1; z < xp; ++z) {
        if (g.at(z, y) != Tile::RTurn) continue;
        int q = tr.owner_of({z, y}, East);
        std::size_t kc = tr.path_index(q, {z, y + 1});
        std::size_t kjq = entry_into_column(tr, q, kc - 1, y);
        if (kjq == static_cast<std::size_t>(-1)) throw internal_error("kink without a j-turn");
        int zp = tr.paths[q][kjq].cell.row;
        if (zp >= xp) throw internal_error("kink extends below the column move rectangle");
        moves.push_back({segment(tr, q, kjq, kc), row_then_column({zp, y}, y + 1, z)});
    }
    apply_reroutes(g, moves);
}

/**
 * Inverse of forward_column_move: the pipe p leaving (X,y) northward, rising
 * in column y to its r-turn at (x0,y), is pushed right into column y+1 with
 * its new j-turn at (X,y+1); kinks in column y+1 strictly between the rows
 * shift back to column y. Returns x0.
 */
inline int backward_column_move(TileGrid& g, int X, int y) {
    GridTrace tr = trace_grid(g);
    Tile west = g.at(X, y);
    if (west != Tile::JTurn && west != Tile::Vertical) throw move_error("no rising pipe west of the blank");
    int p = tr.owner_of({X, y}, North);
    std::size_t kj = tr.path_index(p, {X, y});
    const auto& path = tr.paths[p];
    std::size_t k = kj;
    while (path[k].out == North) ++k;
    if (path[k].cell.col != y || path[k].in != South) throw move_error("j-turn pipe does not rise in its column");
    int x0 = path[k].cell.row;
    auto pseg = segment(tr, p, kj, k + 1);

    std::vector<Reroute> moves;
    moves.push_back({pseg, row_then_column({X, y}, y + 1, x0)});
    for (int z = x0 + 1; z < X; ++z) {
        if (g.at(z, y + 1) != Tile::RTurn) continue;
        int q = tr.owner_of({z, y + 1}, East);
        std::size_t kr = tr.path_index(q, {z, y + 1});
        std::size_t kjq = entry_into_column(tr, q, kr, y + 1);
        if (kjq == static_cast<std::size_t>(-1) || kjq == 0) return -1;
        int zp = tr.paths[q][kjq].cell.row;
        if (zp >= X) return -1;
        moves.push_back({segment(tr, q, kjq - 1, kr), column_then_row({zp, y}, z, y + 1)});
    }
    apply_reroutes(g, moves);
    return x0;
}

} // namespace detail

/// LLS droop: the r-turn of its pipe at nw moves so the pipe bends through the blank se.
inline Bpd droop(const Bpd& d, Cell nw, Cell se) {
    const TileGrid& g0 = d.grid();
    if (!g0.in_range(nw) || !g0.in_range(se)) throw move_error("droop coordinates out of range");
    if (se.row <= nw.row || se.col <= nw.col) throw move_error("droop target must lie strictly south-east");
    if (g0.at(nw) != Tile::RTurn) throw move_error("droop corner is not an r-turn");
    if (g0.at(se) != Tile::Blank) throw move_error("droop target is not blank");
    TileGrid g = g0;
    GridTrace tr = trace_grid(g);
    detail::droop_pipe(g, tr, tr.owner_of(nw, East), nw, se);
    if (g.at(se) != Tile::JTurn || g.count(Tile::Bump)) throw move_error("droop produced a bump");
    try {
        return Bpd(std::move(g));
    } catch (const invalid_diagram& e) {
        throw move_error(std::string("droop result invalid: ") + e.what());
    }
}

/// Inverse droop: the j-turn at se is pulled back so its pipe turns at the blank nw.
inline Bpd undroop(const Bpd& d, Cell se, Cell nw) {
    const TileGrid& g0 = d.grid();
    if (!g0.in_range(nw) || !g0.in_range(se)) throw move_error("undroop coordinates out of range");
    if (se.row <= nw.row || se.col <= nw.col) throw move_error("undroop target must lie strictly north-west");
    if (g0.at(se) != Tile::JTurn) throw move_error("undroop corner is not a j-turn");
    if (g0.at(nw) != Tile::Blank) throw move_error("undroop target is not blank");
    TileGrid g = g0;
    GridTrace tr = trace_grid(g);
    detail::undroop_pipe(g, tr, tr.owner_of(se, West), se, nw);
    if (g.count(Tile::Bump)) throw move_error("undroop produced a bump");
    try {
        return Bpd(std::move(g));
    } catch (const invalid_diagram& e) {
        throw move_error(std::string("undroop result invalid: ") + e.what());
    }
}

/// Every legal droop of d.
inline std::vector<Bpd> droop_neighbours(const Bpd& d) {
    std::vector<Bpd> out;
    const TileGrid& g = d.grid();
    for (const auto& nw : g.cells_with(Tile::RTurn)) {
        for (const auto& se : g.cells_with(Tile::Blank)) {
            if (se.row <= nw.row || se.col <= nw.col) continue;
            try {
                out.push_back(droop(d, nw, se));
            } catch (const move_error&) {
            }
        }
    }
    return out;
}

/// BPD(pi): closure of the Rothe diagram under droops, sorted by key.
inline std::vector<Bpd> enumerate_bpd(const Permutation& pi) {
    std::map<std::string, Bpd> seen;
    std::deque<Bpd> frontier;
    Bpd start = rothe_bpd(pi);
    seen.emplace(start.key(), start);
    frontier.push_back(start);
    while (!frontier.empty()) {
        Bpd cur = std::move(frontier.front());
        frontier.pop_front();
        for (auto& nb : droop_neighbours(cur)) {
            auto key = nb.key();
            if (seen.emplace(key, nb).second) frontier.push_back(std::move(nb));
        }
    }
    std::vector<Bpd> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

struct PopResult {
    int a = 0;
    int r = 0;
    Bpd result;
    std::vector<Cell> footprints;
};

/// The column-move deletion of the first blank: returns (a, r), the diagram
/// of s_a pi, and the SE corners of every non-terminal column move rectangle.
inline PopResult bpd_pop(const Bpd& d) {
    if (d.perm().is_identity()) throw empty_diagram("pop needs a diagram of positive length");
    TileGrid g = d.grid();
    int n = g.size();
    int x = 0, y = 0;
    for (int r = 1; r <= n && !x; ++r)
        for (int c = n; c >= 1; --c)
            if (g.at(r, c) == Tile::Blank) {
                x = r;
                y = c;
                break;
            }
    if (!x) throw internal_error("positive length diagram without a blank tile");
    PopResult out;
    out.r = x;
    for (int guard = 0; guard <= n * n; ++guard) {
        while (y < n && g.at(x, y + 1) == Tile::Blank) ++y;
        if (y == n) throw internal_error("blank tile in the last column");
        GridTrace tr = trace_grid(g);
        int p = tr.owner_of({x, y + 1}, South);
        if (p != y + 1) {
            std::size_t k = tr.path_index(p, {x, y + 1});
            std::size_t kj = detail::entry_into_column(tr, p, k, y + 1);
            if (kj == static_cast<std::size_t>(-1)) throw internal_error("column move pipe has no j-turn");
            int xp = tr.paths[p][kj].cell.row;
            detail::forward_column_move(g, x, y, xp);
            out.footprints.push_back({xp, y + 1});
            x = xp;
            y = y + 1;
            if (g.at(x, y) != Tile::Blank) throw internal_error("column move did not leave a blank");
            continue;
        }
        auto cross = tr.crossing_of(g, y, y + 1);
        if (!cross || cross->col != y + 1 || cross->row <= x)
            throw internal_error("terminal column move without the expected crossing");
        g.set(*cross, Tile::Bump);
        detail::forward_column_move(g, x, y, cross->row);
        out.a = y;
        out.result = Bpd(std::move(g));
        return out;
    }
    throw internal_error("pop did not terminate");
}

/// Inverse of bpd_pop: the unique D with pop(D) = (a, r) and result `d`, if any.
inline std::optional<Bpd> bpd_insert(const Bpd& d, int a, int r) {
    if (a < 1 || r < 1) throw argument_error("insert needs positive a and r");
    TileGrid g = d.grid();
    g.grow(a + 1);
    try {
        GridTrace tr = trace_grid(g);
        if (tr.crossing_of(g, a, a + 1)) return std::nullopt;
        auto first_turn = [&](int pipe) {
            for (const auto& st : tr.paths[pipe])
                if (st.out == East) return st.cell;
            throw internal_error("pipe without a turn");
        };
        Cell upper = first_turn(a), lower = first_turn(a + 1);
        if (upper.col != a || lower.col != a + 1 || upper.row >= lower.row) return std::nullopt;

        // Undo the terminal move: pipe a is pushed into column a+1, meeting
        // pipe a+1's first turn in a bump that becomes their crossing.
        std::size_t ka = tr.path_index(a, {lower.row, a});
        std::size_t kt = tr.path_index(a, upper);
        std::vector<detail::Reroute> moves;
        moves.push_back({detail::segment(tr, a, ka, kt + 1), detail::row_then_column({lower.row, a}, a + 1, upper.row)});
        for (int z = upper.row + 1; z < lower.row; ++z) {
            if (g.at(z, a + 1) != Tile::RTurn) continue;
            int q = tr.owner_of({z, a + 1}, East);
            std::size_t kr = tr.path_index(q, {z, a + 1});
            std::size_t kjq = detail::entry_into_column(tr, q, kr, a + 1);
            if (kjq == static_cast<std::size_t>(-1) || kjq == 0) return std::nullopt;
            int zp = tr.paths[q][kjq].cell.row;
            if (zp >= lower.row) return std::nullopt;
            moves.push_back({detail::segment(tr, q, kjq - 1, kr), detail::column_then_row({zp, a}, z, a + 1)});
        }
        detail::apply_reroutes(g, moves);
        if (g.at(lower) != Tile::Bump) return std::nullopt;
        g.set(lower, Tile::Cross);

        int x = upper.row, y = a;
        while (x > r) {
            while (y > 1 && g.at(x, y - 1) == Tile::Blank) --y;
            if (y == 1) return std::nullopt;
            int x0 = detail::backward_column_move(g, x, y - 1);
            if (x0 < 0) return std::nullopt;
            x = x0;
            y = y - 1;
        }
        if (x != r) return std::nullopt;
        int n = g.size();
        for (int rr = 1; rr < r; ++rr)
            for (int c = 1; c <= n; ++c)
                if (g.at(rr, c) == Tile::Blank) return std::nullopt;
        for (int c = y + 1; c <= n; ++c)
            if (g.at(r, c) == Tile::Blank) return std::nullopt;

        Bpd candidate(std::move(g));
        PopResult check = bpd_pop(candidate);
        if (check.a != a || check.r != r || !(check.result == d)) return std::nullopt;
        return candidate;
    } catch (const move_error&) {
        return std::nullopt;
    } catch (const invalid_diagram&) {
        return std::nullopt;
    }
}

} // namespace schubert
