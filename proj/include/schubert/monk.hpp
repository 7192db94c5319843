#pragma once

// Monk's rule moves x_alpha and m_{s,beta} on pipe dreams and bumpless
// pipe dreams, plus predicates auditing how they interact with pop.
//
// In both models the pipe leaving row k of a diagram of sigma carries the
// label sigma(k), so m_{s,beta} acts on the crossing of the pipes leaving
// rows s and beta.

#include "bijection.hpp"
#include "bumpless.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "pipe_dream.hpp"
#include "schubert_poly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

struct MonkStep {
    std::string kind; // insert, delete, cross-to-bump, min-droop, cross-bump-swap, bump-to-cross
    Cell at;
    std::optional<Cell> to;
};

struct MonkTrace {
    std::vector<MonkStep> steps;
    std::vector<Cell> footprints;
    std::vector<Cell> complete_footprints; // pipe dream side only
    int result_l = 0;
};

namespace detail {

// l > base with result = pi t_{base,l}; throws if the move left the expected family.
inline int monk_target(const Permutation& pi, const Permutation& result, int base) {
    int bound = std::max({pi.size(), result.size(), base}) + 1;
    for (int l = base + 1; l <= bound; ++l) {
        if (pi.times_transposition(base, l) == result) {
            if (!pi.is_bruhat_cover(base, l)) throw internal_error("Monk move landed on a non-cover");
            return l;
        }
    }
    throw internal_error("Monk move result is not of the form pi t_{base,l}");
}

inline int leftmost_elbow(const std::set<Cell>& crosses, int row, int after_col) {
    int j = after_col + 1;
    while (crosses.count({row, j})) ++j;
    return j;
}

// Step (2): while the newest cross doubles an existing crossing, move that older cross right.
inline void pd_resolve(std::set<Cell>& crosses, Cell added, MonkTrace& trace) {
    for (std::size_t guard = 0;; ++guard) {
        if (guard > 4 * crosses.size() * crosses.size() + 16) throw internal_error("Monk resolution does not terminate");
        auto tr = trace_pipe_dream(crosses);
        auto pair = tr.pair_at.at(added);
        std::optional<Cell> other;
        for (const auto& [c, pr] : tr.pair_at) {
            if (c == added || pr != pair) continue;
            if (other) throw internal_error("pipes cross three times");
            other = c;
        }
        if (!other) return;
        crosses.erase(*other);
        trace.steps.push_back({"delete", *other, std::nullopt});
        Cell next{other->row, leftmost_elbow(crosses, other->row, other->col)};
        crosses.insert(next);
        trace.steps.push_back({"insert", next, std::nullopt});
        added = next;
    }
}

inline void pd_footprints(MonkTrace& trace) {
    std::size_t k = 0;
    if (!trace.steps.empty() && trace.steps.front().kind == "insert") {
        trace.complete_footprints.push_back(trace.steps.front().at);
        k = 1;
    }
    for (const auto& st : trace.steps) trace.footprints.push_back(st.at);
    for (; k + 1 < trace.steps.size(); k += 2) {
        Cell from = trace.steps[k].at, to = trace.steps[k + 1].at;
        for (int j = from.col; j <= to.col; ++j) trace.complete_footprints.push_back({from.row, j});
    }
}

} // namespace detail

inline std::pair<PipeDream, MonkTrace> pd_x_insert(const PipeDream& d, int alpha) {
    if (alpha < 1) throw argument_error("alpha must be positive");
    MonkTrace trace;
    std::set<Cell> crosses = d.crosses();
    Cell first{alpha, detail::leftmost_elbow(crosses, alpha, 0)};
    crosses.insert(first);
    trace.steps.push_back({"insert", first, std::nullopt});
    detail::pd_resolve(crosses, first, trace);
    detail::pd_footprints(trace);
    PipeDream out(std::move(crosses));
    trace.result_l = detail::monk_target(d.perm(), out.perm(), alpha);
    return {std::move(out), std::move(trace)};
}

inline std::pair<PipeDream, MonkTrace> pd_m_move(const PipeDream& d, int s, int beta) {
    if (s < 1 || s >= beta) throw argument_error("m move needs 1 <= s < beta");
    const Permutation& sigma = d.perm();
    Permutation pi = sigma.times_transposition(s, beta);
    if (!pi.is_bruhat_cover(s, beta)) throw argument_error("diagram permutation is not a cover pi t_{s,beta}");
    int p = sigma(s), q = sigma(beta);
    std::set<Cell> crosses = d.crosses();
    auto tr = detail::trace_pipe_dream(crosses);
    std::optional<Cell> at;
    for (const auto& [c, pr] : tr.pair_at) {
        if (pr != std::pair{std::min(p, q), std::max(p, q)}) continue;
        if (at) throw internal_error("named pipes cross twice");
        at = c;
    }
    if (!at) throw argument_error("named pipes do not cross");
    MonkTrace trace;
    crosses.erase(*at);
    trace.steps.push_back({"delete", *at, std::nullopt});
    Cell next{at->row, detail::leftmost_elbow(crosses, at->row, at->col)};
    crosses.insert(next);
    trace.steps.push_back({"insert", next, std::nullopt});
    detail::pd_resolve(crosses, next, trace);
    detail::pd_footprints(trace);
    PipeDream out(std::move(crosses));
    trace.result_l = detail::monk_target(pi, out.perm(), beta);
    return {std::move(out), std::move(trace)};
}

namespace detail {

// Min-droop in place, growing the grid when the droop runs off the edge. Returns the SE corner.
inline Cell min_droop_in_place(TileGrid& g, Cell pos) {
    if (!g.in_range(pos)) throw move_error("min-droop position out of range");
    Tile t = g.at(pos);
    if (t != Tile::RTurn && t != Tile::Bump) throw move_error("min-droop needs an r-turn");
    int x = 1;
    for (;; ++x) {
        if (pos.row + x > g.size()) g.grow(pos.row + x);
        if (g.at(pos.row + x, pos.col) != Tile::Cross) break;
    }
    int y = 1;
    for (;; ++y) {
        if (pos.col + y > g.size()) g.grow(pos.col + y);
        if (g.at(pos.row, pos.col + y) != Tile::Cross) break;
    }
    Cell corner{pos.row + x, pos.col + y};
    GridTrace tr = trace_grid(g);
    droop_pipe(g, tr, tr.owner_of(pos, East), pos, corner);
    return corner;
}

inline Cell cross_bump_swap_in_place(TileGrid& g, Cell bump) {
    if (!g.in_range(bump) || g.at(bump) != Tile::Bump) throw move_error("cross-bump-swap needs a bump tile");
    GridTrace tr = trace_grid(g);
    auto cross = tr.crossing_of(g, tr.owner_of(bump, South), tr.owner_of(bump, West));
    if (!cross) throw move_error("bump pipes do not cross elsewhere");
    g.set(bump, Tile::Cross);
    g.set(*cross, Tile::Bump);
    return *cross;
}

// Step (2) of the bumpless Monk moves, from a min-droop at `start` to the final bump-to-cross.
inline Bpd bpd_monk_continue(TileGrid g, Cell start, MonkTrace& trace) {
    Cell cur = start;
    for (int guard = 0;; ++guard) {
        if (guard > 64 * (g.size() + 1) * (g.size() + 1)) throw internal_error("Monk move does not terminate");
        Cell corner = min_droop_in_place(g, cur);
        trace.steps.push_back({"min-droop", cur, corner});
        trace.footprints.push_back(corner);
        GridTrace tr = trace_grid(g);
        if (g.at(corner) == Tile::JTurn) {
            int p = tr.owner_of(corner, West);
            std::optional<Cell> next;
            for (const auto& st : tr.paths[p])
                if (st.cell.row == corner.row && st.in == South && st.out == East) next = st.cell;
            if (!next) throw internal_error("drooped pipe has no r-turn in the landing row");
            cur = *next;
            continue;
        }
        if (g.at(corner) != Tile::Bump) throw internal_error("min-droop landed on an unexpected tile");
        auto cross = tr.crossing_of(g, tr.owner_of(corner, South), tr.owner_of(corner, West));
        if (cross) {
            g.set(corner, Tile::Cross);
            g.set(*cross, Tile::Bump);
            trace.steps.push_back({"cross-bump-swap", corner, *cross});
            cur = *cross;
            continue;
        }
        g.set(corner, Tile::Cross);
        trace.steps.push_back({"bump-to-cross", corner, std::nullopt});
        return Bpd(std::move(g));
    }
}

} // namespace detail

inline AlmostBpd bpd_min_droop(const AlmostBpd& a, Cell pos) {
    AlmostBpd g = a;
    detail::min_droop_in_place(g, pos);
    if (g.count(Tile::Bump) > 1) throw move_error("min-droop produced a second bump");
    bpd_validate(g, true);
    return g;
}

inline AlmostBpd bpd_cross_bump_swap(const AlmostBpd& a, Cell bump) {
    AlmostBpd g = a;
    detail::cross_bump_swap_in_place(g, bump);
    return g;
}

inline std::pair<Bpd, MonkTrace> bpd_x_insert(const Bpd& d, int alpha) {
    if (alpha < 1) throw argument_error("alpha must be positive");
    TileGrid g = d.grid();
    g.grow(alpha);
    int j = g.size();
    while (g.at(alpha, j) != Tile::RTurn) --j;
    MonkTrace trace;
    Bpd out = detail::bpd_monk_continue(std::move(g), {alpha, j}, trace);
    trace.result_l = detail::monk_target(d.perm(), out.perm(), alpha);
    return {std::move(out), std::move(trace)};
}

inline std::pair<Bpd, MonkTrace> bpd_m_move(const Bpd& d, int s, int beta) {
    if (s < 1 || s >= beta) throw argument_error("m move needs 1 <= s < beta");
    const Permutation& sigma = d.perm();
    Permutation pi = sigma.times_transposition(s, beta);
    if (!pi.is_bruhat_cover(s, beta)) throw argument_error("diagram permutation is not a cover pi t_{s,beta}");
    TileGrid g = d.grid();
    auto at = trace_grid(g).crossing_of(g, sigma(s), sigma(beta));
    if (!at) throw argument_error("named pipes do not cross");
    g.set(*at, Tile::Bump);
    MonkTrace trace;
    trace.steps.push_back({"cross-to-bump", *at, std::nullopt});
    Bpd out = detail::bpd_monk_continue(std::move(g), *at, trace);
    trace.result_l = detail::monk_target(pi, out.perm(), beta);
    return {std::move(out), std::move(trace)};
}

/// x_alpha S_pi + sum over left covers equals the sum over right covers.
inline bool verify_monk_poly(const Permutation& pi, int alpha) {
    MonkCovers covers = monk_covers(pi, alpha);
    Polynomial lhs = Polynomial::variable(alpha) * schubert_dd(pi);
    for (int s : covers.left) lhs += schubert_dd(pi.times_transposition(s, alpha));
    Polynomial rhs;
    for (int l : covers.right) rhs += schubert_dd(pi.times_transposition(alpha, l));
    return lhs == rhs;
}

inline bool footprints_audit(const MonkTrace& trace) {
    std::set<Cell> seen(trace.complete_footprints.begin(), trace.complete_footprints.end());
    return seen.size() == trace.complete_footprints.size();
}

/// phi(x_alpha B) = x_alpha phi(B) for every B in BPD(pi).
inline bool verify_monk_commutation(const Permutation& pi, int alpha) {
    for (const auto& b : enumerate_bpd(pi)) {
        if (!(phi_pd(bpd_x_insert(b, alpha).first) == pd_x_insert(phi_pd(b), alpha).first)) return false;
    }
    return true;
}

/// phi(m_{s,beta} B) = m_{s,beta} phi(B) for every B in BPD(pi t_{s,beta}).
inline bool verify_monk_commutation_m(const Permutation& pi, int s, int beta) {
    if (s < 1 || s >= beta || !pi.is_bruhat_cover(s, beta)) throw argument_error("(s,beta) is not a cover of pi");
    for (const auto& b : enumerate_bpd(pi.times_transposition(s, beta))) {
        if (!(phi_pd(bpd_m_move(b, s, beta).first) == pd_m_move(phi_pd(b), s, beta).first)) return false;
    }
    return true;
}

struct PdModel {
    using Diagram = PipeDream;
    static constexpr const char* name = "pd";
    struct Pop {
        int a;
        int r;
        Diagram result;
    };
    static std::vector<Diagram> enumerate(const Permutation& p) { return enumerate_pd(p); }
    static Pop pop(const Diagram& d) {
        auto p = pd_pop(d);
        return {p.a, p.r, std::move(p.result)};
    }
    static std::pair<Diagram, MonkTrace> x(const Diagram& d, int alpha) { return pd_x_insert(d, alpha); }
    static std::pair<Diagram, MonkTrace> m(const Diagram& d, int s, int beta) { return pd_m_move(d, s, beta); }
};

struct BpdModel {
    using Diagram = Bpd;
    static constexpr const char* name = "bpd";
    struct Pop {
        int a;
        int r;
        Diagram result;
    };
    static std::vector<Diagram> enumerate(const Permutation& p) { return enumerate_bpd(p); }
    static Pop pop(const Diagram& d) {
        auto p = bpd_pop(d);
        return {p.a, p.r, std::move(p.result)};
    }
    static std::pair<Diagram, MonkTrace> x(const Diagram& d, int alpha) { return bpd_x_insert(d, alpha); }
    static std::pair<Diagram, MonkTrace> m(const Diagram& d, int s, int beta) { return bpd_m_move(d, s, beta); }
};

struct MonkParams {
    bool is_x = true;
    int alpha = 0;
    int s = 0;
    int beta = 0;
    static MonkParams x(int alpha) { return {true, alpha, 0, 0}; }
    static MonkParams m(int s, int beta) { return {false, 0, s, beta}; }
};

struct ClauseTally {
    int passed = 0;
    int failed = 0;
    int skipped = 0;
};

struct AuditReport {
    std::map<std::string, ClauseTally> clauses;
    std::vector<std::string> failures;

    void check(const std::string& clause, bool ok, const std::string& context) {
        auto& t = clauses[clause];
        if (ok) {
            ++t.passed;
        } else {
            ++t.failed;
            failures.push_back(clause + ": " + context);
        }
    }
    void skip(const std::string& clause) { ++clauses[clause].skipped; }
    bool ok() const { return failures.empty(); }
    int passed() const {
        int n = 0;
        for (const auto& [k, t] : clauses) n += t.passed;
        return n;
    }
    void merge(const AuditReport& o) {
        for (const auto& [k, t] : o.clauses) {
            auto& mine = clauses[k];
            mine.passed += t.passed;
            mine.failed += t.failed;
            mine.skipped += t.skipped;
        }
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

namespace detail {

template <class Model>
std::string audit_context(const typename Model::Diagram& d, const MonkParams& p) {
    std::string s = std::string(Model::name) + " perm " + d.perm().to_string();
    if (p.is_x) return s + " x_" + std::to_string(p.alpha);
    return s + " m_" + std::to_string(p.s) + "," + std::to_string(p.beta);
}

// Shared tail of cases (1a) and (2a): E is the move applied to nabla D.
template <class Model>
void audit_generic_case(const std::string& tag, int i, int r, const typename Model::Diagram& moved,
                        const typename Model::Diagram& e, AuditReport& report, const std::string& ctx) {
    Permutation rho = e.perm();
    auto popped = Model::pop(moved);
    bool di = rho.is_left_descent(i), di1 = rho.is_left_descent(i + 1);
    int expect_a = di ? i + 1 : i;
    report.check(tag + ".pop", popped.a == expect_a && popped.r == r, ctx);
    if (di && di1) {
        Permutation rinv = rho.inverse();
        try {
            auto expected = Model::m(e, rinv(i + 2), rinv(i + 1)).first;
            report.check(tag + ".nabla-m", popped.result == expected, ctx);
        } catch (const argument_error&) {
            report.check(tag + ".nabla-m", false, ctx + " (second m move undefined)");
        }
    } else {
        report.check(tag + ".nabla", popped.result == e, ctx);
    }
}

template <class Model>
void lemma_audit(const typename Model::Diagram& d, const MonkParams& p, AuditReport& report) {
    std::string ctx = audit_context<Model>(d, p);
    if (d.perm().is_identity()) {
        report.skip(p.is_x ? "2.identity" : "1.identity");
        return;
    }
    auto base = Model::pop(d);
    int i = base.a, r = base.r;
    if (p.is_x) {
        auto moved = Model::x(d, p.alpha).first;
        auto after = Model::pop(moved);
        if (p.alpha < r) {
            report.check("2b.pop", after.a == p.alpha && after.r == p.alpha, ctx);
            report.check("2b.nabla", after.result == d, ctx);
            return;
        }
        report.check("drift", after.r == r && (after.a == i || after.a == i + 1), ctx);
        auto e = Model::x(base.result, p.alpha).first;
        audit_generic_case<Model>("2a", i, r, moved, e, report, ctx);
        return;
    }
    Permutation pi = d.perm().times_transposition(p.s, p.beta);
    Permutation pinv = pi.inverse();
    auto moved = Model::m(d, p.s, p.beta).first;
    auto after = Model::pop(moved);
    report.check("drift", after.r == r && (after.a == i || after.a == i + 1), ctx);
    if (p.s == pinv(i) && p.beta == pinv(i + 1)) {
        report.check("1b.pop", after.a == i + 1 && after.r == r, ctx);
        Permutation rho = base.result.perm();
        if (rho.is_left_descent(i + 1)) {
            Permutation rinv = rho.inverse();
            try {
                auto expected = Model::m(base.result, rinv(i + 2), rinv(i + 1)).first;
                report.check("1b.nabla-m", after.result == expected, ctx);
            } catch (const argument_error&) {
                report.check("1b.nabla-m", false, ctx + " (second m move undefined)");
            }
        } else {
            report.check("1b.nabla", after.result == base.result, ctx);
        }
        return;
    }
    Permutation below = base.result.perm().times_transposition(p.s, p.beta);
    if (!below.is_bruhat_cover(p.s, p.beta)) {
        report.skip("1a");
        return;
    }
    auto e = Model::m(base.result, p.s, p.beta).first;
    audit_generic_case<Model>("1a", i, r, moved, e, report, ctx);
}

} // namespace detail

/// Evaluates every applicable clause of the pop/Monk interaction lemma for one diagram and move.
inline AuditReport lemma_case_audit(const PipeDream& d, const MonkParams& p) {
    AuditReport report;
    detail::lemma_audit<PdModel>(d, p, report);
    return report;
}

inline AuditReport lemma_case_audit(const Bpd& d, const MonkParams& p) {
    AuditReport report;
    detail::lemma_audit<BpdModel>(d, p, report);
    return report;
}

/// x_alpha images of model(pi) together with m_{s,alpha} images over left covers
/// equal the disjoint union of model(pi t_{alpha,l}) over right covers, as multisets.
template <class Model>
bool monk_partition_holds(const Permutation& pi, int alpha) {
    using Diagram = typename Model::Diagram;
    MonkCovers covers = monk_covers(pi, alpha);
    std::vector<Diagram> images;
    for (const auto& d : Model::enumerate(pi)) images.push_back(Model::x(d, alpha).first);
    for (int s : covers.left)
        for (const auto& d : Model::enumerate(pi.times_transposition(s, alpha)))
            images.push_back(Model::m(d, s, alpha).first);
    std::vector<Diagram> target;
    for (int l : covers.right)
        for (auto& d : Model::enumerate(pi.times_transposition(alpha, l))) target.push_back(std::move(d));
    std::sort(images.begin(), images.end());
    std::sort(target.begin(), target.end());
    return images == target;
}

} // namespace schubert
