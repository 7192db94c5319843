#pragma once

// Exhaustive checks over S_n shared by the command line tool and the
// acceptance runner. Every check returns a CheckResult instead of throwing;
// an exception inside a check counts as a failure with its message.

#include "bijection.hpp"
#include "bumpless.hpp"
#include "monk.hpp"
#include "permutation.hpp"
#include "pipe_dream.hpp"
#include "polynomial.hpp"
#include "schubert_poly.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace schubert {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
    double seconds = 0;
};

namespace detail {

inline CheckResult timed(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult res{name, false, "", 0};
    auto t0 = std::chrono::steady_clock::now();
    try {
        bool ok = true;
        res.detail = body(ok);
        res.ok = ok;
    } catch (const std::exception& e) {
        res.ok = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

/// Enumerations are reused heavily by the Monk sweeps.
class DiagramCache {
public:
    const std::vector<PipeDream>& pd(const Permutation& p) {
        auto it = pd_.find(p);
        if (it == pd_.end()) it = pd_.emplace(p, enumerate_pd(p)).first;
        return it->second;
    }
    const std::vector<Bpd>& bpd(const Permutation& p) {
        auto it = bpd_.find(p);
        if (it == bpd_.end()) it = bpd_.emplace(p, enumerate_bpd(p)).first;
        return it->second;
    }

private:
    std::map<Permutation, std::vector<PipeDream>> pd_;
    std::map<Permutation, std::vector<Bpd>> bpd_;
};

} // namespace detail

/// Schubert polynomial by divided differences equals both diagram weight sums.
inline CheckResult check_triple_agreement(int n) {
    return detail::timed("triple-agreement S" + std::to_string(n), [n](bool& ok) {
        int count = 0;
        std::string bad;
        for (const auto& pi : Permutation::all(n)) {
            Polynomial dd = schubert_dd(pi), pd, bpd;
            for (const auto& d : enumerate_pd(pi)) pd += pd_weight(d);
            for (const auto& b : enumerate_bpd(pi)) bpd += bpd_weight(b);
            if (!(dd == pd && dd == bpd)) {
                ok = false;
                bad += " " + pi.to_string();
            }
            ++count;
        }
        return std::to_string(count) + " permutations" + (bad.empty() ? "" : "; mismatches:" + bad);
    });
}

/// phi is injective on BPD(pi), hits exactly PD(pi), and preserves weight pointwise.
inline CheckResult check_bijection(int n) {
    return detail::timed("bijection S" + std::to_string(n), [n](bool& ok) {
        int diagrams = 0;
        std::string bad;
        for (const auto& pi : Permutation::all(n)) {
            std::set<PipeDream> image;
            auto bpds = enumerate_bpd(pi);
            for (const auto& b : bpds) {
                PipeDream d = phi_pd(b);
                if (!(pd_weight(d) == bpd_weight(b)) || !(d.perm() == pi)) {
                    ok = false;
                    bad += " weight/perm@" + pi.to_string();
                }
                image.insert(std::move(d));
            }
            auto pds = enumerate_pd(pi);
            if (image.size() != bpds.size()) {
                ok = false;
                bad += " not-injective@" + pi.to_string();
            }
            if (std::vector<PipeDream>(image.begin(), image.end()) != pds) {
                ok = false;
                bad += " image@" + pi.to_string();
            }
            for (const auto& d : pds) {
                if (!(phi_pd(phi_inverse(d)) == d)) {
                    ok = false;
                    bad += " inverse@" + pi.to_string();
                }
            }
            diagrams += static_cast<int>(bpds.size());
        }
        return std::to_string(diagrams) + " diagrams" + bad;
    });
}

/// Every phi output is a compatible sequence of the permutation it came from.
inline CheckResult check_compatible_validity(int n) {
    return detail::timed("compatible-sequences S" + std::to_string(n), [n](bool& ok) {
        int count = 0;
        for (const auto& pi : Permutation::all(n)) {
            for (const auto& b : enumerate_bpd(pi)) {
                auto cs = phi(b).first;
                if (!is_compatible_sequence_of(cs, pi)) ok = false;
                ++count;
            }
        }
        return std::to_string(count) + " sequences";
    });
}

inline CheckResult check_monk_poly(int n, int max_alpha) {
    return detail::timed("monk-polynomial S" + std::to_string(n), [n, max_alpha](bool& ok) {
        int count = 0;
        std::string bad;
        for (const auto& pi : Permutation::all(n)) {
            for (int a = 1; a <= max_alpha; ++a, ++count) {
                if (!verify_monk_poly(pi, a)) {
                    ok = false;
                    bad += " " + pi.to_string() + "/" + std::to_string(a);
                }
            }
        }
        return std::to_string(count) + " identities" + bad;
    });
}

inline CheckResult check_stability(int n, int ambient) {
    return detail::timed("stability S" + std::to_string(n) + " in S" + std::to_string(ambient), [n, ambient](bool& ok) {
        int count = 0;
        for (const auto& pi : Permutation::all(n)) {
            if (!(schubert_dd(pi.embed(ambient), ambient) == schubert_dd(pi))) ok = false;
            ++count;
        }
        return std::to_string(count) + " permutations";
    });
}

/// Everything the Monk diagram checks need, gathered in one pass over S_n.
struct MonkSweep {
    int runs = 0;
    std::vector<std::string> commutation_failures;
    int footprint_lists = 0;
    int footprint_repeats = 0;
    AuditReport audit;
    std::vector<std::string> errors;
};

inline MonkSweep sweep_monk(int n, int max_alpha) {
    MonkSweep out;
    detail::DiagramCache cache;
    auto note_pd_trace = [&out](const MonkTrace& t) {
        ++out.footprint_lists;
        if (!footprints_audit(t)) ++out.footprint_repeats;
    };
    for (const auto& pi : Permutation::all(n)) {
        for (int a = 1; a <= max_alpha; ++a) {
            std::string ctx = pi.to_string() + " x_" + std::to_string(a);
            try {
                for (const auto& b : cache.bpd(pi)) {
                    auto [pd_out, trace] = pd_x_insert(phi_pd(b), a);
                    note_pd_trace(trace);
                    if (!(phi_pd(bpd_x_insert(b, a).first) == pd_out)) out.commutation_failures.push_back(ctx);
                    ++out.runs;
                    detail::lemma_audit<BpdModel>(b, MonkParams::x(a), out.audit);
                }
                for (const auto& d : cache.pd(pi)) detail::lemma_audit<PdModel>(d, MonkParams::x(a), out.audit);
            } catch (const std::exception& e) {
                out.errors.push_back(ctx + ": " + e.what());
            }
        }
        for (int s = 1; s <= n; ++s) {
            for (int beta = s + 1; beta <= n + 1; ++beta) {
                if (!pi.is_bruhat_cover(s, beta)) continue;
                std::string ctx = pi.to_string() + " m_" + std::to_string(s) + "," + std::to_string(beta);
                Permutation sigma = pi.times_transposition(s, beta);
                try {
                    for (const auto& b : cache.bpd(sigma)) {
                        auto [pd_out, trace] = pd_m_move(phi_pd(b), s, beta);
                        note_pd_trace(trace);
                        if (!(phi_pd(bpd_m_move(b, s, beta).first) == pd_out)) out.commutation_failures.push_back(ctx);
                        ++out.runs;
                        detail::lemma_audit<BpdModel>(b, MonkParams::m(s, beta), out.audit);
                    }
                    for (const auto& d : cache.pd(sigma))
                        detail::lemma_audit<PdModel>(d, MonkParams::m(s, beta), out.audit);
                } catch (const std::exception& e) {
                    out.errors.push_back(ctx + ": " + e.what());
                }
            }
        }
    }
    return out;
}

inline CheckResult commutation_result(const MonkSweep& sw, int n) {
    CheckResult r{"monk-commutation S" + std::to_string(n), sw.commutation_failures.empty() && sw.errors.empty(), "", 0};
    r.detail = std::to_string(sw.runs) + " runs";
    for (const auto& f : sw.commutation_failures) r.detail += "; fails " + f;
    for (const auto& e : sw.errors) r.detail += "; error " + e;
    return r;
}

inline CheckResult footprints_result(const MonkSweep& sw, int n) {
    CheckResult r{"monk-footprints S" + std::to_string(n), sw.footprint_repeats == 0 && sw.footprint_lists > 0 && sw.errors.empty(), "", 0};
    r.detail = std::to_string(sw.footprint_lists) + " lists, " + std::to_string(sw.footprint_repeats) + " with repeats";
    return r;
}

// Clauses that must be exercised at least once for the audit to count.
inline const std::vector<std::string>& required_audit_clauses() {
    static const std::vector<std::string> clauses = {"1a.pop", "1a.nabla", "1b.pop", "1b.nabla", "2a.pop",
                                                     "2a.nabla", "2b.pop", "2b.nabla", "drift"};
    return clauses;
}

inline CheckResult lemmas_result(const MonkSweep& sw, int n) {
    CheckResult r{"lemma-audit S" + std::to_string(n), sw.audit.ok() && sw.errors.empty(), "", 0};
    std::ostringstream os;
    for (const auto& [k, t] : sw.audit.clauses) os << k << " " << t.passed << "/" << t.failed << "/" << t.skipped << "; ";
    for (const auto& c : required_audit_clauses()) {
        auto it = sw.audit.clauses.find(c);
        if (it == sw.audit.clauses.end() || it->second.passed == 0) {
            r.ok = false;
            os << "never exercised " << c << "; ";
        }
    }
    for (std::size_t k = 0; k < sw.audit.failures.size() && k < 5; ++k) os << "fails " << sw.audit.failures[k] << "; ";
    r.detail = os.str();
    return r;
}

inline CheckResult check_partition(int n, int max_alpha) {
    return detail::timed("monk-partition S" + std::to_string(n), [n, max_alpha](bool& ok) {
        int count = 0;
        std::string bad;
        for (const auto& pi : Permutation::all(n)) {
            for (int a = 1; a <= max_alpha; ++a, ++count) {
                if (!monk_partition_holds<PdModel>(pi, a)) {
                    ok = false;
                    bad += " pd:" + pi.to_string() + "/" + std::to_string(a);
                }
                if (!monk_partition_holds<BpdModel>(pi, a)) {
                    ok = false;
                    bad += " bpd:" + pi.to_string() + "/" + std::to_string(a);
                }
            }
        }
        return std::to_string(count) + " (pi, alpha) pairs" + bad;
    });
}

/// insert(pop(B)) = B for every BPD of S_n, and nothing can be inserted into Rothe(21) at a = 1.
inline CheckResult check_pop_insert(int n) {
    return detail::timed("pop-insert S" + std::to_string(n), [n](bool& ok) {
        int count = 0;
        for (const auto& pi : Permutation::all(n)) {
            if (pi.is_identity()) continue;
            for (const auto& b : enumerate_bpd(pi)) {
                PopResult p = bpd_pop(b);
                auto back = bpd_insert(p.result, p.a, p.r);
                if (!back || !(*back == b)) ok = false;
                ++count;
            }
        }
        Bpd r21 = rothe_bpd(Permutation::simple(1));
        for (int r = 1; r <= n + 3; ++r)
            if (bpd_insert(r21, 1, r)) ok = false;
        return std::to_string(count) + " round trips";
    });
}

/// Random small polynomials satisfy the ring axioms and the divided difference relations.
inline CheckResult check_ring_axioms(unsigned seed, int trials = 40) {
    return detail::timed("ring-axioms seed " + std::to_string(seed), [seed, trials](bool& ok) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 2), terms(0, 3);
        auto random_poly = [&] {
            Polynomial f;
            int k = terms(rng);
            for (int t = 0; t < k; ++t)
                f.add_term(Monomial({unsigned(expo(rng)), unsigned(expo(rng)), unsigned(expo(rng)), unsigned(expo(rng))}),
                           coeff(rng));
            return f;
        };
        for (int t = 0; t < trials; ++t) {
            Polynomial f = random_poly(), g = random_poly(), h = random_poly();
            ok = ok && (f * g) * h == f * (g * h) && f * (g + h) == f * g + f * h && f + g == g + f;
            for (int i = 1; i <= 3; ++i) {
                ok = ok && divided_difference(divided_difference(f, i), i).is_zero();
                for (int j = i + 2; j <= 4; ++j)
                    ok = ok && divided_difference(divided_difference(f, i), j) ==
                                   divided_difference(divided_difference(f, j), i);
            }
            ok = ok && apply_divided_differences(f, {1, 2, 1}) == apply_divided_differences(f, {2, 1, 2});
        }
        return std::to_string(trials) + " trials";
    });
}

/// The base cases of the commutation proof and the non multiplicity-free coefficient.
inline CheckResult check_anchors() {
    return detail::timed("anchors", [](bool& ok) {
        std::ostringstream os;
        for (int a = 1; a <= 4; ++a) {
            Bpd moved = bpd_x_insert(Bpd{}, a).first;
            PopResult p = bpd_pop(moved);
            bool good = p.a == a && p.r == a && moved.size() > a && moved.at(a + 1, a + 1) == Tile::Cross;
            if (!good) os << "x_" << a << " anchor fails; ";
            ok = ok && good;
        }
        for (int beta = 2; beta <= 4; ++beta) {
            for (const auto& b : enumerate_bpd(Permutation::simple(beta - 1))) {
                PopResult before = bpd_pop(b);
                Bpd moved = bpd_m_move(b, beta - 1, beta).first;
                PopResult after = bpd_pop(moved);
                bool good = before.a == beta - 1 && after.a == beta && after.r == before.r &&
                            moved.at(beta + 1, beta + 1) == Tile::Cross;
                if (!good) os << "m_" << beta - 1 << "," << beta << " anchor fails; ";
                ok = ok && good;
            }
        }
        Monomial m({2, 1, 1});
        Integer c = schubert_dd(Permutation::parse("21543")).coefficient(m);
        os << "coefficient of x1^2*x2*x3 in S_21543 is " << c;
        ok = ok && c >= 2;
        return os.str();
    });
}

/// Check groups selectable from the command line.
inline std::vector<CheckResult> run_checks(int n, const std::string& which, unsigned seed = 1) {
    std::vector<CheckResult> out;
    bool all = which == "all";
    if (all || which == "poly") {
        out.push_back(check_triple_agreement(n));
        out.push_back(check_monk_poly(n, n + 1));
        out.push_back(check_stability(n, n + 2));
        out.push_back(check_ring_axioms(seed));
    }
    if (all || which == "diagrams") {
        out.push_back(check_bijection(n));
        out.push_back(check_compatible_validity(n));
        out.push_back(check_pop_insert(n));
        out.push_back(check_anchors());
    }
    bool lemmas = all || which == "lemmas", footprints = all || which == "footprints";
    if (lemmas || footprints) {
        auto t0 = std::chrono::steady_clock::now();
        MonkSweep sw = sweep_monk(n, n);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (lemmas) {
            out.push_back(commutation_result(sw, n));
            out.back().seconds = secs;
            out.push_back(lemmas_result(sw, n));
            out.push_back(check_partition(n, n));
        }
        if (footprints) out.push_back(footprints_result(sw, n));
    }
    if (out.empty()) throw argument_error("unknown check group: " + which);
    return out;
}

} // namespace schubert
