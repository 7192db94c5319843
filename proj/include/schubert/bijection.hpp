#pragma once

/// The bijection phi from bumpless pipe dreams to pipe dreams, read off by popping blanks.

#include "bumpless.hpp"
#include "errors.hpp"
#include "pipe_dream.hpp"

#include <utility>
#include <vector>

namespace schubert {

struct PhiTrace {
    std::vector<std::pair<int, int>> pops;
    std::vector<Bpd> intermediates; // D, nabla D, nabla^2 D, ... when requested
};

inline std::pair<CompatibleSequence, PhiTrace> phi(const Bpd& b, bool keep_intermediates = false) {
    CompatibleSequence cs;
    PhiTrace trace;
    Bpd cur = b;
    if (keep_intermediates) trace.intermediates.push_back(cur);
    while (!cur.perm().is_identity()) {
        PopResult p = bpd_pop(cur);
        cs.a.push_back(p.a);
        cs.r.push_back(p.r);
        trace.pops.emplace_back(p.a, p.r);
        cur = std::move(p.result);
        if (keep_intermediates) trace.intermediates.push_back(cur);
    }
    return {std::move(cs), std::move(trace)};
}

inline PipeDream phi_pd(const Bpd& b) { return compatible_to_pd(phi(b).first); }

/// Inserts the letters of the compatible sequence of d from last to first, starting from the empty grid.
inline Bpd phi_inverse(const PipeDream& d) {
    CompatibleSequence cs = pd_to_compatible(d);
    Bpd cur;
    for (std::size_t k = cs.a.size(); k-- > 0;) {
        auto next = bpd_insert(cur, cs.a[k], cs.r[k]);
        if (!next) throw internal_error("insertion failed while inverting phi");
        cur = std::move(*next);
    }
    return cur;
}

} // namespace schubert
