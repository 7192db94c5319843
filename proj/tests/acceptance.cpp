// Acceptance suite: one PASS/FAIL line per criterion.

#include "schubert/verify.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace schubert;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
    std::printf("[%s] AC%d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string describe(const CheckResult& c) {
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", c.seconds);
    return c.name + " " + c.detail + " in " + secs;
}

void report(int id, const std::string& title, const std::vector<CheckResult>& parts) {
    bool ok = true;
    std::string detail;
    for (const auto& c : parts) {
        ok = ok && c.ok;
        detail += (detail.empty() ? "" : "; ") + describe(c);
    }
    report(id, title, ok, detail);
}

} // namespace

int main() {
    CheckResult s4 = check_triple_agreement(4);
    CheckResult s5 = check_triple_agreement(5);
    report(1, "triple agreement", s4.ok && s4.seconds < 5.0 && s5.ok && s5.seconds < 120.0,
           describe(s4) + " (limit 5s); " + describe(s5) + " (limit 120s)");

    report(2, "bijection", {check_bijection(5)});
    report(3, "compatible-sequence validity", {check_compatible_validity(5)});
    report(4, "Monk polynomial identity", {check_monk_poly(4, 5)});

    auto t0 = std::chrono::steady_clock::now();
    MonkSweep sweep = sweep_monk(4, 4);
    double sweep_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto timed = [sweep_secs](CheckResult c) {
        c.seconds = sweep_secs;
        return c;
    };
    report(5, "Monk diagram commutation", {timed(commutation_result(sweep, 4))});
    report(6, "Monk partition", {check_partition(4, 4)});
    report(7, "footprint distinctness", {timed(footprints_result(sweep, 4))});
    report(8, "lemma case audits", {timed(lemmas_result(sweep, 4))});

    report(9, "pop/insert roundtrip", {check_pop_insert(5)});
    report(10, "anchors", {check_anchors()});
    report(11, "stability", {check_stability(4, 6)});

    std::printf("%d/11 criteria passed\n", 11 - failures);
    return failures == 0 ? 0 : 1;
}
