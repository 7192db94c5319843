#pragma once

// The `schubert` command line tool as a callable function.
//
// Exit codes: 0 success, 1 a failed check or internal error, 2 invalid input.
// Output is JSON unless --pretty is given.

#include "bijection.hpp"
#include "bumpless.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "monk.hpp"
#include "pipe_dream.hpp"
#include "schubert_poly.hpp"
#include "verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace schubert::cli {

namespace detail {

inline std::string slurp(std::istream& is) { return {std::istreambuf_iterator<char>(is), {}}; }

struct InputSource {
    std::string path = "-";
    std::string inline_json;

    void attach(CLI::App* cmd) {
        cmd->add_option("-i,--input", path, "diagram JSON file, - for stdin");
        cmd->add_option("--json", inline_json, "diagram JSON given inline");
    }

    json read(std::istream& in) const {
        std::string text;
        if (!inline_json.empty()) {
            text = inline_json;
        } else if (path == "-") {
            text = slurp(in);
        } else {
            std::ifstream f(path);
            if (!f) throw argument_error("cannot open " + path);
            text = slurp(f);
        }
        try {
            return json::parse(text);
        } catch (const json::parse_error& e) {
            throw parse_error(e.what());
        }
    }
};

inline int max_group() {
    const char* env = std::getenv("SCHUBERT_MAX_N");
    if (!env || !*env) return 4;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        throw argument_error("SCHUBERT_MAX_N must be an integer");
    }
}

inline std::string render(const Diagram& d, bool pretty) {
    if (const auto* pd = std::get_if<PipeDream>(&d)) return render_ascii(*pd);
    return render_ascii(std::get<Bpd>(d), pretty);
}

inline json trace_json(const MonkTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        json j = {{"kind", s.kind}, {"at", to_json(s.at)}};
        if (s.to) j["to"] = to_json(*s.to);
        steps.push_back(std::move(j));
    }
    json fp = json::array(), cfp = json::array();
    for (const auto& c : t.footprints) fp.push_back(to_json(c));
    for (const auto& c : t.complete_footprints) cfp.push_back(to_json(c));
    return {{"steps", steps}, {"footprints", fp}, {"complete_footprints", cfp}};
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Pipe dreams, bumpless pipe dreams and Monk's rule"};
    app.name("schubert");
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "ASCII diagrams and plain polynomials instead of JSON");
    app.fallthrough();

    std::string perm_text, method = "dd", model = "pd", check = "all";
    bool terms = false, inverse = false;
    int a = 0, r = 0, alpha = 0, s = 0, beta = 0, group = 0;
    unsigned seed = 1;
    detail::InputSource src;

    auto* c_schubert = app.add_subcommand("schubert", "Schubert polynomial of a permutation");
    c_schubert->add_option("perm", perm_text, "one-line notation, e.g. 2,1,5,4,3")->required();
    c_schubert->add_option("--method", method, "dd, pd or bpd")->check(CLI::IsMember({"dd", "pd", "bpd"}));
    c_schubert->add_flag("--terms", terms, "emit the JSON term list");

    auto* c_enum = app.add_subcommand("enum", "all diagrams of a permutation");
    c_enum->add_option("perm", perm_text)->required();
    c_enum->add_option("--model", model, "pd or bpd")->check(CLI::IsMember({"pd", "bpd"}));

    auto* c_phi = app.add_subcommand("phi", "bijection from bumpless pipe dreams to pipe dreams");
    c_phi->add_flag("--inverse", inverse, "map a pipe dream back to its bumpless pipe dream");
    src.attach(c_phi);

    auto* c_pop = app.add_subcommand("pop", "delete the first cross or blank");
    src.attach(c_pop);

    auto* c_insert = app.add_subcommand("insert", "inverse of pop on bumpless pipe dreams");
    c_insert->add_option("--a", a)->required();
    c_insert->add_option("--r", r)->required();
    src.attach(c_insert);

    auto* c_monk = app.add_subcommand("monk", "Monk's rule moves");
    c_monk->require_subcommand(1);
    auto* c_mx = c_monk->add_subcommand("x", "x_alpha insertion");
    c_mx->add_option("--alpha", alpha)->required();
    src.attach(c_mx);
    auto* c_mm = c_monk->add_subcommand("m", "m_{s,beta} move");
    c_mm->add_option("--s", s)->required();
    c_mm->add_option("--beta", beta)->required();
    src.attach(c_mm);

    auto* c_verify = app.add_subcommand("verify", "exhaustive checks over S_n");
    c_verify->add_option("--group", group, "n")->required();
    c_verify->add_option("--check", check)->check(CLI::IsMember({"poly", "diagrams", "lemmas", "footprints", "all"}));
    c_verify->add_option("--seed", seed, "seed for the randomized polynomial checks");

    auto* c_render = app.add_subcommand("render", "text rendering of a diagram");
    src.attach(c_render);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    auto emit = [&](const json& j) { out << j.dump() << "\n"; };

    try {
        if (c_schubert->parsed()) {
            Permutation pi = Permutation::parse(perm_text);
            Polynomial f;
            if (method == "dd") {
                f = schubert_dd(pi);
            } else if (method == "pd") {
                for (const auto& d : enumerate_pd(pi)) f += pd_weight(d);
            } else {
                for (const auto& b : enumerate_bpd(pi)) f += bpd_weight(b);
            }
            if (terms) emit(to_json(f));
            else if (pretty) out << f.to_string() << "\n";
            else emit(json(f.to_string()));
            return 0;
        }
        if (c_enum->parsed()) {
            Permutation pi = Permutation::parse(perm_text);
            std::vector<Diagram> ds;
            if (model == "pd") {
                for (auto& d : enumerate_pd(pi)) ds.emplace_back(std::move(d));
            } else {
                for (auto& b : enumerate_bpd(pi)) ds.emplace_back(std::move(b));
            }
            std::sort(ds.begin(), ds.end(), [](const Diagram& x, const Diagram& y) {
                return to_json(x).dump() < to_json(y).dump();
            });
            if (pretty) {
                for (std::size_t k = 0; k < ds.size(); ++k) out << (k ? "\n" : "") << detail::render(ds[k], true);
            } else {
                json arr = json::array();
                for (const auto& d : ds) arr.push_back(to_json(d));
                emit(arr);
            }
            return 0;
        }
        if (c_phi->parsed()) {
            json input = src.read(in);
            if (inverse) {
                Bpd b = phi_inverse(pd_from_json(input));
                if (pretty) out << render_ascii(b);
                else emit(to_json(b));
                return 0;
            }
            auto [cs, trace] = phi(bpd_from_json(input));
            PipeDream d = compatible_to_pd(cs);
            if (pretty) {
                out << "a = " << json(cs.a).dump() << "\nr = " << json(cs.r).dump() << "\n" << render_ascii(d);
            } else {
                emit({{"compatible", to_json(cs)}, {"pipe_dream", to_json(d)}});
            }
            return 0;
        }
        if (c_pop->parsed()) {
            Diagram d = diagram_from_json(src.read(in));
            json result;
            int pa = 0, pr = 0;
            Diagram rest;
            json footprints = json::array();
            if (const auto* pd = std::get_if<PipeDream>(&d)) {
                auto p = pd_pop(*pd);
                pa = p.a;
                pr = p.r;
                rest = p.result;
            } else {
                auto p = bpd_pop(std::get<Bpd>(d));
                pa = p.a;
                pr = p.r;
                rest = p.result;
                for (const auto& c : p.footprints) footprints.push_back(to_json(c));
            }
            if (pretty) out << "pop = (" << pa << "," << pr << ")\n" << detail::render(rest, false);
            else emit({{"a", pa}, {"r", pr}, {"result", to_json(rest)}, {"footprints", footprints}});
            return 0;
        }
        if (c_insert->parsed()) {
            auto found = bpd_insert(bpd_from_json(src.read(in)), a, r);
            if (pretty) out << (found ? render_ascii(*found) : std::string("none\n"));
            else emit(found ? to_json(*found) : json(nullptr));
            return 0;
        }
        if (c_monk->parsed()) {
            Diagram d = diagram_from_json(src.read(in));
            bool is_x = c_mx->parsed();
            std::pair<Diagram, MonkTrace> res;
            if (const auto* pd = std::get_if<PipeDream>(&d)) {
                auto [o, t] = is_x ? pd_x_insert(*pd, alpha) : pd_m_move(*pd, s, beta);
                res = {Diagram(std::move(o)), std::move(t)};
            } else {
                const Bpd& b = std::get<Bpd>(d);
                auto [o, t] = is_x ? bpd_x_insert(b, alpha) : bpd_m_move(b, s, beta);
                res = {Diagram(std::move(o)), std::move(t)};
            }
            if (pretty) {
                out << "l = " << res.second.result_l << "\n" << detail::render(res.first, false);
            } else {
                json j = {{"result", to_json(res.first)}, {"l", res.second.result_l}};
                j["trace"] = detail::trace_json(res.second);
                emit(j);
            }
            return 0;
        }
        if (c_verify->parsed()) {
            int cap = detail::max_group();
            if (group < 1) throw argument_error("--group must be positive");
            if (group > cap)
                throw argument_error("--group " + std::to_string(group) + " exceeds SCHUBERT_MAX_N=" + std::to_string(cap));
            auto results = run_checks(group, check, seed);
            bool ok = std::all_of(results.begin(), results.end(), [](const CheckResult& c) { return c.ok; });
            if (pretty) {
                for (const auto& c : results)
                    out << (c.ok ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.detail << ")\n";
            } else {
                json arr = json::array();
                for (const auto& c : results)
                    arr.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}, {"seconds", c.seconds}});
                emit({{"ok", ok}, {"checks", arr}});
            }
            return ok ? 0 : 1;
        }
        if (c_render->parsed()) {
            json input = src.read(in);
            if (input.value("model", "") == "bpd") out << render_ascii(grid_from_json(input), pretty);
            else out << render_ascii(pd_from_json(input));
            return 0;
        }
    } catch (const internal_error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no command given\n";
    return 2;
}

} // namespace schubert::cli
