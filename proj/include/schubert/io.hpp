#pragma once

// JSON interchange and fixed-width text rendering for permutations,
// polynomials, compatible sequences and both diagram models.
//
// PD JSON:  {"model":"pd","crosses":[[r,c],...]}, crosses in grid order.
// BPD JSON: {"model":"bpd","n":n,"tiles":[["r","-"],["|","r"]]}, row-major.

#include "bumpless.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "pipe_dream.hpp"
#include "polynomial.hpp"

#include <json.hpp>

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace schubert {

using json = nlohmann::json;

class parse_error : public std::invalid_argument {
public:
    explicit parse_error(const std::string& what) : std::invalid_argument("parse error: " + what) {}
};

inline json to_json(const Permutation& p) { return json(p.word()); }

inline json to_json(const Cell& c) { return json::array({c.row, c.col}); }

inline json to_json(const CompatibleSequence& cs) { return {{"a", cs.a}, {"r", cs.r}}; }

inline json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

/// Terms sorted lexicographically by exponent vector.
inline json to_json(const Polynomial& f) {
    json out = json::array();
    for (const auto& [m, c] : f.terms()) out.push_back({{"exponents", m.exponents()}, {"coefficient", integer_to_json(c)}});
    return out;
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("polynomial must be a list of terms");
    Polynomial f;
    for (const auto& t : j) {
        auto exps = t.at("exponents").get<std::vector<unsigned>>();
        const auto& c = t.at("coefficient");
        Integer coeff = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>());
        f.add_term(Monomial(std::move(exps)), coeff);
    }
    return f;
}

inline json to_json(const PipeDream& d) {
    json crosses = json::array();
    for (const auto& c : d.ordered_crosses()) crosses.push_back(to_json(c));
    return {{"model", "pd"}, {"crosses", crosses}};
}

inline json to_json(const TileGrid& g) {
    json rows = json::array();
    for (int r = 1; r <= g.size(); ++r) {
        json row = json::array();
        for (int c = 1; c <= g.size(); ++c) row.push_back(std::string(1, tile_letter(g.at(r, c))));
        rows.push_back(std::move(row));
    }
    return {{"model", "bpd"}, {"n", g.size()}, {"tiles", rows}};
}

inline json to_json(const Bpd& d) { return to_json(d.grid()); }

inline PipeDream pd_from_json(const json& j) {
    try {
        if (j.at("model") != "pd") throw parse_error("expected model \"pd\"");
        std::set<Cell> crosses;
        for (const auto& c : j.at("crosses")) {
            if (!c.is_array() || c.size() != 2) throw parse_error("cross must be [row, col]");
            if (!crosses.insert({c[0].get<int>(), c[1].get<int>()}).second) throw parse_error("repeated cross");
        }
        return PipeDream(std::move(crosses));
    } catch (const json::exception& e) {
        throw parse_error(e.what());
    }
}

/// Tile grid without validation beyond the alphabet and shape.
inline TileGrid grid_from_json(const json& j) {
    try {
        if (j.at("model") != "bpd") throw parse_error("expected model \"bpd\"");
        const auto& rows = j.at("tiles");
        int n = static_cast<int>(rows.size());
        if (j.contains("n") && j.at("n").get<int>() != n) throw parse_error("n does not match the tile rows");
        TileGrid g(n);
        for (int r = 0; r < n; ++r) {
            if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != n) throw parse_error("grid is not square");
            for (int c = 0; c < n; ++c) {
                auto s = rows[r][c].get<std::string>();
                auto t = s.size() == 1 ? tile_from_letter(s[0]) : std::nullopt;
                if (!t) throw parse_error("unknown tile \"" + s + "\"");
                g.set(r + 1, c + 1, *t);
            }
        }
        return g;
    } catch (const json::exception& e) {
        throw parse_error(e.what());
    }
}

inline Bpd bpd_from_json(const json& j) { return Bpd(grid_from_json(j)); }

using Diagram = std::variant<PipeDream, Bpd>;

inline Diagram diagram_from_json(const json& j) {
    if (!j.is_object() || !j.contains("model")) throw parse_error("diagram needs a \"model\" field");
    if (j.at("model") == "pd") return pd_from_json(j);
    if (j.at("model") == "bpd") return bpd_from_json(j);
    throw parse_error("unknown model");
}

inline json to_json(const Diagram& d) {
    return std::visit([](const auto& x) { return to_json(x); }, d);
}

// Rendering.

/// Staircase of the support size: row i has n-i cells, '+' for crosses and '/' for elbows.
inline std::string render_ascii(const PipeDream& d) {
    int n = d.perm().size();
    std::string out;
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j <= n - i; ++j) out += d.contains({i, j}) ? '+' : '/';
        out += '\n';
    }
    return out;
}

namespace detail {

inline constexpr std::array<const char*, 7> kPrettyTiles = {"·", "┼", "─", "│", "┌", "┘", "╬"};

inline std::vector<std::string> split_glyphs(std::string_view line) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < line.size();) {
        auto lead = static_cast<unsigned char>(line[k]);
        std::size_t len = lead < 0x80 ? 1 : lead < 0xE0 ? 2 : lead < 0xF0 ? 3 : 4;
        out.emplace_back(line.substr(k, len));
        k += len;
    }
    return out;
}

inline std::vector<std::string> text_lines(std::string_view text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream is{std::string(text)};
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

} // namespace detail

inline std::string render_ascii(const TileGrid& g, bool pretty = false) {
    std::string out;
    for (int r = 1; r <= g.size(); ++r) {
        for (int c = 1; c <= g.size(); ++c) {
            Tile t = g.at(r, c);
            if (pretty) out += detail::kPrettyTiles[static_cast<int>(t)];
            else out += tile_letter(t);
        }
        out += '\n';
    }
    return out;
}

inline std::string render_ascii(const Bpd& d, bool pretty = false) { return render_ascii(d.grid(), pretty); }

inline PipeDream parse_pd_ascii(std::string_view text) {
    std::set<Cell> crosses;
    auto lines = detail::text_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = 0; j < lines[i].size(); ++j) {
            char ch = lines[i][j];
            if (ch == '+') crosses.insert({static_cast<int>(i) + 1, static_cast<int>(j) + 1});
            else if (ch != '/') throw parse_error(std::string("unexpected pipe dream glyph '") + ch + "'");
        }
    }
    return PipeDream(std::move(crosses));
}

/// Accepts tile letters or the pretty glyphs.
inline TileGrid parse_grid_ascii(std::string_view text) {
    auto lines = detail::text_lines(text);
    int n = static_cast<int>(lines.size());
    TileGrid g(n);
    for (int r = 0; r < n; ++r) {
        auto glyphs = detail::split_glyphs(lines[r]);
        if (static_cast<int>(glyphs.size()) != n) throw parse_error("grid is not square");
        for (int c = 0; c < n; ++c) {
            std::optional<Tile> t;
            if (glyphs[c].size() == 1) t = tile_from_letter(glyphs[c][0]);
            for (int k = 0; k < 7 && !t; ++k)
                if (glyphs[c] == detail::kPrettyTiles[k]) t = static_cast<Tile>(k);
            if (!t) throw parse_error("unknown tile glyph \"" + glyphs[c] + "\"");
            g.set(r + 1, c + 1, *t);
        }
    }
    return g;
}

inline Bpd parse_bpd_ascii(std::string_view text) { return Bpd(parse_grid_ascii(text)); }

} // namespace schubert
