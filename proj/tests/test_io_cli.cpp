#include "schubert/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace schubert;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    int code = cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

Permutation P(const char* s) { return Permutation::parse(s); }

} // namespace

TEST(Json, PolynomialRoundTrip) {
    Polynomial f = Polynomial::variable(1) * Polynomial::variable(1) - Integer(3) * Polynomial::variable(4);
    EXPECT_EQ(polynomial_from_json(to_json(f)), f);
    Polynomial big = Polynomial::monomial(Monomial({1}), Integer("123456789012345678901234567890"));
    json j = to_json(big);
    EXPECT_TRUE(j[0]["coefficient"].is_string());
    EXPECT_EQ(polynomial_from_json(j), big);
    EXPECT_THROW(polynomial_from_json(json::object()), parse_error);
}

TEST(Json, DiagramRoundTrip) {
    for (const auto& d : enumerate_pd(P("2143"))) EXPECT_EQ(pd_from_json(to_json(d)), d);
    for (const auto& b : enumerate_bpd(P("2143"))) EXPECT_EQ(bpd_from_json(to_json(b)), b);
    json pd = to_json(PipeDream(std::set<Cell>{{1, 1}, {1, 2}, {2, 1}}));
    EXPECT_EQ(pd.dump(), R"({"crosses":[[1,2],[1,1],[2,1]],"model":"pd"})");
    EXPECT_TRUE(std::holds_alternative<Bpd>(diagram_from_json(to_json(rothe_bpd(P("21"))))));
    EXPECT_THROW(diagram_from_json(json{{"model", "x"}}), parse_error);
    EXPECT_THROW(pd_from_json(json::parse(R"({"model":"pd","crosses":[[1]]})")), parse_error);
    EXPECT_THROW(grid_from_json(json::parse(R"({"model":"bpd","tiles":[["r","q"],["-","|"]]})")), parse_error);
    EXPECT_THROW(bpd_from_json(json::parse(R"({"model":"bpd","tiles":[[".","."],[".","."]]})")), invalid_diagram);
}

TEST(Render, Text) {
    EXPECT_EQ(render_ascii(identity_grid(2)), "r-\n|r\n");
    EXPECT_EQ(render_ascii(PipeDream(std::set<Cell>{{1, 1}})), "+\n");
    EXPECT_EQ(render_ascii(PipeDream(std::set<Cell>{{1, 1}, {1, 2}, {2, 1}})), "++\n+\n");
    EXPECT_EQ(render_ascii(PipeDream(std::set<Cell>{{1, 2}})), "/+\n/\n");
    Bpd b = rothe_bpd(P("2143"));
    EXPECT_EQ(parse_bpd_ascii(render_ascii(b)), b);
    EXPECT_EQ(parse_bpd_ascii(render_ascii(b, true)), b);
    EXPECT_EQ(parse_pd_ascii("/+\n/\n"), PipeDream(std::set<Cell>{{1, 2}}));
    EXPECT_THROW(parse_pd_ascii("x"), parse_error);
    EXPECT_THROW(parse_grid_ascii("r-\n|"), parse_error);
}

TEST(Cli, SchubertPolynomial) {
    auto r = run_cli({"schubert", "2,1", "--method", "dd"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "\"x1\"\n");
    for (const char* m : {"dd", "pd", "bpd"}) {
        r = run_cli({"schubert", "2,1,5,4,3", "--method", m, "--terms"});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(polynomial_from_json(json::parse(r.out)), schubert_dd(P("21543"))) << m;
    }
    r = run_cli({"--pretty", "schubert", "1,3,2"});
    EXPECT_EQ(r.out, "x1 + x2\n");
    EXPECT_EQ(run_cli({"schubert", "2,2"}).code, 2);
    EXPECT_EQ(run_cli({"schubert", "2,1", "--method", "nope"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
}

TEST(Cli, Enumerate) {
    auto r = run_cli({"enum", "3,2,1", "--model", "pd"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out).size(), 1u);
    r = run_cli({"enum", "2,1,5,4,3", "--model", "bpd"});
    EXPECT_EQ(json::parse(r.out).size(), enumerate_bpd(P("21543")).size());
}

TEST(Cli, PhiAndInverse) {
    std::string b = to_json(rothe_bpd(P("321"))).dump();
    auto r = run_cli({"phi", "--json", b});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["compatible"]["a"], json({2, 1, 2}));
    EXPECT_EQ(j["compatible"]["r"], json({1, 1, 2}));
    r = run_cli({"phi", "--inverse"}, j["pipe_dream"].dump());
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(bpd_from_json(json::parse(r.out)), rothe_bpd(P("321")));
    EXPECT_EQ(run_cli({"phi"}, "not json").code, 2);
    EXPECT_EQ(run_cli({"phi", "-i", "/nonexistent/file.json"}).code, 2);
}

TEST(Cli, PopInsert) {
    std::string b = to_json(rothe_bpd(P("21"))).dump();
    auto r = run_cli({"pop", "--json", b});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(j["a"], 1);
    EXPECT_EQ(j["r"], 1);
    r = run_cli({"insert", "--a", "1", "--r", "1", "--json", j["result"].dump()});
    EXPECT_EQ(bpd_from_json(json::parse(r.out)), rothe_bpd(P("21")));
    r = run_cli({"insert", "--a", "1", "--r", "1", "--json", b});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "null\n");
    EXPECT_EQ(run_cli({"pop", "--json", to_json(Bpd()).dump()}).code, 2);
    r = run_cli({"pop", "--json", to_json(PipeDream(std::set<Cell>{{1, 1}})).dump()});
    EXPECT_EQ(json::parse(r.out)["result"], to_json(PipeDream()));
}

TEST(Cli, Monk) {
    auto r = run_cli({"monk", "x", "--alpha", "2", "--json", to_json(Bpd()).dump()});
    ASSERT_EQ(r.code, 0) << r.err;
    json j = json::parse(r.out);
    EXPECT_EQ(bpd_from_json(j["result"]).perm(), P("132"));
    EXPECT_EQ(j["l"], 3);
    r = run_cli({"monk", "m", "--s", "1", "--beta", "2", "--json", to_json(PipeDream(std::set<Cell>{{1, 1}})).dump()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(pd_from_json(json::parse(r.out)["result"]), PipeDream(std::set<Cell>{{1, 2}}));
    r = run_cli({"monk", "m", "--s", "1", "--beta", "3", "--json", to_json(PipeDream(std::set<Cell>{{1, 1}})).dump()});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, Verify) {
    auto r = run_cli({"verify", "--group", "3", "--check", "all"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(json::parse(r.out)["ok"].get<bool>());
    EXPECT_EQ(run_cli({"verify", "--group", "9"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--group", "3", "--check", "bogus"}).code, 2);
}

TEST(Cli, Render) {
    auto r = run_cli({"render", "--json", to_json(Bpd(identity_grid(2))).dump()});
    EXPECT_EQ(r.out, "");
    r = run_cli({"render", "--json", to_json(TileGrid(identity_grid(2))).dump()});
    EXPECT_EQ(r.out, "r-\n|r\n");
    r = run_cli({"render", "--json", to_json(PipeDream(std::set<Cell>{{1, 1}})).dump()});
    EXPECT_EQ(r.out, "+\n");
}
