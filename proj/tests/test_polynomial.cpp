#include "oracles.hpp"
#include "schubert/schubert_poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace schubert;

namespace {

Polynomial x(int i) { return Polynomial::variable(i); }

Polynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-4, 4), expo(0, 3), terms(0, 4);
    Polynomial f;
    int k = terms(rng);
    for (int t = 0; t < k; ++t)
        f.add_term(Monomial({unsigned(expo(rng)), unsigned(expo(rng)), unsigned(expo(rng)), unsigned(expo(rng))}),
                   coeff(rng));
    return f;
}

} // namespace

TEST(Polynomial, Arithmetic) {
    Polynomial f = x(1) * x(1) + Integer(3) * x(2);
    EXPECT_EQ(Polynomial() + f, f);
    EXPECT_EQ(x(1) * x(2), Polynomial::monomial(Monomial({1, 1})));
    EXPECT_EQ((x(1) + x(2)) * (x(1) - x(2)), x(1) * x(1) - x(2) * x(2));
    EXPECT_TRUE((f - f).is_zero());
    EXPECT_EQ(Integer(2) * f, f + f);
    EXPECT_EQ(Polynomial(1).to_string(), "1");
}

TEST(Polynomial, ToString) {
    EXPECT_EQ(x(1).to_string(), "x1");
    EXPECT_EQ((x(1) * x(1) * x(2)).to_string(), "x1^2*x2");
    EXPECT_EQ(Polynomial().to_string(), "0");
}

TEST(Polynomial, BigCoefficients) {
    Polynomial f = x(1) + x(2) + x(3);
    Polynomial g = 1;
    for (int k = 0; k < 60; ++k) g = g * f;
    // 60!/(20!)^3 does not fit in 64 bits
    Integer c = g.coefficient(Monomial({20, 20, 20}));
    EXPECT_GT(c, Integer(std::numeric_limits<std::int64_t>::max()));
}

TEST(DividedDifference, SmallCases) {
    EXPECT_EQ(divided_difference(x(1), 1), Polynomial(1));
    EXPECT_TRUE(divided_difference(x(1) * x(2), 1).is_zero());
    EXPECT_EQ(divided_difference(x(1) * x(1), 1), x(1) + x(2));
    EXPECT_EQ(divided_difference(x(2), 1), Polynomial(-1));
    EXPECT_THROW(divided_difference(x(1), 0), std::invalid_argument);
}

TEST(DividedDifference, MatchesClosedForm) {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        Polynomial f = random_poly(rng);
        for (int i = 1; i <= 4; ++i) ASSERT_EQ(divided_difference(f, i), oracle::closed_form_dd(f, i)) << f.to_string();
    }
}

TEST(DividedDifference, LeibnizRule) {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        Polynomial f = random_poly(rng), g = random_poly(rng);
        for (int i = 1; i <= 3; ++i) {
            Polynomial lhs = divided_difference(f * g, i);
            Polynomial rhs = divided_difference(f, i) * g + f.swap_variables(i) * divided_difference(g, i);
            ASSERT_EQ(lhs, rhs);
        }
    }
}

TEST(Schubert, SmallCases) {
    EXPECT_EQ(schubert_dd(Permutation()), Polynomial(1));
    EXPECT_EQ(schubert_dd(Permutation::parse("21")), x(1));
    EXPECT_EQ(schubert_dd(Permutation::parse("321")), x(1) * x(1) * x(2));
    EXPECT_EQ(schubert_dd(Permutation::parse("132")), x(1) + x(2));
    EXPECT_EQ(schubert_dd(Permutation::parse("231")), x(1) * x(2));
    EXPECT_EQ(schubert_dd(Permutation::parse("312")), x(1) * x(1));
}

TEST(Schubert, MatchesClosedFormWalk) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& p : Permutation::all(n)) ASSERT_EQ(schubert_dd(p), oracle::schubert_by_closed_form(p)) << p.to_string();
}

TEST(Schubert, DominantIsCodeMonomial) {
    // Lehmer codes (2,2,1) and (3,2,1)
    EXPECT_EQ(schubert_dd(Permutation::parse("3421")), Polynomial::monomial(Monomial({2, 2, 1})));
    EXPECT_EQ(schubert_dd(Permutation::parse("4321")), Polynomial::monomial(Monomial({3, 2, 1})));
}

TEST(Schubert, WordIndependence) {
    Permutation p = Permutation::parse("2143");
    Polynomial base = schubert_dd(p, 4);
    Permutation comp = p.inverse() * Permutation::longest(4);
    for (const auto& w : reduced_words(comp)) EXPECT_EQ(schubert_dd(p, 4, w), base);
}

TEST(Schubert, Stability) {
    for (const auto& p : Permutation::all(4)) ASSERT_EQ(schubert_dd(p.embed(6), 6), schubert_dd(p));
}

TEST(Schubert, NotMultiplicityFree) {
    EXPECT_GE(schubert_dd(Permutation::parse("21543")).coefficient(Monomial({2, 1, 1})), Integer(2));
}
