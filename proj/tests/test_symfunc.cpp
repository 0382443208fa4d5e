#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "equichar/oracle.hpp"
#include "equichar/symfunc.hpp"
#include "support.hpp"

using namespace equichar;
using support::poly;

namespace {

SymFunc s(const Partition& p) { return SymFunc::s(p); }
SymFunc p(const Partition& mu) { return SymFunc::p(mu); }

}  // namespace

TEST_CASE("character table of S_4")
{
    // Rows (4),(3,1),(2,2),(2,1,1),(1^4); columns (1^4),(2,1,1),(2,2),(3,1),(4).
    const std::vector<Partition> rows{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    const std::vector<Partition> cols{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
    const int table[5][5] = {{1, 1, 1, 1, 1},
                             {3, 1, -1, 0, -1},
                             {2, 0, 2, -1, 0},
                             {3, -1, -1, 0, 1},
                             {1, -1, 1, 1, -1}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) CHECK(character_value(rows[i], cols[j]) == table[i][j]);
}

TEST_CASE("characters satisfy row orthogonality with counted class sizes")
{
    for (int n = 1; n <= 7; ++n) {
        const auto sizes = support::class_sizes(n);
        for (const auto& a : partitions_of(n))
            for (const auto& b : partitions_of(n)) {
                std::int64_t sum = 0;
                for (const auto& [mu, count] : sizes)
                    sum += static_cast<std::int64_t>(count) * character_value(a, mu) * character_value(b, mu);
                CHECK(sum == (a == b ? static_cast<std::int64_t>(factorial(n)) : 0));
            }
    }
}

TEST_CASE("basis conversion")
{
    CHECK(schur_to_powersum(s({2})) == (p({1, 1}) + p({2})) * Rational(1, 2));
    CHECK(schur_to_powersum(s({1, 1})) == (p({1, 1}) - p({2})) * Rational(1, 2));
    CHECK(schur_to_powersum(s({2, 1})) == (p({1, 1, 1}) - p({3})) * Rational(1, 3));
    CHECK(to_schur(p({1, 1})) == s({2}) + s({1, 1}));
    CHECK(to_schur(p({2})) == s({2}) - s({1, 1}));

    SymFunc dims(Basis::Schur);
    for (const auto& lambda : partitions_of(5)) dims += s(lambda) * from_uint(support::syt(lambda));
    CHECK(to_schur(p({1, 1, 1, 1, 1})) == dims);

    CHECK_THROWS_AS(schur_to_powersum(p({1})), std::invalid_argument);
    CHECK_THROWS_AS(powersum_to_schur(s({1})), std::invalid_argument);

    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CHECK(to_schur(to_powersum(s(lambda))) == s(lambda));
            CHECK(to_powersum(to_schur(p(lambda))) == p(lambda));
            CHECK(oracle::jacobi_trudi_to_powersum(lambda) == schur_to_powersum(s(lambda)));
        }
}

TEST_CASE("products")
{
    CHECK(to_schur(s({1}) * s({1})) == s({2}) + s({1, 1}));
    CHECK(to_schur(s({4}) * s({1})) == s({5}) + s({4, 1}));
    CHECK(s({3, 1}) * SymFunc::one() == to_powersum(s({3, 1})));
    // Littlewood-Richardson: s_(2,1)^2.
    const SymFunc expected = s({4, 2}) + s({4, 1, 1}) + s({3, 3}) + s({3, 2, 1}) * 2 + s({3, 1, 1, 1}) + s({2, 2, 2}) +
                             s({2, 2, 1, 1});
    CHECK(to_schur(s({2, 1}) * s({2, 1})) == expected);
    CHECK(power(s({1}), 3) == p({1, 1, 1}));
    CHECK(to_schur(s({1}) * (s({1}) * poly({0, 1}))) == (s({2}) + s({1, 1})) * poly({0, 1}));
}

TEST_CASE("Kronecker product")
{
    CHECK(to_schur(kronecker(s({4}), s({3, 1}))) == s({3, 1}));
    CHECK(to_schur(kronecker(s({1, 1}), s({1, 1}))) == s({2}));
    CHECK(kronecker(p({2, 1}), p({2, 1})) == p({2, 1}) * 2);
    CHECK_THROWS_AS(kronecker(s({2}), s({3})), std::invalid_argument);
    // Sign twist is conjugation.
    for (const auto& lambda : partitions_of(6))
        CHECK(to_schur(kronecker(s(Partition::rectangle(1, 6)), s(lambda))) == s(conjugate(lambda)));
}

TEST_CASE("plethysm")
{
    CHECK(plethysm(p({2}), p({3}) * poly({0, 1})) == p({6}) * poly({0, 0, 1}));
    CHECK(to_schur(plethysm(s({2}), s({2}))) == s({4}) + s({2, 2}));
    CHECK(to_schur(plethysm(s({2}), s({3}))) == s({6}) + s({4, 2}));
    CHECK(to_schur(plethysm(s({3}), s({2}))) == s({6}) + s({4, 2}) + s({2, 2, 2}));
    CHECK(to_schur(plethysm(s({1, 1}), s({3}))) == s({5, 1}) + s({3, 3}));
    // Outer coefficients are inert, inner ones are raised.
    CHECK(to_schur(plethysm(s({2}) * poly({0, 1}), p({1}))) == s({2}) * poly({0, 1}));
    CHECK(to_schur(plethysm(s({2}), p({1}) * poly({0, 1}))) == s({2}) * poly({0, 0, 1}));
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CHECK(plethysm(s(lambda), p({1})) == to_powersum(s(lambda)));
            CHECK(plethysm(p({1}), s(lambda)) == to_powersum(s(lambda)));
        }
}

TEST_CASE("plethysm agrees with monomial substitution, including q")
{
    const std::vector<SymFunc> inner{s({2}), s({1, 1}) * poly({0, 1}), s({1}) * poly({0, 0, 1}) + s({1}),
                                     s({2, 1}) * poly({1, 1})};
    const std::vector<SymFunc> outer{s({2}), s({1, 1}), s({3}), s({2, 1})};
    for (const auto& g : inner)
        for (const auto& f : outer) {
            const int vars = f.degree() * g.degree();
            CHECK(oracle::expand(plethysm(f, g), vars) == oracle::oracle_plethysm(f, g, vars));
        }
}

TEST_CASE("power-sum derivative")
{
    CHECK(to_schur(pderiv(s({5}), {1})) == s({4}));
    CHECK(pderiv(s({2}), {2}) == SymFunc::scalar(Rational(1, 2)));
    CHECK(pderiv(s({2}), {1, 1}) == SymFunc::scalar(Rational(1, 2)));
    CHECK(pderiv(p({2, 2, 1}), {2}) == p({2, 1}) * 2);
    CHECK(pderiv(s({3}), {4}).is_zero());
    // Branching rule: d/dp_1 removes one box.
    for (const auto& lambda : partitions_of(7)) {
        SymFunc expected(Basis::Schur);
        for (int r = 0; r < lambda.length(); ++r) {
            if (lambda[r] > lambda[r + 1]) {
                std::vector<int> parts = lambda.parts();
                --parts[static_cast<std::size_t>(r)];
                expected += s(Partition::from_unsorted(parts));
            }
        }
        CHECK(to_schur(pderiv(s(lambda), {1})) == expected);
    }
}

TEST_CASE("dimension specialization")
{
    CHECK(dimension_specialize(s({5}) * poly({1, 1, 1}) + s({4, 1}) * poly({0, 1}), 5) == poly({1, 5, 1}));
    CHECK(dimension_specialize(s({6}), 6) == 1);
    CHECK(dimension_specialize(p({1, 1, 1}), 3) == 6);
    CHECK(dimension_specialize(p({2, 1}), 3) == 0);
    CHECK_THROWS_AS(dimension_specialize(s({2}) + s({3}), 3), std::invalid_argument);
}

TEST_CASE("degrees, components and effectivity")
{
    SymFunc f = s({2}) * poly({0, 1}) + s({3});
    CHECK(f.degrees() == std::set<int>{2, 3});
    CHECK_THROWS(f.degree());
    CHECK(f.homogeneous_component(2) == s({2}) * poly({0, 1}));
    CHECK(f.q_component(1) == s({2}));
    CHECK(f.q_degree() == 1);
    CHECK(is_effective(f));
    CHECK_FALSE(is_effective(p({2})));
    CHECK(is_effective(p({1, 1})));
    CHECK_THROWS(s({1}) += p({1}));
}

TEST_CASE("random products match the monomial oracle")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> deg(1, 4), c(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        SymFunc f(Basis::Schur), g(Basis::Schur);
        for (const auto& l : partitions_of(deg(rng))) f.add_term(l, c(rng));
        for (const auto& l : partitions_of(deg(rng))) g.add_term(l, c(rng));
        if (f.is_zero() || g.is_zero()) continue;
        const int vars = f.degree() + g.degree();
        CHECK(oracle::expand(f * g, vars) == oracle::expand(f, vars) * oracle::expand(g, vars));
    }
}

TEST_CASE("oracle building blocks")
{
    using oracle::MonomialPoly;
    MonomialPoly p2(2);
    p2.add_term({2, 0, 0}, 1);
    p2.add_term({0, 2, 0}, 1);
    CHECK(oracle::expand(p({2}), 2) == p2);

    MonomialPoly e2(2);
    e2.add_term({1, 1, 0}, 1);
    CHECK(oracle::expand(s({1, 1}), 2) == e2);

    const MonomialPoly s21 = oracle::expand(s({2, 1}), 3);
    CHECK(s21.terms().size() == 7);
    Rational total = 0;
    for (const auto& [e, c] : s21.terms()) total += c;
    CHECK(total == 8);
    CHECK(s21.terms().at({1, 1, 1, 0}) == 2);
    CHECK(s21.is_symmetric());

    CHECK(oracle::jacobi_trudi_to_powersum({2, 1}) == (p({1, 1, 1}) - p({3})) * Rational(1, 3));
    CHECK(oracle::complete_homogeneous_newton(3) == to_powersum(s({3})));
    CHECK(oracle::oracle_plethysm(p({1}), s({2, 1}), 3) == oracle::expand(s({2, 1}), 3));
    CHECK(oracle::oracle_plethysm(s({2, 1}), p({1}), 3) == oracle::expand(s({2, 1}), 3));
    CHECK_THROWS_AS(oracle::oracle_plethysm(s({2}), p({2}) * Rational(1, 2), 4), std::invalid_argument);
    CHECK_THROWS_AS(oracle::expand(s({2, 1}), 2), std::invalid_argument);
}
