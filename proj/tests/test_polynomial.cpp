#include <doctest.h>

#include <limits>
#include <set>

#include "oracles.hpp"
#include "strongce/generators.hpp"
#include "strongce/polynomial.hpp"

using namespace strongce;

namespace {

std::vector<FactorPair> to_vector(std::span<const FactorPair> s) { return {s.begin(), s.end()}; }

// Random exponent vector of total degree `degree` with t_i <= caps[i].
std::vector<std::uint32_t> random_target(const std::vector<std::uint32_t>& caps, std::uint32_t degree, Rng& rng) {
    std::vector<std::uint32_t> t(caps.size(), 0);
    std::uint32_t room = 0;
    for (auto c : caps) room += c;
    if (room < degree) return {};
    for (std::uint32_t k = 0; k < degree; ++k) {
        std::size_t i;
        do {
            i = rng() % caps.size();
        } while (t[i] == caps[i]);
        ++t[i];
    }
    return t;
}

std::vector<std::uint32_t> variable_degrees(std::size_t n, const std::vector<FactorPair>& factors) {
    std::vector<std::uint32_t> d(n, 0);
    for (const auto& f : factors) {
        ++d[f.i];
        ++d[f.j];
    }
    return d;
}

}  // namespace

TEST_CASE("small products") {
    const std::vector<FactorPair> one = {{0, 1}};
    CHECK(product_coefficient(2, one, std::vector<std::uint32_t>{1, 0}) == 1);
    CHECK(product_coefficient(2, one, std::vector<std::uint32_t>{0, 1}) == -1);
    const std::vector<FactorPair> two = {{0, 1}, {0, 2}};
    CHECK(product_coefficient(3, two, std::vector<std::uint32_t>{1, 1, 0}) == -1);
    CHECK(product_coefficient(3, two, std::vector<std::uint32_t>{2, 0, 0}) == 1);
    CHECK(product_coefficient(3, two, std::vector<std::uint32_t>{0, 1, 1}) == 1);
    // Vandermonde in three variables: (x1-x2)(x1-x3)(x2-x3) has x1^2 x2 with coefficient 1.
    const std::vector<FactorPair> v3 = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(product_coefficient(3, v3, std::vector<std::uint32_t>{2, 1, 0}) == 1);
    CHECK(product_coefficient(3, v3, std::vector<std::uint32_t>{1, 1, 1}) == 0);
}

TEST_CASE("SparsePolynomial arithmetic") {
    SparsePolynomial p(2);
    p.add_term({1, 0}, 3);
    p.add_term({0, 2}, -1);
    CHECK(p.term_count() == 2);
    CHECK(p.degree() == 2);
    const std::vector<std::int64_t> at = {2, 3};
    CHECK(p.evaluate(at) == 6 - 9);
    p.add_term({1, 0}, -3);
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient_of({1, 0}) == 0);
    CHECK(SparsePolynomial(3).degree() == 0);
    CHECK(SparsePolynomial::constant(2, 5).coefficient_of({0, 0}) == 5);
    CHECK(total_degree({3, 0, 2}) == 5);
}

TEST_CASE("coefficient overflow is detected") {
    SparsePolynomial p(1);
    p.add_term({0}, std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(p.add_term({0}, 1), std::overflow_error);
}

TEST_CASE("expand_product evaluates like the product") {
    Rng rng(2);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng() % 4;
        std::vector<FactorPair> factors;
        for (int k = 0; k < 6; ++k) {
            const auto i = static_cast<std::uint32_t>(rng() % n);
            auto j = static_cast<std::uint32_t>(rng() % n);
            if (i == j) j = (j + 1) % static_cast<std::uint32_t>(n);
            factors.push_back({i, j});
        }
        const auto p = expand_product(n, factors);
        std::vector<std::int64_t> x(n);
        for (auto& v : x) v = static_cast<std::int64_t>(rng() % 7) - 3;
        std::int64_t direct = 1;
        for (const auto& f : factors) direct *= x[f.i] - x[f.j];
        CHECK(p.evaluate(x) == direct);
        CHECK((p.term_count() == 0 || p.degree() == factors.size()));
    }
}

TEST_CASE("the five-cycle certificate is -1 with 29 factors of degree 29") {
    const auto& cert = five_cycle_certificate();
    CHECK(cert.coefficient == -1);
    CHECK(cert.degree == 29);
    CHECK(cert.factor_count == 29);
    const auto factors = to_vector(five_cycle_factors());
    const std::vector<std::uint32_t> t(five_cycle_targets().begin(), five_cycle_targets().end());
    CHECK(t == std::vector<std::uint32_t>{3, 4, 5, 4, 4, 2, 3, 2, 2});
    CHECK(oracle::coefficient_by_differences(9, factors, t) == -1);
}

TEST_CASE("property: capped and uncapped expansion agree with sign-choice enumeration") {
    Rng rng(8);
    const auto all = to_vector(five_cycle_factors());
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<FactorPair> sub;
        for (const auto& f : all) {
            if (sub.size() < 12 && rng() % 2) sub.push_back(f);
        }
        const auto t = random_target(variable_degrees(9, sub), static_cast<std::uint32_t>(sub.size()), rng);
        if (t.empty()) continue;
        const auto expected = oracle::coefficient_by_choices(9, sub, t);
        CHECK(product_coefficient(9, sub, t) == expected);
        CHECK(expand_product(9, sub).coefficient_of(Monomial(t.begin(), t.end())) == expected);
        CHECK(oracle::coefficient_by_differences(9, sub, t) == expected);
    }
}

TEST_CASE("cn_find_assignment on certified systems") {
    Rng rng(12);
    int solved = 0;
    for (int trial = 0; trial < 200 && solved < 40; ++trial) {
        ConflictSystem s;
        s.variables = 2 + rng() % 5;
        for (int k = 0; k < 8; ++k) {
            const auto i = static_cast<std::uint32_t>(rng() % s.variables);
            const auto j = static_cast<std::uint32_t>((i + 1 + rng() % (s.variables - 1)) % s.variables);
            s.factors.push_back({i, j});
        }
        s.targets = random_target(variable_degrees(s.variables, s.factors), 8, rng);
        if (s.targets.empty() || product_coefficient(s.variables, s.factors, s.targets) == 0) continue;
        for (auto t : s.targets) {
            std::set<ColorId> l;
            while (l.size() < t + 1) l.insert(static_cast<ColorId>(rng() % 20));
            s.lists.emplace_back(l.begin(), l.end());
        }
        CHECK(certified(s));
        const auto a = cn_find_assignment(s);
        REQUIRE(a);
        CHECK(nonvanishing(s.factors, *a));
        for (std::size_t i = 0; i < s.variables; ++i) {
            CHECK(std::find(s.lists[i].begin(), s.lists[i].end(), (*a)[i]) != s.lists[i].end());
        }
        ++solved;
    }
    CHECK(solved == 40);
}

TEST_CASE("certified fails for short lists and zero coefficients") {
    ConflictSystem s;
    s.variables = 2;
    s.factors = {{0, 1}};
    s.targets = {1, 0};
    s.lists = {{1, 2}, {1}};
    CHECK(certified(s));
    s.lists = {{1}, {1}};
    CHECK_FALSE(certified(s));
    CHECK_FALSE(cn_find_assignment(s).has_value());
    s.lists = {{1, 2}, {1}};
    s.targets = {2, 0};
    CHECK_FALSE(certified(s));
}

TEST_CASE("parse_monomial and parse_factors") {
    CHECK(parse_monomial("x1^3*x2*x9^2", 9) == Monomial{3, 1, 0, 0, 0, 0, 0, 0, 2});
    CHECK(parse_monomial("x1^3 x2", 2) == Monomial{3, 1});
    CHECK(parse_monomial("1", 2) == Monomial{0, 0});
    CHECK_THROWS_AS(parse_monomial("y1", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_monomial("x3", 2), std::invalid_argument);
    const auto f = parse_factors("# comment\n1 2\n\n2 3  # tail\n");
    CHECK(f == std::vector<FactorPair>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(parse_factors("1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factors("1 2 3\n"), std::invalid_argument);
}
