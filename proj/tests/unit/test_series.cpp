#include "doctest.h"

#include "support/sample.hpp"

using namespace ajforge;
using namespace ajforge::testing;

namespace {

Series<Rational> poly(Truncation t, std::initializer_list<std::pair<unsigned, Rational>> terms)
{
    Series<Rational> f(t, Rational(0));
    for (const auto &[k, c] : terms)
        f.set(k, f.coeff(k) + c);
    return f;
}

} // namespace

TEST_SUITE("series")
{
    TEST_CASE("order")
    {
        const auto t = Truncation::finite(6);
        CHECK(order(poly(t, {{2, 1}, {5, 1}})) == 2);
        CHECK(order(Series<Rational>(t, Rational(0))) == kInfiniteOrder);
        CHECK(order(poly(t, {{0, 7}})) == 0);
    }

    TEST_CASE("ring operations")
    {
        const auto s1 = Truncation::finite(1), s3 = Truncation::finite(3);
        CHECK((poly(s1, {{1, 1}}) * poly(s1, {{1, 1}})).is_zero());
        CHECK(poly(s3, {{0, 1}, {1, 1}}) * poly(s3, {{0, 1}, {1, -1}}) == poly(s3, {{0, 1}, {2, -1}}));
        CHECK(poly(s3, {{1, 1}, {2, 1}}) * poly(s3, {{1, 1}, {2, 1}}) == poly(s3, {{2, 1}, {3, 2}}));
        CHECK_THROWS_AS(poly(s3, {{1, 1}}) + poly(Truncation::finite(4), {{1, 1}}), TruncationMismatch);
        CHECK_THROWS_AS(poly(s3, {{1, 1}}) + poly(Truncation::infinite(3), {{1, 1}}), TruncationMismatch);
        CHECK_THROWS_AS(Truncation::finite(0), DomainError);
    }

    TEST_CASE("derivative")
    {
        const auto t = Truncation::finite(5);
        CHECK(derivative(poly(t, {{1, 1}})) == poly(t, {{0, 1}}));
        CHECK(derivative(poly(t, {{1, 1}, {3, 1}})) == poly(t, {{0, 1}, {2, 3}}));
        Rng rng(11);
        for (int k = 0; k < 100; ++k) {
            const auto f = rand_series(rng, t, true), g = rand_series(rng, t, true);
            const auto fp = derivative(f);
            for (unsigned n = 1; n <= t.bound(); ++n)
                CHECK(fp[n - 1] == Rational(static_cast<long>(n)) * f[n]);
            CHECK(fp[t.bound()].is_zero());
            // Leibniz rule modulo x^s.
            const auto lhs = derivative(f * g), rhs = fp * g + f * derivative(g);
            for (unsigned n = 0; n + 1 <= t.bound(); ++n)
                CHECK(lhs[n] == rhs[n]);
        }
    }

    TEST_CASE("composition")
    {
        const auto t = Truncation::finite(5);
        Rng rng(12);
        const auto g = rand_gamma(rng, t);
        CHECK(compose(Series<Rational>::identity(t, Rational(0)), g) == g);
        CHECK(compose(g, Series<Rational>::identity(t, Rational(0))) == g);
        CHECK(compose(poly(t, {{2, 1}}), poly(t, {{1, 1}, {3, 1}})) == poly(t, {{2, 1}, {4, 2}}));
        CHECK_THROWS_AS(compose(g, poly(t, {{0, 1}, {1, 1}})), OrderViolation);
        for (int k = 0; k < 100; ++k) {
            const auto a = rand_series(rng, t), b = rand_series(rng, t);
            const auto d = compose(a, b);
            CHECK(d[1] == a[1] * b[1]);
            CHECK(d[2] == a[1] * b[2] + a[2] * b[1] * b[1]);
            CHECK(d[3] == a[1] * b[3] + Rational(2) * a[2] * b[1] * b[2] + a[3] * b[1] * b[1] * b[1]);
            CHECK(d == compose_via_multinomial(a, b));
        }
        const auto id = Series<Rational>::identity(t, Rational(0));
        CHECK(compose_via_multinomial(id, id) == id);
    }

    TEST_CASE("reciprocal")
    {
        const auto s3 = Truncation::finite(3), s2 = Truncation::finite(2);
        CHECK(reciprocal(poly(s3, {{0, 1}})) == poly(s3, {{0, 1}}));
        CHECK(reciprocal(poly(s3, {{0, 1}, {1, -1}})) == poly(s3, {{0, 1}, {1, 1}, {2, 1}, {3, 1}}));
        CHECK(reciprocal(poly(s2, {{0, 1}, {1, 2}})) == poly(s2, {{0, 1}, {1, -2}, {2, 4}}));
        CHECK_THROWS_AS(reciprocal(poly(s3, {{1, 1}})), NotInvertible);
        Rng rng(13);
        const auto t = Truncation::finite(8);
        for (int k = 0; k < 50; ++k) {
            auto f = rand_series(rng, t, true);
            f.set(0, rand_nonzero_q(rng));
            CHECK(f * reciprocal(f) == poly(t, {{0, 1}}));
        }
    }

    TEST_CASE("compositional inverse")
    {
        const auto s3 = Truncation::finite(3);
        CHECK(compositional_inverse(Gamma<Rational>(poly(s3, {{1, 1}, {2, 1}}))).series() ==
              poly(s3, {{1, 1}, {2, -1}, {3, 2}}));
        CHECK(compositional_inverse(Gamma<Rational>(poly(s3, {{1, 4}}))).series() == poly(s3, {{1, Rational(1, 4)}}));
        CHECK_THROWS_AS(Gamma<Rational>(poly(s3, {{2, 1}})), NotInvertible);
        CHECK_THROWS_AS(Gamma<Rational>(poly(s3, {{0, 1}, {1, 1}})), OrderViolation);
        Rng rng(14);
        const auto t = Truncation::finite(10);
        const Gamma<Rational> id = Gamma<Rational>::identity(t, Rational(0));
        for (int k = 0; k < 100; ++k) {
            const Gamma<Rational> f(rand_gamma(rng, t));
            const Gamma<Rational> g = compositional_inverse(f);
            CHECK(compose(f, g) == id);
            CHECK(compose(g, f) == id);
        }
    }

    TEST_CASE("group axioms on Gamma^8")
    {
        Rng rng(15);
        const auto t = Truncation::finite(8);
        for (int k = 0; k < 200; ++k) {
            const Gamma<Rational> a(rand_gamma(rng, t)), b(rand_gamma(rng, t)), c(rand_gamma(rng, t));
            CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
            const auto ab = compose(a, b);
            CHECK(ab[0].is_zero());
            CHECK(!ab[1].is_zero());
        }
    }

    TEST_CASE("projections")
    {
        const auto t5 = Truncation::finite(5);
        CHECK(project(poly(t5, {{1, 1}, {3, 1}, {5, 1}}), 2) == poly(Truncation::finite(2), {{1, 1}}));
        CHECK_THROWS_AS(project(poly(t5, {{1, 1}}), 6), RangeError);
        CHECK_THROWS_AS(project(poly(t5, {{1, 1}}), 0), RangeError);
        Rng rng(16);
        const auto t = Truncation::finite(10);
        for (int k = 0; k < 50; ++k) {
            const auto f = rand_gamma(rng, t), g = rand_gamma(rng, t);
            const unsigned q = rand_between(rng, 2, 9), r = rand_between(rng, 1, q);
            CHECK(project(project(f, q), r) == project(f, r));
            CHECK(project(compose(f, g), q) == compose(project(f, q), project(g, q)));
            CHECK(project(f * g, q) == project(f, q) * project(g, q));
        }
    }

    TEST_CASE("prefix stability of infinite-mode operations")
    {
        Rng rng(17);
        for (int k = 0; k < 30; ++k) {
            const unsigned N = rand_between(rng, 3, 10);
            const auto lo = Truncation::infinite(N), hi = Truncation::infinite(N + 5);
            const auto f = rand_gamma(rng, hi), g = rand_gamma(rng, hi);
            const auto fl = restrict_to(f, lo), gl = restrict_to(g, lo);
            CHECK(restrict_to(compose(f, g), lo) == compose(fl, gl));
            CHECK(restrict_to(f * g, lo) == fl * gl);
            CHECK(restrict_to(compositional_inverse(Gamma<Rational>(f)).series(), lo) ==
                  compositional_inverse(Gamma<Rational>(fl)).series());
        }
    }

    TEST_CASE("Gamma^s factors through linear maps")
    {
        Rng rng(18);
        const auto t = Truncation::finite(7);
        for (int k = 0; k < 50; ++k) {
            const auto f = rand_gamma(rng, t);
            const Rational c = f[1];
            const auto g = invert(c) * f;
            CHECK(g[1] == Rational(1));
            CHECK(compose(Series<Rational>::linear(t, c), g) == f);
        }
    }

    TEST_CASE("semicanonical series")
    {
        const auto t = Truncation::finite(7);
        const auto f = poly(t, {{1, 1}, {3, 1}});
        CHECK(is_semicanonical(f, 2));
        CHECK(is_semicanonical_by_commutation(f, 2));
        CHECK(compose(f, poly(t, {{1, -1}})) == -f);
        CHECK_FALSE(is_semicanonical(poly(t, {{1, 1}, {2, 1}}), 2));
        CHECK_FALSE(is_semicanonical_by_commutation(poly(t, {{1, 1}, {2, 1}}), 2));
        CHECK(is_semicanonical(poly(t, {{1, 3}}), 5));
        CHECK_THROWS_AS(is_semicanonical_by_commutation(f, 3), NoPrimitiveRoot);

        Rng rng(19);
        for (unsigned l = 2; l <= 4; ++l) {
            const CyclotomicElement like(l, Rational(0));
            std::vector<Series<CyclotomicElement>> members;
            for (int k = 0; k < 20; ++k) {
                Series<CyclotomicElement> g = Series<CyclotomicElement>::identity(t, like);
                const bool spoil = k % 2 == 1;
                for (unsigned j = 2; j <= t.bound(); ++j)
                    if (in_progression(j, l) || (spoil && rand_between(rng, 0, 1)))
                        g.set(j, rand_cyc(rng, l));
                CHECK(is_semicanonical(g, l) == is_semicanonical_by_commutation(g, l));
                if (is_semicanonical(g, l))
                    members.push_back(g);
            }
            Series<CyclotomicElement> a = Series<CyclotomicElement>::identity(t, like);
            a.set(l + 1, rand_cyc(rng, l));
            a.set(2 * l + 1, rand_cyc(rng, l));
            members.push_back(a);
            for (const auto &x : members)
                for (const auto &y : members) {
                    CHECK(is_semicanonical(compose(x, y), l));
                    CHECK(is_semicanonical(compositional_inverse(Gamma<CyclotomicElement>(x)).series(), l));
                }
        }
    }
}
