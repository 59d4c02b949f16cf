#include "doctest.h"

#include <algorithm>

#include "support/sample.hpp"

using namespace ajforge;
using namespace ajforge::testing;

TEST_SUITE("scalars")
{
    TEST_CASE("rational arithmetic is exact and canonical")
    {
        CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
        CHECK(Rational(2, 4).to_string() == "1/2");
        CHECK(Rational(3, 2) * Rational(5, 2) == Rational(15, 4));
        CHECK(Rational(-6, -4).to_string() == "3/2");
        CHECK(Rational(4, -2).to_string() == "-2");
        CHECK(Rational(0, 7).to_string() == "0");
        CHECK(Rational(0, 7).denominator() == 1);
        CHECK(Rational::parse("-12/8") == Rational(-3, 2));
        CHECK(Rational::parse("+5") == Rational(5));
    }

    TEST_CASE("division by zero is reported by name")
    {
        try {
            (void)(Rational(1) / Rational(0));
            FAIL("no throw");
        } catch (const Error &e) {
            CHECK(e.name() == "division-by-zero");
        }
        CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
        CHECK_FALSE(inverse(Rational(0)).has_value());
        CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
        CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    }

    TEST_CASE("cyclotomic polynomials")
    {
        CHECK(cyclotomic_polynomial(1) == UPoly({Rational(-1), Rational(1)}));
        CHECK(cyclotomic_polynomial(2) == UPoly({Rational(1), Rational(1)}));
        CHECK(cyclotomic_polynomial(4) == UPoly({Rational(1), Rational(0), Rational(1)}));
        CHECK(cyclotomic_polynomial(3) == UPoly({Rational(1), Rational(1), Rational(1)}));
        for (unsigned m = 1; m <= 30; ++m) {
            const UPoly p = cyclotomic_polynomial(m);
            CHECK(p.degree() == static_cast<long>(euler_phi(m)));
            CHECK(p.leading() == Rational(1));
            // z^m - 1 is divisible by Phi_m.
            const UPoly zm = UPoly::monomial(m) - UPoly::monomial(0);
            CHECK(divmod(zm, p).second.is_zero());
        }
    }

    TEST_CASE("zeta is a primitive m-th root")
    {
        for (unsigned m = 1; m <= 12; ++m) {
            const CyclotomicElement z = CyclotomicElement::zeta(m);
            const CyclotomicElement one(m, Rational(1));
            CHECK(power(z, m) == one);
            for (unsigned k = 1; k < m; ++k)
                CHECK_FALSE(power(z, k) == one);
        }
    }

    TEST_CASE("roots of unity")
    {
        auto q2 = roots_of_unity(2, Rational(0));
        CHECK(q2 == std::vector<Rational>{Rational(1), Rational(-1)});
        CHECK(roots_of_unity(3, Rational(0)) == std::vector<Rational>{Rational(1)});
        for (unsigned l = 1; l <= 8; ++l)
            CHECK(roots_of_unity(l, Rational(0)).size() == (l % 2 == 0 ? 2u : 1u));

        const CyclotomicElement like3(3, Rational(0));
        auto e3 = roots_of_unity(3, like3);
        REQUIRE(e3.size() == 3);
        const CyclotomicElement z = CyclotomicElement::zeta(3);
        for (const auto &c : {one_like(like3), z, z * z})
            CHECK(std::find(e3.begin(), e3.end(), c) != e3.end());

        for (unsigned l = 1; l <= 8; ++l) {
            const CyclotomicElement like(l, Rational(0));
            auto roots = roots_of_unity(l, like);
            CHECK(roots.size() == l);
            CHECK(roots.front() == one_like(like));
            for (const auto &a : roots) {
                CHECK(power(a, l) == one_like(like));
                for (const auto &b : roots)
                    CHECK(std::find(roots.begin(), roots.end(), a * b) != roots.end());
                CHECK(std::find(roots.begin(), roots.end(), invert(a)) != roots.end());
            }
        }
        // Divisibly compatible field: Q(zeta_6) holds all cube roots.
        CHECK(roots_of_unity(3, CyclotomicElement(6, Rational(0))).size() == 3);
        CHECK(roots_of_unity(4, CyclotomicElement(6, Rational(0))).size() == 2);
        CHECK(primitive_root_of_unity(3, Rational(0)) == std::nullopt);
        CHECK(primitive_root_of_unity(2, Rational(0)) == Rational(-1));
    }

    TEST_CASE("polynomial arithmetic")
    {
        const QPoly y = QPoly::variable(2, 0), t = QPoly::variable(2, 1);
        const QPoly p = y * y + t * y;
        CHECK(p.evaluate({Rational(2), Rational(3)}) == Rational(10));
        CHECK(y * y == QPoly::monomial(2, {2, 0}, Rational(1)));
        const QPoly q = p + (-(t * y));
        CHECK(q == y * y);
        CHECK(q.terms().size() == 1);
        CHECK_THROWS_AS(QPoly::variable(1, 0) + y, ArityMismatch);
        CHECK(p.to_string() == "y^2 + y*t");
        CHECK(p.substitute({QPoly::variable(1, 0), QPoly(1, Rational(1))}) ==
              QPoly::monomial(1, {2, 0}, Rational(1)) + QPoly::variable(1, 0));
    }

    template <class S, class Draw>
    void ring_axioms(Draw draw, int cases)
    {
        for (int k = 0; k < cases; ++k) {
            const S a = draw(), b = draw(), c = draw();
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + zero_like(a) == a);
            CHECK(a * one_like(a) == a);
            CHECK(a - a == zero_like(a));
        }
    }

    TEST_CASE("ring axioms on random elements")
    {
        Rng rng(101);
        ring_axioms<Rational>([&] { return rand_q(rng, 50, 30); }, 1000);
        unsigned m = 7;
        ring_axioms<CyclotomicElement>([&] { return rand_cyc(rng, m); }, 1000);
        for (m = 1; m <= 12; ++m)
            ring_axioms<CyclotomicElement>([&] { return rand_cyc(rng, m); }, 30);
        ring_axioms<QPoly>(
            [&] {
                QPoly p(2);
                for (int k = 0; k < 3; ++k)
                    p += QPoly::monomial(2, {rand_between(rng, 0, 2), rand_between(rng, 0, 2)}, rand_q(rng));
                return p;
            },
            1000);
    }

    TEST_CASE("characteristic zero and exact division by integers")
    {
        Rng rng(7);
        for (int k = 0; k < 50; ++k) {
            const CyclotomicElement x = rand_cyc(rng, 5);
            const Rational q = rand_q(rng);
            for (long n = 1; n <= 50; ++n) {
                CHECK(div_rational(scale(x, Rational(n)), Rational(n)) == x);
                CHECK(div_rational(scale(q, Rational(n)), Rational(n)) == q);
                CHECK_FALSE(embed(Rational(n), x).is_zero());
            }
        }
    }

    TEST_CASE("cyclotomic inverse")
    {
        Rng rng(3);
        for (unsigned m = 1; m <= 12; ++m)
            for (int k = 0; k < 20; ++k) {
                const CyclotomicElement x = rand_cyc(rng, m);
                if (x.is_zero())
                    continue;
                CHECK(x * invert(x) == one_like(x));
            }
        const CyclotomicElement z = CyclotomicElement::zeta(3);
        CHECK(invert(one_like(z) + z) == -z);
        CHECK_THROWS_AS(z + CyclotomicElement::zeta(4), ContextMismatch);
    }
}
