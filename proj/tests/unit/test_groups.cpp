#include "doctest.h"

#include "support/sample.hpp"

using namespace ajforge;
using namespace ajforge::testing;

namespace {

using Q = Rational;
using SQ = Series<Rational>;

SQ poly(Truncation t, std::initializer_list<std::pair<unsigned, Rational>> terms)
{
    SQ f(t, Q(0));
    for (const auto &[k, c] : terms)
        f.set(k, f.coeff(k) + c);
    return f;
}

template <class S, class Draw>
DiamondElement<S> rand_diamond(Rng &rng, unsigned l, Truncation t, const S &like, Draw draw)
{
    auto d = diamond_identity(l, t, like);
    const auto roots = l == 0 ? std::vector<S>{} : roots_of_unity(l, like);
    if (l == 0) {
        do
            d.c1 = draw();
        while (is_zero(d.c1));
    } else {
        d.c1 = roots[rand_between(rng, 0, static_cast<unsigned>(roots.size()) - 1)];
    }
    for (auto &x : d.rest)
        x = draw();
    return d;
}

std::string show(const SQ &f) { return format_series(f); }

} // namespace

TEST_SUITE("groups")
{
    TEST_CASE("parameter-group law")
    {
        const auto t = Truncation::finite(7);
        Rng rng(41);
        for (unsigned l = 1; l <= 3; ++l) {
            const auto e = diamond_identity(l, t, Q(0));
            for (int k = 0; k < 50; ++k) {
                const auto a = rand_diamond(rng, l, t, Q(0), [&] { return rand_q(rng); });
                const auto b = rand_diamond(rng, l, t, Q(0), [&] { return rand_q(rng); });
                const auto c = rand_diamond(rng, l, t, Q(0), [&] { return rand_q(rng); });
                CHECK(diamond_compose(a, e) == a);
                CHECK(diamond_compose(e, a) == a);
                CHECK(diamond_compose(diamond_compose(a, b), c) == diamond_compose(a, diamond_compose(b, c)));
                CHECK(diamond_compose(a, diamond_inverse(a)) == e);
                CHECK(diamond_compose(diamond_inverse(a), a) == e);
            }
        }
        // (-1, 1) and (1, 1) at j = 4 do not commute.
        const auto s5 = Truncation::finite(5);
        auto a = diamond_identity(2, s5, Q(0)), b = a;
        REQUIRE(a.exponents == std::vector<unsigned>{3, 4, 5});
        a.c1 = Q(-1);
        a.rest = {Q(0), Q(1), Q(0)};
        b.rest = {Q(0), Q(1), Q(0)};
        CHECK(diamond_compose(a, b).rest[1] == Q(0));
        CHECK(diamond_compose(b, a).rest[1] == Q(2));
        CHECK_THROWS_AS(diamond_compose(a, diamond_identity(2, Truncation::finite(6), Q(0))), ContextMismatch);
    }

    TEST_CASE("parameter shapes")
    {
        CHECK(diamond_shape(0, Truncation::finite(4)).first == DiamondVariant::Units);
        CHECK(diamond_shape(2, Truncation::infinite(9)).second == std::vector<unsigned>{3});
        CHECK(diamond_shape(2, Truncation::finite(5)).second == std::vector<unsigned>{3, 4, 5});
        CHECK(diamond_shape(2, Truncation::finite(5)).first == DiamondVariant::Bar);
        CHECK(diamond_shape(2, Truncation::finite(4)).second == std::vector<unsigned>{3, 4});
        CHECK(diamond_shape(2, Truncation::finite(4)).first == DiamondVariant::Hat);
        CHECK(diamond_shape(3, Truncation::finite(4)).second == std::vector<unsigned>{2, 3, 4});
    }

    TEST_CASE("solutions map homomorphically onto the parameter group")
    {
        Rng rng(42);
        for (int k = 0; k < 120; ++k) {
            const unsigned l = rand_between(rng, 0, 3);
            const unsigned s = l == 0 ? rand_between(rng, 1, 8) : rand_between(rng, 2 * l, 10);
            const auto t = k % 4 == 0 ? Truncation::infinite(s) : Truncation::finite(s);
            const Generator<Q> gen(rand_generator_q(rng, l, t));
            const auto nf = normal_form(gen);
            const auto draw = [&] { return rand_q(rng); };
            const auto da = rand_diamond(rng, l, t, Q(0), draw), db = rand_diamond(rng, l, t, Q(0), draw);
            const auto a = solve_full(gen, to_solution_params(da)).phi;
            const auto b = solve_full(gen, to_solution_params(db)).phi;
            CHECK(params_of_solution(a.series(), gen, nf) == da);
            const auto ab = compose(a, b).series();
            CHECK(params_of_solution(ab, gen, nf) == diamond_compose(da, db));
            CHECK(params_of_solution(compositional_inverse(a).series(), gen, nf) == diamond_inverse(da));
            CHECK(params_of_solution(SQ::identity(t, Q(0)), gen, nf) == diamond_identity(l, t, Q(0)));
        }
    }

    TEST_CASE("the raw parameter map is not a homomorphism below s = 2l")
    {
        // Cross terms c_j d_k land at j + k - 1 <= s when s < 2l.
        const auto t = Truncation::finite(4);
        const Generator<Q> gen(poly(t, {{4, 1}}));
        const auto nf = normal_form(gen);
        auto da = diamond_identity(3, t, Q(0));
        da.rest = {Q(1), Q(0), Q(0)};
        const auto a = solve_full(gen, to_solution_params(da)).phi;
        CHECK(a.series() == poly(t, {{1, 1}, {2, 1}}));
        const auto sq = params_of_solution(compose(a, a).series(), gen, nf);
        CHECK_FALSE(sq == diamond_compose(da, da));
        CHECK(sq.rest == std::vector<Q>{Q(2), Q(2), Q(1)});
    }

    TEST_CASE("non-solutions are rejected")
    {
        const auto t = Truncation::finite(5);
        const Generator<Q> gen(poly(t, {{3, 1}}));
        const auto nf = normal_form(gen);
        CHECK_THROWS_AS(params_of_solution(poly(t, {{1, 1}, {2, 1}}), gen, nf), NotASolverSeries);
        CHECK_THROWS_AS(params_of_solution(poly(t, {{1, 2}}), gen, nf), NotASolverSeries);
        CHECK_THROWS_AS(params_of_solution(poly(t, {{2, 1}}), gen, nf), NotASolverSeries);
    }

    TEST_CASE("semidirect decomposition")
    {
        const auto s3 = Truncation::finite(3);
        const auto [c, g] = decompose_semidirect(poly(s3, {{3, 1}}), poly(s3, {{1, -1}, {2, 1}}));
        CHECK(c == Q(-1));
        CHECK(g == poly(s3, {{1, 1}, {2, -1}}));
        CHECK_THROWS_AS(decompose_semidirect(poly(s3, {{2, 1}}), poly(s3, {{1, -1}, {2, 1}})), ResidualNonzero);

        // The split exists exactly when L_{c_1} is itself a solution.
        Rng rng(43);
        int split = 0;
        for (int k = 0; k < 60; ++k) {
            const unsigned l = rand_between(rng, 1, 3);
            const auto t = Truncation::finite(rand_between(rng, l + 1, 9));
            const Generator<Q> gen(k % 3 ? rand_generator_q(rng, l, t) : normal_generator(l, rand_q(rng), t));
            const auto d = rand_diamond(rng, l, t, Q(0), [&] { return rand_q(rng); });
            const auto phi = solve_full(gen, to_solution_params(d)).phi.series();
            const auto L = SQ::linear(t, phi[1]);
            if (aj_residual(gen.series(), L).is_zero()) {
                const auto [c1, rest] = decompose_semidirect(gen.series(), phi);
                CHECK(compose(L, rest) == phi);
                CHECK(rest[1] == Q(1));
                ++split;
            } else {
                CHECK_THROWS_AS(decompose_semidirect(gen.series(), phi), ResidualNonzero);
            }
        }
        CHECK(split > 10);
    }

    TEST_CASE("splitting checks on the worked examples")
    {
        const std::function<std::string(const SQ &)> shower = show;
        auto run = [&](unsigned l, Truncation t, const SQ &H, const std::string &claim) {
            const Generator<Q> gen(H);
            Rng rng(44);
            std::vector<SQ> G, Hsub;
            const auto nf = normal_form(gen);
            for (int k = 0; k < 30; ++k) {
                const auto d = rand_diamond(rng, l, t, Q(0), [&] { return rand_q(rng); });
                G.push_back(solve_full(gen, to_solution_params(d)).phi.series());
                Hsub.push_back(conjugate(SQ::linear(t, d.c1), compositional_inverse(nf.T)));
            }
            GroupOps<SQ> ops{[](const SQ &a, const SQ &b) { return compose(a, b); },
                             [](const SQ &a) { return compositional_inverse(Gamma<Q>(a)).series(); },
                             SQ::identity(t, Q(0))};
            const std::function<SQ(const SQ &)> proj = [&](const SQ &g) {
                return conjugate(SQ::linear(t, g[1]), compositional_inverse(nf.T));
            };
            return splitting_check(G, Hsub, proj, ops, claim, shower);
        };
        const auto s3 = Truncation::finite(3);
        const auto x3 = run(2, s3, poly(s3, {{3, 1}}), "semidirect-not-direct");
        CHECK(x3.holds());
        REQUIRE(x3.witness.has_value());
        CHECK_FALSE(compose(x3.witness->first, x3.witness->second) ==
                    compose(x3.witness->second, x3.witness->first));
        CHECK_FALSE(run(2, s3, poly(s3, {{3, 1}}), "direct").holds());

        const auto s6 = Truncation::finite(6);
        CHECK(run(0, s6, poly(s6, {{1, 1}, {2, 1}}), "direct").holds());
        CHECK(run(1, s6, poly(s6, {{2, 1}, {4, 3}}), "direct").holds());
    }

    TEST_CASE("commutativity probe")
    {
        const auto t = Truncation::finite(3);
        const std::vector<SQ> sample{SQ::identity(t, Q(0)), poly(t, {{1, -1}}), poly(t, {{1, 1}, {2, 1}}),
                                     poly(t, {{1, 1}, {3, 1}})};
        const std::function<SQ(const SQ &, const SQ &)> op = [](const SQ &a, const SQ &b) { return compose(a, b); };
        const auto w = commutativity_probe(sample, op);
        REQUIRE(w.has_value());
        CHECK(w->first == poly(t, {{1, -1}}));
        CHECK(w->second == poly(t, {{1, 1}, {2, 1}}));
        CHECK_FALSE(commutativity_probe(std::vector<SQ>{sample[0], sample[1], sample[3]}, op).has_value());
    }

    TEST_CASE("commutativity of the parameter groups")
    {
        auto check_field = [](unsigned l, const auto &like, auto draw) {
            using S = std::decay_t<decltype(like)>;
            const auto roots = roots_of_unity(l, like);
            Rng rng(45 + l);
            std::vector<GammaLL<S>> sample;
            for (const auto &c : roots)
                for (int k = 0; k < 3; ++k)
                    sample.push_back({l, c, draw(rng)});
            for (const auto &a : sample)
                for (const auto &b : sample) {
                    const auto ab = gamma_ll_compose(a, b);
                    CHECK(ab.as_diamond() == diamond_compose(a.as_diamond(), b.as_diamond()));
                    CHECK(ab.series() == gamma_ll_compose(b, a).series());
                }
            for (const auto &a : sample)
                CHECK(GammaLL<S>::from_series(l, a.series()).as_diamond() == a.as_diamond());

            // Finite truncations: commutative exactly when E_l is trivial.
            for (unsigned s : {2 * l, 2 * l + 1, 2 * l + 3}) {
                const auto t = Truncation::finite(s);
                std::vector<DiamondElement<S>> elems;
                for (int k = 0; k < 12; ++k)
                    elems.push_back(rand_diamond(rng, l, t, like, [&] { return draw(rng); }));
                for (const auto &c : roots) {
                    auto e = diamond_identity(l, t, like);
                    e.c1 = c;
                    elems.push_back(e);
                    e.rest.back() = one_like(like);
                    elems.push_back(e);
                }
                const std::function<DiamondElement<S>(const DiamondElement<S> &, const DiamondElement<S> &)> op =
                    [](const auto &a, const auto &b) { return diamond_compose(a, b); };
                CHECK(commutativity_probe(elems, op).has_value() == (roots.size() > 1));
            }
        };
        for (unsigned l = 1; l <= 6; ++l) {
            check_field(l, Q(0), [](Rng &rng) { return rand_q(rng); });
            check_field(l, CyclotomicElement(l, Q(0)), [l](Rng &rng) { return rand_cyc(rng, l); });
        }
    }
}
