#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ajforge/aj.hpp"

namespace ajforge {

/// Which parameter group a solution set is modelled on.
enum class DiamondVariant
{
    Units,   // l = 0: (k*, ·)
    Diamond, // s infinite: E_l × k, entry at j = l+1
    Bar,     // finite s >= 2l+1: E_l × k^{l+1}, entries at l+1 and s-l+1..s
    Hat,     // finite s <= 2l: E_l × k^l, entries at s-l+1..s
};

std::string to_string(DiamondVariant v);

/// Element (c_1, (c_j)_j) of a parameter group. The law is
///   (c_1, c_j) · (d_1, d_j) = (c_1 d_1, c_1 d_j + d_1^j c_j)
/// componentwise over the exponents j.
template <ScalarField S>
struct DiamondElement
{
    DiamondVariant variant;
    unsigned l;
    std::vector<unsigned> exponents;
    S c1;
    std::vector<S> rest;

    friend bool operator==(const DiamondElement &a, const DiamondElement &b)
    {
        return a.variant == b.variant && a.l == b.l && a.exponents == b.exponents && a.c1 == b.c1 &&
               a.rest == b.rest;
    }
};

/// Variant and exponent set for an equation with parameter l at truncation t.
inline std::pair<DiamondVariant, std::vector<unsigned>> diamond_shape(unsigned l, Truncation t)
{
    if (l == 0)
        return {DiamondVariant::Units, {}};
    if (!t.is_finite())
        return {DiamondVariant::Diamond, {l + 1}};
    const unsigned s = t.bound();
    std::vector<unsigned> js;
    DiamondVariant v = DiamondVariant::Hat;
    if (s >= 2 * l + 1) {
        v = DiamondVariant::Bar;
        js.push_back(l + 1);
    }
    for (unsigned j = s - l + 1; j <= s; ++j)
        js.push_back(j);
    return {v, js};
}

template <ScalarField S>
DiamondElement<S> diamond_identity(unsigned l, Truncation t, const S &like)
{
    auto [v, js] = diamond_shape(l, t);
    return {v, l, js, one_like(like), std::vector<S>(js.size(), zero_like(like))};
}

template <ScalarField S>
DiamondElement<S> diamond_compose(const DiamondElement<S> &a, const DiamondElement<S> &b)
{
    if (a.variant != b.variant || a.l != b.l || a.exponents != b.exponents)
        throw ContextMismatch("parameter-group elements from different groups");
    DiamondElement<S> r = a;
    r.c1 = a.c1 * b.c1;
    for (std::size_t k = 0; k < a.exponents.size(); ++k)
        r.rest[k] = a.c1 * b.rest[k] + power(b.c1, a.exponents[k]) * a.rest[k];
    return r;
}

template <ScalarField S>
DiamondElement<S> diamond_inverse(const DiamondElement<S> &a)
{
    DiamondElement<S> r = a;
    r.c1 = invert(a.c1);
    for (std::size_t k = 0; k < a.exponents.size(); ++k)
        r.rest[k] = -(power(r.c1, a.exponents[k] + 1) * a.rest[k]);
    return r;
}

/// The series c_1 x + c_{l+1} x^{l+1} at order l+1.
template <ScalarField S>
struct GammaLL
{
    unsigned l;
    S c1;
    S c_lp1;

    Series<S> series() const
    {
        Series<S> f = Series<S>::linear(Truncation::finite(l + 1), c1);
        f.set(l + 1, c_lp1);
        return f;
    }
    static GammaLL from_series(unsigned l, const Series<S> &f) { return {l, f[1], f[l + 1]}; }
    DiamondElement<S> as_diamond() const
    {
        return {DiamondVariant::Diamond, l, {l + 1}, c1, {c_lp1}};
    }
};

template <ScalarField S>
GammaLL<S> gamma_ll_compose(const GammaLL<S> &a, const GammaLL<S> &b)
{
    return GammaLL<S>::from_series(a.l, compose(a.series(), b.series()));
}

/// Parameters of a solution of the equation with generator `gen`, read off
/// T^{-1}∘Φ∘T and confirmed by rebuilding the solution.
template <ScalarField S>
DiamondElement<S> params_of_solution(const Series<S> &phi, const Generator<S> &gen,
                                     const NormalFormData<S> &nf)
{
    const unsigned l = gen.l();
    const Truncation t = gen.truncation();
    auto [variant, js] = diamond_shape(l, t);
    if (!is_zero(phi[0]) || !inverse(phi[1]))
        throw NotASolverSeries("series is not an invertible substitution");
    const Series<S> hat = l == 0 ? phi : conjugate(phi, nf.T);
    SolutionParams<S> p{hat[1], std::nullopt, {}};
    if (detail::has_lp1_param(l, t))
        p.c_lp1 = hat[l + 1];
    if (detail::has_tail_param(l, t)) {
        // The tail coefficient at the index ≡ 1 mod l also carries c_1·Q.
        SolutionParams<S> no_tail = p;
        no_tail.tail.assign(l, zero_like(hat[1]));
        if (!is_root_of_unity(p.c1, l))
            throw NotASolverSeries("linear coefficient is not an l-th root of unity");
        const Series<S> base = assemble_normal_solution(l, nf.delta, t, no_tail);
        for (unsigned j = t.bound() - l + 1; j <= t.bound(); ++j)
            p.tail.push_back(hat[j] - base[j]);
    }
    try {
        if (l >= 1 && !is_root_of_unity(p.c1, l))
            throw NotASolverSeries("linear coefficient is not an l-th root of unity");
        const AJSolution<S> rebuilt = l == 0 ? solve_l0(gen, p.c1) : [&] {
            const Series<S> h = assemble_normal_solution(l, nf.delta, t, p);
            return AJSolution<S>{Gamma<S>(compose(compose(nf.T.series(), h),
                                                  compositional_inverse(nf.T).series())),
                                 p, {}};
        }();
        if (!(rebuilt.phi.series() == phi))
            throw NotASolverSeries("series is not produced by the solver for these parameters");
    } catch (const NotASolverSeries &) {
        throw;
    } catch (const Error &e) {
        throw NotASolverSeries(e.what());
    }
    std::vector<S> rest;
    if (p.c_lp1)
        rest.push_back(*p.c_lp1);
    rest.insert(rest.end(), p.tail.begin(), p.tail.end());
    return {variant, l, js, p.c1, rest};
}

/// Inverse of params_of_solution.
template <ScalarField S>
SolutionParams<S> to_solution_params(const DiamondElement<S> &d)
{
    SolutionParams<S> p{d.c1, std::nullopt, {}};
    std::size_t k = 0;
    if (d.variant == DiamondVariant::Diamond || d.variant == DiamondVariant::Bar)
        p.c_lp1 = d.rest[k++];
    for (; k < d.rest.size(); ++k)
        p.tail.push_back(d.rest[k]);
    return p;
}

/// Φ = L_{c_1}∘g with g = L_{c_1^{-1}}∘Φ of linear coefficient 1; both
/// factors must solve the equation.
template <ScalarField S>
std::pair<S, Series<S>> decompose_semidirect(const Series<S> &H, const Series<S> &phi)
{
    if (!aj_residual(H, phi).is_zero())
        throw ResidualNonzero("series does not solve the equation");
    const S c1 = phi[1];
    const Series<S> g = invert(c1) * phi;
    if (!aj_residual(H, g).is_zero())
        throw ResidualNonzero("normalized factor does not solve the equation");
    return {c1, g};
}

/// Outcome of a sampled group-theoretic check.
template <class T>
struct GroupReport
{
    std::string claim;
    std::size_t sampled = 0;
    std::vector<std::string> violations;
    std::optional<std::pair<T, T>> witness;
    bool holds() const { return violations.empty(); }
};

/// Operations a sampled group needs.
template <class T>
struct GroupOps
{
    std::function<T(const T &, const T &)> compose;
    std::function<T(const T &)> inverse;
    T identity;
};

/// Checks G = H·ker φ with H ∩ ker φ = {1} on samples, and whether the
/// factors commute elementwise (direct product). `claim` names the expected
/// outcome: "semidirect" or "direct"; a direct claim that fails to commute
/// is a violation, and the non-commuting pair is returned as witness.
template <class T>
GroupReport<T> splitting_check(const std::vector<T> &G, const std::vector<T> &Hsub,
                               const std::function<T(const T &)> &phi, const GroupOps<T> &ops,
                               const std::string &claim, const std::function<std::string(const T &)> &show)
{
    GroupReport<T> rep;
    rep.claim = claim;
    std::vector<T> kernel;
    for (const T &g : G) {
        ++rep.sampled;
        const T h = phi(g);
        if (!(phi(h) == h))
            rep.violations.push_back("phi is not the identity on its image at " + show(g));
        const T k = ops.compose(ops.inverse(h), g);
        if (!(phi(k) == ops.identity))
            rep.violations.push_back("h^{-1}g not in ker phi at " + show(g));
        if (!(ops.compose(h, k) == g))
            rep.violations.push_back("factorization does not recompose at " + show(g));
        kernel.push_back(k);
    }
    for (const T &h : Hsub) {
        if (!(phi(h) == h))
            rep.violations.push_back("phi does not fix subgroup element " + show(h));
        if (phi(h) == ops.identity && !(h == ops.identity))
            rep.violations.push_back("subgroup meets the kernel at " + show(h));
    }
    std::optional<std::pair<T, T>> noncommuting;
    for (const T &h : Hsub) {
        for (const T &k : kernel)
            if (!(ops.compose(h, k) == ops.compose(k, h))) {
                noncommuting = std::make_pair(h, k);
                break;
            }
        if (noncommuting)
            break;
    }
    rep.witness = noncommuting;
    if (claim == "direct" && noncommuting)
        rep.violations.push_back("factors do not commute: " + show(noncommuting->first) + " and " +
                                 show(noncommuting->second));
    if (claim == "semidirect-not-direct" && !noncommuting)
        rep.violations.push_back("factors commute on the sample");
    return rep;
}

/// First non-commuting pair of the sample in index order, if any.
template <class T>
std::optional<std::pair<T, T>> commutativity_probe(const std::vector<T> &sample,
                                                   const std::function<T(const T &, const T &)> &compose_op)
{
    for (std::size_t a = 0; a < sample.size(); ++a)
        for (std::size_t b = a + 1; b < sample.size(); ++b)
            if (!(compose_op(sample[a], sample[b]) == compose_op(sample[b], sample[a])))
                return std::make_pair(sample[a], sample[b]);
    return std::nullopt;
}

} // namespace ajforge
