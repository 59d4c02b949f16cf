#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ajforge/comb.hpp"
#include "ajforge/series.hpp"

namespace ajforge {

/// A generator H of order l+1 with leading coefficient 1.
template <ScalarField S>
class Generator
{
public:
    explicit Generator(Series<S> H) : H_(std::move(H))
    {
        const unsigned ord = order(H_);
        if (ord == kInfiniteOrder)
            throw ZeroSeries("generator is the zero series");
        if (ord == 0)
            throw OrderViolation("generator must vanish at 0");
        if (H_[ord] != one_like(H_[ord]))
            throw DomainError("generator is not normalized (leading coefficient must be 1)");
        l_ = ord - 1;
    }

    const Series<S> &series() const { return H_; }
    unsigned l() const { return l_; }
    const Truncation &truncation() const { return H_.truncation(); }
    S like() const { return H_.like(); }

private:
    Series<S> H_;
    unsigned l_ = 0;
};

/// H / h_{l+1} together with the extracted leading coefficient.
template <ScalarField S>
std::pair<Generator<S>, S> normalize_generator(const Series<S> &H)
{
    const unsigned ord = order(H);
    if (ord == kInfiniteOrder)
        throw ZeroSeries("generator is the zero series");
    if (ord == 0)
        throw OrderViolation("generator must vanish at 0");
    auto inv = inverse(H[ord]);
    if (!inv)
        throw NotInvertible("leading coefficient of the generator is not invertible");
    return {Generator<S>(*inv * H), H[ord]};
}

/// (H∘Φ) − Φ′·H; zero exactly when Φ solves the equation.
template <ScalarField S>
Series<S> aj_residual(const Series<S> &H, const Series<S> &phi)
{
    return compose(H, phi) - derivative(phi) * H;
}

template <ScalarField S>
Series<S> aj_residual(const Generator<S> &gen, const Series<S> &phi)
{
    return aj_residual(gen.series(), phi);
}

/// Per-index residuals of the coefficient equations
///   sum_i h_i sum_{U_{n,i}} B prod c_j^{u_j} = sum_i h_i (n-i+1) c_{n-i+1}
/// for n = l+1, ..., s (n = l+1 first).
template <ScalarField S>
std::vector<std::pair<unsigned, S>> coefficient_system(const Generator<S> &gen, const Series<S> &phi)
{
    const Series<S> &H = gen.series();
    H.check(phi);
    const unsigned l = gen.l();
    const unsigned M = H.top();
    const S one = one_like(H.like());
    std::vector<std::vector<S>> pw(M + 1);
    for (unsigned j = 1; j <= M; ++j) {
        pw[j].push_back(one);
        for (unsigned e = 1; e <= M / j; ++e)
            pw[j].push_back(pw[j].back() * phi[j]);
    }
    std::vector<std::pair<unsigned, S>> rows;
    for (unsigned n = l + 1; n <= M; ++n) {
        S lhs = zero_like(one), rhs = zero_like(one);
        for (unsigned i = l + 1; i <= n; ++i) {
            if (is_zero(H[i]))
                continue;
            S inner = zero_like(one);
            for (const IndexVector &v : enumerate(n, i)) {
                S term = embed(Rational(v.weight), one);
                for (unsigned j = 1; j <= n; ++j)
                    if (v.at(j))
                        term = term * pw[j][v.at(j)];
                inner = inner + term;
            }
            lhs = lhs + H[i] * inner;
            rhs = rhs + H[i] * scale(phi[n - i + 1], Rational(static_cast<long>(n - i + 1)));
        }
        rows.emplace_back(n, lhs - rhs);
    }
    return rows;
}

/// (T′)^{-1}·(H∘T), the generator seen through the change of variable T.
template <ScalarField S>
Series<S> conjugate_generator(const Series<S> &H, const Gamma<S> &T)
{
    return reciprocal(derivative(T.series())) * compose(H, T.series());
}

/// x^{l+1} + δ x^{2l+1} at a given truncation.
template <ScalarField S>
Series<S> normal_generator(unsigned l, const S &delta, Truncation t)
{
    Series<S> H = Series<S>::monomial(t, l + 1, one_like(delta));
    if (2 * l + 1 <= t.bound())
        H.set(2 * l + 1, H[2 * l + 1] + delta);
    return H;
}

template <ScalarField S>
struct NormalFormData
{
    Gamma<S> T;
    S delta;
    unsigned l;
    /// The coefficients v_j of T that were fixed rather than solved for.
    std::map<unsigned, S> free_choices;
};

namespace detail {

/// Working truncation for a generator: finite s as is; an infinite series
/// at precision N is treated as a polynomial (zero above N) and solved at
/// the finite order N + l (at least 2l + 1) so every row up to N closes.
template <ScalarField S>
Truncation working_truncation(const Generator<S> &gen)
{
    const Truncation t = gen.truncation();
    if (t.is_finite())
        return t;
    const unsigned l = gen.l();
    return Truncation::finite(std::max(t.bound() + l, 2 * l + 1));
}

template <ScalarField S>
Series<S> finish(const Series<S> &f, Truncation original)
{
    return original.is_finite() ? f : restrict_to(f, original);
}

template <ScalarField S>
void check_overrides(const std::map<unsigned, S> &overrides, const std::map<unsigned, S> &free,
                     const char *what)
{
    for (const auto &[j, v] : overrides)
        if (!free.count(j))
            throw DomainError(std::string(what) + " index " + std::to_string(j) + " is not a free choice");
}

} // namespace detail

/// Computes T ∈ Γ^s_1 and δ with conjugate_generator(H, T) = x^{l+1} + δx^{2l+1}.
///
/// Row n of the conjugated equation determines v_{n-l} with factor n-2l-1;
/// the row n = 2l+1 determines δ instead and leaves v_{l+1} free, and for
/// finite s the last l coefficients are free as well. Free coefficients
/// default to 0 and may be overridden.
template <ScalarField S>
NormalFormData<S> normal_form(const Generator<S> &gen, const std::map<unsigned, S> &overrides = {})
{
    const unsigned l = gen.l();
    const Truncation orig = gen.truncation();
    const Truncation work = detail::working_truncation(gen);
    const unsigned M = work.bound();
    const Series<S> H = extend_to(gen.series(), work);
    const S zero = zero_like(H.like());

    std::map<unsigned, S> free;
    Series<S> T = Series<S>::identity(work, zero);
    S delta = zero;
    auto pick = [&](unsigned j) {
        auto it = overrides.find(j);
        S v = it == overrides.end() ? zero : it->second;
        T.set(j, v);
        if (orig.is_finite() || j <= orig.bound())
            free.emplace(j, v);
    };
    for (unsigned j = std::max(2u, M - l + 1); j <= M && l > 0; ++j)
        pick(j);

    for (unsigned n = l + 2; n <= M; ++n) {
        const unsigned idx = n - l;
        if (l > 0 && n == 2 * l + 1) {
            pick(idx);
            Series<S> Ht = normal_generator(l, zero, work);
            delta = (compose(H, T) - derivative(T) * Ht)[n];
            continue;
        }
        T.set(idx, zero);
        Series<S> Ht = normal_generator(l, delta, work);
        const S rest = (compose(H, T) - derivative(T) * Ht)[n];
        T.set(idx, div_rational(rest, Rational(static_cast<long>(n) - 2 * static_cast<long>(l) - 1)));
    }
    detail::check_overrides(overrides, free, "normal-form");
    return {Gamma<S>(detail::finish(T, orig)), delta, l, std::move(free)};
}

/// Second route to the same data: evaluates the index-set recurrence
///   (n-2l-1) v_{n-l} = sum_{Ū²_{n,l+1}} B prod v^u
///                      + sum_{i=l+2}^{n-1} h_i sum_{U_{n,i}} B prod v^u + h_n
///                      - δ (n-2l) v_{n-2l}
/// directly, never forming a composition.
template <ScalarField S>
NormalFormData<S> normal_form_by_index_sums(const Generator<S> &gen,
                                            const std::map<unsigned, S> &overrides = {})
{
    const unsigned l = gen.l();
    const Truncation orig = gen.truncation();
    const Truncation work = detail::working_truncation(gen);
    const unsigned M = work.bound();
    const Series<S> H = extend_to(gen.series(), work);
    const S zero = zero_like(H.like());
    const S one = one_like(zero);

    std::vector<S> v(M + 1, zero);
    v[1] = one;
    std::map<unsigned, S> free;
    auto pick = [&](unsigned j) {
        auto it = overrides.find(j);
        v[j] = it == overrides.end() ? zero : it->second;
        if (orig.is_finite() || j <= orig.bound())
            free.emplace(j, v[j]);
    };
    for (unsigned j = std::max(2u, M - l + 1); j <= M && l > 0; ++j)
        pick(j);

    auto weighted = [&](unsigned n, unsigned i, const FamilySelector &sel) {
        S acc = zero;
        for (const IndexVector &u : enumerate(n, i, sel)) {
            S term = embed(Rational(u.weight), one);
            for (unsigned j = 2; j <= n; ++j)
                if (u.at(j))
                    term = term * power(v[j], u.at(j));
            acc = acc + term;
        }
        return acc;
    };

    S delta = zero;
    for (unsigned n = l + 2; n <= M; ++n) {
        S rhs = weighted(n, l + 1, {FamilyKind::Bar, 1});
        for (unsigned i = l + 2; i < n; ++i)
            if (!is_zero(H[i]))
                rhs = rhs + H[i] * weighted(n, i, {});
        rhs = rhs + H[n];
        if (l > 0 && n == 2 * l + 1) {
            delta = rhs;
            pick(l + 1);
            continue;
        }
        if (l > 0 && n >= 2 * l + 2)
            rhs = rhs - scale(delta * v[n - 2 * l], Rational(static_cast<long>(n - 2 * l)));
        v[n - l] = div_rational(rhs, Rational(static_cast<long>(n) - 2 * static_cast<long>(l) - 1));
    }
    detail::check_overrides(overrides, free, "normal-form");
    Series<S> T(work, v, zero);
    return {Gamma<S>(detail::finish(T, orig)), delta, l, std::move(free)};
}

/// Parameters of a solution: c_1, c_{l+1} (when it is a parameter) and the
/// free tail c_{s-l+1..s} (finite s, l >= 1).
template <ScalarField S>
struct SolutionParams
{
    S c1;
    std::optional<S> c_lp1;
    std::vector<S> tail;

    friend bool operator==(const SolutionParams &, const SolutionParams &) = default;
};

template <ScalarField S>
struct AJSolution
{
    Gamma<S> phi;
    SolutionParams<S> params;
    /// Coefficients of the solution fixed rather than solved for (direct
    /// recurrence only).
    std::map<unsigned, S> free_choices;
};

/// K_2(y, t), ..., K_M(y, t) evaluated at y and t_n = t[n]; entries 0 and 1
/// are unused.
template <ScalarField S>
std::vector<S> evaluate_K(const std::vector<S> &t, const S &y, unsigned M)
{
    const S zero = zero_like(y);
    std::vector<S> K(M + 1, zero);
    const S y2y = y * y - y;
    auto tt = [&](unsigned n) { return n < t.size() ? t[n] : zero; };
    for (unsigned n = 2; n <= M; ++n) {
        S geo = zero, yj = one_like(y);
        for (unsigned j = 0; j + 2 <= n; ++j) {
            geo = geo + yj;
            yj = yj * y;
        }
        S acc = tt(n) * geo;
        for (unsigned i = 2; i < n; ++i) {
            if (is_zero(tt(i)))
                continue;
            S inner = zero;
            for (const IndexVector &u : enumerate(n, i)) {
                if (i < u.at(1) + 1)
                    throw DomainError("index vector with i - u_1 < 1 in the K recurrence");
                S term = embed(Rational(u.weight), y) * power(y, u.at(1)) * power(y2y, i - u.at(1) - 1);
                for (unsigned j = 2; j <= n - i + 1; ++j)
                    if (u.at(j))
                        term = term * power(K[j], u.at(j));
                inner = inner + term;
            }
            acc = acc + tt(i) * inner;
            acc = acc - scale(tt(i) * K[n - i + 1], Rational(static_cast<long>(n - i + 1)));
        }
        K[n] = div_rational(acc, Rational(static_cast<long>(n) - 1));
    }
    return K;
}

/// The solution with linear coefficient c_1 of an l = 0 equation:
/// c_n = (c_1^2 - c_1) K_n(c_1; h_2, ..., h_n).
template <ScalarField S>
AJSolution<S> solve_l0(const Generator<S> &gen, const S &c1)
{
    if (gen.l() != 0)
        throw DomainError("solve_l0 needs a generator of order 1");
    if (is_zero(c1))
        throw DomainError("linear coefficient must be nonzero");
    const Series<S> &H = gen.series();
    const unsigned M = H.top();
    const std::vector<S> K = evaluate_K(H.coeffs(), c1, M);
    Series<S> phi = Series<S>::linear(H.truncation(), c1);
    const S y2y = c1 * c1 - c1;
    for (unsigned n = 2; n <= M; ++n)
        phi.set(n, y2y * K[n]);
    return {Gamma<S>(std::move(phi)), {c1, std::nullopt, {}}, {}};
}

/// Same solution as T∘L_{c_1}∘T^{-1} with T from the normal form.
template <ScalarField S>
AJSolution<S> solve_l0_conjugation(const Generator<S> &gen, const S &c1)
{
    if (gen.l() != 0)
        throw DomainError("solve_l0_conjugation needs a generator of order 1");
    if (is_zero(c1))
        throw DomainError("linear coefficient must be nonzero");
    const Gamma<S> T = normal_form(gen).T;
    const Series<S> L = Series<S>::linear(gen.truncation(), c1);
    Series<S> phi = compose(compose(T.series(), L), compositional_inverse(T).series());
    return {Gamma<S>(std::move(phi)), {c1, std::nullopt, {}}, {}};
}

/// Q_{l+1}, Q_{2l+1}, ..., Q_{r_max·l+1} evaluated at (y, t); entry r holds
/// Q_{rl+1}. Works symbolically when S is a polynomial ring.
template <ScalarAlgebra S>
std::vector<S> q_values(unsigned l, unsigned r_max, const S &y, const S &t)
{
    if (l == 0)
        throw DomainError("Q polynomials need l >= 1");
    const S zero = zero_like(y);
    const S one = one_like(y);
    std::vector<S> Q(r_max + 1, zero);
    if (r_max >= 1)
        Q[1] = y;
    auto weighted = [&](unsigned n, unsigned i, FamilyKind kind, unsigned r) {
        S acc = zero;
        for (const IndexVector &u : enumerate(n, i, {kind, l})) {
            S term = embed(Rational(u.weight), one);
            for (unsigned j = 2; j <= n; ++j) {
                if (!u.at(j))
                    continue;
                if (!in_progression(j, l) || (j - 1) / l >= r)
                    throw DomainError("index vector outside the Q recurrence support");
                term = term * power(Q[(j - 1) / l], u.at(j));
            }
            acc = acc + term;
        }
        return acc;
    };
    for (unsigned r = 2; r <= r_max; ++r) {
        const unsigned n = (r + 1) * l + 1;
        S acc = weighted(n, l + 1, FamilyKind::Check, r);
        acc = acc + t * weighted(n, 2 * l + 1, FamilyKind::Tilde, r);
        acc = acc - scale(t * Q[r - 1], Rational(static_cast<long>((r - 1) * l + 1)));
        const long div = static_cast<long>((r - 1) * l);
        if (div == 0)
            throw DivisionByZero("Q recurrence divisor vanished");
        Q[r] = div_rational(acc, Rational(div));
    }
    return Q;
}

/// Symbolic table of Q_{rl+1}(y, t) in Q[y, t].
struct QPolyTable
{
    unsigned l;
    std::vector<QPoly> entries; // entries[r] = Q_{rl+1}; entries[0] unused
};

inline QPolyTable q_poly_table(unsigned l, unsigned r_max)
{
    return {l, q_values(l, r_max, QPoly::variable(2, 0), QPoly::variable(2, 1))};
}

/// S_1 solution x + c x^{l+1} + sum_{p>=2} Q_{pl+1}(c, δ) x^{pl+1} of the
/// normal-form equation.
template <ScalarField S>
AJSolution<S> solve_normalform_S1(unsigned l, const S &delta, const S &c_lp1, Truncation t)
{
    if (l == 0)
        throw DomainError("normal-form solutions need l >= 1");
    const unsigned M = t.bound();
    if (t.is_finite() && M <= 2 * l && !is_zero(delta))
        throw DomainError("delta must vanish when s <= 2l");
    Series<S> phi = Series<S>::identity(t, c_lp1);
    phi.set(l + 1, phi.coeff(l + 1) + c_lp1);
    const unsigned r_max = (M - 1) / l;
    if (r_max >= 2) {
        const std::vector<S> Q = q_values(l, r_max, c_lp1, delta);
        for (unsigned p = 2; p <= r_max; ++p)
            phi.set(p * l + 1, Q[p]);
    }
    return {Gamma<S>(std::move(phi)), {one_like(c_lp1), c_lp1, {}}, {}};
}

namespace detail {

inline bool has_lp1_param(unsigned l, Truncation t) { return l >= 1 && (!t.is_finite() || t.bound() >= 2 * l + 1); }
inline bool has_tail_param(unsigned l, Truncation t) { return l >= 1 && t.is_finite(); }

} // namespace detail

/// Solves the coefficient rows one by one. Row n fixes c_{n-l} with factor
/// (l+1)c_1^l - (n-l); the degenerate row n = 2l+1 must be consistent and
/// c_{l+1} comes from `seeds`, as do the last l coefficients for finite s.
template <ScalarField S>
AJSolution<S> solve_coefficient_rows(const Generator<S> &gen, const S &c1, const std::map<unsigned, S> &seeds)
{
    const unsigned l = gen.l();
    if (!is_root_of_unity(c1, l))
        throw DomainError(l == 0 ? "linear coefficient must be nonzero"
                                 : "linear coefficient is not an l-th root of unity");
    const Truncation orig = gen.truncation();
    const Truncation work = detail::working_truncation(gen);
    const unsigned M = work.bound();
    const Series<S> H = extend_to(gen.series(), work);
    const S zero = zero_like(c1);

    Series<S> phi = Series<S>::linear(work, c1);
    std::map<unsigned, S> free;
    auto pick = [&](unsigned j) {
        auto it = seeds.find(j);
        S v = it == seeds.end() ? zero : it->second;
        phi.set(j, v);
        if (orig.is_finite() || j <= orig.bound())
            free.emplace(j, v);
    };
    if (l > 0 && 2 * l + 1 <= M)
        pick(l + 1);
    for (unsigned j = std::max(2u, M - l + 1); j <= M && l > 0; ++j)
        pick(j);
    detail::check_overrides(seeds, free, "seed");

    const S lin = scale(power(c1, l), Rational(static_cast<long>(l) + 1));
    for (unsigned n = l + 2; n <= M; ++n) {
        const unsigned idx = n - l;
        const S factor = lin - embed(Rational(static_cast<long>(idx)), c1);
        if (is_zero(factor)) {
            const S rest = aj_residual(H, phi)[n];
            if (!is_zero(rest))
                throw ResidualNonzero("coefficient row " + std::to_string(n) + " is inconsistent");
            continue;
        }
        phi.set(idx, zero);
        const S rest = aj_residual(H, phi)[n];
        phi.set(idx, -(rest * invert(factor)));
    }
    SolutionParams<S> params{c1, std::nullopt, {}};
    if (detail::has_lp1_param(l, orig))
        params.c_lp1 = phi[l + 1];
    if (detail::has_tail_param(l, orig))
        for (unsigned j = orig.bound() - l + 1; j <= orig.bound(); ++j)
            params.tail.push_back(phi[j]);
    return {Gamma<S>(detail::finish(phi, orig)), std::move(params), std::move(free)};
}

/// The coefficient recurrence in the ranges where it closes: l <= 1, or
/// l >= 2 with finite s <= 2l.
template <ScalarField S>
AJSolution<S> solve_direct_recurrence(const Generator<S> &gen, const S &c1, const std::map<unsigned, S> &seeds = {})
{
    const unsigned l = gen.l();
    const Truncation t = gen.truncation();
    if (l >= 2 && (!t.is_finite() || t.bound() >= 2 * l + 1))
        throw RangeError("direct recurrence does not close for l >= 2 and s >= 2l+1; use the normal-form path");
    return solve_coefficient_rows(gen, c1, seeds);
}

/// The solution of the normal-form equation x^{l+1} + δx^{2l+1} with the
/// given parameters (l >= 1).
template <ScalarField S>
Series<S> assemble_normal_solution(unsigned l, const S &delta, Truncation t, const SolutionParams<S> &p)
{
    const S &c1 = p.c1;
    Series<S> phi = Series<S>::linear(t, c1);
    const unsigned M = t.bound();
    if (detail::has_lp1_param(l, t)) {
        const S y = invert(c1) * *p.c_lp1;
        phi.set(l + 1, *p.c_lp1);
        const unsigned r_max = (M - 1) / l;
        const std::vector<S> Q = q_values(l, r_max, y, delta);
        for (unsigned r = 2; r <= r_max; ++r)
            phi.set(r * l + 1, c1 * Q[r]);
    }
    if (detail::has_tail_param(l, t))
        for (unsigned k = 0; k < l; ++k) {
            const unsigned j = M - l + 1 + k;
            phi.set(j, phi[j] + p.tail[k]);
        }
    return phi;
}

/// Every solution, parametrized by c_1 (and c_{l+1}, tail for l >= 1).
template <ScalarField S>
AJSolution<S> solve_full(const Generator<S> &gen, const SolutionParams<S> &params,
                         const std::map<unsigned, S> &normal_form_overrides = {})
{
    const unsigned l = gen.l();
    const Truncation t = gen.truncation();
    const bool want_lp1 = detail::has_lp1_param(l, t);
    const bool want_tail = detail::has_tail_param(l, t);
    if (params.c_lp1.has_value() != want_lp1)
        throw ArityMismatch(want_lp1 ? "parameter c_{l+1} is required" : "parameter c_{l+1} is not used here");
    if (want_tail ? params.tail.size() != l : !params.tail.empty())
        throw ArityMismatch("tail must have exactly " + std::to_string(want_tail ? l : 0) + " entries");
    if (l == 0)
        return solve_l0(gen, params.c1);
    if (!is_root_of_unity(params.c1, l))
        throw DomainError("linear coefficient is not an l-th root of unity");

    const NormalFormData<S> nf = normal_form(gen, normal_form_overrides);
    const Series<S> hat = assemble_normal_solution(l, nf.delta, t, params);
    Series<S> phi = compose(compose(nf.T.series(), hat), compositional_inverse(nf.T).series());
    return {Gamma<S>(std::move(phi)), params, {}};
}

/// Prefix of a solution as a finite-order series.
template <ScalarField S>
Gamma<S> project_solution(const AJSolution<S> &sol, unsigned s)
{
    return Gamma<S>(project(sol.phi.series(), s));
}

} // namespace ajforge
