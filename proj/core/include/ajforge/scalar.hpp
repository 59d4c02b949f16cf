#pragma once

#include <concepts>
#include <optional>
#include <vector>

#include "ajforge/cyclotomic.hpp"
#include "ajforge/error.hpp"
#include "ajforge/polynomial.hpp"
#include "ajforge/rational.hpp"

namespace ajforge {

/// Commutative Q-algebra contract shared by every coefficient type.
///
/// Constants are produced relative to an existing element (`like`) so that
/// context-carrying scalars (cyclotomic modulus, polynomial arity) stay
/// consistent.
template <class S>
concept ScalarAlgebra = std::regular<S> && requires(const S &a, const S &b, const Rational &q) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { zero_like(a) } -> std::same_as<S>;
    { one_like(a) } -> std::same_as<S>;
    { embed(q, a) } -> std::same_as<S>;
    { is_zero(a) } -> std::same_as<bool>;
};

/// Scalar algebras that are fields: every nonzero element has an inverse.
template <class S>
concept ScalarField = ScalarAlgebra<S> && requires(const S &a) {
    { inverse(a) } -> std::same_as<std::optional<S>>;
};

template <ScalarAlgebra S>
S div_rational(const S &x, const Rational &q)
{
    if (q.is_zero())
        throw DivisionByZero("division of a scalar by zero");
    return x * embed(Rational(1) / q, x);
}

template <ScalarAlgebra S>
S scale(const S &x, const Rational &q)
{
    return x * embed(q, x);
}

template <ScalarAlgebra S>
S power(const S &x, unsigned long n)
{
    S result = one_like(x);
    S base = x;
    while (n) {
        if (n & 1)
            result = result * base;
        n >>= 1;
        if (n)
            base = base * base;
    }
    return result;
}

/// Inverse or NotInvertible.
template <ScalarField S>
S invert(const S &x)
{
    auto inv = inverse(x);
    if (!inv)
        throw NotInvertible("scalar has no multiplicative inverse");
    return *inv;
}

/// Evaluates a polynomial at a point in any scalar algebra.
template <ScalarAlgebra S>
S evaluate_as(const QPoly &p, const std::vector<S> &point, const S &like)
{
    if (point.size() != p.arity())
        throw ArityMismatch("evaluation point has wrong dimension");
    S acc = zero_like(like);
    for (const auto &[e, c] : p.terms()) {
        S t = embed(c, like);
        for (unsigned k = 0; k < p.arity(); ++k)
            t = t * power(point[k], e[k]);
        acc = acc + t;
    }
    return acc;
}

/// All solutions of z^l = 1 in the field of `like`, starting with 1.
std::vector<Rational> roots_of_unity(unsigned l, const Rational &like);
std::vector<CyclotomicElement> roots_of_unity(unsigned l, const CyclotomicElement &like);

/// True when c^l = 1 (for l = 0 only nonzero c is required).
template <ScalarAlgebra S>
bool is_root_of_unity(const S &c, unsigned l)
{
    if (l == 0)
        return !is_zero(c);
    return power(c, l) == one_like(c);
}

/// A root of unity of exact order l in the field of `like`, if any.
template <ScalarField S>
std::optional<S> primitive_root_of_unity(unsigned l, const S &like)
{
    if (l == 0)
        throw DomainError("root of unity order must be positive");
    for (const S &c : roots_of_unity(l, like)) {
        bool primitive = true;
        for (unsigned k = 1; k < l && primitive; ++k)
            if (l % k == 0 && power(c, k) == one_like(c))
                primitive = false;
        if (primitive)
            return c;
    }
    return std::nullopt;
}

} // namespace ajforge
