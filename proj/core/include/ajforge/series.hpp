#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ajforge/comb.hpp"
#include "ajforge/error.hpp"
#include "ajforge/scalar.hpp"

namespace ajforge {

/// Finite truncation order s (arithmetic mod x^{s+1}), or an infinite series
/// observed through a working precision N.
class Truncation
{
public:
    enum class Kind { Finite, Infinite };

    static Truncation finite(unsigned s) { return Truncation(Kind::Finite, s); }
    static Truncation infinite(unsigned precision) { return Truncation(Kind::Infinite, precision); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    /// s for finite truncations, N for infinite ones.
    unsigned bound() const { return bound_; }
    /// Same kind, different bound.
    Truncation with_bound(unsigned b) const { return Truncation(kind_, b); }

    std::string to_string() const
    {
        return is_finite() ? "s=" + std::to_string(bound_) : "inf@N=" + std::to_string(bound_);
    }

    friend bool operator==(const Truncation &, const Truncation &) = default;

private:
    Truncation(Kind k, unsigned b) : kind_(k), bound_(b)
    {
        if (b == 0)
            throw DomainError("truncation bound must be positive");
    }

    Kind kind_;
    unsigned bound_;
};

inline constexpr unsigned kInfiniteOrder = std::numeric_limits<unsigned>::max();

/// Dense truncated power series c_0 + c_1 x + ... + c_M x^M, M = bound.
template <ScalarAlgebra S>
class Series
{
public:
    Series(Truncation t, const S &like) : t_(t), c_(t.bound() + 1, zero_like(like)) {}

    /// Coefficients beyond the truncation are dropped.
    Series(Truncation t, std::vector<S> coeffs, const S &like) : Series(t, like)
    {
        for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k)
            c_[k] = std::move(coeffs[k]);
    }

    static Series monomial(Truncation t, unsigned k, const S &c)
    {
        Series r(t, c);
        if (k <= t.bound())
            r.c_[k] = c;
        return r;
    }
    static Series linear(Truncation t, const S &c) { return monomial(t, 1, c); }
    static Series identity(Truncation t, const S &like) { return monomial(t, 1, one_like(like)); }

    const Truncation &truncation() const { return t_; }
    unsigned top() const { return t_.bound(); }
    const std::vector<S> &coeffs() const { return c_; }
    S like() const { return zero_like(c_[0]); }

    const S &operator[](unsigned k) const { return c_.at(k); }
    S coeff(unsigned k) const { return k < c_.size() ? c_[k] : zero_like(c_[0]); }
    void set(unsigned k, S v)
    {
        if (k < c_.size())
            c_[k] = std::move(v);
    }

    bool is_zero() const
    {
        for (const auto &c : c_)
            if (!ajforge::is_zero(c))
                return false;
        return true;
    }

    Series &operator+=(const Series &o)
    {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k)
            c_[k] = c_[k] + o.c_[k];
        return *this;
    }
    Series &operator-=(const Series &o)
    {
        check(o);
        for (std::size_t k = 0; k < c_.size(); ++k)
            c_[k] = c_[k] - o.c_[k];
        return *this;
    }
    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend Series operator-(Series a)
    {
        for (auto &c : a.c_)
            c = -c;
        return a;
    }
    friend Series operator*(const S &k, Series a)
    {
        for (auto &c : a.c_)
            c = k * c;
        return a;
    }

    friend Series operator*(const Series &a, const Series &b)
    {
        a.check(b);
        Series r(a.t_, a.like());
        const unsigned M = a.top();
        for (unsigned p = 0; p <= M; ++p) {
            if (ajforge::is_zero(a.c_[p]))
                continue;
            for (unsigned q = 0; p + q <= M; ++q)
                if (!ajforge::is_zero(b.c_[q]))
                    r.c_[p + q] = r.c_[p + q] + a.c_[p] * b.c_[q];
        }
        return r;
    }

    friend bool operator==(const Series &a, const Series &b) { return a.t_ == b.t_ && a.c_ == b.c_; }

    void check(const Series &o) const
    {
        if (!(t_ == o.t_))
            throw TruncationMismatch("series with truncations " + t_.to_string() + " and " +
                                     o.t_.to_string());
    }

private:
    Truncation t_;
    std::vector<S> c_;
};

/// Least index with a nonzero coefficient, kInfiniteOrder for zero.
template <ScalarAlgebra S>
unsigned order(const Series<S> &f)
{
    for (unsigned k = 0; k <= f.top(); ++k)
        if (!is_zero(f[k]))
            return k;
    return kInfiniteOrder;
}

/// Formal derivative at the same truncation; the top coefficient becomes 0.
template <ScalarAlgebra S>
Series<S> derivative(const Series<S> &f)
{
    Series<S> r(f.truncation(), f.like());
    for (unsigned k = 0; k < f.top(); ++k)
        r.set(k, scale(f[k + 1], Rational(static_cast<long>(k) + 1)));
    return r;
}

/// f∘g by Horner's scheme, reduced mod x^{M+1}.
template <ScalarAlgebra S>
Series<S> compose(const Series<S> &f, const Series<S> &g)
{
    f.check(g);
    if (!is_zero(g[0]))
        throw OrderViolation("inner series of a substitution must have order >= 1");
    const unsigned M = f.top();
    Series<S> acc(f.truncation(), f.like());
    for (unsigned k = M + 1; k-- > 0;) {
        acc = acc * g;
        acc.set(0, acc[0] + f[k]);
    }
    return acc;
}

/// f∘g by summing a_i · B · prod b_j^{u_j} over U_{n,i}; an independent check
/// of compose.
template <ScalarAlgebra S>
Series<S> compose_via_multinomial(const Series<S> &f, const Series<S> &g)
{
    f.check(g);
    if (!is_zero(g[0]))
        throw OrderViolation("inner series of a substitution must have order >= 1");
    const unsigned M = f.top();
    const S one = one_like(f.like());
    // pw[j][e] = b_j^e
    std::vector<std::vector<S>> pw(M + 1);
    for (unsigned j = 1; j <= M; ++j) {
        pw[j].push_back(one);
        for (unsigned e = 1; e <= M / j; ++e)
            pw[j].push_back(pw[j].back() * g[j]);
    }
    Series<S> d(f.truncation(), f.like());
    d.set(0, f[0]);
    for (unsigned n = 1; n <= M; ++n) {
        S dn = zero_like(one);
        for (unsigned i = 1; i <= n; ++i) {
            if (is_zero(f[i]))
                continue;
            S inner = zero_like(one);
            for (const IndexVector &v : enumerate(n, i)) {
                S term = embed(Rational(v.weight), one);
                for (unsigned j = 1; j <= n; ++j)
                    if (v.at(j))
                        term = term * pw[j][v.at(j)];
                inner = inner + term;
            }
            dn = dn + f[i] * inner;
        }
        d.set(n, dn);
    }
    return d;
}

/// Multiplicative inverse; needs an invertible constant term.
template <ScalarField S>
Series<S> reciprocal(const Series<S> &f)
{
    auto inv0 = inverse(f[0]);
    if (!inv0)
        throw NotInvertible("constant term of the series is not invertible");
    Series<S> g(f.truncation(), f.like());
    g.set(0, *inv0);
    for (unsigned n = 1; n <= f.top(); ++n) {
        S acc = zero_like(*inv0);
        for (unsigned k = 1; k <= n; ++k)
            acc = acc + f[k] * g[n - k];
        g.set(n, -(acc * *inv0));
    }
    return g;
}

/// A series of order 1 with invertible linear coefficient.
template <ScalarField S>
class Gamma
{
public:
    explicit Gamma(Series<S> f) : f_(std::move(f))
    {
        if (!is_zero(f_[0]))
            throw OrderViolation("group element must have zero constant term");
        if (f_.top() >= 1 && !inverse(f_[1]))
            throw NotInvertible("group element needs an invertible linear coefficient");
    }

    static Gamma identity(Truncation t, const S &like) { return Gamma(Series<S>::identity(t, like)); }
    static Gamma linear(Truncation t, const S &c) { return Gamma(Series<S>::linear(t, c)); }

    const Series<S> &series() const { return f_; }
    operator const Series<S> &() const { return f_; }
    const S &operator[](unsigned k) const { return f_[k]; }
    unsigned top() const { return f_.top(); }
    const Truncation &truncation() const { return f_.truncation(); }

    friend bool operator==(const Gamma &a, const Gamma &b) { return a.f_ == b.f_; }

private:
    Series<S> f_;
};

template <ScalarField S>
Gamma<S> compose(const Gamma<S> &f, const Gamma<S> &g)
{
    return Gamma<S>(compose(f.series(), g.series()));
}

/// Compositional inverse, solved coefficient by coefficient.
template <ScalarField S>
Gamma<S> compositional_inverse(const Gamma<S> &f)
{
    const S c1inv = invert(f[1]);
    Series<S> g = Series<S>::linear(f.truncation(), c1inv);
    for (unsigned n = 2; n <= f.top(); ++n) {
        // With g_n = 0 the n-th coefficient of f∘g misses exactly c_1·g_n.
        const S e = compose(f.series(), g)[n];
        g.set(n, -(e * c1inv));
    }
    return Gamma<S>(std::move(g));
}

/// Conjugate T^{-1}∘f∘T.
template <ScalarField S>
Series<S> conjugate(const Series<S> &f, const Gamma<S> &T)
{
    return compose(compose(compositional_inverse(T).series(), f), T.series());
}

/// Prefix copy as a finite series of order s.
template <ScalarAlgebra S>
Series<S> project(const Series<S> &f, unsigned s)
{
    if (s == 0 || s > f.top())
        throw RangeError("cannot project " + f.truncation().to_string() + " to s=" + std::to_string(s));
    return Series<S>(Truncation::finite(s), std::vector<S>(f.coeffs().begin(), f.coeffs().begin() + s + 1),
                     f.like());
}

/// Re-expresses f under another truncation with bound not above f's.
template <ScalarAlgebra S>
Series<S> restrict_to(const Series<S> &f, Truncation t)
{
    if (t.bound() > f.top())
        throw RangeError("cannot restrict " + f.truncation().to_string() + " to " + t.to_string());
    return Series<S>(t, std::vector<S>(f.coeffs().begin(), f.coeffs().begin() + t.bound() + 1), f.like());
}

/// Zero-padding extension to a larger bound (used for exact finite data).
template <ScalarAlgebra S>
Series<S> extend_to(const Series<S> &f, Truncation t)
{
    return Series<S>(t, f.coeffs(), f.like());
}

/// Coefficient test: c_j = 0 whenever j is not ≡ 1 mod l.
template <ScalarAlgebra S>
bool is_semicanonical(const Series<S> &f, unsigned l)
{
    if (l == 0)
        throw DomainError("semicanonical forms need l >= 1");
    for (unsigned j = 0; j <= f.top(); ++j)
        if (!in_progression(j, l) && !is_zero(f[j]))
            return false;
    return true;
}

/// Commutation test: f∘L_c = L_c∘f for a primitive l-th root of unity c in
/// the field of f's coefficients.
template <ScalarField S>
bool is_semicanonical_by_commutation(const Series<S> &f, unsigned l)
{
    auto c = primitive_root_of_unity(l, f.like());
    if (!c)
        throw NoPrimitiveRoot("coefficient field has no primitive root of unity of order " +
                              std::to_string(l));
    const Series<S> L = Series<S>::linear(f.truncation(), *c);
    return compose(f, L) == compose(L, f);
}

} // namespace ajforge
