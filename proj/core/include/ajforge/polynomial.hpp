#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ajforge/rational.hpp"

namespace ajforge {

/// Dense univariate polynomial over the rationals, lowest degree first.
/// The zero polynomial has no stored coefficients.
class UPoly
{
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly monomial(std::size_t degree, const Rational &c = Rational(1));

    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational> &coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const Rational &leading() const { return c_.back(); }

    Rational evaluate(const Rational &z) const;

    UPoly &operator+=(const UPoly &o);
    UPoly &operator-=(const UPoly &o);
    friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
    friend UPoly operator*(const UPoly &a, const UPoly &b);
    friend UPoly operator*(UPoly a, const Rational &q);
    friend UPoly operator-(UPoly a) { return a * Rational(-1); }
    friend bool operator==(const UPoly &, const UPoly &) = default;

    std::string to_string(const std::string &var = "z") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b);

/// Returns (g, s) with g = gcd(a, b) monic and s·a ≡ g (mod b).
std::pair<UPoly, UPoly> half_gcdext(const UPoly &a, const UPoly &b);

/// The m-th cyclotomic polynomial, built by exact division of z^m - 1.
UPoly cyclotomic_polynomial(unsigned m);

/// Euler's totient.
unsigned euler_phi(unsigned m);

/// Sparse polynomial over the rationals in at most two indeterminates.
///
/// The arity (number of indeterminates, 0..2) is part of the value; mixing
/// arities in arithmetic is an error. Zero terms are never stored.
class QPoly
{
public:
    using Exponent = std::array<unsigned, 2>;
    using Terms = std::map<Exponent, Rational>;

    QPoly() = default;
    explicit QPoly(unsigned arity);
    QPoly(unsigned arity, const Rational &constant);

    static QPoly variable(unsigned arity, unsigned index);
    static QPoly monomial(unsigned arity, Exponent e, const Rational &c);

    unsigned arity() const { return arity_; }
    const Terms &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(Exponent e) const;
    /// Total degree, or -1 for zero.
    long total_degree() const;
    bool is_constant() const;

    QPoly &operator+=(const QPoly &o);
    QPoly &operator-=(const QPoly &o);
    QPoly &operator*=(const QPoly &o);
    QPoly &operator*=(const Rational &q);

    friend QPoly operator+(QPoly a, const QPoly &b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly &b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly &b) { return a *= b; }
    friend QPoly operator*(QPoly a, const Rational &q) { return a *= q; }
    friend QPoly operator-(QPoly a) { return a *= Rational(-1); }
    friend bool operator==(const QPoly &a, const QPoly &b);

    Rational evaluate(const std::vector<Rational> &point) const;

    /// Replaces indeterminate k by images[k]; all images share one arity,
    /// which becomes the arity of the result.
    QPoly substitute(const std::vector<QPoly> &images) const;

    /// Human-readable form, e.g. "3/2*y^2 + t*y".
    std::string to_string(const std::vector<std::string> &names) const;
    std::string to_string() const;

private:
    void check_arity(const QPoly &o) const;
    void check_exponent(const Exponent &e) const;

    unsigned arity_ = 0;
    Terms terms_;
};

inline QPoly zero_like(const QPoly &p) { return QPoly(p.arity()); }
inline QPoly one_like(const QPoly &p) { return QPoly(p.arity(), Rational(1)); }
inline QPoly embed(const Rational &q, const QPoly &p) { return QPoly(p.arity(), q); }
inline bool is_zero(const QPoly &p) { return p.is_zero(); }

/// Default variable names for an arity: {}, {"t"}, {"y", "t"}.
std::vector<std::string> default_names(unsigned arity);

} // namespace ajforge
