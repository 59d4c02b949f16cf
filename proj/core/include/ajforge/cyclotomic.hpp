#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ajforge/polynomial.hpp"
#include "ajforge/rational.hpp"

namespace ajforge {

/// Shared data for arithmetic in Q(zeta_m): the modulus polynomial and a
/// reduction table for z^k, k < 2·phi(m) - 1.
struct CyclotomicContext
{
    unsigned m;
    unsigned degree;
    UPoly modulus;
    std::vector<std::vector<Rational>> reduction;

    static std::shared_ptr<const CyclotomicContext> get(unsigned m);
};

/// Element of the cyclotomic field Q(zeta_m) in the power basis
/// 1, zeta, ..., zeta^{phi(m)-1}.
class CyclotomicElement
{
public:
    CyclotomicElement();
    CyclotomicElement(unsigned m, const Rational &value);
    CyclotomicElement(unsigned m, std::vector<Rational> coords);

    static CyclotomicElement zeta(unsigned m);

    unsigned modulus() const { return ctx_->m; }
    const CyclotomicContext &context() const { return *ctx_; }
    const std::vector<Rational> &coords() const { return coords_; }
    bool is_zero() const;
    /// The rational value when the element lies in Q.
    std::optional<Rational> as_rational() const;

    CyclotomicElement &operator+=(const CyclotomicElement &o);
    CyclotomicElement &operator-=(const CyclotomicElement &o);
    CyclotomicElement &operator*=(const CyclotomicElement &o);

    friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement &b) { return a += b; }
    friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement &b) { return a -= b; }
    friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement &b) { return a *= b; }
    friend CyclotomicElement operator-(const CyclotomicElement &a);
    friend bool operator==(const CyclotomicElement &a, const CyclotomicElement &b);

    /// Polynomial in "zeta", e.g. "1 + 2*zeta".
    std::string to_string() const;

private:
    void check(const CyclotomicElement &o) const;

    std::shared_ptr<const CyclotomicContext> ctx_;
    std::vector<Rational> coords_;
};

inline CyclotomicElement zero_like(const CyclotomicElement &x) { return CyclotomicElement(x.modulus(), Rational(0)); }
inline CyclotomicElement one_like(const CyclotomicElement &x) { return CyclotomicElement(x.modulus(), Rational(1)); }
inline CyclotomicElement embed(const Rational &q, const CyclotomicElement &x) { return CyclotomicElement(x.modulus(), q); }
inline bool is_zero(const CyclotomicElement &x) { return x.is_zero(); }
std::optional<CyclotomicElement> inverse(const CyclotomicElement &x);

} // namespace ajforge
