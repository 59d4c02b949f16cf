#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ajforge {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper around GMP's mpq_class; every operation leaves the
/// value canonical, so structural equality is numeric equality.
class Rational
{
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const Integer &value) : q_(value) {}
    Rational(const Integer &num, const Integer &den);
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    /// Parses "p" or "p/q" (optional leading sign, decimal digits only).
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "p/q", with "/q" omitted when q = 1.
    std::string to_string() const;

    Rational &operator+=(const Rational &o) { q_ += o.q_; return *this; }
    Rational &operator-=(const Rational &o) { q_ -= o.q_; return *this; }
    Rational &operator*=(const Rational &o) { q_ *= o.q_; return *this; }
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
    friend Rational operator-(const Rational &a)
    {
        Rational r;
        r.q_ = -a.q_;
        return r;
    }

    friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream &operator<<(std::ostream &os, const Rational &r)
    {
        return os << r.to_string();
    }

    const mpq_class &raw() const { return q_; }

private:
    mpq_class q_;
};

Integer factorial(unsigned long n);

// Scalar-algebra hooks (see scalar.hpp).
inline Rational zero_like(const Rational &) { return Rational(0); }
inline Rational one_like(const Rational &) { return Rational(1); }
inline Rational embed(const Rational &q, const Rational &) { return q; }
inline bool is_zero(const Rational &r) { return r.is_zero(); }
std::optional<Rational> inverse(const Rational &r);

} // namespace ajforge
