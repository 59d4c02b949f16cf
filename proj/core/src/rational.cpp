#include "ajforge/rational.hpp"

#include <cctype>

#include "ajforge/error.hpp"

namespace ajforge {

Rational::Rational(const Integer &num, const Integer &den)
{
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

namespace {

Integer parse_digits(std::string_view text, std::size_t offset, std::size_t &pos)
{
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw ParseError("expected digits", offset + pos);
    return Integer(std::string(text.substr(start, pos - start)));
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
        negative = text[pos++] == '-';
    Integer num = parse_digits(text, 0, pos);
    Integer den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_digits(text, 0, pos);
        if (den == 0)
            throw ParseError("zero denominator", pos - 1);
    }
    if (pos != text.size())
        throw ParseError("unexpected character in rational", pos);
    if (negative)
        num = -num;
    return Rational(num, den);
}

std::string Rational::to_string() const
{
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero())
        throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
}

Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::optional<Rational> inverse(const Rational &r)
{
    if (r.is_zero())
        return std::nullopt;
    return Rational(1) / r;
}

} // namespace ajforge
