#include "ajforge/scalar.hpp"

namespace ajforge {

std::vector<Rational> roots_of_unity(unsigned l, const Rational &)
{
    if (l == 0)
        throw DomainError("root of unity order must be positive");
    if (l % 2 == 0)
        return {Rational(1), Rational(-1)};
    return {Rational(1)};
}

std::vector<CyclotomicElement> roots_of_unity(unsigned l, const CyclotomicElement &like)
{
    if (l == 0)
        throw DomainError("root of unity order must be positive");
    // Every root of unity in Q(zeta_m) has the form ±zeta^k.
    const unsigned m = like.modulus();
    const CyclotomicElement one = one_like(like);
    const CyclotomicElement z = CyclotomicElement::zeta(m);
    std::vector<CyclotomicElement> out;
    auto add = [&](const CyclotomicElement &c) {
        if (power(c, l) != one)
            return;
        for (const auto &seen : out)
            if (seen == c)
                return;
        out.push_back(c);
    };
    CyclotomicElement zk = one;
    for (unsigned k = 0; k < m; ++k) {
        add(zk);
        zk = zk * z;
    }
    zk = one;
    for (unsigned k = 0; k < m; ++k) {
        add(-zk);
        zk = zk * z;
    }
    return out;
}

} // namespace ajforge
