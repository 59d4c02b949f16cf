#include "ajforge/io.hpp"

#include <cctype>
#include <functional>

namespace ajforge {

namespace {

struct Cursor
{
    std::string_view s;
    std::size_t base = 0; // offset of s inside the user's text
    std::size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eof()
    {
        skip_ws();
        return pos >= s.size();
    }
    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c)
    {
        if (peek() != c)
            return false;
        ++pos;
        return true;
    }
    bool accept_word(std::string_view w)
    {
        skip_ws();
        if (w.empty() || s.substr(pos, w.size()) != w)
            return false;
        pos += w.size();
        return true;
    }
    [[noreturn]] void fail(const std::string &what) const { throw ParseError(what, base + pos); }

    std::string_view digits()
    {
        skip_ws();
        const std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            fail("expected digits");
        return s.substr(start, pos - start);
    }

    unsigned exponent()
    {
        const std::size_t at = pos;
        auto d = digits();
        if (d.size() > 6)
            throw ParseError("exponent too large", base + at);
        return static_cast<unsigned>(std::stoul(std::string(d)));
    }

    Rational rational()
    {
        std::string text(digits());
        const std::size_t save = pos;
        if (accept('/')) {
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                pos = save;
                return Rational::parse(text);
            }
            const std::size_t at = pos;
            auto den = digits();
            if (Integer(std::string(den)) == 0)
                throw ParseError("zero denominator", base + at);
            text += "/";
            text += den;
        }
        return Rational::parse(text);
    }

    /// var ['^' k]; returns 1 when no exponent follows.
    unsigned power_of(std::string_view var)
    {
        if (!accept_word(var))
            fail("expected '" + std::string(var) + "'");
        if (accept('^'))
            return exponent();
        return 1;
    }

    bool at_word(std::string_view w)
    {
        skip_ws();
        return !w.empty() && s.substr(pos, w.size()) == w;
    }
};

template <class S>
using TermMap = std::map<unsigned, S>;

/// Shared sum-of-terms grammar. `coefficient` reads a parenthesised scalar
/// (cursor positioned after '('), `from_rational` lifts plain numbers.
template <class S>
TermMap<S> parse_sum(Cursor &cur, std::string_view var,
                     const std::function<S(Cursor &)> &paren_coefficient,
                     const std::function<S(const Rational &)> &from_rational)
{
    TermMap<S> out;
    if (cur.eof())
        cur.fail("empty expression");
    bool first = true;
    while (!cur.eof()) {
        bool negative = false;
        if (cur.accept('+'))
            negative = false;
        else if (cur.accept('-'))
            negative = true;
        else if (!first)
            cur.fail("expected '+' or '-'");
        first = false;

        S coeff = from_rational(Rational(1));
        unsigned k = 0;
        bool have_coeff = false;
        const char c = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = from_rational(cur.rational());
            have_coeff = true;
        } else if (c == '(' && paren_coefficient) {
            cur.accept('(');
            coeff = paren_coefficient(cur);
            if (!cur.accept(')'))
                cur.fail("expected ')'");
            have_coeff = true;
        }
        if (have_coeff) {
            if (cur.accept('*'))
                k = cur.power_of(var);
            else if (cur.at_word(var))
                k = cur.power_of(var);
        } else if (cur.at_word(var)) {
            k = cur.power_of(var);
        } else {
            cur.fail("expected a term");
        }
        if (negative)
            coeff = from_rational(Rational(-1)) * coeff;
        auto [it, fresh] = out.try_emplace(k, coeff);
        if (!fresh)
            it->second = it->second + coeff;
    }
    return out;
}

template <class S>
Series<S> to_series(const TermMap<S> &terms, Truncation t, const S &like)
{
    Series<S> f(t, like);
    for (const auto &[k, c] : terms)
        if (k <= t.bound())
            f.set(k, f[k] + c);
    return f;
}

} // namespace

std::map<unsigned, Rational> parse_rational_terms(std::string_view text, std::string_view var)
{
    Cursor cur{text};
    auto terms = parse_sum<Rational>(cur, var, nullptr, [](const Rational &q) { return q; });
    std::erase_if(terms, [](const auto &kv) { return kv.second.is_zero(); });
    return terms;
}

namespace {

CyclotomicElement cyclotomic_from_terms(const std::map<unsigned, Rational> &terms, unsigned m)
{
    unsigned top = terms.empty() ? 0 : terms.rbegin()->first;
    std::vector<Rational> coords(top + 1);
    for (const auto &[k, c] : terms)
        coords[k] = c;
    return CyclotomicElement(m, std::move(coords));
}

std::map<unsigned, Rational> inner_terms(Cursor &cur, std::string_view var)
{
    // Parse up to the matching ')' as a standalone expression.
    cur.skip_ws();
    const std::size_t start = cur.pos;
    const std::size_t close = cur.s.find(')', start);
    if (close == std::string_view::npos)
        cur.fail("expected ')'");
    Cursor inner{cur.s.substr(start, close - start), cur.base + start};
    auto terms = parse_sum<Rational>(inner, var, nullptr, [](const Rational &q) { return q; });
    cur.pos = close;
    return terms;
}

} // namespace

CyclotomicElement parse_cyclotomic(std::string_view text, unsigned m)
{
    return cyclotomic_from_terms(parse_rational_terms(text, "zeta"), m);
}

Series<Rational> parse_series(std::string_view text, Truncation t)
{
    Cursor cur{text};
    auto paren = [](Cursor &c) -> Rational {
        const std::size_t at = c.base + c.pos;
        auto terms = inner_terms(c, "zeta");
        Rational value;
        for (const auto &[k, q] : terms) {
            if (k != 0 && !q.is_zero())
                throw ParseError("irrational coefficient over Q", at);
            value += q;
        }
        return value;
    };
    auto terms = parse_sum<Rational>(cur, "x", paren, [](const Rational &q) { return q; });
    return to_series(terms, t, Rational(0));
}

Series<CyclotomicElement> parse_series(std::string_view text, Truncation t, const CyclotomicElement &like)
{
    const unsigned m = like.modulus();
    Cursor cur{text};
    auto paren = [m](Cursor &c) { return cyclotomic_from_terms(inner_terms(c, "zeta"), m); };
    auto lift = [m](const Rational &q) { return CyclotomicElement(m, q); };
    auto terms = parse_sum<CyclotomicElement>(cur, "x", paren, lift);
    return to_series(terms, t, zero_like(like));
}

std::string format_scalar(const Rational &x) { return x.to_string(); }
std::string format_scalar(const CyclotomicElement &x) { return x.to_string(); }
std::string format_scalar(const QPoly &x) { return x.to_string(); }

} // namespace ajforge
