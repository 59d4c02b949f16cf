#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ajforge/series.hpp"

namespace ajforge {

// Text forms. A series literal is a sum of terms
//   term := coeff ['*'] 'x' ['^' k] | coeff | 'x' ['^' k]
//   coeff := rational | '(' scalar ')'
// and cyclotomic scalars are polynomials in "zeta" with rational
// coefficients. Whitespace is ignored.

/// Sum of rational multiples of powers of `var`, keyed by exponent.
std::map<unsigned, Rational> parse_rational_terms(std::string_view text, std::string_view var);

CyclotomicElement parse_cyclotomic(std::string_view text, unsigned m);

Series<Rational> parse_series(std::string_view text, Truncation t);
Series<CyclotomicElement> parse_series(std::string_view text, Truncation t, const CyclotomicElement &like);

std::string format_scalar(const Rational &x);
std::string format_scalar(const CyclotomicElement &x);
std::string format_scalar(const QPoly &x);

/// Rational value of a scalar when it has one.
inline std::optional<Rational> rational_value(const Rational &x) { return x; }
inline std::optional<Rational> rational_value(const CyclotomicElement &x) { return x.as_rational(); }
inline std::optional<Rational> rational_value(const QPoly &x)
{
    if (!x.is_constant())
        return std::nullopt;
    return x.coeff({0, 0});
}

/// Human form such as "-x + 5x^2 + 7x^3"; "0" for the zero series.
template <ScalarAlgebra S>
std::string format_series(const Series<S> &f, const std::string &var = "x")
{
    std::string out;
    for (unsigned k = 0; k <= f.top(); ++k) {
        const S &c = f[k];
        if (is_zero(c))
            continue;
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string piece;
        bool negative = false;
        if (auto q = rational_value(c)) {
            negative = q->sign() < 0;
            const Rational mag = negative ? -*q : *q;
            if (k == 0)
                piece = mag.to_string();
            else if (mag == Rational(1))
                piece = mono;
            else
                piece = mag.to_string() + (mag.is_integer() ? "" : "*") + mono;
        } else {
            piece = "(" + format_scalar(c) + ")" + (k == 0 ? "" : "*" + mono);
        }
        if (out.empty())
            out = negative ? "-" + piece : piece;
        else
            out += (negative ? " - " : " + ") + piece;
    }
    return out.empty() ? "0" : out;
}

} // namespace ajforge
