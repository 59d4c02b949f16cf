#include "ajforge/polynomial.hpp"

#include <sstream>

#include "ajforge/error.hpp"

namespace ajforge {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(std::size_t degree, const Rational &c)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UPoly(std::move(v));
}

void UPoly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational UPoly::evaluate(const Rational &z) const
{
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

UPoly &UPoly::operator+=(const UPoly &o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] += o.c_[k];
    trim();
    return *this;
}

UPoly &UPoly::operator-=(const UPoly &o)
{
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k)
        c_[k] -= o.c_[k];
    trim();
    return *this;
}

UPoly operator*(const UPoly &a, const UPoly &b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly operator*(UPoly a, const Rational &q)
{
    for (auto &c : a.c_)
        c *= q;
    a.trim();
    return a;
}

std::string UPoly::to_string(const std::string &var) const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational &c = c_[k];
        if (c.is_zero())
            continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (k == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1))
            os << mag << (mag.is_integer() ? "" : "*");
        os << var;
        if (k > 1)
            os << '^' << k;
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly &a, const UPoly &b)
{
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    if (r.size() <= db)
        return {UPoly(), a};
    std::vector<Rational> q(r.size() - db);
    const Rational lead_inv = Rational(1) / b.leading();
    for (std::size_t k = r.size(); k-- > db;) {
        if (r[k].is_zero())
            continue;
        Rational f = r[k] * lead_inv;
        q[k - db] = f;
        for (std::size_t j = 0; j <= db; ++j)
            r[k - db + j] -= f * b.coeffs()[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

std::pair<UPoly, UPoly> half_gcdext(const UPoly &a, const UPoly &b)
{
    UPoly r0 = a, r1 = b;
    UPoly s0({Rational(1)}), s1;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UPoly s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.is_zero())
        return {r0, s0};
    const Rational inv = Rational(1) / r0.leading();
    return {r0 * inv, s0 * inv};
}

UPoly cyclotomic_polynomial(unsigned m)
{
    if (m == 0)
        throw DomainError("cyclotomic polynomial needs m >= 1");
    UPoly num = UPoly::monomial(m) - UPoly({Rational(1)});
    for (unsigned d = 1; d < m; ++d)
        if (m % d == 0)
            num = divmod(num, cyclotomic_polynomial(d)).first;
    return num;
}

unsigned euler_phi(unsigned m)
{
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p)
            continue;
        while (m % p == 0)
            m /= p;
        result -= result / p;
    }
    if (m > 1)
        result -= result / m;
    return result;
}

// ---------------------------------------------------------------------------

QPoly::QPoly(unsigned arity) : arity_(arity)
{
    if (arity > 2)
        throw ArityMismatch("at most two indeterminates are supported");
}

QPoly::QPoly(unsigned arity, const Rational &constant) : QPoly(arity)
{
    if (!constant.is_zero())
        terms_.emplace(Exponent{0, 0}, constant);
}

QPoly QPoly::variable(unsigned arity, unsigned index)
{
    if (index >= arity)
        throw ArityMismatch("variable index out of range");
    Exponent e{0, 0};
    e[index] = 1;
    return monomial(arity, e, Rational(1));
}

QPoly QPoly::monomial(unsigned arity, Exponent e, const Rational &c)
{
    QPoly p(arity);
    p.check_exponent(e);
    if (!c.is_zero())
        p.terms_.emplace(e, c);
    return p;
}

void QPoly::check_arity(const QPoly &o) const
{
    if (o.arity_ != arity_)
        throw ArityMismatch("polynomials over " + std::to_string(arity_) + " and " +
                            std::to_string(o.arity_) + " indeterminates");
}

void QPoly::check_exponent(const Exponent &e) const
{
    for (unsigned k = arity_; k < 2; ++k)
        if (e[k] != 0)
            throw ArityMismatch("exponent uses an indeterminate beyond the arity");
}

Rational QPoly::coeff(Exponent e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

long QPoly::total_degree() const
{
    long d = -1;
    for (const auto &[e, c] : terms_)
        d = std::max<long>(d, e[0] + e[1]);
    return d;
}

bool QPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

QPoly &QPoly::operator+=(const QPoly &o)
{
    check_arity(o);
    for (const auto &[e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

QPoly &QPoly::operator-=(const QPoly &o)
{
    check_arity(o);
    for (const auto &[e, c] : o.terms_) {
        auto [it, fresh] = terms_.try_emplace(e, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }
    return *this;
}

QPoly &QPoly::operator*=(const QPoly &o)
{
    check_arity(o);
    Terms out;
    for (const auto &[ea, ca] : terms_)
        for (const auto &[eb, cb] : o.terms_) {
            Exponent e{ea[0] + eb[0], ea[1] + eb[1]};
            out[e] += ca * cb;
        }
    std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
    terms_ = std::move(out);
    return *this;
}

QPoly &QPoly::operator*=(const Rational &q)
{
    if (q.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, c] : terms_)
        c *= q;
    return *this;
}

bool operator==(const QPoly &a, const QPoly &b)
{
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

namespace {

Rational rpow(const Rational &x, unsigned k)
{
    Rational r(1);
    for (unsigned j = 0; j < k; ++j)
        r *= x;
    return r;
}

} // namespace

Rational QPoly::evaluate(const std::vector<Rational> &point) const
{
    if (point.size() != arity_)
        throw ArityMismatch("evaluation point has wrong dimension");
    Rational acc;
    for (const auto &[e, c] : terms_) {
        Rational t = c;
        for (unsigned k = 0; k < arity_; ++k)
            t *= rpow(point[k], e[k]);
        acc += t;
    }
    return acc;
}

QPoly QPoly::substitute(const std::vector<QPoly> &images) const
{
    if (images.size() != arity_)
        throw ArityMismatch("substitution needs one image per indeterminate");
    if (arity_ == 0)
        return *this;
    const unsigned target = images[0].arity();
    for (const auto &img : images)
        if (img.arity() != target)
            throw ArityMismatch("substitution images disagree in arity");
    // Cache powers of each image.
    std::vector<std::vector<QPoly>> powers(arity_);
    QPoly acc(target);
    for (const auto &[e, c] : terms_) {
        QPoly t(target, c);
        for (unsigned k = 0; k < arity_; ++k) {
            auto &pk = powers[k];
            if (pk.empty())
                pk.push_back(QPoly(target, Rational(1)));
            while (pk.size() <= e[k])
                pk.push_back(pk.back() * images[k]);
            t *= pk[e[k]];
        }
        acc += t;
    }
    return acc;
}

std::string QPoly::to_string(const std::vector<std::string> &names) const
{
    if (names.size() < arity_)
        throw ArityMismatch("not enough variable names");
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first, reads closer to hand-written forms.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto &[e, c] = *it;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        const bool constant = e[0] == 0 && e[1] == 0;
        if (constant) {
            os << mag;
            continue;
        }
        bool need_star = false;
        if (mag != Rational(1)) {
            os << mag;
            need_star = true;
        }
        for (unsigned k = 0; k < arity_; ++k) {
            if (e[k] == 0)
                continue;
            if (need_star)
                os << '*';
            os << names[k];
            if (e[k] > 1)
                os << '^' << e[k];
            need_star = true;
        }
    }
    return os.str();
}

std::string QPoly::to_string() const { return to_string(default_names(arity_)); }

std::vector<std::string> default_names(unsigned arity)
{
    switch (arity) {
    case 0: return {};
    case 1: return {"t"};
    default: return {"y", "t"};
    }
}

} // namespace ajforge
