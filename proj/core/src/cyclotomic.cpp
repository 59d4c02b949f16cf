#include "ajforge/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "ajforge/error.hpp"

namespace ajforge {

std::shared_ptr<const CyclotomicContext> CyclotomicContext::get(unsigned m)
{
    if (m == 0)
        throw DomainError("cyclotomic modulus must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CyclotomicContext>> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end())
        return it->second;

    auto ctx = std::make_shared<CyclotomicContext>();
    ctx->m = m;
    ctx->modulus = cyclotomic_polynomial(m);
    ctx->degree = static_cast<unsigned>(ctx->modulus.degree());
    const unsigned d = ctx->degree;
    const std::size_t rows = d == 0 ? 1 : 2 * d - 1;
    for (std::size_t k = 0; k < rows; ++k) {
        UPoly r = divmod(UPoly::monomial(k), ctx->modulus).second;
        std::vector<Rational> v(d);
        for (unsigned j = 0; j < d; ++j)
            v[j] = r.coeff(j);
        ctx->reduction.push_back(std::move(v));
    }
    cache.emplace(m, ctx);
    return ctx;
}

CyclotomicElement::CyclotomicElement() : CyclotomicElement(1, Rational(0)) {}

CyclotomicElement::CyclotomicElement(unsigned m, const Rational &value)
    : ctx_(CyclotomicContext::get(m)), coords_(ctx_->degree)
{
    coords_[0] = value;
}

CyclotomicElement::CyclotomicElement(unsigned m, std::vector<Rational> coords)
    : ctx_(CyclotomicContext::get(m))
{
    // Accept any length; reduce higher powers of zeta.
    UPoly p(std::move(coords));
    UPoly r = divmod(p, ctx_->modulus).second;
    coords_.resize(ctx_->degree);
    for (unsigned j = 0; j < ctx_->degree; ++j)
        coords_[j] = r.coeff(j);
}

CyclotomicElement CyclotomicElement::zeta(unsigned m)
{
    return CyclotomicElement(m, std::vector<Rational>{Rational(0), Rational(1)});
}

bool CyclotomicElement::is_zero() const
{
    for (const auto &c : coords_)
        if (!c.is_zero())
            return false;
    return true;
}

std::optional<Rational> CyclotomicElement::as_rational() const
{
    for (std::size_t j = 1; j < coords_.size(); ++j)
        if (!coords_[j].is_zero())
            return std::nullopt;
    return coords_[0];
}

void CyclotomicElement::check(const CyclotomicElement &o) const
{
    if (ctx_->m != o.ctx_->m)
        throw ContextMismatch("cyclotomic elements over Q(zeta_" + std::to_string(ctx_->m) +
                              ") and Q(zeta_" + std::to_string(o.ctx_->m) + ")");
}

CyclotomicElement &CyclotomicElement::operator+=(const CyclotomicElement &o)
{
    check(o);
    for (std::size_t j = 0; j < coords_.size(); ++j)
        coords_[j] += o.coords_[j];
    return *this;
}

CyclotomicElement &CyclotomicElement::operator-=(const CyclotomicElement &o)
{
    check(o);
    for (std::size_t j = 0; j < coords_.size(); ++j)
        coords_[j] -= o.coords_[j];
    return *this;
}

CyclotomicElement &CyclotomicElement::operator*=(const CyclotomicElement &o)
{
    check(o);
    const unsigned d = ctx_->degree;
    std::vector<Rational> prod(2 * d - 1);
    for (unsigned i = 0; i < d; ++i) {
        if (coords_[i].is_zero())
            continue;
        for (unsigned j = 0; j < d; ++j)
            prod[i + j] += coords_[i] * o.coords_[j];
    }
    std::vector<Rational> out(d);
    for (std::size_t k = 0; k < prod.size(); ++k) {
        if (prod[k].is_zero())
            continue;
        const auto &row = ctx_->reduction[k];
        for (unsigned j = 0; j < d; ++j)
            if (!row[j].is_zero())
                out[j] += prod[k] * row[j];
    }
    coords_ = std::move(out);
    return *this;
}

CyclotomicElement operator-(const CyclotomicElement &a)
{
    CyclotomicElement r = a;
    for (auto &c : r.coords_)
        c = -c;
    return r;
}

bool operator==(const CyclotomicElement &a, const CyclotomicElement &b)
{
    return a.ctx_->m == b.ctx_->m && a.coords_ == b.coords_;
}

std::string CyclotomicElement::to_string() const
{
    return UPoly(coords_).to_string("zeta");
}

std::optional<CyclotomicElement> inverse(const CyclotomicElement &x)
{
    if (x.is_zero())
        return std::nullopt;
    // Phi_m is irreducible, so gcd(x, Phi_m) = 1 and s·x ≡ 1.
    auto [g, s] = half_gcdext(UPoly(x.coords()), x.context().modulus);
    if (g.degree() != 0)
        return std::nullopt;
    return CyclotomicElement(x.modulus(), s.coeffs());
}

} // namespace ajforge
