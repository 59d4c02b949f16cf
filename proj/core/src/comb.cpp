#include "ajforge/comb.hpp"

#include <map>
#include <tuple>

#include "ajforge/error.hpp"

namespace ajforge {

std::string to_string(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::Plain: return "U";
    case FamilyKind::Hat: return "hat";
    case FamilyKind::Bar: return "bar";
    case FamilyKind::Restricted: return "restricted";
    case FamilyKind::Check: return "check";
    case FamilyKind::Tilde: return "tilde";
    }
    return "?";
}

FamilyKind family_kind_from_string(const std::string &name)
{
    for (auto k : {FamilyKind::Plain, FamilyKind::Hat, FamilyKind::Bar, FamilyKind::Restricted,
                   FamilyKind::Check, FamilyKind::Tilde})
        if (to_string(k) == name)
            return k;
    throw DomainError("unknown index family '" + name + "'");
}

namespace {

bool in_range(unsigned j, long lo, long hi) { return lo <= static_cast<long>(j) && static_cast<long>(j) <= hi; }

bool hat_zero(unsigned n, unsigned i, unsigned l, unsigned j)
{
    const long top = static_cast<long>(n) - static_cast<long>(i);
    return in_range(j, 2, l) || in_range(j, top + 2, n);
}

bool bar_zero(unsigned n, unsigned i, unsigned l, unsigned j)
{
    const long top = static_cast<long>(n) - static_cast<long>(i);
    return in_range(j, 2, l) || in_range(j, top + 1, n);
}

bool restricted_zero(unsigned n, unsigned i, unsigned l, unsigned j)
{
    const long top = static_cast<long>(n) - static_cast<long>(i);
    return (in_range(j, 2, top + 1) && !in_progression(j, l)) || in_range(j, top + 2, n);
}

} // namespace

bool forced_zero(unsigned n, unsigned i, const FamilySelector &sel, unsigned j)
{
    const unsigned l = sel.l;
    switch (sel.kind) {
    case FamilyKind::Plain: return false;
    case FamilyKind::Hat: return hat_zero(n, i, l, j);
    case FamilyKind::Bar: return bar_zero(n, i, l, j);
    case FamilyKind::Restricted: return restricted_zero(n, i, l, j);
    case FamilyKind::Check: return restricted_zero(n, i, l, j) || bar_zero(n, i, l, j);
    case FamilyKind::Tilde:
        return restricted_zero(n, i, l, j) ||
               (i == l + 1 ? bar_zero(n, i, l, j) : hat_zero(n, i, l, j));
    }
    return false;
}

Integer multinomial_weight(const std::vector<unsigned> &u)
{
    unsigned long total = 0;
    for (unsigned x : u)
        total += x;
    Integer w = factorial(total);
    for (unsigned x : u)
        if (x > 1)
            w /= factorial(x);
    return w;
}

namespace {

struct Search
{
    unsigned n, i;
    std::vector<bool> allowed; // allowed[j]
    std::vector<unsigned> u;
    std::vector<IndexVector> out;

    void run(unsigned j, unsigned rem_i, unsigned rem_n)
    {
        if (j == 0) {
            if (rem_i == 0 && rem_n == 0)
                out.push_back({n, i, u, multinomial_weight(u)});
            return;
        }
        const unsigned cap = allowed[j] ? std::min(rem_i, rem_n / j) : 0;
        for (unsigned x = 0; x <= cap; ++x) {
            const unsigned ri = rem_i - x;
            const unsigned rn = rem_n - x * j;
            // Remaining positions 1..j-1 contribute between ri and (j-1)·ri.
            if (rn < ri || rn > (j - 1) * ri)
                continue;
            u[j - 1] = x;
            run(j - 1, ri, rn);
        }
        u[j - 1] = 0;
    }
};

using Key = std::tuple<unsigned, unsigned, int, unsigned>;

} // namespace

const std::vector<IndexVector> &enumerate(unsigned n, unsigned i, const FamilySelector &sel)
{
    thread_local std::map<Key, std::vector<IndexVector>> memo;
    const unsigned l = sel.kind == FamilyKind::Plain ? 0 : sel.l;
    if (sel.kind != FamilyKind::Plain && sel.l == 0)
        throw DomainError("restricted index families need l >= 1");
    const Key key{n, i, static_cast<int>(sel.kind), l};
    if (auto it = memo.find(key); it != memo.end())
        return it->second;

    Search s{n, i, std::vector<bool>(n + 1, true), std::vector<unsigned>(n, 0), {}};
    if (n >= 1 && i >= 1 && i <= n) {
        for (unsigned j = 1; j <= n; ++j)
            s.allowed[j] = !forced_zero(n, i, sel, j);
        s.run(n, i, n);
    }
    return memo.emplace(key, std::move(s.out)).first->second;
}

} // namespace ajforge
