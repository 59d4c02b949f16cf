#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "ajforge/comb.hpp"

namespace ajforge::testing {

// Brute force: every composition of i into n non-negative parts, filtered by
// the two linear constraints and the family's zero positions, which are
// written out here from the set definitions rather than shared with the
// library.

inline void compositions(unsigned parts, unsigned total, std::vector<unsigned> &cur,
                         std::vector<std::vector<unsigned>> &out)
{
    if (cur.size() + 1 == parts) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned x = 0; x <= total; ++x) {
        cur.push_back(x);
        compositions(parts, total - x, cur, out);
        cur.pop_back();
    }
}

inline bool oracle_zero(FamilyKind kind, unsigned n, unsigned i, unsigned l, unsigned j)
{
    const long J = j, N = n, I = i, L = l;
    const bool low = 2 <= J && J <= L;                      // |2, l|
    const bool hat_top = N - I + 2 <= J && J <= N;          // |n-i+2, n|
    const bool bar_top = N - I + 1 <= J && J <= N;          // |n-i+1, n|
    const bool off_prog = 2 <= J && J <= N - I + 1 && (J - 1) % L != 0;
    const bool hat = low || hat_top;
    const bool bar = low || bar_top;
    const bool restricted = off_prog || hat_top;
    switch (kind) {
    case FamilyKind::Plain: return false;
    case FamilyKind::Hat: return hat;
    case FamilyKind::Bar: return bar;
    case FamilyKind::Restricted: return restricted;
    case FamilyKind::Check: return restricted || bar;
    case FamilyKind::Tilde: return restricted || (i == l + 1 ? bar : hat);
    }
    return false;
}

inline std::set<std::vector<unsigned>> brute_force(unsigned n, unsigned i, FamilyKind kind, unsigned l)
{
    std::set<std::vector<unsigned>> out;
    if (n == 0 || i == 0 || i > n)
        return out;
    std::vector<std::vector<unsigned>> all;
    std::vector<unsigned> cur;
    compositions(n, i, cur, all);
    for (const auto &u : all) {
        unsigned weighted = 0;
        bool ok = true;
        for (unsigned j = 1; j <= n; ++j) {
            weighted += j * u[j - 1];
            if (u[j - 1] && oracle_zero(kind, n, i, l, j))
                ok = false;
        }
        if (ok && weighted == n)
            out.insert(u);
    }
    return out;
}

inline Integer oracle_weight(const std::vector<unsigned> &u)
{
    unsigned total = 0;
    for (unsigned x : u)
        total += x;
    Integer w = 1;
    for (unsigned k = 2; k <= total; ++k)
        w *= k;
    for (unsigned x : u)
        for (unsigned k = 2; k <= x; ++k)
            w /= k;
    return w;
}

inline std::set<std::vector<unsigned>> as_set(const std::vector<IndexVector> &v)
{
    std::set<std::vector<unsigned>> out;
    for (const auto &x : v)
        out.insert(x.u);
    return out;
}

inline constexpr FamilyKind kAllFamilies[] = {FamilyKind::Plain, FamilyKind::Hat,   FamilyKind::Bar,
                                              FamilyKind::Restricted, FamilyKind::Check, FamilyKind::Tilde};

} // namespace ajforge::testing
