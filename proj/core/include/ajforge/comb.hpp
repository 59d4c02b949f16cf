#pragma once

#include <string>
#include <vector>

#include "ajforge/rational.hpp"

namespace ajforge {

/// A vector u = (u_1, ..., u_n) with sum u_j = i and sum j·u_j = n, together
/// with its multinomial weight i! / prod u_j!.
struct IndexVector
{
    unsigned n = 0;
    unsigned i = 0;
    std::vector<unsigned> u; // u[j-1] holds u_j
    Integer weight;

    unsigned at(unsigned j) const { return u[j - 1]; }
    friend bool operator==(const IndexVector &a, const IndexVector &b)
    {
        return a.n == b.n && a.i == b.i && a.u == b.u && a.weight == b.weight;
    }
};

/// Which index family to enumerate. The parameter l (>= 1) is the one in the
/// superscript l+1 and is ignored for the plain family.
enum class FamilyKind
{
    Plain,      // U_{n,i}
    Hat,        // u_j = 0 on [2,l] and [n-i+2,n]
    Bar,        // u_j = 0 on [2,l] and [n-i+1,n]
    Restricted, // u_j = 0 off N_l on [2,n-i+1], and on [n-i+2,n]
    Check,      // Restricted and Bar
    Tilde,      // Restricted, plus Bar when i = l+1 and Hat otherwise
};

struct FamilySelector
{
    FamilyKind kind = FamilyKind::Plain;
    unsigned l = 1;

    friend bool operator==(const FamilySelector &, const FamilySelector &) = default;
};

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string &name);

/// True when the selector forces u_j = 0 (1-based j) inside U_{n,i}.
bool forced_zero(unsigned n, unsigned i, const FamilySelector &sel, unsigned j);

/// All index vectors of the family, in a fixed deterministic order.
/// Results are memoized per thread; the reference stays valid for the
/// lifetime of the calling thread.
const std::vector<IndexVector> &enumerate(unsigned n, unsigned i, const FamilySelector &sel = {});

/// i! / prod u_j! for i = sum u_j.
Integer multinomial_weight(const std::vector<unsigned> &u);

/// j ≡ 1 (mod l).
inline bool in_progression(unsigned j, unsigned l) { return l == 0 ? j == 1 : j % l == 1 % l; }

} // namespace ajforge
