#ifndef PADICFAM_ENUMERATION_HPP
#define PADICFAM_ENUMERATION_HPP

#include <optional>
#include <vector>

#include "padicfam/invariant.hpp"

namespace padicfam {

/// The allowed values for a ram repeated rho times over a base of absolute
/// ramification index E.
struct RamSet {
    long p = 2;
    long rho = 1;
    long E = 1;
    std::vector<Rational> geometric;          // sorted ascending
    std::optional<Rational> arithmetic;       // present iff rho == 1; equals pE/(p-1)
};

RamSet ram_set(long p, long rho, long E);

/// All weakly increasing ram vectors of length w realizable with tame degree
/// eps over a base of absolute ramification index baseE.  A maximal block of
/// length rho ending at position k draws its value from
/// ram_set(p, rho, baseE * eps * p^{k-rho}); block values strictly increase.
/// Output sorted lexicographically.
std::vector<std::vector<Rational>> enumerate_wild(long p, long w, long eps, long baseE);

/// All Herbrand invariants of degree n over the given base.
std::vector<HerbrandInvariant> enumerate_families(long p, long n, const BaseProfile& base);

bool is_compatible(const HerbrandInvariant& inv, const BaseProfile& base);

/// Number of fields in the tame family ()_eps^f over a base with residue
/// cardinality q: orbits of multiplication-by-q on Z/gcd(eps, q^f - 1).
Integer tame_field_count(const Integer& q, long f, long eps);

}  // namespace padicfam

#endif
