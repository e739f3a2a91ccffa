#ifndef PADICFAM_COMPOSE_HPP
#define PADICFAM_COMPOSE_HPP

#include "padicfam/invariant.hpp"

namespace padicfam {

/// Herbrand invariant of L/Q from Inv(K/Q) = base and Inv(L/K) = top.
/// Starts from the base rams scaled by the top's tame degree followed by the
/// top rams, then sorts by the rewrite (a,b) -> (b, b+p(a-b)) on adjacent
/// decreasing pairs.
HerbrandInvariant compose(const HerbrandInvariant& base, const HerbrandInvariant& top);

/// Dual slope procedure: returns (eps s_1, ..., eps s_w) of the composite.
std::vector<Rational> compose_slopes(const HerbrandInvariant& base, const HerbrandInvariant& top);

/// Alias of compose with the base taken over Q_p.
HerbrandInvariant relative_to_absolute(const HerbrandInvariant& base_over_qp,
                                       const HerbrandInvariant& rel);

}  // namespace padicfam

#endif
