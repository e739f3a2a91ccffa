#ifndef PADICFAM_UNISLOPE_HPP
#define PADICFAM_UNISLOPE_HPP

#include <map>
#include <utility>
#include <vector>

#include "padicfam/invariant.hpp"

namespace padicfam {

/// Characteristic polynomial f(y) = y^w + sum v_{w-j} y^j of the residual
/// action attached to a unislope specialization; v_w != 0 so y is a unit.
struct ResidualCharPoly {
    long p = 2;
    long w = 1;
    std::vector<long> coeffs;  // v_1..v_w, residues mod p
};

/// The invariant [1,...,1] of length w over Q_p: all rams 1, all slopes 1.
HerbrandInvariant unislope_invariant(long p, long w);

/// Reads v_j = b_{p^w - p^{w-j}} (j < w) and v_w = a_{p^w - 1} out of a
/// generic-polynomial assignment.  Throws if v_w = 0.
ResidualCharPoly residual_from_assignment(long p, long w, const std::map<long, long>& assignment);

/// Multiplicative order of y modulo f(y) over the p-element field.
long galois_order_u(const ResidualCharPoly& rcp);

/// (|Aut|, polynomials per field): (p, p) when f(1) = 0, else (1, 1).
std::pair<long, long> aut_and_poly_count(const ResidualCharPoly& rcp);

/// Product of (m_j + 1) over the irreducible factorization prod f_j^{m_j}.
long subfield_count(const ResidualCharPoly& rcp);

/// Irreducible factorization of f as (factor coefficients incl. leading 1,
/// multiplicity) pairs, ascending by degree then lexicographically.
std::vector<std::pair<std::vector<long>, long>> factor_residual(const ResidualCharPoly& rcp);

/// Conjectural jump set over Q_2 from the bits v_1..v_w (v_w = 1) and c.
std::vector<Integer> jump_set_unislope_Q2(const std::vector<int>& v, int c);

/// One candidate slope set per orbit of multiplication-by-p on Z/(p^rho - 1):
/// orbit lifts in [(p^rho-1)/(p-1), p(p^rho-1)/(p-1)), p-parts stripped,
/// divided by p^rho - 1.
std::vector<std::vector<Rational>> orbit_hidden_slope_candidates(long p, long rho);

}  // namespace padicfam

#endif
