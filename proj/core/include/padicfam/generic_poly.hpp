#ifndef PADICFAM_GENERIC_POLY_HPP
#define PADICFAM_GENERIC_POLY_HPP

#include <map>
#include <string>
#include <vector>

#include "padicfam/diagram.hpp"

namespace padicfam {

enum class CoeffKind { D, A, B, C };

/// Symbolic term list of a family's universal Eisenstein polynomial.
struct GenericPolynomial {
    long e = 1;
    long p = 2;
    std::map<long, CoeffKind> terms;  // sigma -> kind
    bool constant_one = false;        // f_0 = 1 forced when the D-point is negligible
};

/// One integer-coefficient specialization over Q_p.
struct Specialization {
    std::map<long, long> assignment;  // sigma -> residue in {0..p-1}
    std::vector<Integer> coeffs;      // dense, degree e, monic
};

GenericPolynomial generic_from_diagram(const EisensteinDiagram& d);

enum class PolyStyle { Ascii, Latex };

/// Deterministic rendering: terms grouped by ascending x-power, then
/// ascending pi-power, trailing "+ x^e"; byte-stable across runs.
std::string to_string(const GenericPolynomial& gp, PolyStyle style = PolyStyle::Ascii);

/// Parses both our own output and distributed or pi-factored variants of the
/// same grammar back into a GenericPolynomial.
GenericPolynomial parse_generic(const std::string& text, long p);

/// All assignments with d,a in {1..p-1} and b,c in {0..p-1}; count is
/// (p-1)^{delta+alpha} p^{beta+gamma}.  Requires prime residue field (pi = p).
std::vector<Specialization> enumerate_specializations(const GenericPolynomial& gp);

/// Coefficients of one assignment as a dense monic integer polynomial.
std::vector<Integer> specialize(const GenericPolynomial& gp, const std::map<long, long>& assignment);

bool is_eisenstein(const std::vector<Integer>& coeffs, long p);

/// Ordered coefficient values at non-negligible points on the bottom edges of
/// final-segment bands; specializations sharing the tuple share a subfamily.
std::vector<long> subfamily_key(const GenericPolynomial& gp, const EisensteinDiagram& d,
                                const std::map<long, long>& assignment);

/// The sigmas that make up the subfamily key, ascending.
std::vector<long> subfamily_key_sigmas(const GenericPolynomial& gp, const EisensteinDiagram& d);

std::string poly_to_string(const std::vector<Integer>& coeffs);

}  // namespace padicfam

#endif
