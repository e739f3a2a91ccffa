#ifndef PADICFAM_DIAGRAM_HPP
#define PADICFAM_DIAGRAM_HPP

#include <string>
#include <vector>

#include "padicfam/invariant.hpp"

namespace padicfam {

enum class PointKind {
    DCritical,
    DNegligible,
    Z,
    A,
    B,
    CCritical,
    CNegligible,
};

bool is_drawn(PointKind k);        // everything but Z
bool is_negligible(PointKind k);   // hollow D or hollow C

struct Band {
    long k = 0;               // 1..w
    Rational bottom;          // m_k
    Rational top;             // s_k
    Rational width;           // r'_k = top - bottom
    bool arithmetic = false;  // r*_k integral
    bool final_flag = false;
    long segment_id = 0;
};

struct DiagramPoint {
    long sigma = 0;
    long i = 0;          // sigma mod e
    long j = 0;          // floor(sigma / e)
    long index = 0;      // k = w - ord_p(gcd(i, p^w))
    Rational height;     // sigma / e
    PointKind kind = PointKind::Z;
    long rho = 0;        // for C-points: number of band tops it lies on
    // Critical C-point sitting at the bottom edge of an arithmetic band with
    // integral ram (rather than on a band top).  The coefficient is free but
    // reducible only up to the automorphisms of the arithmetic step, so it
    // counts toward gamma; its symbol is conventionally printed as b.
    bool bottom_critical = false;
};

/// Classified lattice points and bands of a totally ramified invariant
/// (f is ignored for the geometry; q enters only through D-criticality).
struct EisensteinDiagram {
    HerbrandInvariant inv;
    Integer q;
    std::vector<Band> bands;
    std::vector<DiagramPoint> points;  // sigma = 0 .. floor(e s_w)
    long alpha = 0;   // #A
    long beta = 0;    // #B
    long gamma = 0;   // #critical C
    long delta = 0;   // #critical D (0 or 1)
};

EisensteinDiagram build_diagram(const HerbrandInvariant& inv, const Integer& q);

/// M(I) = (q-1)^alpha q^beta.
Integer mass(const EisensteinDiagram& d);
/// |Eis(I/K)| = (q-1)^{delta+alpha} q^{beta+gamma}.
Integer eis_count(const EisensteinDiagram& d);
/// SM(I) = M(I) / q^{e m_w}.
Rational serre_mass(const EisensteinDiagram& d);

/// Amb(I/K) = gcd(q-1,eps)^delta * prod over critical C of gcd(q, p^rho).
Integer amb_over(const EisensteinDiagram& d);
/// Rigid over K iff delta = gamma = 0; then the field count equals the mass.
bool rigid_over(const EisensteinDiagram& d);

/// Particle evaluation of the Herbrand function: speed p^w steps per second,
/// divided by p at every band-top crossing.
Rational phi_particle(const EisensteinDiagram& d, const Rational& r);

std::string render_svg(const EisensteinDiagram& d);
void render_svg_file(const EisensteinDiagram& d, const std::string& out_path);
std::string render_ascii(const EisensteinDiagram& d);

}  // namespace padicfam

#endif
