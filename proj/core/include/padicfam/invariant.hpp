#ifndef PADICFAM_INVARIANT_HPP
#define PADICFAM_INVARIANT_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "padicfam/rational.hpp"

namespace padicfam {

/// Ground field data: prime p, absolute ramification index e, residue degree f.
struct BaseProfile {
    long p = 2;
    long e = 1;
    long f = 1;

    BaseProfile() = default;
    BaseProfile(long p_, long e_ = 1, long f_ = 1);

    /// Residue cardinality p^f.
    Integer q() const { return pow_int(p, static_cast<unsigned long>(f)); }

    bool operator==(const BaseProfile&) const = default;
};

/// The family index (p, f, eps, rams).  Rams are the canonical stored
/// representation; slopes and means are derived views computed at
/// construction.  Immutable after construction.
class HerbrandInvariant {
public:
    HerbrandInvariant(long p, long f, long eps, std::vector<Rational> rams);

    long p() const { return p_; }
    long f() const { return f_; }
    long eps() const { return eps_; }
    long w() const { return static_cast<long>(rams_.size()); }
    long e() const { return e_; }
    long n() const { return f_ * e_; }

    const std::vector<Rational>& rams() const { return rams_; }
    const std::vector<Rational>& slopes() const { return slopes_; }
    const std::vector<Rational>& means() const { return means_; }

    /// r*_k = (p-1) r_k / (eps p^k) = m_k - m_{k-1}
    std::vector<Rational> small_rams() const;
    /// r'_k = r_k / (eps p^k) = s_k - m_k
    std::vector<Rational> tiny_rams() const;

    /// m_w, or 0 when w = 0.
    Rational top_mean() const;

    bool operator==(const HerbrandInvariant& o) const {
        return p_ == o.p_ && f_ == o.f_ && eps_ == o.eps_ && rams_ == o.rams_;
    }
    bool operator!=(const HerbrandInvariant& o) const { return !(*this == o); }

private:
    long p_, f_, eps_, e_;
    std::vector<Rational> rams_;
    std::vector<Rational> slopes_;
    std::vector<Rational> means_;
};

/// Concave piecewise-linear graph through (r_k, s_k) with trailing slope
/// 1/(eps p^w).
struct HerbrandFunction {
    std::vector<std::pair<Rational, Rational>> vertices;  // starts at (0,0)
    Rational trailing_slope;
};

struct SubfieldPoint {
    long degree;          // e' = [L':L_un]
    Rational scaled_mean; // e' m'
};

HerbrandInvariant from_rams(long p, long f, long eps, std::vector<Rational> rams);

HerbrandFunction herbrand_function(const HerbrandInvariant& inv);

/// Herbrand function: carries rams to slopes.
Rational phi(const HerbrandInvariant& inv, const Rational& r);
/// Exact inverse of phi.
Rational psi(const HerbrandInvariant& inv, const Rational& s);

/// Discriminant exponent c = f(e - 1 + e m); asserted integral.
Integer disc_exponent(const HerbrandInvariant& inv);

/// Amb(I) = f eps p^i with i the number of integral rams.
Integer amb_abstract(const HerbrandInvariant& inv);
bool is_rigid_abstract(const HerbrandInvariant& inv);

/// k is final iff k = w or s_{k+1} > s_k.
std::set<long> final_indices(const HerbrandInvariant& inv);
/// Maximal runs of equal slope value, partitioning 1..w.
std::vector<std::vector<long>> segments(const HerbrandInvariant& inv);

/// Reconstructs an invariant from subfield points (e', e'm') by taking the
/// lower convex hull; the slope over [eps p^{k-1}, eps p^k] is s_k.
HerbrandInvariant from_subfield_points(long p, long eps, long w,
                                       const std::vector<SubfieldPoint>& points);

enum class InvariantForm { Slopes, Means, Rams };

/// Grammar: "[...]" slopes, "(...)" rams, "<...>" means, with optional
/// "_eps" and "^f" tail; omitted subscript/superscript default to 1.
HerbrandInvariant parse_invariant(long p, const std::string& text);
std::string print_invariant(const HerbrandInvariant& inv, InvariantForm form);

}  // namespace padicfam

#endif
