#include "padicfam/diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace padicfam {

bool is_drawn(PointKind k) { return k != PointKind::Z; }

bool is_negligible(PointKind k) {
    return k == PointKind::DNegligible || k == PointKind::CNegligible;
}

EisensteinDiagram build_diagram(const HerbrandInvariant& inv, const Integer& q) {
    if (q < 2 || pow_int(inv.p(), ord_p(q, inv.p())) != q)
        throw std::invalid_argument("build_diagram: q must be a power of p");
    EisensteinDiagram d{inv, q, {}, {}, 0, 0, 0, 0};
    long w = inv.w();
    long e = inv.e();
    long p = inv.p();

    auto segs = segments(inv);
    auto finals = final_indices(inv);
    auto rstar = inv.small_rams();
    for (long k = 1; k <= w; ++k) {
        Band b;
        b.k = k;
        b.bottom = inv.means()[k - 1];
        b.top = inv.slopes()[k - 1];
        b.width = b.top - b.bottom;
        b.arithmetic = is_integer(rstar[k - 1]);
        b.final_flag = finals.count(k) > 0;
        for (size_t s = 0; s < segs.size(); ++s)
            if (std::find(segs[s].begin(), segs[s].end(), k) != segs[s].end())
                b.segment_id = static_cast<long>(s);
        d.bands.push_back(b);
    }

    // D-point
    DiagramPoint d0;
    d0.sigma = 0;
    d0.height = Rational(0);
    d0.kind = gcd(Integer(inv.eps()), q - 1) > 1 ? PointKind::DCritical : PointKind::DNegligible;
    d.delta = d0.kind == PointKind::DCritical ? 1 : 0;
    d.points.push_back(d0);

    if (w == 0) return d;  // only the D-point

    Rational s_top = inv.slopes().back();
    long sigma_max = floor_int(Rational(e) * s_top).get_si();
    Integer pw = pow_int(p, static_cast<unsigned long>(w));
    for (long sigma = 1; sigma <= sigma_max; ++sigma) {
        DiagramPoint pt;
        pt.sigma = sigma;
        pt.i = sigma % e;
        pt.j = sigma / e;
        Integer g = gcd(Integer(pt.i), pw);
        pt.index = w - static_cast<long>(ord_p(g == 0 ? pw : g, p));
        pt.height = Rational(sigma, e);
        pt.height.canonicalize();

        // rho = number of band tops at this height (used for C-criticality)
        long rho = 0;
        for (const auto& b : d.bands)
            if (b.top == pt.height) ++rho;

        // the bottom edge of an arithmetic band whose ram is integral hosts a
        // free-but-irreducible coefficient: the degree-p step can carry
        // automorphisms exactly when the ram denominator is 1
        bool at_arith_bottom = false;
        for (const auto& b : d.bands)
            if (b.arithmetic && b.bottom == pt.height &&
                is_integer(inv.rams()[static_cast<size_t>(b.k) - 1]))
                at_arith_bottom = true;

        auto classify_c = [&](DiagramPoint& q_pt) {
            if (rho > 0) {
                q_pt.kind = PointKind::CCritical;
                q_pt.rho = rho;
            } else if (at_arith_bottom) {
                q_pt.kind = PointKind::CCritical;
                q_pt.rho = 1;
                q_pt.bottom_critical = true;
            } else {
                q_pt.kind = PointKind::CNegligible;
                q_pt.rho = 0;
            }
        };

        long k = pt.index;
        if (k == 0) {
            // governing region B_0 is the line s = 0; everything above is C
            classify_c(pt);
        } else {
            const Band& b = d.bands[k - 1];
            if (pt.height < b.bottom) {
                pt.kind = PointKind::Z;
            } else if (pt.height >= b.top) {
                classify_c(pt);
            } else if (pt.height == b.bottom && !b.arithmetic && b.final_flag) {
                pt.kind = PointKind::A;
            } else {
                pt.kind = PointKind::B;
            }
        }
        switch (pt.kind) {
            case PointKind::A: ++d.alpha; break;
            case PointKind::B: ++d.beta; break;
            case PointKind::CCritical: ++d.gamma; break;
            default: break;
        }
        d.points.push_back(pt);
    }
    return d;
}

Integer mass(const EisensteinDiagram& d) {
    return pow_int(d.q - 1, static_cast<unsigned long>(d.alpha)) *
           pow_int(d.q, static_cast<unsigned long>(d.beta));
}

Integer eis_count(const EisensteinDiagram& d) {
    return pow_int(d.q - 1, static_cast<unsigned long>(d.delta + d.alpha)) *
           pow_int(d.q, static_cast<unsigned long>(d.beta + d.gamma));
}

Rational serre_mass(const EisensteinDiagram& d) {
    Rational em = Rational(d.inv.e()) * d.inv.top_mean();
    if (!is_integer(em))
        throw std::logic_error("serre_mass: e*m_w is not integral");
    Integer denom = pow_int(d.q, em.get_num().get_ui());
    Rational sm = Rational(mass(d)) / Rational(denom);
    sm.canonicalize();
    return sm;
}

Integer amb_over(const EisensteinDiagram& d) {
    Integer amb = 1;
    if (d.delta == 1) amb *= gcd(d.q - 1, Integer(d.inv.eps()));
    for (const auto& pt : d.points)
        if (pt.kind == PointKind::CCritical)
            amb *= gcd(d.q, pow_int(d.inv.p(), static_cast<unsigned long>(pt.rho)));
    return amb;
}

bool rigid_over(const EisensteinDiagram& d) { return d.delta == 0 && d.gamma == 0; }

Rational phi_particle(const EisensteinDiagram& d, const Rational& r) {
    if (r < 0) throw std::invalid_argument("phi_particle: negative time");
    long p = d.inv.p();
    long e = d.inv.e();
    // distinct band-top heights with multiplicities, ascending
    std::vector<std::pair<Rational, long>> tops;
    for (const auto& b : d.bands) {
        if (!tops.empty() && tops.back().first == b.top)
            ++tops.back().second;
        else
            tops.emplace_back(b.top, 1);
    }
    Rational s(0);          // ramps traveled
    Rational t(0);          // time elapsed
    Rational speed(pow_int(p, static_cast<unsigned long>(d.inv.w())), Integer(e));  // ramps/sec
    speed.canonicalize();
    for (const auto& [top, mult] : tops) {
        Rational t_reach = t + (top - s) / speed;
        if (t_reach >= r) return s + (r - t) * speed;
        s = top;
        t = t_reach;
        speed /= pow_int(p, static_cast<unsigned long>(mult));
    }
    return s + (r - t) * speed;
}

}  // namespace padicfam
