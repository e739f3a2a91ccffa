#include "padicfam/invariant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace padicfam {

BaseProfile::BaseProfile(long p_, long e_, long f_) : p(p_), e(e_), f(f_) {
    if (!is_prime(Integer(p))) throw std::invalid_argument("BaseProfile: p must be prime");
    if (e < 1 || f < 1) throw std::invalid_argument("BaseProfile: e and f must be positive");
}

HerbrandInvariant::HerbrandInvariant(long p, long f, long eps, std::vector<Rational> rams)
    : p_(p), f_(f), eps_(eps), rams_(std::move(rams)) {
    if (!is_prime(Integer(p_))) throw std::invalid_argument("HerbrandInvariant: p must be prime");
    if (f_ < 1) throw std::invalid_argument("HerbrandInvariant: f must be positive");
    if (eps_ < 1 || eps_ % p_ == 0)
        throw std::invalid_argument("HerbrandInvariant: eps must be positive and coprime to p");
    for (size_t k = 0; k < rams_.size(); ++k) {
        rams_[k].canonicalize();
        if (rams_[k] <= 0)
            throw std::invalid_argument("HerbrandInvariant: ram #" + std::to_string(k + 1) +
                                        " (" + rational_to_string(rams_[k]) + ") is not positive");
        if (k > 0 && rams_[k] < rams_[k - 1])
            throw std::invalid_argument("HerbrandInvariant: ram #" + std::to_string(k + 1) +
                                        " (" + rational_to_string(rams_[k]) +
                                        ") decreases below its predecessor");
    }
    Integer pw = pow_int(p_, rams_.size());
    e_ = eps_ * pw.get_si();

    // m_k = sum_{j<=k} (p-1)/(eps p^j) r_j ;  s_k = (p m_k - m_{k-1})/(p-1)
    Rational m(0), m_prev(0);
    Integer pj(1);
    for (size_t k = 0; k < rams_.size(); ++k) {
        pj *= p_;
        m_prev = m;
        m += rams_[k] * Rational(p_ - 1, 1) / Rational(Integer(eps_) * pj);
        means_.push_back(m);
        slopes_.push_back((Rational(p_) * m - m_prev) / Rational(p_ - 1));
    }
}

std::vector<Rational> HerbrandInvariant::small_rams() const {
    std::vector<Rational> out;
    Rational prev(0);
    for (const auto& m : means_) {
        out.push_back(m - prev);
        prev = m;
    }
    return out;
}

std::vector<Rational> HerbrandInvariant::tiny_rams() const {
    std::vector<Rational> out;
    for (size_t k = 0; k < rams_.size(); ++k) out.push_back(slopes_[k] - means_[k]);
    return out;
}

Rational HerbrandInvariant::top_mean() const {
    return means_.empty() ? Rational(0) : means_.back();
}

HerbrandInvariant from_rams(long p, long f, long eps, std::vector<Rational> rams) {
    return HerbrandInvariant(p, f, eps, std::move(rams));
}

HerbrandFunction herbrand_function(const HerbrandInvariant& inv) {
    HerbrandFunction hf;
    hf.vertices.emplace_back(Rational(0), Rational(0));
    for (long k = 0; k < inv.w(); ++k)
        hf.vertices.emplace_back(inv.rams()[k], inv.slopes()[k]);
    hf.trailing_slope = Rational(1, 1) / Rational(Integer(inv.eps()) * pow_int(inv.p(), inv.w()));
    return hf;
}

namespace {

// Piecewise-linear evaluation through vertices; slope beyond the last vertex
// is `trailing`.  Vertices are weakly increasing in both coordinates.
Rational piecewise_eval(const std::vector<std::pair<Rational, Rational>>& verts,
                        const Rational& trailing, const Rational& x, bool inverse) {
    auto coord = [&](const std::pair<Rational, Rational>& v) { return inverse ? v.second : v.first; };
    auto other = [&](const std::pair<Rational, Rational>& v) { return inverse ? v.first : v.second; };
    if (x < 0) throw std::invalid_argument("herbrand function: negative argument");
    for (size_t k = 0; k + 1 < verts.size(); ++k) {
        if (x <= coord(verts[k + 1])) {
            Rational dx = coord(verts[k + 1]) - coord(verts[k]);
            if (dx == 0) continue;  // repeated ram, zero-length segment
            Rational dy = other(verts[k + 1]) - other(verts[k]);
            return other(verts[k]) + (x - coord(verts[k])) * dy / dx;
        }
    }
    const auto& last = verts.back();
    Rational slope = inverse ? Rational(1) / trailing : trailing;
    return other(last) + (x - coord(last)) * slope;
}

}  // namespace

Rational phi(const HerbrandInvariant& inv, const Rational& r) {
    auto hf = herbrand_function(inv);
    return piecewise_eval(hf.vertices, hf.trailing_slope, r, false);
}

Rational psi(const HerbrandInvariant& inv, const Rational& s) {
    auto hf = herbrand_function(inv);
    return piecewise_eval(hf.vertices, hf.trailing_slope, s, true);
}

Integer disc_exponent(const HerbrandInvariant& inv) {
    Rational c = Rational(inv.f()) * (Rational(inv.e() - 1) + Rational(inv.e()) * inv.top_mean());
    if (!is_integer(c))
        throw std::logic_error("disc_exponent: non-integral c = " + rational_to_string(c) +
                               " for a valid invariant");
    return c.get_num();
}

Integer amb_abstract(const HerbrandInvariant& inv) {
    unsigned long i = 0;
    for (const auto& r : inv.rams())
        if (is_integer(r)) ++i;
    return Integer(inv.f()) * Integer(inv.eps()) * pow_int(inv.p(), i);
}

bool is_rigid_abstract(const HerbrandInvariant& inv) { return amb_abstract(inv) == 1; }

std::set<long> final_indices(const HerbrandInvariant& inv) {
    std::set<long> out;
    const auto& s = inv.slopes();
    for (long k = 1; k <= inv.w(); ++k)
        if (k == inv.w() || s[k] > s[k - 1]) out.insert(k);
    return out;
}

std::vector<std::vector<long>> segments(const HerbrandInvariant& inv) {
    std::vector<std::vector<long>> out;
    const auto& s = inv.slopes();
    for (long k = 1; k <= inv.w(); ++k) {
        if (out.empty() || s[k - 1] != s[k - 2]) out.emplace_back();
        out.back().push_back(k);
    }
    return out;
}

HerbrandInvariant from_subfield_points(long p, long eps, long w,
                                       const std::vector<SubfieldPoint>& points) {
    Integer full_deg = Integer(eps) * pow_int(p, static_cast<unsigned long>(w));
    std::vector<std::pair<Rational, Rational>> pts;
    pts.emplace_back(Rational(eps), Rational(0));  // the tame point has mean 0
    bool have_full = false;
    for (const auto& sp : points) {
        if (Integer(sp.degree) == full_deg) have_full = true;
        pts.emplace_back(Rational(sp.degree), sp.scaled_mean);
    }
    if (!have_full)
        throw std::invalid_argument("from_subfield_points: missing full-degree point");

    std::sort(pts.begin(), pts.end());
    // Monotone-chain lower hull.
    std::vector<std::pair<Rational, Rational>> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep only right turns (strictly convex from below)
            Rational cross = (b.first - a.first) * (pt.second - a.second) -
                             (pt.first - a.first) * (b.second - a.second);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        if (!hull.empty() && hull.back().first == pt.first) {
            if (pt.second < hull.back().second) hull.back() = pt;
            continue;
        }
        hull.push_back(pt);
    }

    auto hull_at = [&](const Rational& x) -> Rational {
        for (size_t i = 0; i + 1 < hull.size(); ++i) {
            if (x >= hull[i].first && x <= hull[i + 1].first) {
                Rational dx = hull[i + 1].first - hull[i].first;
                return hull[i].second + (x - hull[i].first) * (hull[i + 1].second - hull[i].second) / dx;
            }
        }
        throw std::invalid_argument("from_subfield_points: hull not defined at abscissa " +
                                    rational_to_string(x));
    };

    std::vector<Rational> means;
    Integer pk(eps);
    for (long k = 1; k <= w; ++k) {
        pk *= p;
        means.push_back(hull_at(Rational(pk)) / Rational(pk));
    }
    // means -> rams: r_k = eps p^k (m_k - m_{k-1}) / (p-1)
    std::vector<Rational> rams;
    Rational prev(0);
    Integer epk(eps);
    for (long k = 1; k <= w; ++k) {
        epk *= p;
        rams.push_back(Rational(epk) * (means[k - 1] - prev) / Rational(p - 1));
        prev = means[k - 1];
    }
    return HerbrandInvariant(p, 1, eps, std::move(rams));
}

namespace {

std::vector<Rational> slopes_to_rams(long p, long eps, const std::vector<Rational>& slopes) {
    // m_k = sum_{j<=k} (p-1) p^{j-k-1} s_j, then rams from mean differences.
    std::vector<Rational> means;
    Rational m(0);
    for (size_t k = 0; k < slopes.size(); ++k) {
        m = (m + Rational(p - 1) * slopes[k]) / Rational(p);
        means.push_back(m);
    }
    std::vector<Rational> rams;
    Rational prev(0);
    Integer epk(eps);
    for (size_t k = 0; k < means.size(); ++k) {
        epk *= p;
        rams.push_back(Rational(epk) * (means[k] - prev) / Rational(p - 1));
        prev = means[k];
    }
    return rams;
}

std::vector<Rational> means_to_rams(long p, long eps, const std::vector<Rational>& means) {
    std::vector<Rational> rams;
    Rational prev(0);
    Integer epk(eps);
    for (size_t k = 0; k < means.size(); ++k) {
        epk *= p;
        rams.push_back(Rational(epk) * (means[k] - prev) / Rational(p - 1));
        prev = means[k];
    }
    return rams;
}

}  // namespace

HerbrandInvariant parse_invariant(long p, const std::string& text) {
    auto bad = [&](const std::string& why) {
        throw std::invalid_argument("parse_invariant: " + why + " in '" + text + "'");
    };
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s.empty()) bad("empty input");
    char open = s[0];
    char close;
    InvariantForm form;
    switch (open) {
        case '[': close = ']'; form = InvariantForm::Slopes; break;
        case '(': close = ')'; form = InvariantForm::Rams; break;
        case '<': close = '>'; form = InvariantForm::Means; break;
        default: bad("expected '[', '(' or '<'"); return HerbrandInvariant(2, 1, 1, {});
    }
    auto end = s.find(close);
    if (end == std::string::npos) bad(std::string("missing '") + close + "'");
    std::vector<Rational> list = parse_rational_csv(s.substr(1, end - 1));
    long eps = 1, f = 1;
    size_t pos = end + 1;
    while (pos < s.size()) {
        char tag = s[pos++];
        size_t next = pos;
        while (next < s.size() && s[next] != '_' && s[next] != '^') ++next;
        if (next == pos) bad("empty tail value");
        long value = std::stol(s.substr(pos, next - pos));
        if (tag == '_')
            eps = value;
        else if (tag == '^')
            f = value;
        else
            bad("unexpected tail character");
        pos = next;
    }
    std::vector<Rational> rams;
    switch (form) {
        case InvariantForm::Rams: rams = std::move(list); break;
        case InvariantForm::Slopes: rams = slopes_to_rams(p, eps, list); break;
        case InvariantForm::Means: rams = means_to_rams(p, eps, list); break;
    }
    return HerbrandInvariant(p, f, eps, std::move(rams));
}

std::string print_invariant(const HerbrandInvariant& inv, InvariantForm form) {
    const std::vector<Rational>* list = nullptr;
    char open, close;
    switch (form) {
        case InvariantForm::Slopes: list = &inv.slopes(); open = '['; close = ']'; break;
        case InvariantForm::Means: list = &inv.means(); open = '<'; close = '>'; break;
        case InvariantForm::Rams: list = &inv.rams(); open = '('; close = ')'; break;
    }
    std::ostringstream os;
    os << open;
    for (size_t i = 0; i < list->size(); ++i) {
        if (i) os << ',';
        os << rational_to_string((*list)[i]);
    }
    os << close;
    if (inv.eps() != 1) os << '_' << inv.eps();
    if (inv.f() != 1) os << '^' << inv.f();
    return os.str();
}

}  // namespace padicfam
