#include "padicfam/unislope.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace padicfam {

namespace {

long mod_pos(long a, long p) { return ((a % p) + p) % p; }

// dense coefficient vectors over F_p, constant term first, no trailing zeros
using Poly = std::vector<long>;

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }

Poly mul(const Poly& a, const Poly& b, long p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = mod_pos(out[i + j] + a[i] * b[j], p);
    return trim(out);
}

// division with remainder; divisor monic
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, long p) {
    if (b.empty()) throw std::invalid_argument("divmod by zero polynomial");
    Poly q(a.size(), 0);
    while (degree(a) >= degree(b)) {
        long shift = degree(a) - degree(b);
        long coef = a.back();
        q[static_cast<size_t>(shift)] = mod_pos(q[static_cast<size_t>(shift)] + coef, p);
        for (size_t i = 0; i < b.size(); ++i)
            a[i + static_cast<size_t>(shift)] =
                mod_pos(a[i + static_cast<size_t>(shift)] - coef * b[i], p);
        a = trim(a);
    }
    return {trim(q), a};
}

Poly from_rcp(const ResidualCharPoly& rcp) {
    // f(y) = y^w + sum_{j=1}^{w} v_j y^{w-j}
    Poly f(static_cast<size_t>(rcp.w) + 1, 0);
    f[static_cast<size_t>(rcp.w)] = 1;
    for (long j = 1; j <= rcp.w; ++j)
        f[static_cast<size_t>(rcp.w - j)] = mod_pos(rcp.coeffs[static_cast<size_t>(j - 1)], rcp.p);
    return f;
}

void check_rcp(const ResidualCharPoly& rcp) {
    if (rcp.w < 1 || static_cast<long>(rcp.coeffs.size()) != rcp.w)
        throw std::invalid_argument("ResidualCharPoly: coefficient vector must have length w");
    if (mod_pos(rcp.coeffs.back(), rcp.p) == 0)
        throw std::invalid_argument("ResidualCharPoly: constant term v_w must be nonzero");
}

}  // namespace

HerbrandInvariant unislope_invariant(long p, long w) {
    if (w < 1) throw std::invalid_argument("unislope_invariant: need w >= 1");
    std::vector<Rational> rams(static_cast<size_t>(w), Rational(1));
    return HerbrandInvariant(p, 1, 1, rams);
}

ResidualCharPoly residual_from_assignment(long p, long w, const std::map<long, long>& assignment) {
    ResidualCharPoly rcp;
    rcp.p = p;
    rcp.w = w;
    Integer pw = pow_int(p, static_cast<unsigned long>(w));
    for (long j = 1; j <= w; ++j) {
        Integer sigma_big =
            j == w ? Integer(pw - 1) : Integer(pw - pow_int(p, static_cast<unsigned long>(w - j)));
        long sigma = sigma_big.get_si();
        auto it = assignment.find(sigma);
        if (it == assignment.end())
            throw std::invalid_argument("residual_from_assignment: missing coefficient at sigma=" +
                                        std::to_string(sigma));
        rcp.coeffs.push_back(mod_pos(it->second, p));
    }
    check_rcp(rcp);
    return rcp;
}

long galois_order_u(const ResidualCharPoly& rcp) {
    check_rcp(rcp);
    Poly f = from_rcp(rcp);
    Poly y = {0, 1};
    Poly acc = {1};
    for (long u = 1;; ++u) {
        acc = divmod(mul(acc, y, rcp.p), f, rcp.p).second;
        if (acc == Poly{1}) return u;
        if (acc.empty()) throw std::logic_error("galois_order_u: y is a zero divisor");
    }
}

std::pair<long, long> aut_and_poly_count(const ResidualCharPoly& rcp) {
    check_rcp(rcp);
    long f1 = 1;  // leading y^w evaluated at 1
    for (long v : rcp.coeffs) f1 = mod_pos(f1 + v, rcp.p);
    return f1 == 0 ? std::make_pair(rcp.p, rcp.p) : std::make_pair(1L, 1L);
}

std::vector<std::pair<std::vector<long>, long>> factor_residual(const ResidualCharPoly& rcp) {
    check_rcp(rcp);
    long p = rcp.p;
    Poly rem = from_rcp(rcp);
    std::vector<std::pair<std::vector<long>, long>> factors;
    // trial division by monic polynomials of ascending degree; smaller factors
    // are removed first, so any successful divisor is irreducible
    for (long d = 1; 2 * d <= degree(rem); ++d) {
        long count = 1;
        for (long n = 0; n < pow_int(p, static_cast<unsigned long>(d)).get_si(); ++n) {
            Poly cand(static_cast<size_t>(d) + 1, 0);
            cand[static_cast<size_t>(d)] = 1;
            long nn = n;
            for (long i = 0; i < d; ++i) {
                cand[static_cast<size_t>(i)] = nn % p;
                nn /= p;
            }
            long mult = 0;
            while (degree(rem) >= d) {
                auto [q, r] = divmod(rem, cand, p);
                if (!r.empty()) break;
                rem = q;
                ++mult;
            }
            if (mult > 0) factors.emplace_back(cand, mult);
        }
        (void)count;
    }
    if (degree(rem) > 0) factors.emplace_back(rem, 1);
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return std::lexicographical_compare(a.first.rbegin(), a.first.rend(), b.first.rbegin(),
                                            b.first.rend());
    });
    return factors;
}

long subfield_count(const ResidualCharPoly& rcp) {
    long n = 1;
    for (const auto& [f, m] : factor_residual(rcp)) {
        n *= m + 1;
        (void)f;
    }
    return n;
}

std::vector<Integer> jump_set_unislope_Q2(const std::vector<int>& v, int c) {
    long w = static_cast<long>(v.size());
    if (w < 1 || v.back() % 2 == 0)
        throw std::invalid_argument("jump_set_unislope_Q2: need v_w = 1");
    std::vector<Integer> j(static_cast<size_t>(w) + 1);
    j[0] = 1;
    int V = 0;
    for (long k = 1; k <= w; ++k) {
        V = (V + v[static_cast<size_t>(k - 1)]) % 2;
        if (V == 0)
            j[static_cast<size_t>(k)] = pow_int(2, static_cast<unsigned long>(k + 1)) - 1;
        else if (k < w)
            j[static_cast<size_t>(k)] = 2 * j[static_cast<size_t>(k - 1)];
        else
            j[static_cast<size_t>(k)] =
                pow_int(2, static_cast<unsigned long>(w + 1)) + 2 * c - 2;
    }
    return j;
}

std::vector<std::vector<Rational>> orbit_hidden_slope_candidates(long p, long rho) {
    if (rho < 1) throw std::invalid_argument("orbit_hidden_slope_candidates: need rho >= 1");
    Integer mod_big = pow_int(p, static_cast<unsigned long>(rho)) - 1;
    long mod = mod_big.get_si();
    long lo = mod / (p - 1);            // (p^rho - 1)/(p - 1), exact
    long hi = p * mod / (p - 1);        // window is [lo, hi)
    std::vector<bool> seen(static_cast<size_t>(std::max(mod, 1L)), false);
    std::vector<std::vector<Rational>> out;
    for (long start = 0; start < std::max(mod, 1L); ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::set<long> orbit;
        long x = start;
        do {
            orbit.insert(x);
            seen[static_cast<size_t>(x)] = true;
            x = (x * p) % mod;
        } while (x != start);
        std::vector<Rational> vals;
        for (long n = lo; n < hi; ++n)
            if (orbit.count(n % mod)) {
                long m = n;
                while (m % p == 0) m /= p;
                Rational r(m, mod);
                r.canonicalize();
                vals.push_back(r);
            }
        std::sort(vals.begin(), vals.end());
        out.push_back(std::move(vals));
    }
    return out;
}

}  // namespace padicfam
