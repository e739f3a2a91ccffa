#include "padicfam/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace padicfam {

RamSet ram_set(long p, long rho, long E) {
    if (rho < 1 || E < 1) throw std::invalid_argument("ram_set: rho and E must be positive");
    RamSet rs;
    rs.p = p;
    rs.rho = rho;
    rs.E = E;
    Rational bound = Rational(Integer(p) * E, p - 1);
    bound.canonicalize();
    Integer mod = pow_int(p, static_cast<unsigned long>(rho)) - 1;
    for (Integer b = 1; b <= mod; ++b) {
        if (!mpz_divisible_p(mod.get_mpz_t(), b.get_mpz_t())) continue;
        // numerators scanned up to ceil(b * pE/(p-1))
        Integer amax = ceil_int(bound * Rational(b));
        for (Integer a = 1; a <= amax; ++a) {
            if (a % p == 0) continue;
            if (gcd(a, b) != 1) continue;
            Rational r(a, b);
            r.canonicalize();
            if (r < bound) rs.geometric.push_back(r);
        }
    }
    std::sort(rs.geometric.begin(), rs.geometric.end());
    if (rho == 1) rs.arithmetic = bound;
    return rs;
}

namespace {

void enumerate_wild_rec(long p, long w, long eps, long baseE, long pos, const Rational* prev,
                        std::vector<Rational>& acc, std::vector<std::vector<Rational>>& out) {
    if (pos == w) {
        out.push_back(acc);
        return;
    }
    Integer E = Integer(baseE) * eps * pow_int(p, static_cast<unsigned long>(pos));
    for (long rho = 1; rho <= w - pos; ++rho) {
        RamSet rs = ram_set(p, rho, E.get_si());
        std::vector<Rational> values = rs.geometric;
        if (rs.arithmetic) values.push_back(*rs.arithmetic);
        for (const auto& v : values) {
            if (prev && v <= *prev) continue;
            for (long i = 0; i < rho; ++i) acc.push_back(v);
            enumerate_wild_rec(p, w, eps, baseE, pos + rho, &v, acc, out);
            for (long i = 0; i < rho; ++i) acc.pop_back();
        }
    }
}

}  // namespace

std::vector<std::vector<Rational>> enumerate_wild(long p, long w, long eps, long baseE) {
    if (w < 0) throw std::invalid_argument("enumerate_wild: w must be nonnegative");
    std::vector<std::vector<Rational>> out;
    std::vector<Rational> acc;
    enumerate_wild_rec(p, w, eps, baseE, 0, nullptr, acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HerbrandInvariant> enumerate_families(long p, long n, const BaseProfile& base) {
    if (base.p != p) throw std::invalid_argument("enumerate_families: base.p != p");
    if (n < 1) throw std::invalid_argument("enumerate_families: n must be positive");
    std::vector<HerbrandInvariant> out;
    for (long f = 1; f <= n; ++f) {
        if (n % f != 0) continue;
        long rem = n / f;
        long w = static_cast<long>(ord_p(Integer(rem), Integer(p)));
        long eps = rem / pow_int(p, static_cast<unsigned long>(w)).get_si();
        for (auto& rams : enumerate_wild(p, w, eps, base.e))
            out.emplace_back(p, f, eps, std::move(rams));
    }
    return out;
}

bool is_compatible(const HerbrandInvariant& inv, const BaseProfile& base) {
    if (inv.p() != base.p) return false;
    const auto& rams = inv.rams();
    long w = inv.w();
    // block rule
    long pos = 0;
    while (pos < w) {
        long rho = 1;
        while (pos + rho < w && rams[pos + rho] == rams[pos]) ++rho;
        Integer E = Integer(base.e) * inv.eps() * pow_int(inv.p(), static_cast<unsigned long>(pos));
        RamSet rs = ram_set(inv.p(), rho, E.get_si());
        const Rational& v = rams[pos];
        bool ok = std::binary_search(rs.geometric.begin(), rs.geometric.end(), v) ||
                  (rs.arithmetic && v == *rs.arithmetic);
        if (!ok) return false;
        pos += rho;
    }
    // cube criterion on small rams: (0, e_K]^w, integral entries only at e_K
    for (const auto& rstar : inv.small_rams()) {
        if (rstar <= 0 || rstar > base.e) return false;
        if (is_integer(rstar) && rstar != base.e) return false;
    }
    return true;
}

Integer tame_field_count(const Integer& q, long f, long eps) {
    Integer qf = 1;
    for (long i = 0; i < f; ++i) qf *= q;
    Integer g = gcd(Integer(eps), qf - 1);
    long n = g.get_si();
    if (n <= 1) return 1;
    long qm = Integer(q % g).get_si();
    std::vector<bool> seen(n, false);
    Integer orbits = 0;
    for (long i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++orbits;
        long j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<long>((static_cast<long long>(j) * qm) % n);
        }
    }
    return orbits;
}

}  // namespace padicfam
