#include "padicfam/compose.hpp"

#include <stdexcept>

namespace padicfam {

namespace {

std::vector<Rational> initial_vector(const HerbrandInvariant& base, const HerbrandInvariant& top) {
    if (base.p() != top.p()) throw std::invalid_argument("compose: mismatched primes");
    std::vector<Rational> v;
    for (const auto& t : base.rams()) v.push_back(Rational(top.eps()) * t);
    for (const auto& t : top.rams()) v.push_back(t);
    return v;
}

}  // namespace

HerbrandInvariant compose(const HerbrandInvariant& base, const HerbrandInvariant& top) {
    long p = base.p();
    std::vector<Rational> v = initial_vector(base, top);
    // bubble to fixpoint; the rewrite is confluent so strategy is irrelevant
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                Rational a = v[i], b = v[i + 1];
                v[i] = b;
                v[i + 1] = b + Rational(p) * (a - b);
                changed = true;
            }
        }
    }
    return HerbrandInvariant(p, base.f() * top.f(), base.eps() * top.eps(), std::move(v));
}

std::vector<Rational> compose_slopes(const HerbrandInvariant& base, const HerbrandInvariant& top) {
    long p = base.p();
    std::vector<Rational> v = initial_vector(base, top);
    // inverse of the ram rewrite: adjacent increasing (a,b) becomes
    // (a + (b-a)/p, a) until weakly decreasing; reversing gives eps * s_k
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] < v[i + 1]) {
                Rational a = v[i], b = v[i + 1];
                v[i] = a + (b - a) / Rational(p);
                v[i + 1] = a;
                changed = true;
            }
        }
    }
    return {v.rbegin(), v.rend()};
}

HerbrandInvariant relative_to_absolute(const HerbrandInvariant& base_over_qp,
                                       const HerbrandInvariant& rel) {
    return compose(base_over_qp, rel);
}

}  // namespace padicfam
