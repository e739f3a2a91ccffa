#include "padicfam/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace padicfam {

Integer floor_int(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Integer ceil_int(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

Integer pow_int(const Integer& base, unsigned long exp) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

unsigned long ord_p(Integer n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("ord_p: zero argument");
    unsigned long v = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++v;
    }
    return v;
}

Rational parse_rational(const std::string& text) {
    auto bad = [&] { throw std::invalid_argument("malformed rational: '" + text + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer n(text);
            return Rational(n);
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) bad();
        Rational r(num, den);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        bad();
    }
    return Rational();  // unreachable
}

std::string rational_to_string(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string rational_to_decimal(const Rational& r, int digits) {
    Integer scale = pow_int(10, static_cast<unsigned long>(digits));
    Rational scaled = r * Rational(scale);
    // round half away from zero
    Integer n = scaled >= 0 ? floor_int(scaled + Rational(1, 2)) : ceil_int(scaled - Rational(1, 2));
    bool neg = n < 0;
    Integer a = abs(n);
    std::string ds = a.get_str();
    if (static_cast<int>(ds.size()) <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
    std::string whole = ds.substr(0, ds.size() - digits);
    std::string frac = ds.substr(ds.size() - digits);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    std::string out = (neg ? "-" : "") + whole;
    if (!frac.empty()) out += "." + frac;
    return out;
}

std::vector<Rational> parse_rational_csv(const std::string& text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // trim spaces
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty entry in rational list");
        out.push_back(parse_rational(item.substr(b, e - b + 1)));
    }
    return out;
}

bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

}  // namespace padicfam
