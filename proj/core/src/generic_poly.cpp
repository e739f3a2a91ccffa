#include "padicfam/generic_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace padicfam {

namespace {

char kind_letter(CoeffKind k) {
    switch (k) {
        case CoeffKind::D: return 'd';
        case CoeffKind::A: return 'a';
        case CoeffKind::B: return 'b';
        case CoeffKind::C: return 'c';
    }
    return '?';
}

CoeffKind kind_from_letter(char c) {
    switch (c) {
        case 'd': return CoeffKind::D;
        case 'a': return CoeffKind::A;
        case 'b': return CoeffKind::B;
        case 'c': return CoeffKind::C;
    }
    throw std::invalid_argument(std::string("unknown coefficient kind '") + c + "'");
}

std::string pi_power(long jp1, PolyStyle style) {
    std::ostringstream os;
    if (style == PolyStyle::Ascii) {
        os << "pi";
        if (jp1 > 1) os << "^" << jp1;
    } else {
        os << "\\pi";
        if (jp1 > 1) os << "^{" << jp1 << "}";
    }
    return os.str();
}

std::string coeff_symbol(CoeffKind k, long sigma, PolyStyle style) {
    std::ostringstream os;
    if (style == PolyStyle::Ascii)
        os << kind_letter(k) << sigma;
    else
        os << kind_letter(k) << "_{" << sigma << "}";
    return os.str();
}

}  // namespace

GenericPolynomial generic_from_diagram(const EisensteinDiagram& d) {
    GenericPolynomial gp;
    gp.e = d.inv.e();
    gp.p = d.inv.p();
    for (const auto& pt : d.points) {
        if (!is_drawn(pt.kind) || is_negligible(pt.kind)) continue;
        CoeffKind k;
        switch (pt.kind) {
            case PointKind::DCritical: k = CoeffKind::D; break;
            case PointKind::A: k = CoeffKind::A; break;
            case PointKind::B: k = CoeffKind::B; break;
            // bottom-edge criticals keep the in-band symbol b
            case PointKind::CCritical: k = pt.bottom_critical ? CoeffKind::B : CoeffKind::C; break;
            default: continue;
        }
        gp.terms[pt.sigma] = k;
    }
    gp.constant_one = gp.terms.count(0) == 0;
    return gp;
}

std::string to_string(const GenericPolynomial& gp, PolyStyle style) {
    const char* mul = style == PolyStyle::Ascii ? "*" : " ";
    // bucket terms by x-power i, ascending sigma within a bucket
    std::map<long, std::vector<std::string>> groups;
    if (gp.constant_one) groups[0].push_back(pi_power(1, style));
    for (const auto& [sigma, kind] : gp.terms) {
        long i = sigma % gp.e;
        long j = sigma / gp.e;
        groups[i].push_back(pi_power(j + 1, style) + mul + coeff_symbol(kind, sigma, style));
    }
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, parts] : groups) {
        if (!first) os << " + ";
        first = false;
        std::string inner;
        for (size_t t = 0; t < parts.size(); ++t) {
            if (t) inner += " + ";
            inner += parts[t];
        }
        if (parts.size() > 1) inner = "(" + inner + ")";
        os << inner;
        if (i == 1)
            os << mul << "x";
        else if (i > 1)
            os << mul << "x^" << (style == PolyStyle::Ascii ? std::to_string(i)
                                                            : "{" + std::to_string(i) + "}");
    }
    if (!first) os << " + ";
    os << "x^" << (style == PolyStyle::Ascii ? std::to_string(gp.e)
                                             : "{" + std::to_string(gp.e) + "}");
    return os.str();
}

namespace {

// A monomial of the generic-polynomial grammar: integer * pi^a * x^b * [symbol].
struct Mono {
    Integer num = 1;
    long pipow = 0;
    long xpow = 0;
    std::string symbol;  // empty when none
};

using Monos = std::vector<Mono>;

Monos mul(const Monos& lhs, const Monos& rhs) {
    Monos out;
    for (const auto& a : lhs)
        for (const auto& b : rhs) {
            Mono m;
            m.num = a.num * b.num;
            m.pipow = a.pipow + b.pipow;
            m.xpow = a.xpow + b.xpow;
            if (!a.symbol.empty() && !b.symbol.empty())
                throw std::invalid_argument("parse_generic: product of two coefficient symbols");
            m.symbol = a.symbol.empty() ? b.symbol : a.symbol;
            out.push_back(m);
        }
    return out;
}

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw std::invalid_argument("parse_generic: " + why + " at offset " + std::to_string(pos));
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    Monos factor() {
        skip_ws();
        if (eat('(')) {
            Monos inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Mono m;
            m.num = integer();
            return {m};
        }
        if (s.compare(pos, 2, "pi") == 0 && (pos + 2 >= s.size() || s[pos + 2] != '^' ||
                                             true)) {
            pos += 2;
            Mono m;
            m.pipow = eat('^') ? integer() : 1;
            return {m};
        }
        if (c == 'x') {
            ++pos;
            Mono m;
            m.xpow = eat('^') ? integer() : 1;
            return {m};
        }
        if (c == 'd' || c == 'a' || c == 'b' || c == 'c') {
            ++pos;
            Mono m;
            m.symbol = std::string(1, c) + std::to_string(integer());
            return {m};
        }
        fail("unexpected character");
    }

    Monos term() {
        Monos out = factor();
        while (true) {
            skip_ws();
            if (eat('*')) {
                out = mul(out, factor());
            } else if (pos < s.size() && (s[pos] == '(' || std::isalpha(static_cast<unsigned char>(s[pos])))) {
                out = mul(out, factor());  // implicit multiplication
            } else {
                break;
            }
        }
        return out;
    }

    Monos expr() {
        Monos out = term();
        while (eat('+')) {
            Monos t = term();
            out.insert(out.end(), t.begin(), t.end());
        }
        return out;
    }
};

}  // namespace

GenericPolynomial parse_generic(const std::string& text, long p) {
    Parser parser(text);
    Monos monos = parser.expr();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");

    // leading term x^e identifies the degree
    long e = 0;
    for (const auto& m : monos)
        if (m.symbol.empty() && m.pipow == 0 && m.num == 1) e = std::max(e, m.xpow);
    if (e == 0) throw std::invalid_argument("parse_generic: missing monic leading term x^e");

    GenericPolynomial gp;
    gp.e = e;
    gp.p = p;
    gp.constant_one = false;
    for (const auto& m : monos) {
        if (m.symbol.empty()) {
            if (m.pipow == 0 && m.num == 1 && m.xpow == e) continue;  // x^e
            if (m.pipow == 1 && m.num == 1 && m.xpow == 0) {
                gp.constant_one = true;  // the forced f_0 = 1 term
                continue;
            }
            throw std::invalid_argument("parse_generic: unexpected symbol-free monomial");
        }
        CoeffKind kind = kind_from_letter(m.symbol[0]);
        long sigma = std::stol(m.symbol.substr(1));
        if (m.xpow != sigma % e || m.pipow != sigma / e + 1)
            throw std::invalid_argument("parse_generic: term " + m.symbol +
                                        " has inconsistent pi/x powers");
        gp.terms[sigma] = kind;
    }
    return gp;
}

std::vector<Integer> specialize(const GenericPolynomial& gp, const std::map<long, long>& assignment) {
    std::vector<Integer> coeffs(static_cast<size_t>(gp.e) + 1, 0);
    coeffs[static_cast<size_t>(gp.e)] = 1;
    Integer pi(gp.p);
    if (gp.constant_one) coeffs[0] += pi;
    for (const auto& [sigma, kind] : gp.terms) {
        auto it = assignment.find(sigma);
        if (it == assignment.end())
            throw std::invalid_argument("specialize: missing value for sigma=" + std::to_string(sigma));
        long i = sigma % gp.e;
        long j = sigma / gp.e;
        coeffs[static_cast<size_t>(i)] += Integer(it->second) * pow_int(pi, static_cast<unsigned long>(j + 1));
        (void)kind;
    }
    return coeffs;
}

std::vector<Specialization> enumerate_specializations(const GenericPolynomial& gp) {
    long p = gp.p;
    std::vector<std::pair<long, bool>> slots;  // sigma, nonzero-required
    for (const auto& [sigma, kind] : gp.terms)
        slots.emplace_back(sigma, kind == CoeffKind::D || kind == CoeffKind::A);
    std::vector<Specialization> out;
    std::vector<long> vals(slots.size());
    for (size_t i = 0; i < slots.size(); ++i) vals[i] = slots[i].second ? 1 : 0;
    while (true) {
        Specialization sp;
        for (size_t i = 0; i < slots.size(); ++i) sp.assignment[slots[i].first] = vals[i];
        sp.coeffs = specialize(gp, sp.assignment);
        out.push_back(std::move(sp));
        // odometer, last slot fastest
        size_t i = slots.size();
        while (i > 0) {
            --i;
            if (++vals[i] < p) break;
            vals[i] = slots[i].second ? 1 : 0;
            if (i == 0) return out;
        }
        if (slots.empty()) return out;
    }
}

bool is_eisenstein(const std::vector<Integer>& coeffs, long p) {
    if (coeffs.size() < 2 || coeffs.back() != 1) return false;
    Integer P(p);
    for (size_t i = 0; i + 1 < coeffs.size(); ++i)
        if (coeffs[i] % P != 0) return false;
    return coeffs[0] % (P * P) != 0;
}

std::vector<long> subfamily_key_sigmas(const GenericPolynomial& gp, const EisensteinDiagram& d) {
    std::vector<long> out;
    if (d.inv.w() == 0) return out;
    Rational s_top = d.inv.slopes().back();
    for (const auto& b : d.bands) {
        if (b.top != s_top) continue;  // only bands in the final slope segment
        Rational sig = Rational(d.inv.e()) * b.bottom;
        if (!is_integer(sig)) continue;
        long sigma = sig.get_num().get_si();
        if (gp.terms.count(sigma)) out.push_back(sigma);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> subfamily_key(const GenericPolynomial& gp, const EisensteinDiagram& d,
                                const std::map<long, long>& assignment) {
    std::vector<long> key;
    for (long sigma : subfamily_key_sigmas(gp, d)) {
        auto it = assignment.find(sigma);
        if (it == assignment.end())
            throw std::invalid_argument("subfamily_key: missing value for sigma=" +
                                        std::to_string(sigma));
        key.push_back(it->second);
    }
    return key;
}

std::string poly_to_string(const std::vector<Integer>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coeffs[i].get_str();
        } else {
            if (coeffs[i] != 1) os << coeffs[i].get_str() << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace padicfam
