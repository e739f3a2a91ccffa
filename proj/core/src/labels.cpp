#include "padicfam/labels.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace padicfam {

std::string letter_for(long n) {
    if (n < 1) throw std::invalid_argument("letter_for: index must be positive");
    std::string s;
    while (n > 0) {
        long r = (n - 1) % 26;
        s.insert(s.begin(), static_cast<char>('a' + r));
        n = (n - 1) / 26;
    }
    return s;
}

long letter_index(const std::string& letter) {
    if (letter.empty()) throw std::invalid_argument("letter_index: empty letter");
    long n = 0;
    for (char c : letter) {
        if (c < 'a' || c > 'z') throw std::invalid_argument("letter_index: bad character");
        n = n * 26 + (c - 'a' + 1);
    }
    return n;
}

std::string to_string(const FamilyLabel& l) {
    std::ostringstream os;
    os << l.p << "." << l.f << "." << l.e << "." << l.c << l.letter;
    return os.str();
}

std::string to_string(const RelativeFamilyLabel& l) {
    std::ostringstream os;
    os << "(" << l.base_field_label << ")-" << l.f << "." << l.e << "." << l.c << l.tiebreaker;
    return os.str();
}

std::string to_string(const FieldLabel& l) {
    std::ostringstream os;
    os << to_string(l.family) << l.subfamily << "." << l.counter;
    return os.str();
}

FamilyLabel parse_family_label(const std::string& text) {
    FamilyLabel l;
    size_t pos = 0;
    auto number = [&]() -> long {
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            throw std::invalid_argument("parse_family_label: expected digits in \"" + text + "\"");
        return std::stol(text.substr(start, pos - start));
    };
    auto dot = [&]() {
        if (pos >= text.size() || text[pos] != '.')
            throw std::invalid_argument("parse_family_label: expected '.' in \"" + text + "\"");
        ++pos;
    };
    l.p = number();
    dot();
    l.f = number();
    dot();
    l.e = number();
    dot();
    l.c = number();
    size_t start = pos;
    while (pos < text.size() && text[pos] >= 'a' && text[pos] <= 'z') ++pos;
    if (start == pos || pos != text.size())
        throw std::invalid_argument("parse_family_label: malformed letter in \"" + text + "\"");
    l.letter = text.substr(start);
    return l;
}

std::vector<std::string> assign_letters(const std::vector<HerbrandInvariant>& group) {
    std::vector<size_t> order(group.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return std::lexicographical_compare(group[a].rams().begin(), group[a].rams().end(),
                                            group[b].rams().begin(), group[b].rams().end());
    });
    for (size_t i = 1; i < order.size(); ++i)
        if (group[order[i - 1]].rams() == group[order[i]].rams())
            throw std::invalid_argument("assign_letters: duplicate invariants");
    std::vector<std::string> letters(group.size());
    for (size_t i = 0; i < order.size(); ++i) letters[order[i]] = letter_for(static_cast<long>(i + 1));
    return letters;
}

FamilyLabel make_family_label(const HerbrandInvariant& inv) {
    FamilyLabel l;
    l.p = inv.p();
    l.f = inv.f();
    l.e = inv.n() / inv.f();
    l.c = disc_exponent(inv).get_si();
    l.letter = "a";
    return l;
}

std::vector<LabeledField> field_labels(const GenericPolynomial& gp, const EisensteinDiagram& d,
                                       const FamilyLabel& family) {
    auto key_sigmas = subfamily_key_sigmas(gp, d);
    auto specs = enumerate_specializations(gp);

    struct Entry {
        std::vector<long> key, rest;
        std::map<long, long> assignment;
    };
    std::vector<Entry> entries;
    for (auto& sp : specs) {
        Entry e;
        for (const auto& [sigma, val] : sp.assignment) {
            if (std::binary_search(key_sigmas.begin(), key_sigmas.end(), sigma))
                e.key.push_back(val);  // assignment map iterates sigma-ascending
            else
                e.rest.push_back(val);
        }
        e.assignment = std::move(sp.assignment);
        entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.key != b.key) return a.key < b.key;
        return a.rest < b.rest;
    });

    std::vector<LabeledField> out;
    long ell = 0, j = 0;
    const std::vector<long>* prev_key = nullptr;
    for (auto& e : entries) {
        if (!prev_key || *prev_key != e.key) {
            ++ell;
            j = 0;
        }
        ++j;
        prev_key = &e.key;
        LabeledField lf;
        lf.label.family = family;
        lf.label.subfamily = ell;
        lf.label.counter = j;
        lf.assignment = std::move(e.assignment);
        out.push_back(std::move(lf));
    }
    return out;
}

}  // namespace padicfam
