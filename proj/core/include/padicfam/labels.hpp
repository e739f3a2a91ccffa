#ifndef PADICFAM_LABELS_HPP
#define PADICFAM_LABELS_HPP

#include <map>
#include <string>
#include <vector>

#include "padicfam/generic_poly.hpp"
#include "padicfam/invariant.hpp"

namespace padicfam {

struct FamilyLabel {
    long p = 2, f = 1, e = 1, c = 0;
    std::string letter = "a";  // base-26 bijective, lowercase
};

struct RelativeFamilyLabel {
    std::string base_field_label;
    long f = 1, e = 1, c = 0;
    std::string tiebreaker;
};

struct FieldLabel {
    FamilyLabel family;
    long subfamily = 1;  // ell
    long counter = 1;    // j
};

std::string to_string(const FamilyLabel& l);
std::string to_string(const RelativeFamilyLabel& l);
std::string to_string(const FieldLabel& l);

FamilyLabel parse_family_label(const std::string& text);

/// n -> a, b, ..., z, aa, ab, ... (1-based bijective base 26).
std::string letter_for(long n);
long letter_index(const std::string& letter);

/// Letters for a group of invariants sharing (p, f, e, c), assigned in
/// lexicographically ascending ram-vector order.  Throws on duplicates.
std::vector<std::string> assign_letters(const std::vector<HerbrandInvariant>& group);

/// Label of an invariant that is alone in its (p, f, e, c) group.
FamilyLabel make_family_label(const HerbrandInvariant& inv);

/// Deterministic field labels for all specializations of a family over Q_p:
/// subfamily index by ascending subfamily key, counter by ascending remaining
/// coefficient tuple.
struct LabeledField {
    FieldLabel label;
    std::map<long, long> assignment;
};
std::vector<LabeledField> field_labels(const GenericPolynomial& gp, const EisensteinDiagram& d,
                                       const FamilyLabel& family);

}  // namespace padicfam

#endif
