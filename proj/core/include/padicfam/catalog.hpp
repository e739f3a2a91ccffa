#ifndef PADICFAM_CATALOG_HPP
#define PADICFAM_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "padicfam/diagram.hpp"
#include "padicfam/labels.hpp"

namespace padicfam {

/// One exported family page.  Bigint fields travel as decimal strings so the
/// JSON survives consumers that only have 64-bit integers.
struct FamilyRecord {
    std::string label;
    long p = 2, f = 1, e = 1, eps = 1, w = 0, n = 1, c = 0;
    std::vector<std::string> rams, slopes, means;
    std::string mass, poly_count;                  // decimal strings
    std::string ambiguity_abstract, ambiguity_over_k;
    std::string serre_mass;                        // rational string
    bool rigid_over_k = false;
    long alpha = 0, beta = 0, gamma = 0, delta = 0;
    std::optional<std::string> field_count;        // = mass iff rigid_over_k
    std::string generic_poly;
    std::vector<bool> arithmetic_bands;
    BaseProfile base;

    bool operator==(const FamilyRecord&) const = default;
};

/// Record for one family over Q_p (base = Q_{p}), label supplied by the caller.
FamilyRecord make_record(const HerbrandInvariant& inv, const FamilyLabel& label);

/// All families over Q_p for primes p < p_max and degrees n <= n_max, in
/// deterministic (p, n, f, e, c, letter) order.  threads > 1 shards the
/// per-(p, n) work; output order is unchanged.
std::vector<FamilyRecord> build_catalog(long p_max, long n_max, int threads = 1);

/// Newline-delimited JSON, one record per line.
void export_json(const std::vector<FamilyRecord>& records, const std::string& out_path);
std::vector<FamilyRecord> import_json(const std::string& path);

std::string record_to_json_line(const FamilyRecord& r);
FamilyRecord record_from_json_line(const std::string& line);

}  // namespace padicfam

#endif
