#include "padicfam/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "padicfam/enumeration.hpp"

namespace padicfam {

namespace {

std::vector<std::string> rationals_to_strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& r : v) out.push_back(rational_to_string(r));
    return out;
}

std::vector<long> primes_below(long n) {
    std::vector<long> out;
    for (long p = 2; p < n; ++p)
        if (is_prime(Integer(p))) out.push_back(p);
    return out;
}

}  // namespace

FamilyRecord make_record(const HerbrandInvariant& inv, const FamilyLabel& label) {
    FamilyRecord r;
    r.label = to_string(label);
    r.p = inv.p();
    r.f = inv.f();
    r.e = inv.e();
    r.eps = inv.eps();
    r.w = inv.w();
    r.n = inv.n();
    r.c = disc_exponent(inv).get_si();
    r.rams = rationals_to_strings(inv.rams());
    r.slopes = rationals_to_strings(inv.slopes());
    r.means = rationals_to_strings(inv.means());

    // geometry over the family's own unramified part: q = p^f
    Integer q = pow_int(inv.p(), static_cast<unsigned long>(inv.f()));
    HerbrandInvariant tot(inv.p(), 1, inv.eps(), inv.rams());
    EisensteinDiagram d = build_diagram(tot, q);
    r.mass = mass(d).get_str();
    r.poly_count = eis_count(d).get_str();
    r.ambiguity_abstract = amb_abstract(inv).get_str();
    r.ambiguity_over_k = amb_over(d).get_str();
    r.serre_mass = rational_to_string(serre_mass(d));
    r.rigid_over_k = rigid_over(d);
    r.alpha = d.alpha;
    r.beta = d.beta;
    r.gamma = d.gamma;
    r.delta = d.delta;
    if (r.rigid_over_k) r.field_count = r.mass;
    r.generic_poly = to_string(generic_from_diagram(d));
    for (const auto& b : d.bands) r.arithmetic_bands.push_back(b.arithmetic);
    r.base = BaseProfile(inv.p());
    return r;
}

namespace {

// all records for one (p, n) cell, ordered by (f, e, c, letter rank)
std::vector<FamilyRecord> cell_records(long p, long n) {
    auto fams = enumerate_families(p, n, BaseProfile(p));
    std::map<std::tuple<long, long, long>, std::vector<HerbrandInvariant>> groups;
    for (const auto& inv : fams)
        groups[{inv.f(), inv.e(), disc_exponent(inv).get_si()}].push_back(inv);
    std::vector<FamilyRecord> out;
    for (const auto& [key, group] : groups) {
        auto letters = assign_letters(group);
        std::vector<size_t> order(group.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return letter_index(letters[a]) < letter_index(letters[b]);
        });
        for (size_t i : order) {
            FamilyLabel label{group[i].p(), group[i].f(), group[i].e(), std::get<2>(key),
                              letters[i]};
            out.push_back(make_record(group[i], label));
        }
    }
    return out;
}

}  // namespace

std::vector<FamilyRecord> build_catalog(long p_max, long n_max, int threads) {
    std::vector<std::pair<long, long>> cells;
    for (long p : primes_below(p_max))
        for (long n = 1; n <= n_max; ++n) cells.emplace_back(p, n);

    std::vector<std::vector<FamilyRecord>> slots(cells.size());
    if (threads <= 1) {
        for (size_t i = 0; i < cells.size(); ++i)
            slots[i] = cell_records(cells[i].first, cells[i].second);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                slots[i] = cell_records(cells[i].first, cells[i].second);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<FamilyRecord> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

std::string record_to_json_line(const FamilyRecord& r) {
    nlohmann::json j;
    j["label"] = r.label;
    j["p"] = r.p;
    j["f"] = r.f;
    j["e"] = r.e;
    j["eps"] = r.eps;
    j["w"] = r.w;
    j["n"] = r.n;
    j["c"] = r.c;
    j["rams"] = r.rams;
    j["slopes"] = r.slopes;
    j["means"] = r.means;
    j["mass"] = r.mass;
    j["poly_count"] = r.poly_count;
    j["ambiguity_abstract"] = r.ambiguity_abstract;
    j["ambiguity_over_k"] = r.ambiguity_over_k;
    j["serre_mass"] = r.serre_mass;
    j["rigid_over_k"] = r.rigid_over_k;
    j["counts"] = {{"alpha", r.alpha}, {"beta", r.beta}, {"gamma", r.gamma}, {"delta", r.delta}};
    if (r.field_count)
        j["field_count"] = *r.field_count;
    else
        j["field_count"] = nullptr;
    j["generic_poly"] = r.generic_poly;
    j["arithmetic_bands"] = r.arithmetic_bands;
    j["base"] = {{"p", r.base.p}, {"e", r.base.e}, {"f", r.base.f}};
    return j.dump();
}

FamilyRecord record_from_json_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    FamilyRecord r;
    r.label = j.at("label").get<std::string>();
    r.p = j.at("p").get<long>();
    r.f = j.at("f").get<long>();
    r.e = j.at("e").get<long>();
    r.eps = j.at("eps").get<long>();
    r.w = j.at("w").get<long>();
    r.n = j.at("n").get<long>();
    r.c = j.at("c").get<long>();
    r.rams = j.at("rams").get<std::vector<std::string>>();
    r.slopes = j.at("slopes").get<std::vector<std::string>>();
    r.means = j.at("means").get<std::vector<std::string>>();
    r.mass = j.at("mass").get<std::string>();
    r.poly_count = j.at("poly_count").get<std::string>();
    r.ambiguity_abstract = j.at("ambiguity_abstract").get<std::string>();
    r.ambiguity_over_k = j.at("ambiguity_over_k").get<std::string>();
    r.serre_mass = j.at("serre_mass").get<std::string>();
    r.rigid_over_k = j.at("rigid_over_k").get<bool>();
    const auto& counts = j.at("counts");
    r.alpha = counts.at("alpha").get<long>();
    r.beta = counts.at("beta").get<long>();
    r.gamma = counts.at("gamma").get<long>();
    r.delta = counts.at("delta").get<long>();
    if (!j.at("field_count").is_null()) r.field_count = j.at("field_count").get<std::string>();
    r.generic_poly = j.at("generic_poly").get<std::string>();
    r.arithmetic_bands = j.at("arithmetic_bands").get<std::vector<bool>>();
    const auto& base = j.at("base");
    r.base = BaseProfile(base.at("p").get<long>(), base.at("e").get<long>(),
                         base.at("f").get<long>());
    return r;
}

void export_json(const std::vector<FamilyRecord>& records, const std::string& out_path) {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("export_json: cannot open " + out_path);
    for (const auto& r : records) f << record_to_json_line(r) << "\n";
    if (!f) throw std::runtime_error("export_json: write failure on " + out_path);
}

std::vector<FamilyRecord> import_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("import_json: cannot open " + path);
    std::vector<FamilyRecord> out;
    std::string line;
    long lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.push_back(record_from_json_line(line));
        } catch (const std::exception& ex) {
            throw std::runtime_error("import_json: " + path + ":" + std::to_string(lineno) + ": " +
                                     ex.what());
        }
    }
    return out;
}

}  // namespace padicfam
