#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "padicfam/catalog.hpp"
#include "padicfam/enumeration.hpp"

using namespace padicfam;

namespace {
Rational Q(long n, long d = 1) { return make_rational(n, d); }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}
}

TEST_CASE("small catalog matches the per-degree family counts") {
    auto records = build_catalog(3, 4);
    CHECK(records.size() == 16);  // degrees 1..4 over Q_2: 1 + 3 + 2 + 10
    for (const auto& r : records) CHECK(r.p == 2);
    // deterministic (p, n, f, e, c, letter) order, labels unique
    std::set<std::string> labels;
    for (const auto& r : records) labels.insert(r.label);
    CHECK(labels.size() == records.size());
    CHECK(build_catalog(2, 0).empty());
}

TEST_CASE("record fields are internally consistent") {
    for (const auto& r : build_catalog(6, 6)) {
        CAPTURE(r.label);
        FamilyLabel l = parse_family_label(r.label);
        CHECK(l.p == r.p);
        CHECK(l.f == r.f);
        CHECK(l.e == r.e);
        CHECK(l.c == r.c);
        CHECK(r.n == r.e * r.f);
        CHECK(r.rams.size() == static_cast<size_t>(r.w));

        // mass and polynomial count recomputed from the exponents
        Integer q = pow_int(r.p, static_cast<unsigned long>(r.f));
        Integer m = pow_int(q - 1, static_cast<unsigned long>(r.alpha)) *
                    pow_int(q, static_cast<unsigned long>(r.beta));
        Integer pc = pow_int(q - 1, static_cast<unsigned long>(r.delta + r.alpha)) *
                     pow_int(q, static_cast<unsigned long>(r.beta + r.gamma));
        CHECK(Integer(r.mass) == m);
        CHECK(Integer(r.poly_count) == pc);
        CHECK(r.rigid_over_k == (r.delta == 0 && r.gamma == 0));
        if (r.rigid_over_k) {
            REQUIRE(r.field_count.has_value());
            CHECK(*r.field_count == r.mass);
        } else {
            CHECK_FALSE(r.field_count.has_value());
        }
    }
}

TEST_CASE("pinned record contents") {
    HerbrandInvariant nonic(3, 1, 1, {Q(1, 2), Q(7, 2)});
    FamilyRecord r = make_record(nonic, make_family_label(nonic));
    CHECK(r.rams == std::vector<std::string>{"1/2", "7/2"});
    CHECK(r.slopes == std::vector<std::string>{"1/2", "3/2"});
    CHECK(r.mass == "36");
    CHECK(r.poly_count == "36");
    CHECK(r.rigid_over_k);
    REQUIRE(r.field_count.has_value());
    CHECK(*r.field_count == "36");
    CHECK(r.generic_poly ==
          "pi + pi^2*a10*x + pi^2*b11*x^2 + pi*a3*x^3 + pi^2*b13*x^4 + x^9");

    HerbrandInvariant octic(2, 1, 1, {Q(1), Q(3), Q(5)});
    FamilyRecord r8 = make_record(octic, make_family_label(octic));
    CHECK(r8.mass == "8");
    CHECK(r8.poly_count == "64");
    CHECK_FALSE(r8.rigid_over_k);
    CHECK_FALSE(r8.field_count.has_value());
    CHECK(r8.arithmetic_bands == std::vector<bool>{false, false, false});

    HerbrandInvariant deg14(2, 1, 7, {Q(14)});
    FamilyRecord r14 = make_record(deg14, make_family_label(deg14));
    CHECK(r14.arithmetic_bands == std::vector<bool>{true});
}

TEST_CASE("json line round trip is lossless") {
    for (const auto& r : build_catalog(4, 5)) {
        FamilyRecord back = record_from_json_line(record_to_json_line(r));
        CHECK(back == r);
    }
}

TEST_CASE("degree-8 catalog over Q_2 round trips through a file") {
    std::vector<FamilyRecord> deg8;
    for (auto& r : build_catalog(3, 8))
        if (r.n == 8) deg8.push_back(std::move(r));
    REQUIRE(deg8.size() == 49);
    const std::string path = "catalog_deg8_test.ndjson";
    export_json(deg8, path);
    auto back = import_json(path);
    CHECK(back == deg8);
    std::remove(path.c_str());
}

TEST_CASE("catalog export is byte-identical across runs and thread counts") {
    const std::string path1 = "catalog_det_1.ndjson";
    const std::string path2 = "catalog_det_2.ndjson";
    export_json(build_catalog(8, 9, 1), path1);
    export_json(build_catalog(8, 9, 4), path2);
    std::string a = slurp(path1), b = slurp(path2);
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove(path1.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("import rejects malformed input with a line number") {
    const std::string path = "catalog_bad_test.ndjson";
    {
        std::ofstream out(path);
        out << record_to_json_line(build_catalog(3, 2).front()) << "\n";
        out << "{\"label\": 12}\n";
    }
    try {
        import_json(path);
        FAIL("expected an exception");
    } catch (const std::exception& ex) {
        CHECK(std::string(ex.what()).find("2") != std::string::npos);
    }
    std::remove(path.c_str());
}
