#include <doctest.h>

#include <gmpxx.h>

#include <fstream>
#include <json.hpp>
#include <string>

#include "braid.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "invariants.hpp"

using namespace twobridge;

namespace {

mpq_class frac(long num, long den) {
    mpq_class v(num, den);
    v.canonicalize();
    return v;
}

}  // namespace

TEST_CASE("lens space labels") {
    CHECK(lens_space(frac(3, 1)).label() == "L(3,1)");
    CHECK(lens_space(frac(-3, 1)).label() == "L(3,2)");
    CHECK(lens_space(frac(5, 2)).label() == "L(5,2)");
    CHECK(lens_space(frac(-5, 2)).label() == "L(5,3)");
    CHECK(lens_space(frac(7, 2)).label() == "L(7,2)");
    CHECK(lens_space(frac(-7, 2)).label() == "L(7,5)");
    CHECK(lens_space(frac(5, 1)).label() == "L(5,1)");
    CHECK(lens_space(frac(-5, 1)).label() == "L(5,4)");
    CHECK(lens_space(frac(1, 1)).label() == "L(1,0)");
    CHECK_THROWS_AS(lens_space(mpq_class(0)), std::invalid_argument);
}

TEST_CASE("full report for the three-twist knot") {
    InvariantReport rep = report({3});
    CHECK(rep.conway == Conway{3});
    CHECK(rep.fraction == frac(3, 1));
    CHECK(rep.det == 3);
    CHECK(rep.lens.label() == "L(3,1)");
    CHECK(rep.e == 3);
    CHECK(rep.w == -3);
    CHECK(rep.mu_one == 0);
    CHECK(rep.mu_two == -3);
    CHECK(rep.s_r == 1);
    CHECK(rep.r_tilde == 0);
    CHECK(rep.reduced == 1);
    CHECK(rep.sigma == 2);
    CHECK(rep.r == frac(3, 2));
    CHECK(rep.generator_count == 3);
}

TEST_CASE("full report for the mirrored three-twist knot") {
    InvariantReport rep = report({-3});
    CHECK(rep.fraction == frac(-3, 1));
    CHECK(rep.det == 3);
    CHECK(rep.lens.label() == "L(3,2)");
    CHECK(rep.e == -3);
    CHECK(rep.w == 3);
    CHECK(rep.mu_one == 0);
    CHECK(rep.mu_two == 3);
    CHECK(rep.s_r == -2);
    CHECK(rep.r_tilde == 1);
    CHECK(rep.reduced == -1);
    CHECK(rep.sigma == -2);
    CHECK(rep.r == frac(-3, 2));
    CHECK(rep.generator_count == 3);
}

TEST_CASE("full report for the five-twist knot") {
    InvariantReport rep = report({5});
    CHECK(rep.det == 5);
    CHECK(rep.lens.label() == "L(5,1)");
    CHECK(rep.e == 5);
    CHECK(rep.w == -5);
    CHECK(rep.sigma == 4);
    CHECK(rep.reduced == 2);
    CHECK(rep.r == frac(3, 1));
    CHECK(rep.generator_count == 5);
}

TEST_CASE("full report for the figure-eight pattern") {
    InvariantReport rep = report({2, 1, 1});
    CHECK(rep.fraction == frac(5, 2));
    CHECK(rep.det == 5);
    CHECK(rep.lens.label() == "L(5,2)");
    CHECK(rep.e == 2);
    CHECK(rep.w == 0);
    CHECK(rep.mu_one == -2);
    CHECK(rep.mu_two == -2);
    CHECK(rep.s_r == 0);
    CHECK(rep.r_tilde == 0);
    CHECK(rep.reduced == 0);
    CHECK(rep.sigma == 0);
    CHECK(rep.r == 0);
    CHECK(rep.generator_count == 5);
}

TEST_CASE("reports are computed on the normalized notation") {
    nlohmann::ordered_json a = to_json(report({2, 2}));
    nlohmann::ordered_json b = to_json(report({2, 1, 1}));
    CHECK(a == b);
    CHECK(a["conway"] == nlohmann::ordered_json::array({2, 1, 1}));
}

TEST_CASE("the unknot report") {
    InvariantReport rep = report({});
    CHECK(rep.conway.empty());
    CHECK(rep.fraction == 1);
    CHECK(rep.det == 1);
    CHECK(rep.lens.label() == "L(1,0)");
    CHECK(rep.sigma == 0);
    CHECK(rep.reduced == 0);
    CHECK(rep.r == 0);
    CHECK(rep.generator_count == 1);
}

TEST_CASE("even determinants are rejected as links") {
    CHECK_THROWS_AS(report({2}), LinkError);
    CHECK_THROWS_AS(report({1, 1}), LinkError);          // normalizes to [2]
    CHECK_THROWS_AS(report({1, 1, 1, 1, 1}), LinkError);  // 8/5
}

TEST_CASE("JSON serialization freezes field order and values") {
    std::string expected =
        "{\"conway\":[3],"
        "\"fraction\":{\"num\":3,\"den\":1},"
        "\"det\":3,"
        "\"lens_space\":\"L(3,1)\","
        "\"e\":3,"
        "\"w\":-3,"
        "\"mu_I\":0,"
        "\"mu_II\":-3,"
        "\"s_R\":1,"
        "\"r_tilde\":0,"
        "\"R\":1,"
        "\"sigma\":2,"
        "\"r\":{\"num\":3,\"den\":2},"
        "\"generator_count\":3}";
    CHECK(to_json(report({3})).dump() == expected);
}

TEST_CASE("64-bit narrowing is guarded") {
    mpz_class big = 1;
    big <<= 80;
    CHECK_THROWS_AS(to_int64(big), std::overflow_error);
    CHECK_THROWS_AS(to_int64(-big), std::overflow_error);
    mpz_class fits = 1;
    fits <<= 62;
    CHECK(to_int64(fits) == (1LL << 62));
    CHECK(to_int64(mpz_class(-7)) == -7);
}

TEST_CASE("concordance invariant in lowest terms") {
    CHECK(concordance_r(0) == 0);
    CHECK(concordance_r(2) == frac(3, 2));
    CHECK(concordance_r(-2) == frac(-3, 2));
    CHECK(concordance_r(4) == frac(3, 1));
    CHECK(concordance_r(-4) == frac(-3, 1));
    CHECK(concordance_r(6) == frac(9, 2));
}

TEST_CASE("diagram analysis of the three-twist plat") {
    PlatAnalysis an = analyze_plat(conway_to_braid({3}));
    CHECK(an.sign_g == -1);
    CHECK(an.det_g == -3);
    CHECK(an.stats.mu_two == -3);
    CHECK(an.sigma == 2);
}

TEST_CASE("PD round-trip preserves the invariants") {
    for (const Conway& c : {Conway{3}, Conway{-3}, Conway{2, 1, 1}, Conway{3, 1, 1},
                            Conway{-3, -1, -1}}) {
        CAPTURE(conway_to_string(c));
        PlatAnalysis an = analyze_plat(conway_to_braid(c));
        PlanarDiagram back = import_pd(export_pd(an.o));
        PlatAnalysis anb = analyze_diagram(back);
        CHECK(anb.sigma == an.sigma);
        CHECK(abs(anb.det_g) == abs(an.det_g));
        CHECK(anb.o.writhe == an.o.writhe);
    }
}

TEST_CASE("mirror laws hold for small knots and the unknot") {
    check_mirror({});
    check_mirror({3});
    check_mirror({-3});
    check_mirror({5});
    check_mirror({2, 1, 1});
    check_mirror({3, 1, 1});
}

TEST_CASE("connected-sum laws hold for small pairs") {
    check_sum({3}, {3});
    check_sum({3}, {-3});
    check_sum({2, 1, 1}, {3});
    check_sum({}, {3});
    check_sum({3}, {});
    check_sum({}, {});
}

TEST_CASE("connected-sum analysis values") {
    PlatAnalysis a = analyze_plat(conway_to_braid({3}));
    PlatAnalysis b = analyze_plat(conway_to_braid({3}));
    PlatAnalysis sum = analyze_diagram(splice_connected_sum(a.o, b.o));
    CHECK(sum.sigma == 4);
    CHECK(abs(sum.det_g) == 9);

    PlatAnalysis c = analyze_plat(conway_to_braid({-3}));
    PlatAnalysis square = analyze_diagram(splice_connected_sum(a.o, c.o));
    CHECK(square.sigma == 0);
    CHECK(abs(square.det_g) == 9);
}

TEST_CASE("catalog entries agree with freshly computed reports") {
    std::ifstream in("data/catalog.json");
    REQUIRE(in.good());
    nlohmann::json doc;
    in >> doc;
    REQUIRE(doc.is_array());
    REQUIRE(doc.size() >= 9);
    for (const auto& item : doc) {
        Conway c;
        for (const auto& v : item.at("conway")) c.push_back(v.get<long long>());
        CAPTURE(item.at("name").get<std::string>());
        InvariantReport rep = report(c);
        const auto& exp = item.at("expected");
        CHECK(to_int64(rep.det) == exp.at("det").get<long long>());
        CHECK(rep.lens.label() == exp.at("lens_space").get<std::string>());
        if (exp.contains("sigma")) CHECK(rep.sigma == exp.at("sigma").get<long long>());
        if (exp.contains("R")) CHECK(rep.reduced == exp.at("R").get<long long>());
        if (exp.contains("r")) {
            CHECK(to_int64(rep.r.get_num()) == exp.at("r").at("num").get<long long>());
            CHECK(to_int64(rep.r.get_den()) == exp.at("r").at("den").get<long long>());
        }
    }
}
