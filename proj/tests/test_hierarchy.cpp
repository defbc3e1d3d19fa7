#include <doctest.h>

#include "curveh/catalog.hpp"
#include "curveh/hierarchy.hpp"

using namespace curveh;

TEST_SUITE("hierarchy")
{
    TEST_CASE("type from exponents")
    {
        CHECK(curve_type({2, 4, 4}, 5) == 2);
        CHECK(curve_type({5, 6, 6, 6}, 9) == 3);
        CHECK(curve_type({6, 6, 6, 6, 6, 6}, 9) == 4);
        CHECK(curve_type({3, 3, 3}, 4) == 3);
        CHECK_THROWS_AS(curve_type({2, 4, 4}, 5, false), UncertifiedError);
        CHECK_THROWS_AS(curve_type({1, 1}, 5), InternalError);
    }

    TEST_CASE("classification")
    {
        CHECK(classify(0, 2).name() == "Free");
        CHECK(classify(1, 3).name() == "PlusOneGenerated");
        CHECK(classify(2, 3).name() == "Type2A");
        CHECK(classify(2, 4).name() == "Type2B");
        CHECK(classify(3, 4).name() == "Higher(3)");
        CHECK_THROWS_AS(classify(2, 5), InternalError);
    }

    TEST_CASE("type-2 Tjurina formulas")
    {
        CHECK(tau_formula_type2(CurveClass::Type2A, {4, 4, 4}) == 24);
        CHECK(tau_formula_type2(CurveClass::Type2A, {2, 4, 4}) == 8);
        CHECK(tau_formula_type2(CurveClass::Type2B, {3, 3, 3, 3}) == 10);
        CHECK(tau_formula_type2(CurveClass::Type2B, {4, 4, 5, 5}) == 23);
        CHECK_THROWS_AS(tau_formula_type2(CurveClass::Free, {2, 2}), std::invalid_argument);
        CHECK_THROWS_AS(tau_formula_type2(CurveClass::Type2A, {3, 3, 3, 3}), std::invalid_argument);
    }

    TEST_CASE("type-2 freeness defect formulas")
    {
        CHECK(nu_formula_type2(CurveClass::Type2A, {4, 4, 4}) == 3);
        CHECK(nu_formula_type2(CurveClass::Type2B, {3, 3, 3, 3}) == 2);
        CHECK(nu_formula_type2(CurveClass::Type2A, {2, 4, 4}) == 4);
        CHECK_THROWS_AS(nu_formula_type2(CurveClass::PlusOneGenerated, {2, 3, 3}), std::invalid_argument);
    }

    TEST_CASE("2B formulas at d4 = d3 + 1 reproduce the 2A formulas")
    {
        for (int d1 = 1; d1 <= 12; ++d1) {
            for (int d2 = d1; d2 <= 14; ++d2) {
                for (int d3 = d2; d3 <= 16; ++d3) {
                    std::vector<int> a{d1, d2, d3}, b{d1, d2, d3, d3 + 1};
                    CHECK(tau_formula_type2(CurveClass::Type2A, a) == tau_formula_type2(CurveClass::Type2B, b));
                    CHECK(nu_formula_type2(CurveClass::Type2A, a) == nu_formula_type2(CurveClass::Type2B, b));
                }
            }
        }
    }

    TEST_CASE("initial degree of N(f) for 3-syzygy curves")
    {
        CHECK(sigma_formula_three_syzygy(5, {2, 4, 4}) == 2);
        CHECK(sigma_formula_three_syzygy(7, {4, 4, 4}) == 6);
        CHECK_THROWS_AS(sigma_formula_three_syzygy(5, {3, 3, 3, 3}), std::invalid_argument);
    }

    TEST_CASE("reports of catalog curves")
    {
        struct Expect {
            const char* name;
            const char* cls;
            int t;
        };
        for (auto e : {Expect{"bolza", "Type2A", 2}, Expect{"cl", "Type2B", 2}, Expect{"eb7", "Type2A", 2},
                       Expect{"generic5", "Type2B", 2}, Expect{"fermat-union:3", "Free", 0}, Expect{"ziegler", "Higher(3)", 3},
                       Expect{"yuzvinsky", "Higher(4)", 4}, Expect{"ex10", "PlusOneGenerated", 1}}) {
            CurveReport r = make_report(analyze(catalog(e.name).poly()));
            CAPTURE(e.name);
            CHECK(r.cls.name() == e.cls);
            CHECK(r.type_t == e.t);
            CHECK(r.consistent());
            CHECK(r.m <= r.type_t + 2);
            CHECK((r.cls.kind == CurveClass::Free) == (r.m == 2));
        }
    }

    TEST_CASE("report for the Bolza curve carries every closed form")
    {
        CurveReport r = make_report(analyze(catalog("bolza").poly()));
        std::vector<std::string> names;
        for (const auto& c : r.checks) names.push_back(c.name);
        for (const char* n : {"euler_characteristic_tau", "sum_of_shifts_equals_type", "nu_from_tjurina", "sigma_formula",
                              "tau_type2_formula", "nu_type2_formula"}) {
            CHECK(std::find(names.begin(), names.end(), n) != names.end());
        }
        CHECK(r.tau == 8);
        CHECK(r.nu == 4);
    }
}
