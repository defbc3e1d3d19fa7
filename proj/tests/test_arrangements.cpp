#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "curveh/arrangement.hpp"
#include "curveh/catalog.hpp"
#include "curveh/hierarchy.hpp"
#include "curveh/parser.hpp"
#include "curveh/univariate.hpp"

using namespace curveh;

namespace {

Poly P(const char* s) { return parse_poly(s); }

Line L(long a, long b, long c) { return Line{{mpq_class(a), mpq_class(b), mpq_class(c)}}; }

long binom2(long n) { return n * (n - 1) / 2; }

}  // namespace

TEST_SUITE("arrangements")
{
    TEST_CASE("univariate helpers")
    {
        UPoly p({mpq_class(-1), mpq_class(0), mpq_class(1)});  // x^2 - 1
        CHECK(distinct_root_count(p) == 2);
        CHECK(distinct_root_count(p * p) == 2);
        CHECK(distinct_root_count(UPoly({mpq_class(3)})) == 0);
        std::vector<mpq_class> xs{0, 1, 2, 3}, ys;
        for (const auto& x : xs) ys.push_back(x * x * x - 2 * x + 5);
        CHECK(interpolate(xs, ys) == UPoly({mpq_class(5), mpq_class(-2), mpq_class(0), mpq_class(1)}));
        // Res(x^2 - 1, x - 2) = 3 up to sign.
        CHECK(abs(resultant({mpq_class(-1), mpq_class(0), mpq_class(1)}, 2, {mpq_class(-2), mpq_class(1)}, 1)) == 3);
        CHECK(resultant({mpq_class(-1), mpq_class(0), mpq_class(1)}, 2, {mpq_class(-1), mpq_class(1)}, 1) == 0);
        CHECK(determinant({{mpq_class(2), mpq_class(1)}, {mpq_class(1), mpq_class(3)}}) == 5);
    }

    TEST_CASE("points and lines")
    {
        Point p(2, 4, 6);
        CHECK(p == Point(1, 2, 3));
        CHECK_THROWS_AS(Point(0, 0, 0), ArrangementError);
        Line l = line_through(Point(1, 0, 0), Point(0, 1, 0));
        CHECK(l.contains(Point(1, 1, 0)));
        CHECK(meet(L(1, 0, 0), L(0, 1, 0)) == Point(0, 0, 1));
        CHECK_THROWS_AS(meet(L(1, 2, 3), L(2, 4, 6)), ArrangementError);
    }

    TEST_CASE("arrangement validation")
    {
        Arrangement a;
        a.add(L(1, 0, 0));
        CHECK_THROWS_AS(a.add(L(3, 0, 0)), ArrangementError);
        CHECK_THROWS_AS(a.add(L(0, 0, 0)), ArrangementError);
        CHECK_THROWS_AS(a.add(Conic{{1, 0, 0, 0, 0, 0}}), ArrangementError);
        a.add(Conic{{1, 0, 0, 1, 0, 1}});
        CHECK(a.degree() == 3);
        CHECK(a.defining_poly() == P("x^3 + x*y^2 + x*z^2"));
        CHECK(a.defining_poly().degree() == a.line_count() + 2 * a.conic_count());
    }

    TEST_CASE("intersection profiles")
    {
        auto eb = intersection_profile(catalog("eb7").arrangement.lines());
        CHECK(eb.t == std::map<int, long>{{2, 12}, {3, 3}});
        CHECK(eb.max_multiplicity == 3);

        std::vector<Line> pencil{L(1, 0, 0), L(0, 1, 0), L(1, 1, 0), L(1, -1, 0), L(2, 1, 0)};
        CHECK(intersection_profile(pencil).t == std::map<int, long>{{5, 1}});

        CHECK(intersection_profile(catalog("generic5").arrangement.lines()).t == std::map<int, long>{{2, 10}});
        CHECK_THROWS_AS(intersection_profile({L(1, 0, 0), L(2, 0, 0)}), ArrangementError);
        CHECK_THROWS_AS(intersection_profile({L(1, 0, 0)}), ArrangementError);
    }

    TEST_CASE("profile identity and tau on random line arrangements")
    {
        Sampler rng(1234);
        for (int i = 0; i < 30; ++i) {
            Arrangement a;
            int n = static_cast<int>(rng.uniform(3, 7));
            while (a.line_count() < n) {
                // A tiny box forces concurrences.
                Line l = L(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
                try {
                    a.add(l);
                } catch (const ArrangementError&) {
                }
            }
            auto prof = intersection_profile(a.lines());
            long pairs = 0;
            for (const auto& [r, c] : prof.t) {
                pairs += binom2(r) * c;
                CHECK(r <= n);
            }
            CHECK(pairs == binom2(n));
            Analysis an = analyze(a.defining_poly());
            CHECK(an.milnor.tau == prof.tau_sum());
            if (an.certified && n >= 3) {
                CurveReport r = make_report(an);
                CHECK(r.type_t <= n - 3);
                CHECK(r.exponents.back() <= n - 2);
            }
        }
    }

    TEST_CASE("Ziegler and Yuzvinsky have the same combinatorics")
    {
        auto z = intersection_profile(catalog("ziegler").arrangement.lines());
        auto y = intersection_profile(catalog("yuzvinsky").arrangement.lines());
        CHECK(z == y);
        CHECK(z.t == std::map<int, long>{{2, 18}, {3, 6}});
    }

    TEST_CASE("distinct intersection counts")
    {
        Poly pencil = P("x*y*(x+y)*(x-y)");
        CHECK(count_intersections(P("x + 2y + 3z"), pencil) == 4);
        CHECK(count_intersections(P("z"), pencil) == 4);
        CHECK(count_intersections(P("x - z"), pencil) == 4);
        CHECK_THROWS_AS(count_intersections(P("x"), pencil), CommonComponentError);
    }

    TEST_CASE("intersection counts against independent data")
    {
        // Lines against a line arrangement: count the distinct meets directly.
        Sampler rng(6);
        for (int i = 0; i < 20; ++i) {
            std::vector<Line> ls;
            Arrangement a;
            while (a.line_count() < 4) {
                Line l = L(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
                try {
                    a.add(l);
                    ls.push_back(l);
                } catch (const ArrangementError&) {
                }
            }
            Line m = L(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
            bool member = std::any_of(ls.begin(), ls.end(), [&](const Line& l) {
                return sgn(l.c[0] * m.c[1] - l.c[1] * m.c[0]) == 0 && sgn(l.c[0] * m.c[2] - l.c[2] * m.c[0]) == 0 &&
                       sgn(l.c[1] * m.c[2] - l.c[2] * m.c[1]) == 0;
            });
            bool zero = sgn(m.c[0]) == 0 && sgn(m.c[1]) == 0 && sgn(m.c[2]) == 0;
            if (member || zero) continue;
            std::set<Point> meets;
            for (const auto& l : ls) meets.insert(meet(l, m));
            CHECK(count_intersections(m.poly(), a.defining_poly()) == static_cast<long>(meets.size()));
        }
        // Two conics through the four points (+-1 : +-1 : 1).
        CHECK(count_intersections(P("x^2 + y^2 - 2z^2"), P("x^2 - 2y^2 + z^2")) == 4);
        // Conics meeting only at (1:0:0) with multiplicity 4.
        CHECK(count_intersections(P("y^2 - x*z"), P("y^2 - x*z + z^2")) == 1);
        // Tangent line.
        CHECK(count_intersections(P("z"), P("y^2 - x*z")) == 1);
        CHECK(count_intersections(P("y^2 - x*z"), P("z")) == 1);
        // Smooth cubic against a generic conic: 6 points.
        CHECK(count_intersections(P("x^3 + y^3 + z^3"), P("x^2 + 2y^2 - 3z^2 + x*y")) == 6);
        CHECK_THROWS_AS(count_intersections(P("x*(y^2 - x*z)"), P("(y^2 - x*z)*(x+y)")), CommonComponentError);
        CHECK_THROWS_AS(count_intersections(P("x"), P("x*y")), CommonComponentError);
    }

    TEST_CASE("three-conics meets x^2 + y^2 + z^2 in twelve points")
    {
        auto plus = catalog("three-conics-plus");
        CHECK(count_component_intersections(plus.arrangement.components().back(), catalog("three-conics").arrangement) == 12);
    }

    TEST_CASE("double pencils")
    {
        Sampler rng(10);
        for (auto [n1, n2] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}}) {
            DoublePencil dp = random_double_pencil(n1, n2, rng);
            CHECK(intersection_profile(dp.arrangement.lines()).t == double_pencil_profile(n1, n2));
            CHECK(static_cast<int>(dp.nodes.size()) == n1 * n2);
        }
        CHECK(double_pencil_profile(3, 4) == std::map<int, long>{{2, 12}, {3, 1}, {4, 1}});
        CHECK_THROWS_AS(build_double_pencil(2, 1, Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1), {1, 2}, {1}), ArrangementError);
        CHECK_THROWS_AS(build_double_pencil(1, 2, Point(1, 0, 0), Point(0, 1, 0), Point(1, 1, 0), {1}, {1, 2}), ArrangementError);
        CHECK_THROWS_AS(build_double_pencil(1, 2, Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1), {1}, {1, 1}), ArrangementError);
        CHECK_THROWS_AS(build_double_pencil(1, 2, Point(1, 0, 0), Point(0, 1, 0), Point(0, 0, 1), {0}, {1, 2}), ArrangementError);
    }

    TEST_CASE("genericity certificates are reproducible")
    {
        Sampler rng(21);
        Arrangement base = catalog("three-conics").arrangement;
        for (int i = 0; i < 5; ++i) {
            Extension l = add_generic_line(base, rng);
            CHECK(l.certificate.ok());
            CHECK(l.certificate.expected == base.degree());
            CHECK(count_component_intersections(l.added, base) == l.certificate.count);
            Extension q = add_generic_conic(base, rng);
            CHECK(q.certificate.expected == 2 * base.degree());
            CHECK(count_component_intersections(q.added, base) == q.certificate.count);
        }
        DoublePencil dp = random_double_pencil(3, 3, rng);
        Extension n = add_line_through_one_double_point(dp, dp.nodes[4], rng);
        CHECK(n.certificate.count == 5);
        CHECK(std::get<Line>(n.added).contains(dp.nodes[4]));
        CHECK_THROWS_AS(add_line_through_one_double_point(dp, dp.center1, rng), ArrangementError);
        CHECK_THROWS_AS(add_line_through_one_double_point(dp, Point(7, 11, 13), rng), ArrangementError);
        CHECK_THROWS_AS(add_generic_line(Arrangement{}, rng), ArrangementError);
    }

    TEST_CASE("arrangement files")
    {
        std::istringstream in("# two lines and a conic\nline: 1 0 0\nline: 0 1 -1/2\n\nconic: 1 0 0 1 0 -1  # circle\ncurve: x^3 + y^3 + z^3\n");
        Arrangement a = read_arrangement(in);
        CHECK(a.line_count() == 2);
        CHECK(a.conic_count() == 1);
        CHECK(a.degree() == 7);
        std::istringstream again(write_arrangement(a));
        CHECK(read_arrangement(again).defining_poly() == a.defining_poly());
        for (const char* bad : {"line: 1 0\n", "conic: 1 0 0 0 0 0\n", "circle: 1 2 3\n", "line: 1 0 x\n", "line 1 0 0\n", "",
                                "curve: x^2 + y\n", "line: 1 0 0\nline: 2 0 0\n"}) {
            std::istringstream s(bad);
            CAPTURE(bad);
            CHECK_THROWS_AS(read_arrangement(s), ArrangementError);
        }
    }

    TEST_CASE("catalog names")
    {
        CHECK(catalog("cor11-family:6").name == "cor11-family:6");
        CHECK(catalog("cor11-family(6)").name == "cor11-family:6");
        CHECK(catalog("cor11-family").name == "cor11-family:5");
        CHECK(catalog("ziegler").arrangement.line_count() == 9);
        CHECK_THROWS_AS(catalog("nonesuch"), UnknownCatalogName);
        CHECK_THROWS_AS(catalog("bolza:3"), UnknownCatalogName);
        CHECK_THROWS_AS(catalog("cor11-family:3"), UnknownCatalogName);
        CHECK_THROWS_AS(catalog("cor11-family(6"), UnknownCatalogName);
        for (const auto& n : catalog_names()) CHECK_NOTHROW(catalog(n));
    }

    TEST_CASE("catalog reference values")
    {
        CurveReport z = make_report(analyze(catalog("ziegler").poly()));
        CHECK(z.exponents == std::vector<int>{5, 6, 6, 6});
        CurveReport c = make_report(analyze(catalog("cor11-family:5").poly()));
        CHECK(c.exponents == std::vector<int>{2, 2});
        CHECK(c.cls.name() == "Free");
        CurveReport t = make_report(analyze(catalog("conic-plus-tangent").poly()));
        CHECK(t.exponents == std::vector<int>{1, 1});
    }

    TEST_CASE("enumerative line bounds")
    {
        auto eb = catalog("eb7");
        auto prof = intersection_profile(eb.arrangement.lines());
        LineBoundCheck c = theorem_ll_check(prof, 7, "Type2A", {4, 4, 4});
        CHECK(c.multiplicity_bound == 3);
        CHECK(c.multiplicity_slack() == 0);
        CHECK(c.weighted_sum == 18);
        CHECK(c.sum_bound == 18);
        CHECK(c.sum_slack() == 0);
        auto g = intersection_profile(catalog("generic5").arrangement.lines());
        LineBoundCheck c5 = theorem_ll_check(g, 5, "Type2B", {3, 3, 3, 3});
        CHECK(c5.sum_slack() == 0);
        LineBoundCheck free = theorem_ll_check(g, 5, "Free", {2, 2});
        CHECK_FALSE(free.type2);
    }
}
