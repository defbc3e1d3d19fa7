#include <doctest.h>

#include "curveh/analysis.hpp"
#include "curveh/catalog.hpp"
#include "curveh/engine.hpp"
#include "curveh/hierarchy.hpp"
#include "curveh/parser.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace curveh;

namespace {

Poly P(const char* s) { return parse_poly(s); }

JacobianEngine<PrimeField> modular(const Poly& f, int kmax = -1)
{
    return JacobianEngine<PrimeField>(reduce_mod(f, PrimeField{}), EngineOptions{kmax, true});
}

Poly component(const std::string& text, int degree)
{
    if (text == "0") return Poly(RationalField{}, degree);
    return parse_poly(text);
}

std::vector<Poly> oracle_curves()
{
    return {P("x^5 - y^2*z^3 - x*z^4"),
            catalog("eb7").poly(),
            catalog("cl").poly(),
            catalog("cor11-family:5").poly(),
            catalog("ex10").poly(),
            catalog("generic5").poly(),
            P("x^4 + y^4 + z^4"),
            P("x^4 + y^4"),
            P("x^2*y^2 + y^2*z^2 + z^2*x^2"),
            P("y^2*z - x^3 - x^2*z")};
}

}  // namespace

TEST_SUITE("engine")
{
    TEST_CASE("Hilbert function matches brute-force ranks of the Jacobian ideal")
    {
        for (const Poly& f : oracle_curves()) {
            auto e = modular(f);
            const auto& hf = e.milnor_profile().hf;
            CAPTURE(render(f));
            for (int k = 0; k < static_cast<int>(hf.size()); ++k) CHECK(hf[k] == oracle::hilbert(f, k));
            CHECK(e.milnor_profile().tau == hf.back());
        }
    }

    TEST_CASE("syzygy spaces match brute-force kernels")
    {
        for (const Poly& f : oracle_curves()) {
            auto e = modular(f);
            CAPTURE(render(f));
            for (int k = 0; k <= e.kmax(); ++k) CHECK(static_cast<long>(e.syzygy_space(k).dim()) == oracle::syzygies(f, k));
        }
    }

    TEST_CASE("Jacobian module matches a brute-force colon ideal")
    {
        std::vector<Poly> curves = oracle_curves();
        curves.push_back(catalog("three-conics-plus").poly());
        for (const Poly& f : curves) {
            auto e = modular(f);
            CAPTURE(render(f));
            const auto& mod = e.jacobian_module_profile();
            REQUIRE(mod.has_value());
            for (int k = 0; k <= mod->T; ++k) CHECK(mod->n[k] == oracle::module_dim(f, k));
        }
    }

    TEST_CASE("exact generators are Jacobian syzygies of the stated degrees")
    {
        for (const char* name : {"bolza", "eb7", "cl", "three-conics-plus", "ex10", "conic-plus-tangent"}) {
            Analysis a = analyze(catalog(name).poly());
            CAPTURE(name);
            REQUIRE(a.generators_exact);
            REQUIRE(a.generators.size() == a.exponents.size());
            for (std::size_t i = 0; i < a.generators.size(); ++i) {
                const auto& g = a.generators[i];
                CHECK(g.degree == a.exponents[i]);
                std::array<Poly, 3> abc{component(g.components[0], g.degree), component(g.components[1], g.degree),
                                        component(g.components[2], g.degree)};
                for (const auto& c : abc) CHECK(c.degree() == g.degree);
                Poly f = catalog(name).poly();
                CHECK(oracle::jacobian_pairing(f, abc).is_zero());
            }
        }
    }

    TEST_CASE("two primes and exact arithmetic agree")
    {
        for (const char* name : {"bolza", "cl1", "cl", "eb7", "generic5", "three-conics", "cor11-family:6", "ex10"}) {
            Poly f = catalog(name).poly();
            AnalysisOptions q;
            q.arithmetic = Arithmetic::Rational;
            Analysis exact = analyze(f, q);
            Analysis mod = analyze(f);
            CAPTURE(name);
            CHECK(exact.exponents == mod.exponents);
            CHECK(exact.relation_degrees == mod.relation_degrees);
            CHECK(exact.milnor.hf == mod.milnor.hf);
            CHECK(exact.module->n == mod.module->n);
            CHECK(exact.certified);
            for (std::size_t i = 0; i < exact.generators.size(); ++i) {
                CHECK(exact.generators[i].components == mod.generators[i].components);
            }
        }
    }

    TEST_CASE("degenerate inputs")
    {
        CHECK_THROWS_AS(analyze(P("x^2*y")), NonReducedError);
        CHECK_THROWS_AS(analyze(P("x^2")), NonReducedError);
        CHECK_THROWS_AS(analyze(P("(x^2 + y^2 + z^2)^2")), NonReducedError);

        Analysis line = analyze(P("x"));
        CHECK(line.exponents == std::vector<int>{0, 0});
        Analysis pencil = analyze(P("x^4 + y^4"));
        CHECK(pencil.exponents == std::vector<int>{0, 3});
        CHECK(pencil.milnor.tau == 9);
        Analysis conic = analyze(P("x^2 + y^2 + z^2"));
        CHECK(conic.exponents == std::vector<int>{1, 1, 1});
        CHECK(conic.milnor.tau == 0);
    }

    TEST_CASE("a scan bound below the last generator is reported as uncertified")
    {
        AnalysisOptions o;
        o.kmax = 2;
        Analysis a = analyze(P("x^5 - y^2*z^3 - x*z^4"), o);
        CHECK_FALSE(a.certified);
        CHECK_THROWS_AS(require_certified(a), UncertifiedError);
        CHECK_THROWS_AS(make_report(a), UncertifiedError);
    }

    TEST_CASE("Hilbert certificate formula")
    {
        // Bolza: exponents (2,4,4), one relation in degree 10.
        std::vector<long> hf{1, 3, 6, 10, 12, 12, 11, 9, 8, 8, 8, 8, 8};
        CHECK(hilbert_certificate(5, hf, {2, 4, 4}, {10}));
        CHECK_FALSE(hilbert_certificate(5, hf, {2, 4, 5}, {10}));
        for (int k = 0; k < static_cast<int>(hf.size()); ++k) CHECK(predicted_hilbert_value(5, k, {2, 4, 4}, {10}) == hf[k]);
    }

    TEST_CASE("rational reconstruction")
    {
        mpz_class m("1000000007");
        for (auto q : {mpq_class(3, 7), mpq_class(-22, 9), mpq_class(0), mpq_class(1234, 1)}) {
            mpz_class num = q.get_num(), den = q.get_den();
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
            mpz_class r = ((num * inv) % m + m) % m;
            auto back = rational_reconstruction(r, m);
            REQUIRE(back.has_value());
            CHECK(*back == q);
        }
    }

    TEST_CASE("invariants do not depend on the coordinates")
    {
        Sampler rng(77);
        using M = std::array<std::array<mpq_class, 3>, 3>;
        for (const char* name : {"bolza", "eb7", "cl", "ex10"}) {
            Poly f = catalog(name).poly();
            Analysis a = analyze(f);
            for (int i = 0; i < 2; ++i) {
                M g;
                do {
                    for (auto& r : g)
                        for (auto& v : r) v = rng.uniform(-2, 2);
                } while (sgn(g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                             g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0])) == 0);
                Analysis b = analyze(linear_substitution(f, g));
                CAPTURE(name);
                CHECK(a.exponents == b.exponents);
                CHECK(a.milnor.hf == b.milnor.hf);
                CHECK(a.module->n == b.module->n);
            }
        }
    }

    TEST_CASE("random curves satisfy the structural identities")
    {
        Sampler rng(5150);
        int analyzed = 0;
        for (int i = 0; i < 40; ++i) {
            int d = static_cast<int>(rng.uniform(3, 6));
            // Sparse forms tend to be singular, which exercises more shapes.
            Poly f = testgen::random_form(rng, d, 3, false, 35);
            if (f.is_zero()) continue;
            Analysis a;
            try {
                a = analyze(f);
            } catch (const NonReducedError&) {
                continue;
            }
            if (!a.certified) continue;
            ++analyzed;
            CurveReport r = make_report(a);
            CAPTURE(render(f));
            CHECK(r.consistent());
            const auto& n = a.module->n;
            const int T = a.module->T;
            for (int k = 0; k <= T; ++k) CHECK(n[k] == n[T - k]);
            for (int k = 1; 2 * k <= T; ++k) CHECK(n[k - 1] <= n[k]);
            for (int j = 0; j < static_cast<int>(a.relation_degrees.size()); ++j) {
                CHECK(a.relation_degrees[j] == a.d + a.exponents[j + 2] - 1 + a.shifts[j]);
                CHECK(a.shifts[j] >= 1);
            }
            int eps = 0;
            for (int s : a.shifts) eps += s;
            CHECK(a.exponents[0] + a.exponents[1] == a.d - 1 + eps);
            if (a.exponents.size() >= 3) CHECK(a.exponents[2] <= a.d - 1);
        }
        CHECK(analyzed >= 10);
    }
}
