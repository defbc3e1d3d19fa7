#include "curveh/hierarchy.hpp"

#include <algorithm>
#include <numeric>

namespace curveh {

std::string ClassTag::name() const
{
    switch (kind) {
    case CurveClass::Free: return "Free";
    case CurveClass::PlusOneGenerated: return "PlusOneGenerated";
    case CurveClass::Type2A: return "Type2A";
    case CurveClass::Type2B: return "Type2B";
    case CurveClass::Higher: return "Higher(" + std::to_string(t) + ")";
    }
    return "unknown";
}

int curve_type(const std::vector<int>& exponents, int d, bool certified)
{
    if (!certified) throw UncertifiedError("type of an uncertified resolution");
    if (exponents.size() < 2) throw InternalError("fewer than two exponents");
    int t = exponents[0] + exponents[1] + 1 - d;
    if (t < 0) throw InternalError("negative type " + std::to_string(t));
    return t;
}

ClassTag classify(int t, int m)
{
    switch (t) {
    case 0: return {CurveClass::Free, 0};
    case 1: return {CurveClass::PlusOneGenerated, 1};
    case 2:
        if (m == 3) return {CurveClass::Type2A, 2};
        if (m == 4) return {CurveClass::Type2B, 2};
        throw InternalError("type-2 curve with " + std::to_string(m) + " generators");
    default: return {CurveClass::Higher, t};
    }
}

namespace {

void require_type2(CurveClass cls, const std::vector<int>& e)
{
    if (cls == CurveClass::Type2A && e.size() == 3) return;
    if (cls == CurveClass::Type2B && e.size() == 4) return;
    throw std::invalid_argument("type-2 formula needs class 2A with three exponents or 2B with four");
}

}  // namespace

long tau_formula_type2(CurveClass cls, const std::vector<int>& e)
{
    require_type2(cls, e);
    long d1 = e[0], d2 = e[1], d3 = e[2];
    long base = d1 * d1 + d1 * d2 + d2 * d2 - 2 * d1 - 2 * d2;
    if (cls == CurveClass::Type2A) return base - 2 * d3;
    return base - d3 - e[3] + 1;
}

long nu_formula_type2(CurveClass cls, const std::vector<int>& e)
{
    require_type2(cls, e);
    long d1 = e[0], d2 = e[1], d3 = e[2];
    if (cls == CurveClass::Type2A) {
        if (d1 < d2 - 2) return 2 * (d3 - d2) + 4;
        if (d1 == d2 - 2) return 2 * (d3 - d1);
        if (d1 == d2 - 1) return 2 * (d3 - d1) + 2;
        return 2 * (d3 - d2) + 3;
    }
    long d4 = e[3];
    if (d1 < d2 - 2) return d3 + d4 - 2 * d2 + 3;
    if (d1 == d2 - 2) return d3 + d4 - 2 * d1 - 1;
    if (d1 == d2 - 1) return d3 + d4 - 2 * d1 + 1;
    return d3 + d4 - 2 * d2 + 2;
}

int sigma_formula_three_syzygy(int d, const std::vector<int>& e)
{
    if (e.size() != 3) throw std::invalid_argument("initial degree formula needs exactly three exponents");
    return 3 * (d - 1) - (e[0] + e[1] + e[2]);
}

bool CurveReport::consistent() const
{
    return std::all_of(checks.begin(), checks.end(), [](const ConsistencyCheck& c) { return c.ok(); });
}

CurveReport make_report(const Analysis& a)
{
    require_certified(a);
    CurveReport r;
    r.d = a.d;
    r.m = a.m;
    r.exponents = a.exponents;
    r.relation_degrees = a.relation_degrees;
    r.shifts = a.shifts;
    r.tau = a.milnor.tau;
    r.type_t = curve_type(a.exponents, a.d, a.certified);
    r.cls = classify(r.type_t, r.m);

    // The Hilbert polynomial of the resolution is constant for large k and
    // equals tau.
    int far = 4 * a.d + 8;
    for (int c : a.relation_degrees) far = std::max(far, c + 4);
    r.checks.push_back({"euler_characteristic_tau", r.tau,
                        predicted_hilbert_value(a.d, far, a.exponents, a.relation_degrees)});
    r.checks.push_back({"sum_of_shifts_equals_type", std::accumulate(a.shifts.begin(), a.shifts.end(), 0L), r.type_t});
    if (a.exponents.size() >= 3) r.checks.push_back({"third_exponent_at_most_d_minus_1", a.exponents[2], a.d - 1, true});

    if (a.module) {
        r.nu = a.module->nu;
        r.sigma = a.module->sigma;
        r.n_vanishes = a.module->nu == 0;
        if (a.d >= 1) r.checks.push_back({"nu_from_tjurina", *r.nu, nu_from_tjurina(a.d, a.exponents[0], r.tau)});
        r.checks.push_back({"free_iff_module_vanishes", r.n_vanishes ? 1 : 0, r.type_t == 0 ? 1 : 0});
        if (r.m == 3 && r.sigma) r.checks.push_back({"sigma_formula", *r.sigma, sigma_formula_three_syzygy(a.d, a.exponents)});
    }
    if (r.cls.kind == CurveClass::Type2A || r.cls.kind == CurveClass::Type2B) {
        r.checks.push_back({"tau_type2_formula", r.tau, tau_formula_type2(r.cls.kind, a.exponents)});
        if (r.nu) r.checks.push_back({"nu_type2_formula", *r.nu, nu_formula_type2(r.cls.kind, a.exponents)});
    }
    return r;
}

}  // namespace curveh
