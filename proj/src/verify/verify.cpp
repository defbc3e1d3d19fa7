#include "curveh/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <thread>

#include "curveh/catalog.hpp"
#include "curveh/hierarchy.hpp"
#include "curveh/parser.hpp"

namespace curveh {

using nlohmann::json;

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Error: return "error";
    }
    return "error";
}

json TheoremCheck::to_json() const
{
    json j;
    j["theorem"] = theorem;
    j["trial"] = trial;
    j["seed"] = seed;
    j["reseeds"] = reseeds;
    j["params"] = params;
    j["hypotheses"] = hypotheses;
    j["predicted"] = predicted;
    j["computed"] = computed;
    j["verdict"] = to_string(verdict);
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

json CampaignSummary::to_json() const
{
    return json{{"theorem", theorem},     {"trials", checks.size()}, {"pass", pass},
                {"fail", fail},           {"hypothesis_not_met", hypothesis_not_met},
                {"error", error},         {"ok", ok()}};
}

namespace {

struct Computed {
    Analysis analysis;
    CurveReport report;
};

Computed compute(const Poly& f, const AnalysisOptions& opts)
{
    Analysis a = analyze(f, opts);
    require_certified(a);
    CurveReport r = make_report(a);
    return {std::move(a), std::move(r)};
}

json invariants(const CurveReport& r)
{
    json j;
    j["d"] = r.d;
    j["m"] = r.m;
    j["exponents"] = r.exponents;
    j["d1"] = r.exponents.at(0);
    j["d2"] = r.exponents.at(1);
    j["class"] = r.cls.name();
    j["type"] = r.type_t;
    j["tau"] = r.tau;
    if (r.nu) j["nu"] = *r.nu;
    j["consistent"] = r.consistent();
    return j;
}

json certificate_json(const GenericityCertificate& c)
{
    return json{{"ok", c.ok()}, {"how", "exact distinct-point count"}, {"kind", c.kind},
                {"count", c.count}, {"expected", c.expected}, {"attempts", c.attempts}};
}

json hypothesis(bool ok, const std::string& how)
{
    return json{{"ok", ok}, {"how", how}};
}

std::vector<int> sorted(std::vector<int> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

json profile_json(const std::map<int, long>& t)
{
    json j = json::object();
    for (const auto& [r, n] : t) j[std::to_string(r)] = n;
    return j;
}

/// Hypotheses first, then every predicted key against the computed value.
void decide(TheoremCheck& c)
{
    for (const auto& [name, h] : c.hypotheses.items()) {
        if (!h.value("ok", false)) {
            c.verdict = Verdict::HypothesisNotMet;
            c.detail = "hypothesis '" + name + "' not met";
            return;
        }
    }
    std::string mismatches;
    for (const auto& [key, value] : c.predicted.items()) {
        if (!c.computed.contains(key) || c.computed[key] != value) {
            if (!mismatches.empty()) mismatches += ", ";
            mismatches += key;
        }
    }
    if (mismatches.empty()) {
        c.verdict = Verdict::Pass;
    } else {
        c.verdict = Verdict::Fail;
        c.detail = "prediction differs on: " + mismatches;
    }
}

Arrangement single(const Component& c)
{
    Arrangement a;
    a.add(c);
    return a;
}

Poly product_of(const std::vector<Line>& lines)
{
    Arrangement a;
    for (const auto& l : lines) a.add(l);
    return a.defining_poly();
}

using TrialBody = std::function<TheoremCheck(int trial, Sampler& rng, const VerifyOptions& opts)>;

TheoremCheck trial_prop2(int trial, Sampler& rng, const VerifyOptions& opts)
{
    static const std::pair<int, int> pairs[] = {{1, 3}, {2, 3}, {3, 3}, {3, 5}, {4, 4}};
    auto [n1, n2] = pairs[trial % 5];
    DoublePencil dp = random_double_pencil(n1, n2, rng, opts.sampling.box);
    TheoremCheck c;
    c.params = {{"n1", n1}, {"n2", n2}, {"arrangement", write_arrangement(dp.arrangement)}};
    IntersectionProfile prof = intersection_profile(dp.arrangement.lines());
    c.hypotheses["double_pencil"] = hypothesis(prof.t == double_pencil_profile(n1, n2), "exact intersection profile");
    c.hypotheses["double_pencil"]["t"] = profile_json(prof.t);
    if (n1 == 1) {
        c.predicted = {{"exponents", std::vector<int>{1, n1 + n2 - 2}}, {"type", 0}, {"class", "Free"}};
    } else {
        c.predicted = {{"exponents", sorted({n1, n2, n1 + n2 - 2})}, {"type", 1}, {"class", "PlusOneGenerated"}};
    }
    c.predicted["consistent"] = true;
    c.computed = invariants(compute(dp.arrangement.defining_poly(), opts.analysis).report);
    return c;
}

TheoremCheck trial_thm0(int trial, Sampler& rng, const VerifyOptions& opts)
{
    static const std::pair<int, int> pairs[] = {{3, 3}, {3, 4}, {3, 5}, {4, 4}, {4, 5}, {5, 5}};
    auto [n1, n2] = pairs[trial % 6];
    DoublePencil dp = random_double_pencil(n1, n2, rng, opts.sampling.box);
    Extension ext = add_generic_line(dp.arrangement, rng, opts.sampling);
    TheoremCheck c;
    c.params = {{"n1", n1}, {"n2", n2}, {"arrangement", write_arrangement(ext.arrangement)}};
    CurveReport base = compute(dp.arrangement.defining_poly(), opts.analysis).report;
    const auto& m = base.exponents;
    c.hypotheses["base_type_1"] = hypothesis(base.type_t == 1 && base.m == 3 && m[0] >= 3, "computed resolution of the double pencil");
    c.hypotheses["base_type_1"]["exponents"] = m;
    c.hypotheses["generic_line"] = certificate_json(ext.certificate);
    if (base.m == 3) {
        c.predicted["exponents"] = sorted({m[0] + 1, m[1] + 1, m[2] + 1, m[0] + m[1] - 1});
    }
    c.predicted["exponents_from_pencil_sizes"] = sorted({n1 + 1, n2 + 1, n1 + n2 - 1, n1 + n2 - 1});
    c.predicted["class"] = "Type2B";
    c.predicted["type"] = 2;
    c.predicted["consistent"] = true;
    c.computed = invariants(compute(ext.arrangement.defining_poly(), opts.analysis).report);
    c.computed["exponents_from_pencil_sizes"] = c.computed["exponents"];
    return c;
}

TheoremCheck trial_thm2(int trial, Sampler& rng, const VerifyOptions& opts)
{
    static const std::pair<int, int> pairs[] = {{3, 3}, {3, 4}, {4, 5}};
    auto [n1, n2] = pairs[trial % 3];
    DoublePencil dp = random_double_pencil(n1, n2, rng, opts.sampling.box);
    auto node_index = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dp.nodes.size()) - 1));
    Extension ext = add_line_through_one_double_point(dp, dp.nodes[node_index], rng, opts.sampling);
    TheoremCheck c;
    c.params = {{"n1", n1}, {"n2", n2}, {"node", node_index}, {"arrangement", write_arrangement(ext.arrangement)}};
    c.hypotheses["pencil_sizes"] = hypothesis(3 <= n1 && n1 <= n2, "3 <= n1 <= n2");
    c.hypotheses["node_line"] = certificate_json(ext.certificate);
    c.predicted = {{"exponents", sorted({n1 + 1, n2 + 1, n1 + n2 - 2})}, {"class", "Type2A"}, {"type", 2}, {"consistent", true}};
    c.computed = invariants(compute(ext.arrangement.defining_poly(), opts.analysis).report);
    return c;
}

TheoremCheck trial_thm4(int trial, Sampler& rng, const VerifyOptions& opts)
{
    static const char* bases[] = {"three-conics", "cor11-family:5", "cor11-family:6", "cor11-family:7"};
    CatalogEntry base = catalog(bases[trial % 4]);
    Extension ext = add_generic_conic(base.arrangement, rng, opts.sampling);
    TheoremCheck c;
    c.params = {{"base", base.name}, {"conic", write_arrangement(single(ext.added))}};
    CurveReport b = compute(base.poly(), opts.analysis).report;
    c.hypotheses["base_free"] = hypothesis(b.m == 2, "computed resolution of the base");
    c.hypotheses["base_free"]["exponents"] = b.exponents;
    c.hypotheses["m1_at_least_2"] = hypothesis(b.exponents[0] >= 2, "computed mdr of the base");
    c.hypotheses["generic_conic"] = certificate_json(ext.certificate);
    int m1 = b.exponents[0], m2 = b.exponents[1];
    c.predicted = {{"exponents", sorted({m1 + 2, m2 + 2, m1 + m2 + 1})}, {"class", "Type2A"}, {"type", 2}, {"consistent", true}};
    c.computed = invariants(compute(ext.arrangement.defining_poly(), opts.analysis).report);
    return c;
}

TheoremCheck trial_cor10(int trial, Sampler& rng, const VerifyOptions& opts)
{
    const int d = 6;
    const int t = trial % 4;
    const int e = d - t;
    DoublePencil near = random_double_pencil(1, e - 1, rng, opts.sampling.box);
    TheoremCheck c;
    c.params = {{"d", d}, {"t", t}, {"base_lines", e}};
    CurveReport b = compute(near.arrangement.defining_poly(), opts.analysis).report;
    c.hypotheses["base_free"] = hypothesis(b.m == 2 && b.exponents[1] <= e - 2, "computed resolution: free with d2 <= deg - 2");
    c.hypotheses["base_free"]["exponents"] = b.exponents;
    Arrangement arr = near.arrangement;
    for (int k = 1; k <= t; ++k) {
        Extension ext = add_generic_line(arr, rng, opts.sampling);
        c.hypotheses["generic_line_" + std::to_string(k)] = certificate_json(ext.certificate);
        arr = std::move(ext.arrangement);
    }
    c.params["arrangement"] = write_arrangement(arr);
    c.predicted = {{"d", d}, {"type", t}, {"d1", b.exponents[0] + t}, {"d2", b.exponents[1] + t}, {"consistent", true}};
    c.computed = invariants(compute(arr.defining_poly(), opts.analysis).report);
    return c;
}

TheoremCheck trial_cor11(int trial, Sampler& rng, const VerifyOptions& opts)
{
    const int e1 = 4 + trial % 4;
    const int t = (trial / 4) % 3;
    CatalogEntry base = catalog("cor11-family:" + std::to_string(e1));
    TheoremCheck c;
    c.params = {{"e1", e1}, {"t", t}};
    CurveReport b = compute(base.poly(), opts.analysis).report;
    const int d2 = std::max(2, e1 - 3);
    c.predicted = {{"base_class", "Free"}, {"base_d2", d2}};
    c.computed = {{"base_class", b.cls.name()}, {"base_d2", b.exponents[1]}, {"base_exponents", b.exponents}};
    c.hypotheses["thm10_bound"] = hypothesis(b.exponents[1] <= e1 - 2, "computed d2 <= deg - 2");
    Arrangement arr = base.arrangement;
    for (int k = 1; k <= t; ++k) {
        Extension ext = add_generic_line(arr, rng, opts.sampling);
        c.hypotheses["generic_line_" + std::to_string(k)] = certificate_json(ext.certificate);
        arr = std::move(ext.arrangement);
    }
    c.params["arrangement"] = write_arrangement(arr);
    CurveReport r = compute(arr.defining_poly(), opts.analysis).report;
    c.predicted["d"] = e1 + t;
    c.predicted["type"] = t;
    c.predicted["d1"] = e1 - 1 - d2 + t;
    c.predicted["d2"] = d2 + t;
    c.predicted["consistent"] = true;
    c.computed.update(invariants(r));
    return c;
}

TheoremCheck trial_thm10(int trial, Sampler& rng, const VerifyOptions& opts)
{
    Arrangement base;
    std::string label;
    bool conic = false;
    switch (trial % 5) {
    case 0: {
        int n = static_cast<int>(rng.uniform(2, 4));
        base = random_double_pencil(1, n, rng, opts.sampling.box).arrangement;
        label = "near-pencil of " + std::to_string(n + 1) + " lines";
        break;
    }
    case 1: base = catalog("cor11-family:5").arrangement; label = "cor11-family:5"; break;
    case 2: base = catalog("three-conics").arrangement; label = "three-conics"; break;
    case 3: base = catalog("conic-plus-tangent").arrangement; label = "conic-plus-tangent"; break;
    default:
        base = random_double_pencil(1, 3, rng, opts.sampling.box).arrangement;
        label = "near-pencil of 4 lines";
        conic = true;
        break;
    }
    Extension ext = conic ? add_generic_conic(base, rng, opts.sampling) : add_generic_line(base, rng, opts.sampling);
    TheoremCheck c = check_generic_union(base, ext.added, opts.analysis);
    c.params["base"] = label;
    c.hypotheses["transversal"]["attempts"] = ext.certificate.attempts;
    return c;
}

TheoremCheck trial_union(int trial, Sampler& rng, const VerifyOptions& opts)
{
    Poly f1 = parse_poly("x");
    Poly f2 = parse_poly("y");
    std::string label;
    switch (trial % 5) {
    case 0:
        f1 = parse_poly("x^3 + y^3 + z^3");
        f2 = parse_poly("x^3 + y^3");
        label = "fermat cubic and x^3 + y^3";
        break;
    case 1:
        f1 = parse_poly("y^2 - x*z");
        f2 = parse_poly("z");
        label = "conic and tangent line";
        break;
    case 2: {
        int n1 = static_cast<int>(rng.uniform(2, 3));
        int n2 = static_cast<int>(rng.uniform(3, 4));
        DoublePencil dp = random_double_pencil(n1, n2, rng, opts.sampling.box);
        auto lines = dp.arrangement.lines();
        f1 = product_of({lines.begin(), lines.begin() + n1});
        f2 = product_of({lines.begin() + n1, lines.end()});
        label = "two pencils of " + std::to_string(n1) + " and " + std::to_string(n2) + " lines";
        break;
    }
    case 3: {
        auto lines = catalog("eb7").arrangement.lines();
        f1 = product_of({lines.begin(), lines.begin() + 4});
        f2 = product_of({lines.begin() + 4, lines.end()});
        label = "eb7 split 4 + 3";
        break;
    }
    default: {
        DoublePencil near = random_double_pencil(1, 3, rng, opts.sampling.box);
        Extension ext = add_generic_conic(near.arrangement, rng, opts.sampling);
        f1 = near.arrangement.defining_poly();
        f2 = component_poly(ext.added);
        label = "near-pencil and generic conic";
        break;
    }
    }
    TheoremCheck c = check_union_bounds(f1, f2, opts.analysis);
    c.params["configuration"] = label;
    return c;
}

TheoremCheck trial_ll(int trial, Sampler& rng, const VerifyOptions& opts)
{
    Arrangement arr;
    std::string label;
    switch (trial % 4) {
    case 0: arr = catalog("eb7").arrangement; label = "eb7"; break;
    case 1: arr = catalog("generic5").arrangement; label = "generic5"; break;
    case 2: {
        DoublePencil dp = random_double_pencil(3, 4, rng, opts.sampling.box);
        auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(dp.nodes.size()) - 1));
        arr = add_line_through_one_double_point(dp, dp.nodes[k], rng, opts.sampling).arrangement;
        label = "double pencil (3,4) + node line";
        break;
    }
    default: {
        DoublePencil dp = random_double_pencil(3, 3, rng, opts.sampling.box);
        arr = add_generic_line(dp.arrangement, rng, opts.sampling).arrangement;
        label = "double pencil (3,3) + generic line";
        break;
    }
    }
    TheoremCheck c = check_line_bounds(arr, opts.analysis);
    c.params["configuration"] = label;
    return c;
}

TheoremCheck trial_smooth(int trial, Sampler& rng, const VerifyOptions& opts)
{
    const int d = 3 + trial % 3;
    Poly f(RationalField{}, d);
    for (std::size_t i = 0; i < monomial_count(d); ++i) {
        f.add_term(monomial_at(d, i), mpq_class(rng.uniform(-opts.sampling.box, opts.sampling.box)));
    }
    if (f.is_zero()) throw CertificationError("zero form sampled");
    Computed cr = [&] {
        try {
            return compute(f, opts.analysis);
        } catch (const NonReducedError&) {
            throw CertificationError("sampled form is not reduced");
        }
    }();
    if (cr.report.tau != 0) throw CertificationError("sampled curve is singular");
    TheoremCheck c;
    c.params = {{"d", d}, {"polynomial", render(f)}};
    c.hypotheses["smooth"] = hypothesis(true, "Tjurina number 0 from the certified Hilbert function");
    c.predicted = {{"exponents", std::vector<int>(3, d - 1)}, {"type", d - 1}, {"d1_plus_d2", 2 * d - 2}, {"consistent", true}};
    c.computed = invariants(cr.report);
    c.computed["d1_plus_d2"] = cr.report.exponents[0] + cr.report.exponents[1];
    return c;
}

TheoremCheck trial_rk11(int trial, Sampler&, const VerifyOptions& opts)
{
    return check_rk11(4 + trial % 4, opts.analysis);
}

const std::map<std::string, TrialBody>& bodies()
{
    static const std::map<std::string, TrialBody> m = {
        {"prop2", trial_prop2}, {"thm0", trial_thm0},   {"thm2", trial_thm2},     {"thm4", trial_thm4},
        {"cor10", trial_cor10}, {"cor11", trial_cor11}, {"thm10", trial_thm10},   {"union", trial_union},
        {"ll", trial_ll},       {"rk11", trial_rk11},   {"smooth", trial_smooth},
    };
    return m;
}

}  // namespace

std::vector<std::string> theorem_ids()
{
    return {"prop2", "thm0", "thm2", "thm4", "cor10", "cor11", "thm10", "union", "ll", "rk11", "smooth"};
}

std::string canonical_theorem_id(const std::string& id)
{
    if (id == "cor2") return "thm0";
    if (id == "propA" || id == "thm1") return "union";
    if (bodies().count(id)) return id;
    throw std::invalid_argument("unknown theorem id '" + id + "'");
}

TheoremCheck run_trial(const std::string& theorem, int trial, std::uint64_t seed, const VerifyOptions& opts)
{
    const std::string id = canonical_theorem_id(theorem);
    const TrialBody& body = bodies().at(id);
    std::uint64_t current = seed;
    for (int reseed = 0;; ++reseed) {
        TheoremCheck c;
        try {
            Sampler rng(current);
            c = body(trial, rng, opts);
            decide(c);
        } catch (const CertificationError& e) {
            if (reseed < opts.reseed_limit) {
                current = mix_seed(seed, static_cast<std::uint64_t>(reseed) + 1000);
                continue;
            }
            c = TheoremCheck{};
            c.verdict = Verdict::Error;
            c.detail = std::string("genericity certification failed after reseeding: ") + e.what();
        } catch (const std::exception& e) {
            c = TheoremCheck{};
            c.verdict = Verdict::Error;
            c.detail = e.what();
        }
        c.theorem = id;
        c.trial = trial;
        c.seed = current;
        c.reseeds = reseed;
        return c;
    }
}

CampaignSummary run_campaign(const std::string& theorem, const VerifyOptions& opts)
{
    CampaignSummary s;
    s.theorem = canonical_theorem_id(theorem);
    const int n = std::max(opts.trials, 0);
    s.checks.resize(n);
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i = next++; i < n; i = next++) {
            s.checks[i] = run_trial(s.theorem, i, mix_seed(opts.seed, static_cast<std::uint64_t>(i)), opts);
        }
    };
    const int workers = std::clamp(opts.workers, 1, std::max(n, 1));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (const auto& c : s.checks) {
        switch (c.verdict) {
        case Verdict::Pass: ++s.pass; break;
        case Verdict::Fail: ++s.fail; break;
        case Verdict::HypothesisNotMet: ++s.hypothesis_not_met; break;
        case Verdict::Error: ++s.error; break;
        }
    }
    return s;
}

TheoremCheck check_union_bounds(const Poly& f1, const Poly& f2, const AnalysisOptions& opts)
{
    TheoremCheck c;
    c.theorem = "union";
    c.params = {{"f1", render(f1)}, {"f2", render(f2)}};
    long common = count_intersections(f1, f2);
    c.hypotheses["no_common_component"] = hypothesis(true, "nonzero resultant after a verified coordinate change");
    c.hypotheses["no_common_component"]["intersection_points"] = common;
    CurveReport r1 = compute(f1, opts).report;
    CurveReport r2 = compute(f2, opts).report;
    CurveReport r = compute(multiply(f1, f2), opts).report;
    const int deg1 = f1.degree(), deg2 = f2.degree();
    const int mdr1 = r1.exponents[0], mdr2 = r2.exponents[0], mdr = r.exponents[0];
    c.computed = {{"mdr1", mdr1}, {"mdr2", mdr2}, {"mdr", mdr}, {"t1", r1.type_t}, {"t2", r2.type_t}, {"t", r.type_t},
                  {"deg1", deg1}, {"deg2", deg2}};
    c.computed["mdr_lower_bound"] = std::max(mdr1, mdr2) <= mdr;
    c.computed["mdr_upper_bound"] = mdr <= std::min(mdr1 + deg2, mdr2 + deg1);
    c.computed["type_upper_bound"] = r.type_t <= std::min(r1.type_t + deg2, r2.type_t + deg1);
    c.computed["consistent"] = r1.consistent() && r2.consistent() && r.consistent();
    c.predicted = {{"mdr_lower_bound", true}, {"mdr_upper_bound", true}, {"type_upper_bound", true}, {"consistent", true}};
    decide(c);
    return c;
}

TheoremCheck check_generic_union(const Arrangement& base, const Component& added, const AnalysisOptions& opts)
{
    TheoremCheck c;
    c.theorem = "thm10";
    c.params = {{"base", write_arrangement(base)}, {"added", write_arrangement(single(added))}};
    const Poly f1 = base.defining_poly();
    const Poly f2 = component_poly(added);
    const int deg1 = f1.degree(), deg2 = f2.degree();

    if (std::holds_alternative<Line>(added)) {
        c.hypotheses["smooth"] = hypothesis(true, "line");
    } else if (std::holds_alternative<Conic>(added)) {
        c.hypotheses["smooth"] = hypothesis(sgn(std::get<Conic>(added).determinant()) != 0, "nonzero conic determinant");
    } else {
        c.hypotheses["smooth"] = hypothesis(compute(f2, opts).report.tau == 0, "Tjurina number 0");
    }
    long count = count_intersections(f1, f2);
    c.hypotheses["transversal"] = hypothesis(count == long(deg1) * deg2, "exact distinct-point count");
    c.hypotheses["transversal"]["count"] = count;
    c.hypotheses["transversal"]["expected"] = long(deg1) * deg2;

    CurveReport r1 = compute(f1, opts).report;
    const int d1 = r1.exponents[0], d2 = r1.exponents[1];
    c.hypotheses["d2_at_most_deg_minus_2"] = hypothesis(d2 <= deg1 - 2, "computed d2 of the base");
    c.hypotheses["d2_at_most_deg_minus_2"]["d2"] = d2;
    c.hypotheses["d2_at_most_deg_minus_2"]["deg"] = deg1;

    CurveReport r = compute(multiply(f1, f2), opts).report;
    c.predicted = {{"d1", d1 + deg2}, {"d2", d2 + deg2}, {"type", r1.type_t + deg2}, {"d2_at_most_deg_minus_2", true},
                   {"consistent", true}};
    c.computed = invariants(r);
    c.computed["d2_at_most_deg_minus_2"] = r.exponents[1] <= r.d - 2;
    c.computed["base_exponents"] = r1.exponents;
    c.computed["base_type"] = r1.type_t;
    decide(c);
    return c;
}

TheoremCheck check_rk11(int e1, const AnalysisOptions& opts)
{
    if (e1 < 4) throw std::invalid_argument("rk11 needs e1 >= 4");
    TheoremCheck c;
    c.theorem = "rk11";
    c.params = {{"e1", e1}};
    CatalogEntry entry = catalog("cor11-family:" + std::to_string(e1));
    const auto& comps = entry.arrangement.components();
    const Poly line_x = component_poly(comps[0]);
    const Poly conic = component_poly(comps[1]);
    const Poly pencil = component_poly(comps[2]);

    // The singular points off p = (0:0:1) are the second points of the pencil lines on the conic.
    long conic_pencil = count_intersections(conic, pencil);
    c.hypotheses["nodes_off_p"] = hypothesis(conic_pencil - 1 == e1 - 3 && count_intersections(line_x, conic) == 1 &&
                                                 count_intersections(line_x, pencil) == 1,
                                             "exact distinct-point counts between the three components");
    c.hypotheses["nodes_off_p"]["nodes"] = conic_pencil - 1;

    CurveReport r = compute(entry.poly(), opts).report;
    c.hypotheses["free"] = hypothesis(r.m == 2, "computed resolution");
    const long tau = r.tau;
    const long tau_p = tau - (e1 - 3);
    const long mu_p = long(e1) * e1 - 4L * e1 + 6;  // Milnor number of the union germ at p
    c.computed = {{"tau", tau}, {"tau_p", tau_p}, {"mu_p", mu_p}, {"epsilon_p", mu_p - tau_p}, {"consistent", r.consistent()}};
    c.predicted = {{"tau", long(e1 - 1) * (e1 - 1) - 2L * (e1 - 3)},
                   {"tau_p", long(e1) * e1 - 5L * e1 + 10},
                   {"epsilon_p", e1 - 4},
                   {"consistent", true}};
    decide(c);
    return c;
}

TheoremCheck check_line_bounds(const Arrangement& lines, const AnalysisOptions& opts)
{
    if (!lines.lines_only()) throw ArrangementError("line bounds need a line arrangement");
    TheoremCheck c;
    c.theorem = "ll";
    c.params = {{"arrangement", write_arrangement(lines)}};
    IntersectionProfile prof = intersection_profile(lines.lines());
    CurveReport r = compute(lines.defining_poly(), opts).report;
    c.hypotheses["type_2"] = hypothesis(r.type_t == 2, "computed type");
    LineBoundCheck b = theorem_ll_check(prof, r.d, r.cls.name(), r.exponents);
    c.computed = invariants(r);
    c.computed["t"] = profile_json(prof.t);
    c.computed["max_multiplicity"] = b.max_multiplicity;
    c.computed["multiplicity_bound"] = b.multiplicity_bound;
    c.computed["multiplicity_slack"] = b.multiplicity_slack();
    c.computed["multiplicity_bound_holds"] = b.multiplicity_slack() >= 0;
    c.computed["tau_from_profile"] = prof.tau_sum();
    c.predicted = {{"multiplicity_bound_holds", true}, {"tau_from_profile", r.tau}, {"consistent", true}};
    if (b.type2) {
        c.computed["weighted_sum"] = b.weighted_sum;
        c.computed["sum_bound"] = b.sum_bound;
        c.computed["sum_slack"] = b.sum_slack();
        c.computed["sum_bound_holds"] = b.sum_slack() >= 0;
        c.computed["sharp"] = b.sum_slack() == 0;
        c.predicted["sum_bound_holds"] = true;
    }
    decide(c);
    return c;
}

}  // namespace curveh
