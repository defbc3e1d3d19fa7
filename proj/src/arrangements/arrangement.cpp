#include "curveh/arrangement.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "curveh/parser.hpp"
#include "curveh/univariate.hpp"

namespace curveh {

namespace {

using Mat3 = std::array<std::array<mpq_class, 3>, 3>;

std::array<mpq_class, 3> cross(const std::array<mpq_class, 3>& a, const std::array<mpq_class, 3>& b)
{
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero3(const std::array<mpq_class, 3>& v)
{
    return sgn(v[0]) == 0 && sgn(v[1]) == 0 && sgn(v[2]) == 0;
}

mpq_class det3(const Mat3& m)
{
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Scales a nonzero form so that its leading coefficient is 1.
Poly monic(const Poly& f)
{
    return scale(f, mpq_class(1) / f.terms().begin()->second);
}

/// Coefficient of z^deg, i.e. the value at (0:0:1).
mpq_class value_at_z(const Poly& f)
{
    return f.coefficient(Monomial(0, 0, f.degree()));
}

/// Coefficients in z (ascending) of f(x0, 1, z).
std::vector<mpq_class> restrict_to_vertical(const Poly& f, const mpq_class& x0)
{
    std::vector<mpq_class> c(f.degree() + 1, mpq_class(0));
    for (const auto& [m, coef] : f.terms()) {
        mpq_class v = coef;
        for (int i = 0; i < m[0]; ++i) v *= x0;
        c[m[2]] += v;
    }
    return c;
}

/// Distinct roots in P^1 of a nonzero binary form given by the coefficients
/// of x^i y^(D-i).
long binary_form_roots(const std::vector<mpq_class>& ascending_in_x, int D)
{
    UPoly r(ascending_in_x);
    if (r.is_zero()) throw CommonComponentError("curves share a component");
    return distinct_root_count(r) + (r.degree() < D ? 1 : 0);
}

long count_on_line(const Poly& line, const Poly& h)
{
    std::array<mpq_class, 3> l{line.coefficient(Monomial(1, 0, 0)), line.coefficient(Monomial(0, 1, 0)),
                               line.coefficient(Monomial(0, 0, 1))};
    std::vector<std::array<mpq_class, 3>> span;
    for (int i = 0; i < 3 && span.size() < 2; ++i) {
        std::array<mpq_class, 3> e{0, 0, 0};
        e[i] = 1;
        auto p = cross(l, e);
        if (is_zero3(p)) continue;
        if (!span.empty() && is_zero3(cross(span[0], p))) continue;
        span.push_back(p);
    }
    const auto& P = span[0];
    const auto& Q = span[1];
    Mat3 a{{{P[0], Q[0], 0}, {P[1], Q[1], 0}, {P[2], Q[2], 0}}};
    Poly restricted = linear_substitution(h, a);
    std::vector<mpq_class> coeffs(h.degree() + 1, mpq_class(0));
    for (const auto& [m, c] : restricted.terms()) coeffs[m[0]] = c;
    return binary_form_roots(coeffs, h.degree());
}

long count_by_resultant(const Poly& g, const Poly& h)
{
    const int D = g.degree() * h.degree();
    Sampler rng(0x1f2e3d4c5b6a7988ull);
    long best = -1;
    int valid = 0;
    for (int attempt = 0; attempt < 64 && valid < 3; ++attempt) {
        Mat3 a;
        for (auto& row : a) {
            for (auto& v : row) v = rng.uniform(-9, 9);
        }
        if (sgn(det3(a)) == 0) continue;
        Poly g2 = linear_substitution(g, a);
        Poly h2 = linear_substitution(h, a);
        if (sgn(value_at_z(g2)) == 0 || sgn(value_at_z(h2)) == 0) continue;
        ++valid;
        std::vector<mpq_class> xs, ys;
        for (int i = 0; i <= D; ++i) {
            mpq_class x0(i);
            xs.push_back(x0);
            ys.push_back(resultant(restrict_to_vertical(g2, x0), g2.degree(), restrict_to_vertical(h2, x0), h2.degree()));
        }
        UPoly r = interpolate(xs, ys);
        best = std::max(best, binary_form_roots(r.coefficients(), D));
        if (best == D) break;
    }
    if (best < 0) throw std::runtime_error("no admissible coordinate change found for intersection count");
    return best;
}

}  // namespace

Point::Point(mpq_class a, mpq_class b, mpq_class d) : c{std::move(a), std::move(b), std::move(d)}
{
    int i = 0;
    while (i < 3 && sgn(c[i]) == 0) ++i;
    if (i == 3) throw ArrangementError("the zero vector is not a projective point");
    mpq_class s = c[i];
    for (auto& v : c) v /= s;
}

bool operator<(const Point& a, const Point& b)
{
    for (int i = 0; i < 3; ++i) {
        int r = cmp(a.c[i], b.c[i]);
        if (r != 0) return r < 0;
    }
    return false;
}

Poly Line::poly() const
{
    Poly f(RationalField{}, 1);
    f.add_term(Monomial(1, 0, 0), c[0]);
    f.add_term(Monomial(0, 1, 0), c[1]);
    f.add_term(Monomial(0, 0, 1), c[2]);
    return f;
}

bool Line::contains(const Point& p) const
{
    return sgn(c[0] * p.c[0] + c[1] * p.c[1] + c[2] * p.c[2]) == 0;
}

Poly Conic::poly() const
{
    Poly f(RationalField{}, 2);
    f.add_term(Monomial(2, 0, 0), a[0]);
    f.add_term(Monomial(1, 1, 0), 2 * a[1]);
    f.add_term(Monomial(1, 0, 1), 2 * a[2]);
    f.add_term(Monomial(0, 2, 0), a[3]);
    f.add_term(Monomial(0, 1, 1), 2 * a[4]);
    f.add_term(Monomial(0, 0, 2), a[5]);
    return f;
}

mpq_class Conic::determinant() const
{
    Mat3 m{{{a[0], a[1], a[2]}, {a[1], a[3], a[4]}, {a[2], a[4], a[5]}}};
    return det3(m);
}

Poly component_poly(const Component& c)
{
    return std::visit(
        [](const auto& x) -> Poly {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, CurveComponent>) {
                return x.f;
            } else {
                return x.poly();
            }
        },
        c);
}

int component_degree(const Component& c)
{
    if (std::holds_alternative<Line>(c)) return 1;
    if (std::holds_alternative<Conic>(c)) return 2;
    return std::get<CurveComponent>(c).f.degree();
}

std::string component_kind(const Component& c)
{
    if (std::holds_alternative<Line>(c)) return "line";
    if (std::holds_alternative<Conic>(c)) return "conic";
    return "curve";
}

Line line_through(const Point& p, const Point& q)
{
    auto l = cross(p.c, q.c);
    if (is_zero3(l)) throw ArrangementError("a line needs two distinct points");
    return Line{l};
}

Point meet(const Line& l, const Line& m)
{
    auto p = cross(l.c, m.c);
    if (is_zero3(p)) throw ArrangementError("duplicate lines");
    return Point(p[0], p[1], p[2]);
}

void Arrangement::add(Component c)
{
    if (const auto* l = std::get_if<Line>(&c)) {
        if (is_zero3(l->c)) throw ArrangementError("line with all coefficients zero");
    } else if (const auto* q = std::get_if<Conic>(&c)) {
        if (sgn(q->determinant()) == 0) throw ArrangementError("conic matrix is degenerate (not a smooth conic)");
    } else {
        const Poly& f = std::get<CurveComponent>(c).f;
        if (f.is_zero() || f.degree() < 1) throw ArrangementError("curve component must be a nonzero form of positive degree");
    }
    Poly n = monic(component_poly(c));
    for (const auto& existing : normalized_) {
        if (existing == n) throw ArrangementError("component " + render(n) + " appears twice");
    }
    normalized_.push_back(std::move(n));
    components_.push_back(std::move(c));
}

std::vector<Line> Arrangement::lines() const
{
    std::vector<Line> out;
    for (const auto& c : components_) {
        if (const auto* l = std::get_if<Line>(&c)) out.push_back(*l);
    }
    return out;
}

bool Arrangement::lines_only() const
{
    return std::all_of(components_.begin(), components_.end(), [](const Component& c) { return std::holds_alternative<Line>(c); });
}

int Arrangement::degree() const
{
    int d = 0;
    for (const auto& c : components_) d += component_degree(c);
    return d;
}

int Arrangement::line_count() const
{
    return static_cast<int>(std::count_if(components_.begin(), components_.end(),
                                          [](const Component& c) { return std::holds_alternative<Line>(c); }));
}

int Arrangement::conic_count() const
{
    return static_cast<int>(std::count_if(components_.begin(), components_.end(),
                                          [](const Component& c) { return std::holds_alternative<Conic>(c); }));
}

Poly Arrangement::defining_poly() const
{
    Poly f = Poly::monomial(RationalField{}, Monomial(0, 0, 0), mpq_class(1));
    for (const auto& c : components_) f = multiply(f, component_poly(c));
    return f;
}

long IntersectionProfile::weighted_sum() const
{
    long s = 0;
    for (const auto& [r, n] : t) s += (r - 1) * n;
    return s;
}

long IntersectionProfile::tau_sum() const
{
    long s = 0;
    for (const auto& [r, n] : t) s += long(r - 1) * (r - 1) * n;
    return s;
}

IntersectionProfile intersection_profile(const std::vector<Line>& lines)
{
    if (lines.size() < 2) throw ArrangementError("intersection profile needs at least two lines");
    std::map<Point, std::set<int>> incidence;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            Point p = meet(lines[i], lines[j]);
            auto& s = incidence[p];
            s.insert(static_cast<int>(i));
            s.insert(static_cast<int>(j));
        }
    }
    IntersectionProfile prof;
    long pairs = 0;
    for (const auto& [p, s] : incidence) {
        int r = static_cast<int>(s.size());
        ++prof.t[r];
        prof.max_multiplicity = std::max(prof.max_multiplicity, r);
        prof.points.emplace(p, std::vector<int>(s.begin(), s.end()));
        pairs += long(r) * (r - 1) / 2;
    }
    long n = static_cast<long>(lines.size());
    if (pairs != n * (n - 1) / 2) throw std::logic_error("intersection profile does not account for every pair of lines");
    return prof;
}

long count_intersections(const Poly& g, const Poly& h)
{
    if (g.degree() < 1 || h.degree() < 1) throw std::invalid_argument("intersection count needs curves of positive degree");
    if (g.degree() == 1) return count_on_line(g, h);
    if (h.degree() == 1) return count_on_line(h, g);
    return count_by_resultant(g, h);
}

long count_component_intersections(const Component& c, const Arrangement& arr)
{
    if (arr.empty()) return 0;
    return count_intersections(component_poly(c), arr.defining_poly());
}

std::map<int, long> double_pencil_profile(int n1, int n2)
{
    std::map<int, long> t;
    t[2] = long(n1) * n2;
    for (int n : {n1, n2}) {
        if (n >= 2) ++t[n];
    }
    return t;
}

DoublePencil build_double_pencil(int n1, int n2, const Point& center1, const Point& center2, const Point& aux,
                                 const std::vector<mpq_class>& slopes1, const std::vector<mpq_class>& slopes2)
{
    if (n1 < 1 || n2 < n1 || n1 + n2 <= 2) throw ArrangementError("double pencil needs 1 <= n1 <= n2 and n1 + n2 > 2");
    if (static_cast<int>(slopes1.size()) != n1 || static_cast<int>(slopes2.size()) != n2) {
        throw ArrangementError("double pencil needs one slope per line");
    }
    Line base = line_through(center1, center2);
    if (base.contains(aux)) throw ArrangementError("auxiliary point lies on the line through the centers");
    auto check_slopes = [](const std::vector<mpq_class>& s) {
        std::set<mpq_class> seen;
        for (const auto& v : s) {
            if (sgn(v) == 0) throw ArrangementError("slope 0 gives the line through both centers");
            if (!seen.insert(v).second) throw ArrangementError("slopes within a pencil must be distinct");
        }
    };
    check_slopes(slopes1);
    check_slopes(slopes2);
    auto offset = [](const Point& p, const mpq_class& s, const Point& q) {
        return Point(p.c[0] + s * q.c[0], p.c[1] + s * q.c[1], p.c[2] + s * q.c[2]);
    };

    DoublePencil dp;
    dp.n1 = n1;
    dp.n2 = n2;
    dp.center1 = center1;
    dp.center2 = center2;
    std::vector<Line> first, second;
    for (const auto& s : slopes1) first.push_back(line_through(center1, offset(center2, s, aux)));
    for (const auto& s : slopes2) second.push_back(line_through(center2, offset(center1, s, aux)));
    for (const auto& l : first) dp.arrangement.add(l);
    for (const auto& l : second) dp.arrangement.add(l);
    for (const auto& a : first) {
        for (const auto& b : second) dp.nodes.push_back(meet(a, b));
    }
    IntersectionProfile prof = intersection_profile(dp.arrangement.lines());
    if (prof.t != double_pencil_profile(n1, n2)) throw ArrangementError("double pencil has unexpected intersection profile");
    return dp;
}

DoublePencil random_double_pencil(int n1, int n2, Sampler& rng, int box)
{
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto point = [&] {
            for (;;) {
                mpq_class a = rng.uniform(-box, box), b = rng.uniform(-box, box), c = rng.uniform(-box, box);
                if (sgn(a) != 0 || sgn(b) != 0 || sgn(c) != 0) return Point(a, b, c);
            }
        };
        Point c1 = point(), c2 = point(), aux = point();
        if (c1 == c2) continue;
        if (line_through(c1, c2).contains(aux)) continue;
        auto slopes = [&](int n) {
            std::set<long> used;
            std::vector<mpq_class> s;
            while (static_cast<int>(s.size()) < n) {
                long v = rng.nonzero(box);
                if (used.insert(v).second) s.emplace_back(v);
            }
            return s;
        };
        auto s1 = slopes(n1);
        auto s2 = slopes(n2);
        try {
            return build_double_pencil(n1, n2, c1, c2, aux, s1, s2);
        } catch (const ArrangementError&) {
            continue;
        }
    }
    throw CertificationError("could not sample a double pencil");
}

namespace {

template <class Sample>
Extension extend(const Arrangement& arr, const SamplingOptions& opts, const std::string& kind, long expected, Sample sample)
{
    if (arr.empty()) throw ArrangementError("cannot extend an empty arrangement");
    for (int attempt = 1; attempt <= opts.retries; ++attempt) {
        std::optional<Component> c = sample();
        if (!c) continue;
        Arrangement next = arr;
        try {
            next.add(*c);
        } catch (const ArrangementError&) {
            continue;
        }
        long count;
        try {
            count = count_component_intersections(*c, arr);
        } catch (const CommonComponentError&) {
            continue;
        }
        if (count != expected) continue;
        return Extension{std::move(next), *c, GenericityCertificate{kind, count, expected, attempt}};
    }
    throw CertificationError(kind + ": no certified sample after " + std::to_string(opts.retries) + " attempts");
}

}  // namespace

Extension add_generic_line(const Arrangement& arr, Sampler& rng, const SamplingOptions& opts)
{
    return extend(arr, opts, "generic-line", arr.degree(), [&]() -> std::optional<Component> {
        Line l{{rng.uniform(-opts.box, opts.box), rng.uniform(-opts.box, opts.box), rng.uniform(-opts.box, opts.box)}};
        if (is_zero3(l.c)) return std::nullopt;
        return l;
    });
}

Extension add_generic_conic(const Arrangement& arr, Sampler& rng, const SamplingOptions& opts)
{
    return extend(arr, opts, "generic-conic", 2L * arr.degree(), [&]() -> std::optional<Component> {
        Conic q;
        for (auto& v : q.a) v = rng.uniform(-opts.box, opts.box);
        if (sgn(q.determinant()) == 0) return std::nullopt;
        return q;
    });
}

Extension add_line_through_one_double_point(const DoublePencil& dp, const Point& node, Sampler& rng,
                                            const SamplingOptions& opts)
{
    if (node == dp.center1 || node == dp.center2) throw ArrangementError("node is a pencil center, not a double point");
    if (std::find(dp.nodes.begin(), dp.nodes.end(), node) == dp.nodes.end()) {
        throw ArrangementError("point is not a double point of the double pencil");
    }
    const Arrangement& arr = dp.arrangement;
    return extend(arr, opts, "node-line", arr.degree() - 1, [&]() -> std::optional<Component> {
        Point q;
        try {
            q = Point(rng.uniform(-opts.box, opts.box), rng.uniform(-opts.box, opts.box), rng.uniform(-opts.box, opts.box));
        } catch (const ArrangementError&) {
            return std::nullopt;
        }
        if (q == node) return std::nullopt;
        return line_through(node, q);
    });
}

namespace {

mpq_class parse_rational(const std::string& tok, int line_no)
{
    try {
        mpq_class q(tok, 10);
        if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ArrangementError("line " + std::to_string(line_no) + ": bad number '" + tok + "'");
    }
}

}  // namespace

Arrangement read_arrangement(std::istream& in)
{
    Arrangement arr;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        auto first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto colon = raw.find(':');
        if (colon == std::string::npos) throw ArrangementError("line " + std::to_string(line_no) + ": expected 'kind: data'");
        std::string kind = raw.substr(first, colon - first);
        kind.erase(kind.find_last_not_of(" \t") + 1);
        std::string rest = raw.substr(colon + 1);
        std::istringstream toks(rest);
        std::vector<mpq_class> nums;
        if (kind == "line" || kind == "conic") {
            std::string tok;
            while (toks >> tok) nums.push_back(parse_rational(tok, line_no));
        }
        try {
            if (kind == "line") {
                if (nums.size() != 3) throw ArrangementError("a line needs 3 coefficients");
                arr.add(Line{{nums[0], nums[1], nums[2]}});
            } else if (kind == "conic") {
                if (nums.size() != 6) throw ArrangementError("a conic needs 6 matrix entries a11 a12 a13 a22 a23 a33");
                arr.add(Conic{{nums[0], nums[1], nums[2], nums[3], nums[4], nums[5]}});
            } else if (kind == "curve") {
                arr.add(CurveComponent{parse_poly(rest)});
            } else {
                throw ArrangementError("unknown component kind '" + kind + "'");
            }
        } catch (const std::invalid_argument& e) {
            throw ArrangementError("line " + std::to_string(line_no) + ": " + e.what());
        } catch (const InputError& e) {
            throw ArrangementError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (arr.empty()) throw ArrangementError("arrangement file has no components");
    return arr;
}

std::string write_arrangement(const Arrangement& arr)
{
    std::ostringstream out;
    for (const auto& c : arr.components()) {
        if (const auto* l = std::get_if<Line>(&c)) {
            out << "line: " << l->c[0].get_str() << ' ' << l->c[1].get_str() << ' ' << l->c[2].get_str() << '\n';
        } else if (const auto* q = std::get_if<Conic>(&c)) {
            out << "conic:";
            for (const auto& v : q->a) out << ' ' << v.get_str();
            out << '\n';
        } else {
            out << "curve: " << render(std::get<CurveComponent>(c).f) << '\n';
        }
    }
    return out.str();
}

LineBoundCheck theorem_ll_check(const IntersectionProfile& profile, int d, const std::string& type2_class,
                                const std::vector<int>& exponents)
{
    LineBoundCheck c;
    c.d = d;
    c.max_multiplicity = profile.max_multiplicity;
    c.multiplicity_bound = (4 * d + d + 4) / (d + 5);
    c.weighted_sum = profile.weighted_sum();
    if ((type2_class == "Type2A" || type2_class == "Type2B") && exponents.size() >= 2) {
        c.type2 = true;
        c.sum_bound = long(exponents[0]) * exponents[1] + (type2_class == "Type2A" ? 2 : 1);
    }
    return c;
}

}  // namespace curveh
