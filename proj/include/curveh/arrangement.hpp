#pragma once

// Line and conic-line arrangements: components, exact intersection
// combinatorics, genericity certificates and the double-pencil
// constructions.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "curveh/polynomial.hpp"
#include "curveh/random.hpp"

namespace curveh {

class ArrangementError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two curves share a component, so their intersection is not finite.
class CommonComponentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sampling could not produce a certified configuration.
class CertificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A projective point with exact coordinates, scaled so that its first
/// nonzero coordinate is 1.
struct Point {
    std::array<mpq_class, 3> c;

    Point() : c{0, 0, 0} {}
    Point(mpq_class a, mpq_class b, mpq_class d);
    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b);
};

/// a x + b y + c z = 0.
struct Line {
    std::array<mpq_class, 3> c;
    Poly poly() const;
    bool contains(const Point& p) const;
};

/// Symmetric matrix entries a11 a12 a13 a22 a23 a33 of
/// a11 x^2 + 2 a12 xy + 2 a13 xz + a22 y^2 + 2 a23 yz + a33 z^2.
struct Conic {
    std::array<mpq_class, 6> a;
    Poly poly() const;
    mpq_class determinant() const;
};

/// Any other reduced component, given by its equation.
struct CurveComponent {
    Poly f;
};

using Component = std::variant<Line, Conic, CurveComponent>;

Poly component_poly(const Component& c);
int component_degree(const Component& c);
std::string component_kind(const Component& c);

/// Line through two distinct points; join of points and meet of lines are
/// both cross products.
Line line_through(const Point& p, const Point& q);
Point meet(const Line& l, const Line& m);

class Arrangement {
public:
    Arrangement() = default;

    /// Validates the component (nonzero line, nondegenerate conic, not
    /// proportional to an existing component) and appends it.
    void add(Component c);

    const std::vector<Component>& components() const { return components_; }
    std::vector<Line> lines() const;
    bool lines_only() const;
    bool empty() const { return components_.empty(); }
    int degree() const;
    int line_count() const;
    int conic_count() const;

    /// Product of the component equations.
    Poly defining_poly() const;

private:
    std::vector<Component> components_;
    std::vector<Poly> normalized_;
};

struct IntersectionProfile {
    std::map<int, long> t;  // r -> number of r-fold points (r >= 2)
    int max_multiplicity = 0;
    std::map<Point, std::vector<int>> points;  // multiple point -> indices of lines through it

    long weighted_sum() const;  // sum (r - 1) t_r
    long tau_sum() const;       // sum (r - 1)^2 t_r
    friend bool operator==(const IntersectionProfile& a, const IntersectionProfile& b) { return a.t == b.t; }
};

/// Exact multiple points of at least two pairwise distinct lines.
IntersectionProfile intersection_profile(const std::vector<Line>& lines);

/// Number of distinct points of {g = 0} and {h = 0} over the algebraic
/// closure. Exact for a line g; otherwise the maximum over a few verified
/// random projections, which is a lower bound that is exact whenever it
/// reaches deg g * deg h. Throws CommonComponentError.
long count_intersections(const Poly& g, const Poly& h);

long count_component_intersections(const Component& c, const Arrangement& arr);

/// Certificate that an added component meets the arrangement in the
/// required number of distinct points.
struct GenericityCertificate {
    std::string kind;  // "generic-line", "generic-conic", "node-line", "transversal"
    long count = 0;
    long expected = 0;
    int attempts = 0;
    bool ok() const { return count == expected; }
};

struct DoublePencil {
    Arrangement arrangement;
    int n1 = 0, n2 = 0;
    Point center1, center2;
    std::vector<Point> nodes;  // the n1 * n2 double points
};

/// n1 lines through center1 and n2 lines through center2; each line of the
/// first pencil is the join of center1 with center2 + s * aux, and dually
/// for the second pencil. The slopes must be nonzero and pairwise distinct
/// within a pencil, aux off the line center1 center2.
DoublePencil build_double_pencil(int n1, int n2, const Point& center1, const Point& center2, const Point& aux,
                                 const std::vector<mpq_class>& slopes1, const std::vector<mpq_class>& slopes2);

/// Random centers and slopes drawn from the sampler, structure verified
/// through the intersection profile.
DoublePencil random_double_pencil(int n1, int n2, Sampler& rng, int box = 12);

/// Expected profile of a double pencil.
std::map<int, long> double_pencil_profile(int n1, int n2);

struct Extension {
    Arrangement arrangement;
    Component added;
    GenericityCertificate certificate;
};

struct SamplingOptions {
    int box = 12;
    int retries = 64;
};

Extension add_generic_line(const Arrangement& arr, Sampler& rng, const SamplingOptions& opts = {});
Extension add_generic_conic(const Arrangement& arr, Sampler& rng, const SamplingOptions& opts = {});
/// Adds a line through `node`, which must be a double point of the pencil
/// arrangement, meeting it in exactly deg - 1 points.
Extension add_line_through_one_double_point(const DoublePencil& dp, const Point& node, Sampler& rng,
                                            const SamplingOptions& opts = {});

/// Text format: one component per line, "line: a b c",
/// "conic: a11 a12 a13 a22 a23 a33" or "curve: <polynomial>"; '#' starts a
/// comment.
Arrangement read_arrangement(std::istream& in);
std::string write_arrangement(const Arrangement& arr);

struct LineBoundCheck {
    int d = 0;
    int max_multiplicity = 0;
    int multiplicity_bound = 0;  // ceil(4d / (d + 5))
    bool type2 = false;
    long weighted_sum = 0;       // sum (r - 1) t_r
    long sum_bound = 0;          // d1 d2 + 2 (2A) or d1 d2 + 1 (2B)
    long multiplicity_slack() const { return max_multiplicity - multiplicity_bound; }
    long sum_slack() const { return weighted_sum - sum_bound; }
};

/// Enumerative bounds for line arrangements of type 2; the sum bound is only
/// evaluated when `type2_class` is "Type2A" or "Type2B".
LineBoundCheck theorem_ll_check(const IntersectionProfile& profile, int d, const std::string& type2_class,
                                const std::vector<int>& exponents);

}  // namespace curveh
