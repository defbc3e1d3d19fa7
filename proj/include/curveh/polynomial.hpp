#pragma once

// Sparse homogeneous forms in x, y, z over a coefficient field.

#include <array>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <type_traits>
#include <vector>

#include "curveh/field.hpp"
#include "curveh/monomial.hpp"

namespace curveh {

class DegreeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class Field>
class Form {
public:
    using Element = typename Field::Element;
    using TermMap = std::map<Monomial, Element, GrlexDescending>;

    Form(Field field, int degree) : field_(std::move(field)), degree_(degree)
    {
        if (degree < 0) throw std::invalid_argument("negative degree");
    }

    /// The form of degree `degree` with the given dense coordinates in the
    /// descending-grlex basis of S_degree.
    static Form from_coefficients(const Field& field, int degree, std::span<const Element> coords)
    {
        if (coords.size() != monomial_count(degree)) throw DegreeMismatch("coordinate vector has wrong length");
        Form f(field, degree);
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (!field.is_zero(coords[i])) f.terms_.emplace(monomial_at(degree, i), coords[i]);
        }
        return f;
    }

    static Form monomial(const Field& field, const Monomial& m, Element c)
    {
        Form f(field, m.degree());
        f.add_term(m, std::move(c));
        return f;
    }

    const Field& field() const { return field_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Element coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    void add_term(const Monomial& m, const Element& c)
    {
        if (m.degree() != degree_) throw DegreeMismatch("term degree differs from form degree");
        if (field_.is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, normalize(c));
        if (!inserted) {
            it->second = field_.add(it->second, c);
            if (field_.is_zero(it->second)) terms_.erase(it);
        }
    }

    std::vector<Element> coefficients() const
    {
        std::vector<Element> v(monomial_count(degree_), field_.zero());
        for (const auto& [m, c] : terms_) v[monomial_index(m)] = c;
        return v;
    }

    friend bool operator==(const Form& a, const Form& b)
    {
        if (!(a.field_ == b.field_) || a.degree_ != b.degree_ || a.terms_.size() != b.terms_.size()) return false;
        auto it = b.terms_.begin();
        for (const auto& [m, c] : a.terms_) {
            if (!(it->first == m) || !a.field_.equal(it->second, c)) return false;
            ++it;
        }
        return true;
    }

private:
    Element normalize(const Element& c) const
    {
        if constexpr (std::is_same_v<Field, RationalField>) return field_.normalize(c);
        else return c;
    }

    Field field_;
    int degree_;
    TermMap terms_;
};

using Poly = Form<RationalField>;
using PolyModP = Form<PrimeField>;

namespace detail {
template <class Field>
void require_same_field(const Form<Field>& a, const Form<Field>& b)
{
    if (!(a.field() == b.field())) {
        throw FieldMismatch("forms over different fields: " + a.field().name() + " vs " + b.field().name());
    }
}
}  // namespace detail

template <class Field>
Form<Field> operator+(const Form<Field>& a, const Form<Field>& b)
{
    detail::require_same_field(a, b);
    if (a.degree() != b.degree()) throw DegreeMismatch("sum of forms of different degrees");
    Form<Field> r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

template <class Field>
Form<Field> scale(const Form<Field>& a, const typename Field::Element& s)
{
    Form<Field> r(a.field(), a.degree());
    if (a.field().is_zero(s)) return r;
    for (const auto& [m, c] : a.terms()) r.add_term(m, a.field().mul(c, s));
    return r;
}

template <class Field>
Form<Field> operator-(const Form<Field>& a)
{
    return scale(a, a.field().neg(a.field().one()));
}

template <class Field>
Form<Field> operator-(const Form<Field>& a, const Form<Field>& b)
{
    return a + (-b);
}

template <class Field>
Form<Field> multiply(const Form<Field>& a, const Form<Field>& b)
{
    detail::require_same_field(a, b);
    const Field& F = a.field();
    Form<Field> r(F, a.degree() + b.degree());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) r.add_term(ma.times(mb), F.mul(ca, cb));
    }
    return r;
}

template <class Field>
Form<Field> operator*(const Form<Field>& a, const Form<Field>& b)
{
    return multiply(a, b);
}

/// Multiplication by a monomial.
template <class Field>
Form<Field> shift(const Form<Field>& a, const Monomial& m)
{
    Form<Field> r(a.field(), a.degree() + m.degree());
    for (const auto& [ma, ca] : a.terms()) r.add_term(ma.times(m), ca);
    return r;
}

/// d/dx_var. The derivative of a constant is the zero form of degree 0.
template <class Field>
Form<Field> partial_derivative(const Form<Field>& f, int var)
{
    const Field& F = f.field();
    Form<Field> r(F, f.degree() > 0 ? f.degree() - 1 : 0);
    for (const auto& [m, c] : f.terms()) {
        int e = m[var];
        if (e == 0) continue;
        Monomial dm = m;
        --dm.exp[var];
        r.add_term(dm, F.mul(c, F.from_int(e)));
    }
    return r;
}

template <class Field>
std::array<Form<Field>, 3> partial_derivatives(const Form<Field>& f)
{
    if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("partial derivatives need a nonzero form of degree >= 1");
    return {partial_derivative(f, 0), partial_derivative(f, 1), partial_derivative(f, 2)};
}

/// Substitutes (x, y, z) -> rows of `a` applied to (x, y, z), i.e.
/// f(a00 x + a01 y + a02 z, a10 x + ..., ...).
template <class Field>
Form<Field> linear_substitution(const Form<Field>& f, const std::array<std::array<typename Field::Element, 3>, 3>& a)
{
    const Field& F = f.field();
    std::array<Form<Field>, 3> images{Form<Field>(F, 1), Form<Field>(F, 1), Form<Field>(F, 1)};
    for (int v = 0; v < 3; ++v) {
        for (int w = 0; w < 3; ++w) {
            Monomial m;
            m.exp[w] = 1;
            images[v].add_term(m, a[v][w]);
        }
    }
    Form<Field> result(F, f.degree());
    for (const auto& [m, c] : f.terms()) {
        Form<Field> term = Form<Field>::monomial(F, Monomial(0, 0, 0), c);
        for (int v = 0; v < 3; ++v) {
            for (int e = 0; e < m[v]; ++e) term = multiply(term, images[v]);
        }
        result = result + term;
    }
    return result;
}

/// Image of a rational form in GF(p); throws std::domain_error on a bad
/// denominator.
PolyModP reduce_mod(const Poly& f, const PrimeField& field);

/// Text rendering in the input grammar, e.g. "x^5 - y^2*z^3 - x*z^4".
template <class Field>
std::string render(const Form<Field>& f);

extern template std::string render(const Form<RationalField>&);
extern template std::string render(const Form<PrimeField>&);

/// Scales a nonzero rational form to a primitive integer form with positive
/// leading coefficient.
Poly primitive_part(const Poly& f);

}  // namespace curveh
