#include "curveh/polynomial.hpp"

#include <sstream>

namespace curveh {

PolyModP reduce_mod(const Poly& f, const PrimeField& field)
{
    PolyModP r(field, f.degree());
    for (const auto& [m, c] : f.terms()) r.add_term(m, field.from_rational(c));
    return r;
}

namespace {

void append_monomial(std::ostringstream& out, const Monomial& m)
{
    static constexpr char kVars[3] = {'x', 'y', 'z'};
    bool first = true;
    for (int v = 0; v < 3; ++v) {
        if (m[v] == 0) continue;
        if (!first) out << '*';
        out << kVars[v];
        if (m[v] > 1) out << '^' << m[v];
        first = false;
    }
}

bool is_negative(const RationalField&, const mpq_class& c) { return sgn(c) < 0; }
bool is_negative(const PrimeField&, std::uint32_t) { return false; }

mpq_class magnitude(const RationalField&, const mpq_class& c) { return abs(c); }
std::uint32_t magnitude(const PrimeField&, std::uint32_t c) { return c; }

bool is_one(const RationalField&, const mpq_class& c) { return c == 1; }
bool is_one(const PrimeField&, std::uint32_t c) { return c == 1; }

}  // namespace

template <class Field>
std::string render(const Form<Field>& f)
{
    if (f.is_zero()) return "0";
    const Field& F = f.field();
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        bool neg = is_negative(F, c);
        if (first) {
            if (neg) out << '-';
        } else {
            out << (neg ? " - " : " + ");
        }
        auto mag = magnitude(F, c);
        bool constant = m.degree() == 0;
        if (constant || !is_one(F, mag)) {
            out << F.to_string(mag);
            if (!constant) out << '*';
        }
        append_monomial(out, m);
        first = false;
    }
    return out.str();
}

template std::string render(const Form<RationalField>&);
template std::string render(const Form<PrimeField>&);

Poly primitive_part(const Poly& f)
{
    if (f.is_zero()) throw std::invalid_argument("primitive part of zero");
    mpz_class den_lcm = 1;
    for (const auto& [m, c] : f.terms()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_class num_gcd = 0;
    for (const auto& [m, c] : f.terms()) {
        mpz_class n = c.get_num() * (den_lcm / c.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    mpq_class s(den_lcm, num_gcd);
    s.canonicalize();
    if (sgn(f.terms().begin()->second) < 0) s = -s;
    return scale(f, s);
}

}  // namespace curveh
