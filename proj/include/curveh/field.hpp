#pragma once

// Coefficient fields. A field is a small value object carrying whatever
// context its elements need (the modulus for prime fields); algorithms take
// the field by const reference and operate on plain Element values.

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace curveh {

class FieldMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Rational numbers, kept in lowest terms by GMP.
class RationalField {
public:
    using Element = mpq_class;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long v) const { return Element(v); }
    Element from_rational(const mpq_class& q) const { return normalize(q); }
    /// Lowest terms; mpq_class(num, den) does not reduce on its own.
    Element normalize(Element a) const
    {
        a.canonicalize();
        return a;
    }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const
    {
        if (sgn(a) == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    std::string to_string(const Element& a) const { return a.get_str(); }
    std::string name() const { return "QQ"; }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

/// Residues modulo a prime p < 2^31.
class PrimeField {
public:
    using Element = std::uint32_t;

    static constexpr std::uint32_t kDefaultPrime = 2147483647u;  // 2^31 - 1
    static constexpr std::uint32_t kVerifyPrime = 2147483629u;

    explicit PrimeField(std::uint32_t p = kDefaultPrime);

    std::uint32_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long v) const;
    Element from_integer(const mpz_class& v) const;
    /// Throws std::domain_error when p divides the denominator.
    Element from_rational(const mpq_class& q) const;

    Element add(Element a, Element b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const { return reduce(std::uint64_t(a) * b); }
    Element inv(Element a) const;
    bool is_zero(Element a) const { return a == 0; }
    bool equal(Element a, Element b) const { return a == b; }

    std::string to_string(Element a) const { return std::to_string(a); }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    Element reduce(std::uint64_t x) const
    {
        if (mersenne_) {
            x = (x & p_) + (x >> 31);
            x = (x & p_) + (x >> 31);
            return static_cast<Element>(x >= p_ ? x - p_ : x);
        }
        return static_cast<Element>(x % p_);
    }

    std::uint32_t p_;
    bool mersenne_;
};

bool is_probable_prime(std::uint32_t n);

}  // namespace curveh
