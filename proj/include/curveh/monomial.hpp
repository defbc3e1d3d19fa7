#pragma once

#include <array>
#include <cstddef>
#include <compare>
#include <stdexcept>

namespace curveh {

/// x^a y^b z^c.
struct Monomial {
    std::array<int, 3> exp{0, 0, 0};

    constexpr Monomial() = default;
    constexpr Monomial(int a, int b, int c) : exp{a, b, c} {}

    constexpr int degree() const { return exp[0] + exp[1] + exp[2]; }
    constexpr int operator[](int var) const { return exp[var]; }

    constexpr Monomial times(const Monomial& o) const
    {
        return {exp[0] + o.exp[0], exp[1] + o.exp[1], exp[2] + o.exp[2]};
    }
    constexpr Monomial times_var(int var) const
    {
        Monomial m = *this;
        ++m.exp[var];
        return m;
    }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x > y > z.
constexpr std::strong_ordering grlex(const Monomial& a, const Monomial& b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    if (auto c = a.exp[0] <=> b.exp[0]; c != 0) return c;
    return a.exp[1] <=> b.exp[1];
}

/// Leading-term-first ordering for term maps.
struct GrlexDescending {
    constexpr bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) > 0; }
};

/// dim S_k, the number of monomials of degree k (zero for k < 0).
constexpr std::size_t monomial_count(int k)
{
    return k < 0 ? 0 : std::size_t(k + 1) * std::size_t(k + 2) / 2;
}

/// Position of m in the basis of S_k listed in descending grlex order
/// (x^k first, z^k last).
constexpr std::size_t monomial_index(const Monomial& m)
{
    std::size_t r = std::size_t(m.exp[1] + m.exp[2]);
    return r * (r + 1) / 2 + std::size_t(m.exp[2]);
}

constexpr Monomial monomial_at(int k, std::size_t index)
{
    std::size_t r = 0;
    while ((r + 1) * (r + 2) / 2 <= index) ++r;
    int c = static_cast<int>(index - r * (r + 1) / 2);
    int b = static_cast<int>(r) - c;
    return {k - static_cast<int>(r), b, c};
}

}  // namespace curveh
