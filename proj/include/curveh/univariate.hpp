#pragma once

// Dense univariate polynomials over QQ and small exact determinants, used for
// elimination when counting intersection points.

#include <vector>

#include <gmpxx.h>

namespace curveh {

/// Coefficients in ascending degree; no trailing zeros (the zero polynomial
/// is empty).
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<mpq_class> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coefficients() const { return c_; }
    const mpq_class& leading() const { return c_.back(); }

    UPoly derivative() const;
    mpq_class operator()(const mpq_class& x) const;

    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend bool operator==(const UPoly&, const UPoly&) = default;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Remainder of a by b (b nonzero).
UPoly remainder(const UPoly& a, const UPoly& b);

/// Monic greatest common divisor; zero if both inputs are zero.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Number of distinct complex roots of a nonzero polynomial.
int distinct_root_count(const UPoly& p);

/// The polynomial of degree <= xs.size() - 1 through (xs[i], ys[i]).
UPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys);

/// Determinant by fraction-based Gaussian elimination.
mpq_class determinant(std::vector<std::vector<mpq_class>> m);

/// Sylvester resultant of a and b with respect to their formal degrees
/// deg_a, deg_b (leading coefficients may vanish only if the caller accepts
/// that).
mpq_class resultant(const std::vector<mpq_class>& a, int deg_a, const std::vector<mpq_class>& b, int deg_b);

}  // namespace curveh
