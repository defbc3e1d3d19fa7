#include "curveh/univariate.hpp"

#include <stdexcept>

namespace curveh {

UPoly::UPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim()
{
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::derivative() const
{
    std::vector<mpq_class> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return UPoly(std::move(d));
}

mpq_class UPoly::operator()(const mpq_class& x) const
{
    mpq_class v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

UPoly operator-(const UPoly& a, const UPoly& b)
{
    std::vector<mpq_class> r(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return UPoly(std::move(r));
}

UPoly operator*(const UPoly& a, const UPoly& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> r(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
}

UPoly remainder(const UPoly& a, const UPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<mpq_class> r = a.coefficients();
    const auto& bc = b.coefficients();
    int db = b.degree();
    for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
        if (sgn(r[i]) == 0) continue;
        mpq_class q = r[i] / bc[db];
        for (int j = 0; j <= db; ++j) r[i - db + j] -= q * bc[j];
    }
    if (static_cast<int>(r.size()) > db) r.resize(std::max(db, 0));
    return UPoly(std::move(r));
}

UPoly gcd(const UPoly& a, const UPoly& b)
{
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    std::vector<mpq_class> c = x.coefficients();
    mpq_class lead = c.back();
    for (auto& v : c) v /= lead;
    return UPoly(std::move(c));
}

int distinct_root_count(const UPoly& p)
{
    if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    return p.degree() - gcd(p, p.derivative()).degree();
}

UPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys)
{
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation data size mismatch");
    const std::size_t n = xs.size();
    // Newton divided differences.
    std::vector<mpq_class> coef = ys;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = n - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
        }
    }
    UPoly result;
    for (std::size_t k = n; k-- > 0;) {
        result = result * UPoly({-xs[k], mpq_class(1)}) - UPoly({-coef[k]});
    }
    return result;
}

mpq_class determinant(std::vector<std::vector<mpq_class>> m)
{
    const std::size_t n = m.size();
    mpq_class det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            mpq_class f = m[r][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

mpq_class resultant(const std::vector<mpq_class>& a, int deg_a, const std::vector<mpq_class>& b, int deg_b)
{
    const int n = deg_a + deg_b;
    if (n == 0) return 1;
    auto coeff = [](const std::vector<mpq_class>& p, int i) {
        return i >= 0 && i < static_cast<int>(p.size()) ? p[i] : mpq_class(0);
    };
    std::vector<std::vector<mpq_class>> s(n, std::vector<mpq_class>(n, mpq_class(0)));
    for (int r = 0; r < deg_b; ++r) {
        for (int i = 0; i <= deg_a; ++i) s[r][r + i] = coeff(a, deg_a - i);
    }
    for (int r = 0; r < deg_a; ++r) {
        for (int i = 0; i <= deg_b; ++i) s[deg_b + r][r + i] = coeff(b, deg_b - i);
    }
    return determinant(std::move(s));
}

}  // namespace curveh
