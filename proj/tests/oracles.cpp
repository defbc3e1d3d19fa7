#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracle {

using curveh::Poly;

namespace {

std::uint64_t power(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    b %= kPrime;
    while (e) {
        if (e & 1) r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

std::uint64_t inverse(std::uint64_t a) { return power(a, kPrime - 2); }

std::uint64_t reduce_z(const mpz_class& z)
{
    mpz_class r = z % static_cast<unsigned long>(kPrime);
    if (r < 0) r += static_cast<unsigned long>(kPrime);
    return r.get_ui();
}

using Dense = std::map<std::array<int, 3>, std::uint64_t>;

Dense to_dense(const Poly& f)
{
    Dense d;
    for (const auto& [m, c] : f.terms()) {
        std::uint64_t v = reduce(c);
        if (v) d[{m[0], m[1], m[2]}] = v;
    }
    return d;
}

std::array<Dense, 3> partials(const Poly& f)
{
    std::array<Dense, 3> out;
    for (const auto& [m, c] : to_dense(f)) {
        for (int v = 0; v < 3; ++v) {
            if (m[v] == 0) continue;
            auto e = m;
            --e[v];
            out[v][e] = (out[v][e] + c * static_cast<std::uint64_t>(m[v])) % kPrime;
        }
    }
    return out;
}

std::map<std::array<int, 3>, std::size_t> index_of(int k)
{
    std::map<std::array<int, 3>, std::size_t> idx;
    for (const auto& m : monomials(k)) idx.emplace(m, idx.size());
    return idx;
}

/// Rows spanning (J_f)_k: every monomial of degree k - d + 1 times every partial.
std::vector<Row> jacobian_rows(const std::array<Dense, 3>& p, int d, int k)
{
    auto idx = index_of(k);
    std::vector<Row> rows;
    if (k - (d - 1) < 0) return rows;
    for (const auto& u : monomials(k - (d - 1))) {
        for (const auto& part : p) {
            Row r(idx.size(), 0);
            for (const auto& [m, c] : part) r[idx.at({m[0] + u[0], m[1] + u[1], m[2] + u[2]})] = c;
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

/// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<Row>& rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        std::uint64_t inv = inverse(rows[r][c]);
        for (auto& v : rows[r]) v = v * inv % kPrime;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            std::uint64_t f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + (kPrime - f) * rows[r][j]) % kPrime;
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

std::uint64_t reduce(const mpq_class& q)
{
    std::uint64_t den = reduce_z(q.get_den());
    if (den == 0) throw std::domain_error("denominator divisible by the oracle prime");
    return reduce_z(q.get_num()) * inverse(den) % kPrime;
}

std::vector<std::array<int, 3>> monomials(int k)
{
    std::vector<std::array<int, 3>> out;
    if (k < 0) return out;
    for (int a = 0; a <= k; ++a) {
        for (int b = 0; a + b <= k; ++b) out.push_back({a, b, k - a - b});
    }
    return out;
}

std::size_t rank(std::vector<Row> rows, std::size_t cols)
{
    return echelon(rows, cols).size();
}

long hilbert(const Poly& f, int k)
{
    auto rows = jacobian_rows(partials(f), f.degree(), k);
    long n = static_cast<long>(monomials(k).size());
    return n - static_cast<long>(rank(rows, monomials(k).size()));
}

long syzygies(const Poly& f, int k)
{
    auto p = partials(f);
    const int target = k + f.degree() - 1;
    auto idx = index_of(target);
    auto src = monomials(k);
    // Columns: (component, source monomial); rows: target monomials.
    std::vector<Row> t(idx.size(), Row(3 * src.size(), 0));
    for (int v = 0; v < 3; ++v) {
        for (std::size_t s = 0; s < src.size(); ++s) {
            for (const auto& [m, c] : p[v]) {
                std::size_t row = idx.at({m[0] + src[s][0], m[1] + src[s][1], m[2] + src[s][2]});
                t[row][v * src.size() + s] = (t[row][v * src.size() + s] + c) % kPrime;
            }
        }
    }
    return static_cast<long>(3 * src.size()) - static_cast<long>(rank(t, 3 * src.size()));
}

long module_dim(const Poly& f, int k)
{
    const int d = f.degree();
    const int T = 3 * (d - 2);
    const int N = std::max(1, T + 3 - k);
    const int top = k + N;
    auto p = partials(f);
    auto jrows = jacobian_rows(p, d, top);
    auto top_idx = index_of(top);
    auto pivots = echelon(jrows, top_idx.size());
    std::vector<bool> is_pivot(top_idx.size(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < top_idx.size(); ++c) {
        if (!is_pivot[c]) free_cols.push_back(c);
    }
    // Residue of a monomial modulo J_top: the unit vector reduced by the RREF rows.
    auto residue = [&](std::size_t col) {
        Row r(free_cols.size(), 0);
        if (!is_pivot[col]) {
            r[std::find(free_cols.begin(), free_cols.end(), col) - free_cols.begin()] = 1;
            return r;
        }
        std::size_t i = std::find(pivots.begin(), pivots.end(), col) - pivots.begin();
        for (std::size_t j = 0; j < free_cols.size(); ++j) r[j] = (kPrime - jrows[i][free_cols[j]]) % kPrime;
        return r;
    };
    auto src = monomials(k);
    auto mult = monomials(N);
    // Linear map g -> (g * u mod J) for every u in S_N; its kernel is (J : m^N)_k.
    std::vector<Row> rows(mult.size() * free_cols.size(), Row(src.size(), 0));
    for (std::size_t s = 0; s < src.size(); ++s) {
        for (std::size_t u = 0; u < mult.size(); ++u) {
            Row res = residue(top_idx.at({src[s][0] + mult[u][0], src[s][1] + mult[u][1], src[s][2] + mult[u][2]}));
            for (std::size_t j = 0; j < free_cols.size(); ++j) rows[u * free_cols.size() + j][s] = res[j];
        }
    }
    long colon = static_cast<long>(src.size()) - static_cast<long>(rank(rows, src.size()));
    long jk = static_cast<long>(src.size()) - hilbert(f, k);
    return colon - jk;
}

Poly jacobian_pairing(const Poly& f, const std::array<Poly, 3>& abc)
{
    auto parts = curveh::partial_derivatives(f);
    Poly sum = curveh::multiply(abc[0], parts[0]);
    sum = sum + curveh::multiply(abc[1], parts[1]);
    sum = sum + curveh::multiply(abc[2], parts[2]);
    return sum;
}

}  // namespace oracle
