#include "curveh/linalg.hpp"

namespace curveh {

template <class Field>
std::vector<std::size_t> rref(ExactMatrix<Field>& m)
{
    const Field& F = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows; ++c) {
        std::size_t p = next;
        while (p < rows && F.is_zero(m(p, c))) ++p;
        if (p == rows) continue;
        if (p != next) {
            auto a = m.row(p), b = m.row(next);
            std::swap_ranges(a.begin() + c, a.end(), b.begin() + c);
        }
        auto piv = m.row(next);
        typename Field::Element inv = F.inv(piv[c]);
        for (std::size_t j = c; j < cols; ++j) {
            if (!F.is_zero(piv[j])) piv[j] = F.mul(piv[j], inv);
        }
        // Nonzero tail of the pivot row, reused for every elimination.
        std::vector<std::size_t> support;
        for (std::size_t j = c; j < cols; ++j) {
            if (!F.is_zero(piv[j])) support.push_back(j);
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == next) continue;
            auto row = m.row(r);
            if (F.is_zero(row[c])) continue;
            typename Field::Element factor = F.neg(row[c]);
            for (std::size_t j : support) row[j] = F.add(row[j], F.mul(factor, piv[j]));
        }
        pivots.push_back(c);
        ++next;
    }
    return pivots;
}

template <class Field>
SubspaceBasis<Field> row_space(const Field& field, std::span<const Vec<Field>> vectors, std::size_t ambient_dim)
{
    ExactMatrix<Field> m(field, vectors.size(), ambient_dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != ambient_dim) throw std::invalid_argument("vector dimension does not match ambient dimension");
        std::copy(vectors[r].begin(), vectors[r].end(), m.row(r).begin());
    }
    std::vector<std::size_t> pivots = rref(m);
    SubspaceBasis<Field> basis(field, ambient_dim);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis.insert(m.row(r));
    return basis;
}

template <class Field>
SubspaceBasis<Field> kernel_basis(ExactMatrix<Field> m)
{
    const Field& F = m.field();
    std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec<Field>> gens;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec<Field> v(m.cols(), F.zero());
        v[f] = F.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(m(r, f));
        gens.push_back(std::move(v));
    }
    return row_space<Field>(F, gens, m.cols());
}

template <class Field>
ExactMatrix<Field> quotient_projection(const SubspaceBasis<Field>& w)
{
    const Field& F = w.field();
    std::vector<std::size_t> free = w.free_coordinates();
    std::vector<std::size_t> row_of(w.ambient_dim(), 0);
    for (std::size_t q = 0; q < free.size(); ++q) row_of[free[q]] = q;
    ExactMatrix<Field> p(F, free.size(), w.ambient_dim());
    for (std::size_t q = 0; q < free.size(); ++q) p(q, free[q]) = F.one();
    const auto& rows = w.vectors();
    const auto& pivots = w.pivots();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t q = 0; q < free.size(); ++q) p(q, pivots[i]) = F.neg(rows[i][free[q]]);
    }
    return p;
}

template std::vector<std::size_t> rref(ExactMatrix<RationalField>&);
template std::vector<std::size_t> rref(ExactMatrix<PrimeField>&);
template SubspaceBasis<RationalField> kernel_basis(ExactMatrix<RationalField>);
template SubspaceBasis<PrimeField> kernel_basis(ExactMatrix<PrimeField>);
template SubspaceBasis<RationalField> row_space(const RationalField&, std::span<const Vec<RationalField>>, std::size_t);
template SubspaceBasis<PrimeField> row_space(const PrimeField&, std::span<const Vec<PrimeField>>, std::size_t);
template ExactMatrix<RationalField> quotient_projection(const SubspaceBasis<RationalField>&);
template ExactMatrix<PrimeField> quotient_projection(const SubspaceBasis<PrimeField>&);

}  // namespace curveh
