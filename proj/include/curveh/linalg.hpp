#pragma once

// Dense exact linear algebra over a coefficient field. Elimination always
// takes the first nonzero entry in the fixed coordinate order as pivot, so
// echelon forms (and hence chosen bases) are deterministic.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "curveh/field.hpp"

namespace curveh {

template <class Field>
using Vec = std::vector<typename Field::Element>;

template <class Field>
class ExactMatrix {
public:
    using Element = typename Field::Element;

    ExactMatrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero())
    {
    }

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    Vec<Field> apply(std::span<const Element> v) const
    {
        if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
        Vec<Field> out(rows_, field_.zero());
        for (std::size_t r = 0; r < rows_; ++r) {
            Element acc = field_.zero();
            for (std::size_t c = 0; c < cols_; ++c) {
                if (!field_.is_zero(v[c]) && !field_.is_zero((*this)(r, c))) acc = field_.add(acc, field_.mul((*this)(r, c), v[c]));
            }
            out[r] = acc;
        }
        return out;
    }

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Element> data_;
};

/// A subspace of F^n held as its reduced row-echelon basis. Canonical: two
/// generating sets of the same subspace give identical bases.
template <class Field>
class SubspaceBasis {
public:
    using Element = typename Field::Element;

    SubspaceBasis(Field field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

    const Field& field() const { return field_; }
    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec<Field>>& vectors() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its projection along the basis onto the pivot coordinates;
    /// zero exactly when v lies in the span.
    Vec<Field> residual(std::span<const Element> v) const
    {
        check(v);
        Vec<Field> r(v.begin(), v.end());
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            Element c = r[pivots_[i]];
            if (field_.is_zero(c)) continue;
            axpy(r, rows_[i], field_.neg(c));
        }
        return r;
    }

    bool contains(std::span<const Element> v) const
    {
        Vec<Field> r = residual(v);
        return std::all_of(r.begin(), r.end(), [&](const Element& e) { return field_.is_zero(e); });
    }

    /// Adds v to the span; returns true when the dimension grew.
    bool insert(std::span<const Element> v)
    {
        Vec<Field> r = residual(v);
        std::size_t p = 0;
        while (p < r.size() && field_.is_zero(r[p])) ++p;
        if (p == r.size()) return false;
        Element inv = field_.inv(r[p]);
        for (std::size_t c = p; c < r.size(); ++c) {
            if (!field_.is_zero(r[c])) r[c] = field_.mul(r[c], inv);
        }
        for (auto& row : rows_) {
            Element c = row[p];
            if (!field_.is_zero(c)) axpy(row, r, field_.neg(c));
        }
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
        pivots_.insert(pivots_.begin() + pos, p);
        rows_.insert(rows_.begin() + pos, std::move(r));
        return true;
    }

    /// Coordinates outside the pivot set, ascending.
    std::vector<std::size_t> free_coordinates() const
    {
        std::vector<std::size_t> out;
        std::size_t k = 0;
        for (std::size_t c = 0; c < ambient_; ++c) {
            if (k < pivots_.size() && pivots_[k] == c) {
                ++k;
                continue;
            }
            out.push_back(c);
        }
        return out;
    }

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b)
    {
        if (a.ambient_ != b.ambient_ || a.pivots_ != b.pivots_) return false;
        for (std::size_t i = 0; i < a.rows_.size(); ++i) {
            for (std::size_t c = 0; c < a.ambient_; ++c) {
                if (!a.field_.equal(a.rows_[i][c], b.rows_[i][c])) return false;
            }
        }
        return true;
    }

private:
    void check(std::span<const Element> v) const
    {
        if (v.size() != ambient_) throw std::invalid_argument("vector dimension does not match subspace ambient dimension");
    }

    void axpy(Vec<Field>& y, const Vec<Field>& x, const Element& a) const
    {
        for (std::size_t c = 0; c < y.size(); ++c) {
            if (!field_.is_zero(x[c])) y[c] = field_.add(y[c], field_.mul(a, x[c]));
        }
    }

    Field field_;
    std::size_t ambient_;
    std::vector<Vec<Field>> rows_;
    std::vector<std::size_t> pivots_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class Field>
std::vector<std::size_t> rref(ExactMatrix<Field>& m);

template <class Field>
std::size_t rank(ExactMatrix<Field> m)
{
    return rref(m).size();
}

/// Canonical basis of {v : M v = 0}.
template <class Field>
SubspaceBasis<Field> kernel_basis(ExactMatrix<Field> m);

/// Canonical basis of the span of the given vectors.
template <class Field>
SubspaceBasis<Field> row_space(const Field& field, std::span<const Vec<Field>> vectors, std::size_t ambient_dim);

template <class Field>
std::size_t span_dim(const Field& field, std::span<const Vec<Field>> vectors, std::size_t ambient_dim)
{
    return row_space(field, vectors, ambient_dim).dim();
}

template <class Field>
bool in_span(std::span<const typename Field::Element> v, const SubspaceBasis<Field>& basis)
{
    return basis.contains(v);
}

/// Projection onto F^{n - dim W} that kills W: a vector's residual modulo W
/// restricted to the free coordinates of W's echelon basis. Rows of the
/// returned matrix are indexed by the free coordinates.
template <class Field>
ExactMatrix<Field> quotient_projection(const SubspaceBasis<Field>& w);

extern template std::vector<std::size_t> rref(ExactMatrix<RationalField>&);
extern template std::vector<std::size_t> rref(ExactMatrix<PrimeField>&);
extern template SubspaceBasis<RationalField> kernel_basis(ExactMatrix<RationalField>);
extern template SubspaceBasis<PrimeField> kernel_basis(ExactMatrix<PrimeField>);
extern template SubspaceBasis<RationalField> row_space(const RationalField&, std::span<const Vec<RationalField>>, std::size_t);
extern template SubspaceBasis<PrimeField> row_space(const PrimeField&, std::span<const Vec<PrimeField>>, std::size_t);
extern template ExactMatrix<RationalField> quotient_projection(const SubspaceBasis<RationalField>&);
extern template ExactMatrix<PrimeField> quotient_projection(const SubspaceBasis<PrimeField>&);

}  // namespace curveh
