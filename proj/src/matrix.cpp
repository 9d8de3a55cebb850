#include "hopfid/matrix.hpp"

#include <algorithm>

#include "hopfid/mpoly.hpp"

namespace hopfid {

ExactMatrix::ExactMatrix(size_t rows, size_t cols, FieldPtr field)
    : rows_(rows), cols_(cols), field_(std::move(field)) {
    a_.assign(rows_ * cols_, FieldScalar::zero(field_));
}

ExactMatrix ExactMatrix::from_rows(const FieldPtr& field,
                                   const std::vector<std::vector<FieldScalar>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    ExactMatrix m(r, c, field);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
        for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

void ExactMatrix::set(size_t i, size_t j, FieldScalar v) {
    a_[i * cols_ + j] = coerce_to(v, field_);
}

std::vector<FieldScalar> ExactMatrix::mul_vec(const std::vector<FieldScalar>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    std::vector<FieldScalar> out(rows_, FieldScalar::zero(field_));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

namespace {

// Gauss-Jordan over a scalar field, first nonzero pivot per column.
RrefResult rref_field(const ExactMatrix& m) {
    ExactMatrix r = m;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t c = 0; c < r.cols() && row < r.rows(); ++c) {
        size_t sel = row;
        while (sel < r.rows() && r.at(sel, c).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < r.cols(); ++j) {
                FieldScalar tmp = r.at(row, j);
                r.set(row, j, r.at(sel, j));
                r.set(sel, j, tmp);
            }
        FieldScalar inv = r.at(row, c).inverse();
        for (size_t j = c; j < r.cols(); ++j) r.set(row, j, r.at(row, j) * inv);
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i == row || r.at(i, c).is_zero()) continue;
            FieldScalar f = r.at(i, c);
            for (size_t j = c; j < r.cols(); ++j)
                r.set(i, j, r.at(i, j) - f * r.at(row, j));
        }
        pivots.push_back(c);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

// Fraction-free elimination for matrices over Frac(R): clear each row to
// polynomial entries, then run single-step fraction-free Gauss-Jordan (the
// Bareiss update applied to every other row, with exact division by the
// previous pivot). Entries stay polynomial minors throughout; every pivot
// entry ends equal to the final pivot, so one division per entry at the end
// produces the RREF. Row scaling by nonzero polynomials preserves row space
// and kernel, and RREF is unique.
RrefResult rref_fraction(const ExactMatrix& m) {
    const FieldPtr& F = m.field();
    const PolyRingPtr& ring = F->ring;
    MPoly one = MPoly::constant(ring, 1);
    std::vector<std::vector<MPoly>> p(m.rows(), std::vector<MPoly>(m.cols(), MPoly(ring)));
    for (size_t i = 0; i < m.rows(); ++i) {
        MPoly di = one;
        for (size_t j = 0; j < m.cols(); ++j) di = di * as_ratfunc(m.at(i, j)).den();
        for (size_t j = 0; j < m.cols(); ++j) {
            const RatFunc& e = as_ratfunc(m.at(i, j));
            p[i][j] = e.num() * di.divexact(e.den());
        }
    }

    std::vector<size_t> pivots;
    MPoly prev = one;
    size_t row = 0;
    for (size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        size_t sel = row;
        while (sel < m.rows() && p[sel][c].is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) std::swap(p[sel], p[row]);
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            // All columns: earlier pivot rows must keep the uniform scale, so
            // their already-settled entries (including their own pivot) are
            // rescaled too. The pivot row has zeros left of c, making those
            // updates plain rescalings.
            for (size_t j = 0; j < m.cols(); ++j) {
                if (j == c) continue;
                if (p[i][j].is_zero() && p[row][j].is_zero()) continue;
                p[i][j] = (p[row][c] * p[i][j] - p[i][c] * p[row][j]).divexact(prev);
            }
            p[i][c] = MPoly(ring);
        }
        prev = p[row][c];
        pivots.push_back(c);
        ++row;
    }

    // Every pivot entry now equals `prev`; divide once per entry.
    ExactMatrix r(m.rows(), m.cols(), F);
    for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t j = pivots[k]; j < m.cols(); ++j)
            if (!p[k][j].is_zero()) r.set(k, j, to_scalar(F, RatFunc(p[k][j], prev)));
    return {std::move(r), std::move(pivots)};
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
    if (m.field()->kind == FieldKind::Fraction) return rref_fraction(m);
    return rref_field(m);
}

size_t rank(const ExactMatrix& m) { return rref(m).pivot_cols.size(); }

std::vector<std::vector<FieldScalar>> kernel_basis(const ExactMatrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<FieldScalar>> raw;
    for (size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<FieldScalar> v(m.cols(), FieldScalar::zero(m.field()));
        v[fc] = FieldScalar::one(m.field());
        for (size_t k = 0; k < r.pivot_cols.size(); ++k)
            v[r.pivot_cols[k]] = -r.m.at(k, fc);
        raw.push_back(std::move(v));
    }
    if (raw.empty()) return raw;

    // Canonical form: the unique reduced echelon basis of the kernel, each
    // vector with leading coordinate 1.
    RrefResult canon = rref(ExactMatrix::from_rows(m.field(), raw));
    std::vector<std::vector<FieldScalar>> out;
    for (size_t i = 0; i < canon.pivot_cols.size(); ++i) {
        std::vector<FieldScalar> v(m.cols(), FieldScalar::zero(m.field()));
        for (size_t j = 0; j < m.cols(); ++j) v[j] = canon.m.at(i, j);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<FieldScalar>> solve_linear(const ExactMatrix& m,
                                                     const std::vector<FieldScalar>& rhs) {
    if (rhs.size() != m.rows()) throw DimensionError("rhs length does not match row count");
    ExactMatrix aug(m.rows(), m.cols() + 1, m.field());
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
        aug.set(i, m.cols(), rhs[i]);
    }
    RrefResult r = rref(aug);
    for (size_t c : r.pivot_cols)
        if (c == m.cols()) return std::nullopt;
    std::vector<FieldScalar> x(m.cols(), FieldScalar::zero(m.field()));
    for (size_t k = 0; k < r.pivot_cols.size(); ++k) x[r.pivot_cols[k]] = r.m.at(k, m.cols());
    return x;
}

}  // namespace hopfid
