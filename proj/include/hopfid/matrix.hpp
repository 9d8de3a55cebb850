#pragma once

#include <optional>
#include <vector>

#include "hopfid/scalar.hpp"

namespace hopfid {

// Dense row-major matrix with entries in one common field.
class ExactMatrix {
public:
    ExactMatrix(size_t rows, size_t cols, FieldPtr field);  // zero-filled
    static ExactMatrix from_rows(const FieldPtr& field,
                                 const std::vector<std::vector<FieldScalar>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }
    const FieldScalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    void set(size_t i, size_t j, FieldScalar v);  // coerces into the matrix field

    std::vector<FieldScalar> mul_vec(const std::vector<FieldScalar>& v) const;

private:
    size_t rows_, cols_;
    FieldPtr field_;
    std::vector<FieldScalar> a_;
};

struct RrefResult {
    ExactMatrix m;
    std::vector<size_t> pivot_cols;
};

// Reduced row echelon form: plain Gauss-Jordan with first-nonzero pivoting
// over scalar fields; over fraction fields, rows are cleared to polynomials
// and eliminated fraction-free (Bareiss) before the final normalization, which
// controls coefficient growth. RREF is unique, so both paths agree.
RrefResult rref(const ExactMatrix& m);

size_t rank(const ExactMatrix& m);

// Basis of {v : m v = 0}, canonicalized to the reduced echelon basis (each
// vector's leading coordinate is 1). Size = cols - rank.
std::vector<std::vector<FieldScalar>> kernel_basis(const ExactMatrix& m);

// One exact solution of m x = rhs with free coordinates set to 0, or nullopt
// when the system is inconsistent.
std::optional<std::vector<FieldScalar>> solve_linear(const ExactMatrix& m,
                                                     const std::vector<FieldScalar>& rhs);

}  // namespace hopfid
