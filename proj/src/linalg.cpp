#include "supenum/linalg.hpp"

#include <stdexcept>
#include <string>

namespace supenum {

bool Vector::is_zero() const {
    for (auto x : v_)
        if (x != 0) return false;
    return true;
}

std::size_t Vector::weight() const {
    std::size_t w = 0;
    for (auto x : v_)
        if (x != 0) ++w;
    return w;
}

std::vector<std::size_t> Vector::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (v_[i] != 0) s.push_back(i);
    return s;
}

Matrix Matrix::from_rows(const FieldPtr& field, const std::vector<std::vector<unsigned>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged row lengths");
        for (std::size_t j = 0; j < c; ++j) {
            if (rows[i][j] >= field->order())
                throw Error("entry " + std::to_string(rows[i][j]) + " is not an element index of " +
                            field->describe());
            m.set_idx(i, j, static_cast<std::uint8_t>(rows[i][j]));
        }
    }
    return m;
}

Vector Matrix::row(std::size_t r) const {
    Vector v(field_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) v.set_idx(c, idx(r, c));
    return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
    if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) set_idx(r, c, v.idx(c));
}

Matrix Matrix::without_row(std::size_t r) const {
    Matrix m(field_, rows_ - 1, cols_);
    for (std::size_t i = 0, o = 0; i < rows_; ++i) {
        if (i == r) continue;
        for (std::size_t c = 0; c < cols_; ++c) m.set_idx(o, c, idx(i, c));
        ++o;
    }
    return m;
}

Matrix Matrix::without_col(std::size_t c) const {
    Matrix m(field_, rows_, cols_ - 1);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0, o = 0; j < cols_; ++j) {
            if (j == c) continue;
            m.set_idx(r, o++, idx(r, j));
        }
    return m;
}

RrefResult rref(const Matrix& m) {
    const Field& f = *m.field();
    Matrix work = m;
    std::vector<std::size_t> pivots;
    std::size_t pivot_row = 0;

    for (std::size_t col = 0; col < work.cols() && pivot_row < work.rows(); ++col) {
        // first nonzero entry at or below pivot_row
        std::size_t sel = pivot_row;
        while (sel < work.rows() && work.idx(sel, col) == 0) ++sel;
        if (sel == work.rows()) continue;

        if (sel != pivot_row)
            for (std::size_t c = 0; c < work.cols(); ++c) {
                std::uint8_t t = work.idx(sel, c);
                work.set_idx(sel, c, work.idx(pivot_row, c));
                work.set_idx(pivot_row, c, t);
            }

        unsigned scale = f.inv(work.idx(pivot_row, col));
        if (scale != 1)
            for (std::size_t c = col; c < work.cols(); ++c)
                work.set_idx(pivot_row, c,
                             static_cast<std::uint8_t>(f.mul(scale, work.idx(pivot_row, c))));

        for (std::size_t r = 0; r < work.rows(); ++r) {
            if (r == pivot_row) continue;
            unsigned factor = work.idx(r, col);
            if (factor == 0) continue;
            for (std::size_t c = col; c < work.cols(); ++c) {
                unsigned sub = f.mul(factor, work.idx(pivot_row, c));
                work.set_idx(r, c, static_cast<std::uint8_t>(f.sub(work.idx(r, c), sub)));
            }
        }

        pivots.push_back(col);
        ++pivot_row;
    }

    Matrix reduced(m.field(), pivots.size(), m.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) reduced.set_idx(r, c, work.idx(r, c));
    return {std::move(reduced), std::move(pivots)};
}

Matrix nullspace_basis(const Matrix& m) {
    const Field& f = *m.field();
    auto [r, pivots] = rref(m);
    std::size_t n = m.cols();
    std::size_t rank = pivots.size();

    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;

    Matrix basis(m.field(), n - rank, n);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set_idx(out, free_col, 1);
        for (std::size_t j = 0; j < rank; ++j)
            basis.set_idx(out, pivots[j],
                          static_cast<std::uint8_t>(f.neg(r.idx(j, free_col))));
        ++out;
    }

    // every basis row must satisfy M v^T = 0
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        Vector v = basis.row(i);
        for (std::size_t row = 0; row < m.rows(); ++row)
            if (!dot(m.row(row), v).is_zero())
                throw std::logic_error("nullspace basis row fails orthogonality");
    }
    return basis;
}

Vector add(const Vector& a, const Vector& b) {
    if (!same_field(a.field(), b.field())) throw FieldMismatch("vector addition across fields");
    if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
    const Field& f = *a.field();
    Vector out(a.field(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out.set_idx(i, static_cast<std::uint8_t>(f.add(a.idx(i), b.idx(i))));
    return out;
}

Vector scale(const FieldElement& c, const Vector& v) {
    if (!same_field(c.field(), v.field())) throw FieldMismatch("scalar from a different field");
    const Field& f = *v.field();
    Vector out(v.field(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.set_idx(i, static_cast<std::uint8_t>(f.mul(c.index(), v.idx(i))));
    return out;
}

FieldElement dot(const Vector& a, const Vector& b) {
    if (!same_field(a.field(), b.field())) throw FieldMismatch("dot product across fields");
    if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
    const Field& f = *a.field();
    unsigned acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a.idx(i), b.idx(i)));
    return f.element(acc);
}

Vector mat_vec_mul(const Matrix& m, const Vector& v) {
    if (!same_field(m.field(), v.field())) throw FieldMismatch("matrix and vector fields differ");
    if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector dimension mismatch");
    const Field& f = *m.field();
    Vector out(m.field(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        unsigned acc = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m.idx(r, c), v.idx(c)));
        out.set_idx(r, static_cast<std::uint8_t>(acc));
    }
    return out;
}

Vector vec_mat_mul(const Vector& u, const Matrix& m) {
    if (!same_field(m.field(), u.field())) throw FieldMismatch("matrix and vector fields differ");
    if (u.size() != m.rows()) throw DimensionMismatch("vector-matrix dimension mismatch");
    const Field& f = *m.field();
    Vector out(m.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        unsigned coeff = u.idx(r);
        if (coeff == 0) continue;
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.set_idx(c, static_cast<std::uint8_t>(f.add(out.idx(c), f.mul(coeff, m.idx(r, c)))));
    }
    return out;
}

}  // namespace supenum
