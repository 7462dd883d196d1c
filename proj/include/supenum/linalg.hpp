// Dense vectors and matrices over F_q with exact Gaussian elimination.
//
// Entries are stored as raw element indices (uint8_t, since q <= 64) next to
// a shared field handle.  Pivot selection is first-nonzero, so the reduced
// row echelon form is identical across runs and platforms.
#pragma once

#include <cstdint>
#include <vector>

#include "supenum/field.hpp"

namespace supenum {

class Vector {
  public:
    Vector(FieldPtr field, std::size_t n) : field_(std::move(field)), v_(n, 0) {}
    Vector(FieldPtr field, std::vector<std::uint8_t> indices)
        : field_(std::move(field)), v_(std::move(indices)) {}

    const FieldPtr& field() const { return field_; }
    std::size_t size() const { return v_.size(); }

    std::uint8_t idx(std::size_t i) const { return v_[i]; }
    void set_idx(std::size_t i, std::uint8_t value) { v_[i] = value; }
    const std::vector<std::uint8_t>& indices() const { return v_; }

    FieldElement at(std::size_t i) const { return field_->element(v_[i]); }

    bool is_zero() const;
    /// Number of nonzero coordinates.
    std::size_t weight() const;
    /// 0-based indices of nonzero coordinates.
    std::vector<std::size_t> support() const;

    friend bool operator==(const Vector& a, const Vector& b) {
        return same_field(a.field_, b.field_) && a.v_ == b.v_;
    }

  private:
    FieldPtr field_;
    std::vector<std::uint8_t> v_;
};

class Matrix {
  public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    /// Build from row-major index values (validated against the field order).
    static Matrix from_rows(const FieldPtr& field, const std::vector<std::vector<unsigned>>& rows);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t idx(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set_idx(std::size_t r, std::size_t c, std::uint8_t value) { a_[r * cols_ + c] = value; }

    FieldElement at(std::size_t r, std::size_t c) const { return field_->element(idx(r, c)); }

    Vector row(std::size_t r) const;
    void set_row(std::size_t r, const Vector& v);

    Matrix without_row(std::size_t r) const;
    Matrix without_col(std::size_t c) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return same_field(a.field_, b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
               a.a_ == b.a_;
    }

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<std::uint8_t> a_;
};

struct RrefResult {
    Matrix reduced;                  // zero rows removed; rank() rows remain
    std::vector<std::size_t> pivots; // strictly increasing pivot columns
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by exact Gaussian elimination.
RrefResult rref(const Matrix& m);

/// Rows form a basis of { v : M v^T = 0 }; row count = cols - rank.
/// The nullspace of a 0 x n matrix is the n x n identity.
Matrix nullspace_basis(const Matrix& m);

Vector add(const Vector& a, const Vector& b);
Vector scale(const FieldElement& c, const Vector& v);

FieldElement dot(const Vector& a, const Vector& b);

/// M * v (column action), v.size() == cols.
Vector mat_vec_mul(const Matrix& m, const Vector& v);

/// u * M (row action), u.size() == rows; this is message-vector encoding.
Vector vec_mat_mul(const Vector& u, const Matrix& m);

}  // namespace supenum
