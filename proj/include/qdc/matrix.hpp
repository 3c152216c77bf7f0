#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qdc/field.hpp"

namespace qdc {

/// Dense matrix over Z_d, row-major, entries always reduced mod d.
class MatrixZd {
  public:
    MatrixZd(size_t rows, size_t cols, PrimeModulus m)
        : rows_(rows), cols_(cols), mod_(m), e_(rows * cols, 0) {}

    static MatrixZd identity(size_t k, PrimeModulus m);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    PrimeModulus modulus() const { return mod_; }
    uint32_t d() const { return mod_.d(); }

    uint32_t operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    void set(size_t i, size_t j, uint32_t v) { e_[i * cols_ + j] = v % mod_.d(); }
    void set_int(size_t i, size_t j, int64_t v) { e_[i * cols_ + j] = reduce_int(v, mod_.d()); }

    FieldScalar at(size_t i, size_t j) const { return FieldScalar((*this)(i, j), mod_); }

    MatrixZd transposed() const;
    MatrixZd top_rows(size_t k) const;
    std::vector<uint32_t> column(size_t j) const;
    std::vector<uint32_t> row(size_t i) const;
    bool is_zero() const;

    friend bool operator==(const MatrixZd& a, const MatrixZd& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.mod_ == b.mod_ && a.e_ == b.e_;
    }
    friend bool operator!=(const MatrixZd& a, const MatrixZd& b) { return !(a == b); }

    std::string to_string() const;

  private:
    size_t rows_, cols_;
    PrimeModulus mod_;
    std::vector<uint32_t> e_;
};

MatrixZd multiply(const MatrixZd& a, const MatrixZd& b);
std::vector<uint32_t> multiply_vec(const MatrixZd& a, const std::vector<uint32_t>& x);

/// Reduced row-echelon form, first-nonzero pivoting, deterministic.
MatrixZd row_reduce(const MatrixZd& m);

/// Column-echelon form spanning the same column space; all-zero columns
/// pushed to the right.
MatrixZd column_reduce(const MatrixZd& m);

size_t rank(const MatrixZd& m);

/// Basis of {v : Mv = 0} as columns, each normalized so its first nonzero
/// entry is 1. Width equals cols(M) - rank(M).
MatrixZd right_null_space(const MatrixZd& m);

/// Inverse of a square matrix; throws SingularMatrix when rank < dimension.
MatrixZd invert(const MatrixZd& m);

}  // namespace qdc
