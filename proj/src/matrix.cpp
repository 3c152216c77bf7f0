#include "qdc/matrix.hpp"

#include <sstream>

#include "qdc/errors.hpp"

namespace qdc {

MatrixZd MatrixZd::identity(size_t k, PrimeModulus m) {
    MatrixZd r(k, k, m);
    for (size_t i = 0; i < k; ++i) r.set(i, i, 1);
    return r;
}

MatrixZd MatrixZd::transposed() const {
    MatrixZd r(cols_, rows_, mod_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(j, i, (*this)(i, j));
    return r;
}

MatrixZd MatrixZd::top_rows(size_t k) const {
    MatrixZd r(k, cols_, mod_);
    for (size_t i = 0; i < k && i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.set(i, j, (*this)(i, j));
    return r;
}

std::vector<uint32_t> MatrixZd::column(size_t j) const {
    std::vector<uint32_t> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::vector<uint32_t> MatrixZd::row(size_t i) const {
    std::vector<uint32_t> r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

bool MatrixZd::is_zero() const {
    for (uint32_t v : e_)
        if (v != 0) return false;
    return true;
}

std::string MatrixZd::to_string() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j);
        }
        os << '\n';
    }
    return os.str();
}

MatrixZd multiply(const MatrixZd& a, const MatrixZd& b) {
    assert(a.cols() == b.rows() && a.modulus() == b.modulus());
    uint32_t d = a.d();
    MatrixZd r(a.rows(), b.cols(), a.modulus());
    for (size_t i = 0; i < a.rows(); ++i) {
        for (size_t k = 0; k < a.cols(); ++k) {
            uint32_t aik = a(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) {
                r.set(i, j, add_mod(r(i, j), mul_mod(aik, b(k, j), d), d));
            }
        }
    }
    return r;
}

std::vector<uint32_t> multiply_vec(const MatrixZd& a, const std::vector<uint32_t>& x) {
    assert(a.cols() == x.size());
    uint32_t d = a.d();
    std::vector<uint32_t> y(a.rows(), 0);
    for (size_t i = 0; i < a.rows(); ++i) {
        uint64_t acc = 0;
        for (size_t j = 0; j < a.cols(); ++j) acc += uint64_t(a(i, j)) * x[j];
        y[i] = static_cast<uint32_t>(acc % d);
    }
    return y;
}

MatrixZd row_reduce(const MatrixZd& m) {
    MatrixZd w = m;
    uint32_t d = w.d();
    size_t pivot_row = 0;
    for (size_t col = 0; col < w.cols() && pivot_row < w.rows(); ++col) {
        size_t r = pivot_row;
        while (r < w.rows() && w(r, col) == 0) ++r;
        if (r == w.rows()) continue;
        if (r != pivot_row) {
            for (size_t j = 0; j < w.cols(); ++j) {
                uint32_t t = w(pivot_row, j);
                w.set(pivot_row, j, w(r, j));
                w.set(r, j, t);
            }
        }
        uint32_t s = inv_mod(w(pivot_row, col), d);
        if (s != 1) {
            for (size_t j = 0; j < w.cols(); ++j) w.set(pivot_row, j, mul_mod(w(pivot_row, j), s, d));
        }
        for (size_t i = 0; i < w.rows(); ++i) {
            if (i == pivot_row) continue;
            uint32_t f = w(i, col);
            if (f == 0) continue;
            for (size_t j = 0; j < w.cols(); ++j) {
                w.set(i, j, sub_mod(w(i, j), mul_mod(f, w(pivot_row, j), d), d));
            }
        }
        ++pivot_row;
    }
    return w;
}

MatrixZd column_reduce(const MatrixZd& m) {
    return row_reduce(m.transposed()).transposed();
}

size_t rank(const MatrixZd& m) {
    MatrixZd r = row_reduce(m);
    size_t rk = 0;
    for (size_t i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (size_t j = 0; j < r.cols(); ++j) {
            if (r(i, j) != 0) {
                nonzero = true;
                break;
            }
        }
        if (nonzero) ++rk;
    }
    return rk;
}

MatrixZd right_null_space(const MatrixZd& m) {
    uint32_t d = m.d();
    MatrixZd r = row_reduce(m);
    size_t n = m.cols();

    // Locate pivot columns.
    std::vector<size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(n, false);
    for (size_t i = 0; i < r.rows(); ++i) {
        size_t j = 0;
        while (j < n && r(i, j) == 0) ++j;
        if (j == n) break;
        pivot_col_of_row.push_back(j);
        is_pivot[j] = true;
    }

    std::vector<size_t> free_cols;
    for (size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    MatrixZd basis(n, free_cols.size(), m.modulus());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t f = free_cols[k];
        basis.set(f, k, 1);
        for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
            basis.set(pivot_col_of_row[i], k, neg_mod(r(i, f), d));
        }
        // Normalize: leading entry 1.
        size_t lead = 0;
        while (lead < n && basis(lead, k) == 0) ++lead;
        if (lead < n && basis(lead, k) != 1) {
            uint32_t s = inv_mod(basis(lead, k), d);
            for (size_t i = lead; i < n; ++i) basis.set(i, k, mul_mod(basis(i, k), s, d));
        }
    }
    return basis;
}

MatrixZd invert(const MatrixZd& m) {
    if (m.rows() != m.cols()) throw SingularMatrix("cannot invert a non-square matrix");
    size_t n = m.rows();
    uint32_t d = m.d();
    // Gauss-Jordan on [M | I].
    MatrixZd aug(n, 2 * n, m.modulus());
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
        aug.set(i, n + i, 1);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t r = col;
        while (r < n && aug(r, col) == 0) ++r;
        if (r == n) throw SingularMatrix("matrix is singular over Z_" + std::to_string(d));
        if (r != col) {
            for (size_t j = 0; j < 2 * n; ++j) {
                uint32_t t = aug(col, j);
                aug.set(col, j, aug(r, j));
                aug.set(r, j, t);
            }
        }
        uint32_t s = inv_mod(aug(col, col), d);
        if (s != 1)
            for (size_t j = 0; j < 2 * n; ++j) aug.set(col, j, mul_mod(aug(col, j), s, d));
        for (size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            uint32_t f = aug(i, col);
            if (f == 0) continue;
            for (size_t j = 0; j < 2 * n; ++j) aug.set(i, j, sub_mod(aug(i, j), mul_mod(f, aug(col, j), d), d));
        }
    }
    MatrixZd out(n, n, m.modulus());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out.set(i, j, aug(i, n + j));
    return out;
}

}  // namespace qdc
