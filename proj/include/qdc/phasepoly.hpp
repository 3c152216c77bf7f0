#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "qdc/matrix.hpp"

namespace qdc {

using Triple = std::array<uint16_t, 3>;  // sorted a <= b <= c, 0-based

inline Triple sorted_triple(uint16_t a, uint16_t b, uint16_t c) {
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    return {a, b, c};
}

/// Symmetric order-3 tensor over Z_d, stored sparsely on sorted index
/// triples. Uniquely determines a homogeneous cubic phase polynomial.
class SignatureTensor {
  public:
    SignatureTensor(size_t n, PrimeModulus m) : n_(n), mod_(m) {}

    size_t n() const { return n_; }
    PrimeModulus modulus() const { return mod_; }
    uint32_t d() const { return mod_.d(); }

    uint32_t at(size_t a, size_t b, size_t c) const;
    void set(size_t a, size_t b, size_t c, uint32_t v);
    void add(size_t a, size_t b, size_t c, uint32_t v);

    bool is_zero() const { return entries_.empty(); }
    size_t nonzero_count() const { return entries_.size(); }

    /// Nonzero entries keyed by sorted triple, in lexicographic order.
    const std::map<Triple, uint32_t>& entries() const { return entries_; }

    friend bool operator==(const SignatureTensor& a, const SignatureTensor& b) {
        return a.n_ == b.n_ && a.mod_ == b.mod_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const SignatureTensor& a, const SignatureTensor& b) { return !(a == b); }

  private:
    size_t n_;
    PrimeModulus mod_;
    std::map<Triple, uint32_t> entries_;
};

/// All sorted triples over n variables, lexicographic. C(n+2,3) of them.
std::vector<Triple> sorted_triples(size_t n);

/// Permutation count of a sorted triple: 1, 3 or 6. Never divisible by d
/// since d > 3 is prime.
uint32_t triple_multiplicity(const Triple& t);

/// Sum-of-cubes decomposition (A, lambda): f(x) = sum_j lambda_j (A_.j . x)^3.
/// Column count m is the achievable M-count. Invariants: every lambda_j != 0,
/// every column of A has a nonzero entry.
struct Implementation {
    MatrixZd A;                    // n x m
    std::vector<uint32_t> lambda;  // size m

    size_t n() const { return A.rows(); }
    size_t m() const { return A.cols(); }
    PrimeModulus modulus() const { return A.modulus(); }
    uint32_t d() const { return A.d(); }

    friend bool operator==(const Implementation& x, const Implementation& y) {
        return x.A == y.A && x.lambda == y.lambda;
    }
};

/// Validating constructor; throws Error on an invariant violation.
Implementation make_implementation(MatrixZd A, std::vector<uint32_t> lambda);

Implementation empty_implementation(size_t n, PrimeModulus m);

/// A monomial of the cubic part, one of x_a^3, x_a x_b^2, x_a x_b x_c.
/// vars is the sorted tensor triple; repeats encode exponents, so
/// {a,a,b} means x_a^2 x_b and {a,b,b} means x_a x_b^2.
struct Monomial {
    Triple vars;
    uint32_t coeff;  // monomial-basis coefficient, nonzero

    enum class Kind { Cube, SquareTimesLinear, TripleProduct };
    Kind kind() const {
        if (vars[0] == vars[2]) return Kind::Cube;
        if (vars[0] == vars[1] || vars[1] == vars[2]) return Kind::SquareTimesLinear;
        return Kind::TripleProduct;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.vars == b.vars && a.coeff == b.coeff;
    }
};

/// S_{abc} = sum_j lambda_j A_aj A_bj A_cj over sorted triples.
SignatureTensor signature_of(const Implementation& imp);

/// Monomial expansion of the tensor: coefficient 1x/3x/6x the entry by
/// repetition pattern; zero coefficients omitted. Lexicographic order.
std::vector<Monomial> monomials_of(const SignatureTensor& S);

/// Inverse of monomials_of: tensor entry = coeff / multiplicity.
SignatureTensor tensor_of_monomials(const std::vector<Monomial>& ms, size_t n, PrimeModulus m);

/// f(x) via the implementation: sum_j lambda_j (column_j . x)^3.
uint32_t eval_implementation(const Implementation& imp, const std::vector<uint32_t>& x);

/// f(x) via the tensor: permutation-weighted sum over sorted triples.
uint32_t eval_tensor(const SignatureTensor& S, const std::vector<uint32_t>& x);

/// Rescale (column, lambda) -> (column/s, lambda*s^3) so the first nonzero
/// entry of every column is 1. Signature-preserving. Zero columns dropped.
Implementation canonicalize_columns(const MatrixZd& A, const std::vector<uint32_t>& lambda);

/// Seeded random tensor: each sorted triple is zero with probability 1/2,
/// otherwise uniform over the nonzero residues. Triples drawn in
/// lexicographic order, one coin then one value per nonzero entry.
SignatureTensor random_signature(size_t n, PrimeModulus m, uint64_t seed);

/// Seeded random implementation: columns uniform over nonzero vectors,
/// lambda uniform over nonzero residues.
Implementation random_implementation(size_t n, size_t m_cols, PrimeModulus m, uint64_t seed);

}  // namespace qdc
