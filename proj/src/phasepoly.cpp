#include "qdc/phasepoly.hpp"

#include "qdc/errors.hpp"
#include "qdc/rng.hpp"

namespace qdc {

uint32_t SignatureTensor::at(size_t a, size_t b, size_t c) const {
    auto it = entries_.find(sorted_triple(uint16_t(a), uint16_t(b), uint16_t(c)));
    return it == entries_.end() ? 0 : it->second;
}

void SignatureTensor::set(size_t a, size_t b, size_t c, uint32_t v) {
    Triple t = sorted_triple(uint16_t(a), uint16_t(b), uint16_t(c));
    v %= mod_.d();
    if (v == 0)
        entries_.erase(t);
    else
        entries_[t] = v;
}

void SignatureTensor::add(size_t a, size_t b, size_t c, uint32_t v) {
    set(a, b, c, add_mod(at(a, b, c), v % mod_.d(), mod_.d()));
}

std::vector<Triple> sorted_triples(size_t n) {
    std::vector<Triple> out;
    for (uint16_t a = 0; a < n; ++a)
        for (uint16_t b = a; b < n; ++b)
            for (uint16_t c = b; c < n; ++c) out.push_back({a, b, c});
    return out;
}

uint32_t triple_multiplicity(const Triple& t) {
    if (t[0] == t[2]) return 1;
    if (t[0] == t[1] || t[1] == t[2]) return 3;
    return 6;
}

Implementation make_implementation(MatrixZd A, std::vector<uint32_t> lambda) {
    if (A.cols() != lambda.size()) throw Error("implementation: lambda length must equal column count");
    uint32_t d = A.d();
    for (size_t j = 0; j < A.cols(); ++j) {
        if (lambda[j] % d == 0) throw Error("implementation: lambda entries must be nonzero");
        lambda[j] %= d;
        bool nonzero = false;
        for (size_t i = 0; i < A.rows(); ++i)
            if (A(i, j) != 0) {
                nonzero = true;
                break;
            }
        if (!nonzero) throw Error("implementation: column " + std::to_string(j) + " is all-zero");
    }
    return Implementation{std::move(A), std::move(lambda)};
}

Implementation empty_implementation(size_t n, PrimeModulus m) {
    return Implementation{MatrixZd(n, 0, m), {}};
}

SignatureTensor signature_of(const Implementation& imp) {
    uint32_t d = imp.d();
    SignatureTensor S(imp.n(), imp.modulus());
    for (const Triple& t : sorted_triples(imp.n())) {
        uint64_t acc = 0;
        for (size_t j = 0; j < imp.m(); ++j) {
            uint64_t p = imp.lambda[j];
            p = p * imp.A(t[0], j) % d;
            p = p * imp.A(t[1], j) % d;
            p = p * imp.A(t[2], j) % d;
            acc += p;
        }
        S.set(t[0], t[1], t[2], static_cast<uint32_t>(acc % d));
    }
    return S;
}

std::vector<Monomial> monomials_of(const SignatureTensor& S) {
    std::vector<Monomial> out;
    uint32_t d = S.d();
    for (const auto& [t, v] : S.entries()) {
        uint32_t coeff = mul_mod(triple_multiplicity(t), v, d);
        if (coeff != 0) out.push_back(Monomial{t, coeff});
    }
    return out;
}

SignatureTensor tensor_of_monomials(const std::vector<Monomial>& ms, size_t n, PrimeModulus m) {
    SignatureTensor S(n, m);
    uint32_t d = m.d();
    for (const Monomial& mo : ms) {
        uint32_t v = mul_mod(mo.coeff % d, inv_mod(triple_multiplicity(mo.vars), d), d);
        S.add(mo.vars[0], mo.vars[1], mo.vars[2], v);
    }
    return S;
}

uint32_t eval_implementation(const Implementation& imp, const std::vector<uint32_t>& x) {
    assert(x.size() == imp.n());
    uint32_t d = imp.d();
    uint64_t acc = 0;
    for (size_t j = 0; j < imp.m(); ++j) {
        uint64_t form = 0;
        for (size_t i = 0; i < imp.n(); ++i) form += uint64_t(imp.A(i, j)) * (x[i] % d);
        uint32_t f = static_cast<uint32_t>(form % d);
        acc += uint64_t(imp.lambda[j]) * cube_mod(f, d) % d;
    }
    return static_cast<uint32_t>(acc % d);
}

uint32_t eval_tensor(const SignatureTensor& S, const std::vector<uint32_t>& x) {
    assert(x.size() == S.n());
    uint32_t d = S.d();
    uint64_t acc = 0;
    for (const auto& [t, v] : S.entries()) {
        uint64_t p = mul_mod(triple_multiplicity(t), v, d);
        p = p * (x[t[0]] % d) % d;
        p = p * (x[t[1]] % d) % d;
        p = p * (x[t[2]] % d) % d;
        acc += p;
    }
    return static_cast<uint32_t>(acc % d);
}

Implementation canonicalize_columns(const MatrixZd& A, const std::vector<uint32_t>& lambda) {
    assert(A.cols() == lambda.size());
    uint32_t d = A.d();
    MatrixZd out(A.rows(), A.cols(), A.modulus());
    std::vector<uint32_t> lam;
    size_t kept = 0;
    for (size_t j = 0; j < A.cols(); ++j) {
        size_t lead = 0;
        while (lead < A.rows() && A(lead, j) == 0) ++lead;
        if (lead == A.rows()) continue;  // zero column contributes nothing
        uint32_t v = A(lead, j);
        uint32_t s = inv_mod(v, d);
        for (size_t i = 0; i < A.rows(); ++i) out.set(i, kept, mul_mod(A(i, j), s, d));
        lam.push_back(mul_mod(lambda[j] % d, cube_mod(v, d), d));
        ++kept;
    }
    MatrixZd trimmed(A.rows(), kept, A.modulus());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < kept; ++j) trimmed.set(i, j, out(i, j));
    return Implementation{std::move(trimmed), std::move(lam)};
}

SignatureTensor random_signature(size_t n, PrimeModulus m, uint64_t seed) {
    Rng rng(seed);
    SignatureTensor S(n, m);
    for (const Triple& t : sorted_triples(n)) {
        if (rng.coin()) continue;
        S.set(t[0], t[1], t[2], rng.nonzero_mod(m.d()));
    }
    return S;
}

Implementation random_implementation(size_t n, size_t m_cols, PrimeModulus m, uint64_t seed) {
    Rng rng(seed);
    uint32_t d = m.d();
    MatrixZd A(n, m_cols, m);
    for (size_t j = 0; j < m_cols; ++j) {
        bool nonzero = false;
        while (!nonzero) {
            for (size_t i = 0; i < n; ++i) {
                uint32_t v = rng.mod(d);
                A.set(i, j, v);
                nonzero = nonzero || v != 0;
            }
        }
    }
    std::vector<uint32_t> lambda(m_cols);
    for (auto& l : lambda) l = rng.nonzero_mod(d);
    return Implementation{std::move(A), std::move(lambda)};
}

}  // namespace qdc
