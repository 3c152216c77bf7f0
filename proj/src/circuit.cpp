#include "qdc/circuit.hpp"

#include <string>

#include "qdc/errors.hpp"

namespace qdc {

void Circuit::append(Gate g) {
    uint32_t d = mod_.d();
    switch (g.kind) {
        case GateKind::Z:
        case GateKind::S:
        case GateKind::M:
        case GateKind::P:
            if (g.q1 >= n_) throw Error("gate qudit index out of range");
            g.param %= d;
            if (g.kind == GateKind::M && g.param == 0) throw Error("M^0 is the identity and not a valid netlist entry");
            if (g.kind == GateKind::P && g.param == 0) throw Error("P_0 is not invertible");
            break;
        case GateKind::Sum:
        case GateKind::SumInv:
            if (g.q1 >= n_ || g.q2 >= n_) throw Error("gate qudit index out of range");
            if (g.q1 == g.q2) throw Error("SUM control and target must differ");
            g.param = 0;
            break;
    }
    gates_.push_back(g);
}

void Circuit::extend(const Circuit& other) {
    assert(other.mod_ == mod_ && other.n_ == n_);
    for (const Gate& g : other.gates_) gates_.push_back(g);
}

size_t m_count(const Circuit& c) {
    size_t k = 0;
    for (const Gate& g : c.gates())
        if (g.kind == GateKind::M) ++k;
    return k;
}

BasisImage simulate_basis(const Circuit& c, const std::vector<uint32_t>& x) {
    assert(x.size() == c.n());
    uint32_t d = c.d();
    std::vector<uint32_t> s(x);
    for (auto& v : s) v %= d;
    uint32_t phase = 0;
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::Z:
                phase = add_mod(phase, mul_mod(g.param, s[g.q1], d), d);
                break;
            case GateKind::S:
                phase = add_mod(phase, mul_mod(g.param, mul_mod(s[g.q1], s[g.q1], d), d), d);
                break;
            case GateKind::M:
                phase = add_mod(phase, mul_mod(g.param, cube_mod(s[g.q1], d), d), d);
                break;
            case GateKind::P:
                s[g.q1] = mul_mod(g.param, s[g.q1], d);
                break;
            case GateKind::Sum:
                s[g.q2] = add_mod(s[g.q2], s[g.q1], d);
                break;
            case GateKind::SumInv:
                s[g.q2] = sub_mod(s[g.q2], s[g.q1], d);
                break;
        }
    }
    return BasisImage{phase, std::move(s)};
}

PhaseProfile extract(const Circuit& c) {
    size_t n = c.n();
    uint32_t d = c.d();
    // Wire q carries the linear form forms[q] over the circuit inputs.
    std::vector<std::vector<uint32_t>> forms(n, std::vector<uint32_t>(n, 0));
    for (size_t q = 0; q < n; ++q) forms[q][q] = 1;

    SignatureTensor S(n, c.modulus());
    MatrixZd Q(n, n, c.modulus());
    std::vector<uint32_t> L(n, 0);

    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::Z: {
                const auto& f = forms[g.q1];
                for (size_t i = 0; i < n; ++i) L[i] = add_mod(L[i], mul_mod(g.param, f[i], d), d);
                break;
            }
            case GateKind::S: {
                const auto& f = forms[g.q1];
                for (size_t i = 0; i < n; ++i) {
                    if (f[i] == 0) continue;
                    for (size_t j = 0; j < n; ++j) {
                        if (f[j] == 0) continue;
                        uint32_t v = mul_mod(g.param, mul_mod(f[i], f[j], d), d);
                        Q.set(i, j, add_mod(Q(i, j), v, d));
                    }
                }
                break;
            }
            case GateKind::M: {
                const auto& f = forms[g.q1];
                for (size_t a = 0; a < n; ++a) {
                    if (f[a] == 0) continue;
                    for (size_t b = a; b < n; ++b) {
                        if (f[b] == 0) continue;
                        for (size_t cc = b; cc < n; ++cc) {
                            if (f[cc] == 0) continue;
                            uint32_t v = mul_mod(g.param, mul_mod(f[a], mul_mod(f[b], f[cc], d), d), d);
                            S.add(a, b, cc, v);
                        }
                    }
                }
                break;
            }
            case GateKind::P: {
                auto& f = forms[g.q1];
                for (auto& v : f) v = mul_mod(g.param, v, d);
                break;
            }
            case GateKind::Sum: {
                const auto& fc = forms[g.q1];
                auto& ft = forms[g.q2];
                for (size_t i = 0; i < n; ++i) ft[i] = add_mod(ft[i], fc[i], d);
                break;
            }
            case GateKind::SumInv: {
                const auto& fc = forms[g.q1];
                auto& ft = forms[g.q2];
                for (size_t i = 0; i < n; ++i) ft[i] = sub_mod(ft[i], fc[i], d);
                break;
            }
        }
    }

    MatrixZd E(n, n, c.modulus());
    for (size_t q = 0; q < n; ++q)
        for (size_t i = 0; i < n; ++i) E.set(q, i, forms[q][i]);
    return PhaseProfile{std::move(E), std::move(S), std::move(Q), std::move(L)};
}

uint32_t eval_profile(const PhaseProfile& p, const std::vector<uint32_t>& x) {
    uint32_t d = p.S.d();
    uint64_t acc = eval_tensor(p.S, x);
    size_t n = x.size();
    for (size_t i = 0; i < n; ++i) {
        if (x[i] % d == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            acc += uint64_t(p.Q(i, j)) * (x[i] % d) % d * (x[j] % d) % d;
        }
        acc += uint64_t(p.L[i]) * (x[i] % d) % d;
    }
    return static_cast<uint32_t>(acc % d);
}

namespace {

// P/SUM subcircuit placing column j's linear form on wire t. The trailing
// rescale of wire t lives in the uncompute half only; at the M gate the wire
// must carry the column form itself, not a multiple of it.
Circuit column_form_circuit(const Implementation& imp, size_t j, uint32_t t) {
    uint32_t d = imp.d();
    Circuit D(imp.modulus(), imp.n());
    uint32_t at = imp.A(t, j);
    if (at != 1) D.append(Gate::p(t, at));
    for (uint32_t c = 0; c < imp.n(); ++c) {
        if (c == t || imp.A(c, j) == 0) continue;
        uint32_t ac = imp.A(c, j);
        if (ac != 1) D.append(Gate::p(c, ac));
        D.append(Gate::sum(c, t));
        if (ac != 1) D.append(Gate::p(c, inv_mod(ac, d)));
    }
    return D;
}

Circuit inverted(const Circuit& c) {
    Circuit inv(c.modulus(), c.n());
    const auto& gs = c.gates();
    for (auto it = gs.rbegin(); it != gs.rend(); ++it) {
        switch (it->kind) {
            case GateKind::P:
                inv.append(Gate::p(it->q1, inv_mod(it->param, c.d())));
                break;
            case GateKind::Sum:
                inv.append(Gate::sum_inv(it->q1, it->q2));
                break;
            case GateKind::SumInv:
                inv.append(Gate::sum(it->q1, it->q2));
                break;
            case GateKind::Z:
            case GateKind::S:
            case GateKind::M:
                inv.append(Gate{it->kind, it->q1, it->q2, neg_mod(it->param, c.d())});
                break;
        }
    }
    return inv;
}

}  // namespace

Circuit synthesize_cubic(const Implementation& imp) {
    Circuit out(imp.modulus(), imp.n());
    for (size_t j = 0; j < imp.m(); ++j) {
        uint32_t t = 0;
        while (imp.A(t, j) == 0) ++t;  // smallest index in the support
        Circuit D = column_form_circuit(imp, j, t);
        out.extend(D);
        out.append(Gate::m(t, imp.lambda[j]));
        out.extend(inverted(D));
    }
    return out;
}

Circuit decompose_linear(const MatrixZd& E) {
    if (E.rows() != E.cols()) throw SingularMatrix("linear action must be square");
    size_t n = E.rows();
    uint32_t d = E.d();
    MatrixZd w = E;

    // Row-reduce E to I recording elementary ops; the circuit is the
    // inverse ops in reverse order.
    struct Op {
        bool is_scale;
        uint32_t src, dst, s;
    };
    std::vector<Op> ops;
    auto row_add = [&](uint32_t src, uint32_t dst, uint32_t s) {
        for (size_t j = 0; j < n; ++j) w.set(dst, j, add_mod(w(dst, j), mul_mod(s, w(src, j), d), d));
        ops.push_back({false, src, dst, s});
    };
    auto row_scale = [&](uint32_t t, uint32_t s) {
        for (size_t j = 0; j < n; ++j) w.set(t, j, mul_mod(s, w(t, j), d));
        ops.push_back({true, 0, t, s});
    };

    for (uint32_t col = 0; col < n; ++col) {
        if (w(col, col) == 0) {
            uint32_t r = col + 1;
            while (r < n && w(r, col) == 0) ++r;
            if (r == n) throw SingularMatrix("linear action is singular over Z_" + std::to_string(d));
            row_add(r, col, 1);
        }
        uint32_t piv = w(col, col);
        if (piv != 1) row_scale(col, inv_mod(piv, d));
        for (uint32_t r = 0; r < n; ++r) {
            if (r == col || w(r, col) == 0) continue;
            row_add(col, r, neg_mod(w(r, col), d));
        }
    }

    Circuit out(E.modulus(), n);
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        if (it->is_scale) {
            uint32_t s = inv_mod(it->s, d);
            if (s != 1) out.append(Gate::p(it->dst, s));
        } else {
            uint32_t s = neg_mod(it->s, d);
            if (s == 1) {
                out.append(Gate::sum(it->src, it->dst));
            } else if (s == d - 1) {
                out.append(Gate::sum_inv(it->src, it->dst));
            } else {
                out.append(Gate::p(it->src, s));
                out.append(Gate::sum(it->src, it->dst));
                out.append(Gate::p(it->src, inv_mod(s, d)));
            }
        }
    }
    return out;
}

Circuit synthesize_clifford_diagonal(const MatrixZd& Q, const std::vector<uint32_t>& L) {
    size_t n = Q.rows();
    assert(Q.cols() == n && L.size() == n);
    uint32_t d = Q.d();
    Circuit out(Q.modulus(), n);

    // Cross term pair (i,j) contributes 2 Q_ij x_i x_j; S^{Q_ij} on x_i+x_j
    // supplies it plus Q_ij (x_i^2 + x_j^2), which the diagonal pass repays.
    std::vector<uint32_t> diag(n);
    for (size_t i = 0; i < n; ++i) diag[i] = Q(i, i);
    for (uint32_t i = 0; i < n; ++i) {
        for (uint32_t j = i + 1; j < n; ++j) {
            uint32_t k = Q(i, j);
            if (k == 0) continue;
            out.append(Gate::sum(i, j));
            out.append(Gate::s(j, k));
            out.append(Gate::sum_inv(i, j));
            diag[i] = sub_mod(diag[i], k, d);
            diag[j] = sub_mod(diag[j], k, d);
        }
    }
    for (uint32_t i = 0; i < n; ++i)
        if (diag[i] != 0) out.append(Gate::s(i, diag[i]));
    for (uint32_t i = 0; i < n; ++i)
        if (L[i] % d != 0) out.append(Gate::z(i, L[i]));
    return out;
}

SignatureTensor ccz_tensor_power(size_t k, PrimeModulus d) {
    SignatureTensor S(3 * k, d);
    uint32_t sixth = fraction(1, 6, d).value();
    for (size_t i = 0; i < k; ++i) S.set(3 * i, 3 * i + 1, 3 * i + 2, sixth);
    return S;
}

SignatureTensor ccz_shared_control(size_t m, PrimeModulus d) {
    SignatureTensor S(2 * m + 1, d);
    uint32_t sixth = fraction(1, 6, d).value();
    for (size_t j = 1; j <= m; ++j) S.set(0, 2 * j - 1, 2 * j, sixth);
    return S;
}

bool circuits_equal(const Circuit& a, const Circuit& b) {
    if (a.modulus() != b.modulus() || a.n() != b.n()) return false;
    uint32_t d = a.d();
    size_t n = a.n();
    uint64_t total = 1;
    for (size_t i = 0; i < n; ++i) {
        total *= d;
        if (total > 1000000ull) throw DimensionTooLarge("basis has more than 10^6 states; exhaustive check refused");
    }
    std::vector<uint32_t> x(n, 0);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t v = idx;
        for (size_t i = 0; i < n; ++i) {
            x[i] = static_cast<uint32_t>(v % d);
            v /= d;
        }
        BasisImage ia = simulate_basis(a, x);
        BasisImage ib = simulate_basis(b, x);
        if (ia.phase != ib.phase || ia.state != ib.state) return false;
    }
    return true;
}

}  // namespace qdc
