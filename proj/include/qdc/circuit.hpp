#pragma once

#include <cstdint>
#include <vector>

#include "qdc/phasepoly.hpp"

namespace qdc {

/// Gate set: diagonal phase gates Z^k (linear), S^k (quadratic), M^k (cubic),
/// the product operator P_l (basis relabeling x -> l*x) and the two-qudit
/// SUM gate (t -> t + c). SUMINV is the inverse SUM as a single netlist entry.
enum class GateKind { Z, S, M, P, Sum, SumInv };

struct Gate {
    GateKind kind;
    uint32_t q1;     // acted qudit for Z/S/M/P; control for Sum/SumInv
    uint32_t q2;     // target for Sum/SumInv; unused otherwise
    uint32_t param;  // k for Z/S/M, l for P; unused for Sum/SumInv

    static Gate z(uint32_t q, uint32_t k) { return {GateKind::Z, q, 0, k}; }
    static Gate s(uint32_t q, uint32_t k) { return {GateKind::S, q, 0, k}; }
    static Gate m(uint32_t q, uint32_t k) { return {GateKind::M, q, 0, k}; }
    static Gate p(uint32_t q, uint32_t l) { return {GateKind::P, q, 0, l}; }
    static Gate sum(uint32_t c, uint32_t t) { return {GateKind::Sum, c, t, 0}; }
    static Gate sum_inv(uint32_t c, uint32_t t) { return {GateKind::SumInv, c, t, 0}; }

    friend bool operator==(const Gate& a, const Gate& b) {
        return a.kind == b.kind && a.q1 == b.q1 && a.q2 == b.q2 && a.param == b.param;
    }
};

/// Time-ordered netlist on n qudits of prime dimension d.
class Circuit {
  public:
    Circuit(PrimeModulus d, size_t n) : mod_(d), n_(n) {}

    PrimeModulus modulus() const { return mod_; }
    uint32_t d() const { return mod_.d(); }
    size_t n() const { return n_; }
    const std::vector<Gate>& gates() const { return gates_; }
    size_t size() const { return gates_.size(); }

    /// Validates indices and gate invariants (M^0 and P_0 are rejected,
    /// SUM needs distinct wires). Parameters are reduced mod d.
    void append(Gate g);

    void extend(const Circuit& other);

  private:
    PrimeModulus mod_;
    size_t n_;
    std::vector<Gate> gates_;
};

/// Number of M^k netlist entries; each counts once regardless of k.
size_t m_count(const Circuit& c);

struct BasisImage {
    uint32_t phase;               // omega exponent
    std::vector<uint32_t> state;  // output basis label
};

/// Exact basis-state semantics: U|x> = omega^phase |state>. Integer-only;
/// every phase contribution is homogeneous, so phase(0) = 0 and circuit
/// equality needs no global-phase convention.
BasisImage simulate_basis(const Circuit& c, const std::vector<uint32_t>& x);

/// Full semantics of a netlist: U|x> = omega^{f(x)} |Ex> with f split into
/// cubic (S), quadratic (Q) and linear (L) parts.
struct PhaseProfile {
    MatrixZd E;
    SignatureTensor S;
    MatrixZd Q;  // symmetric
    std::vector<uint32_t> L;
};

/// Symbolic wire tracking: P/SUM update per-wire linear forms, Z/S/M fold
/// the current form (raised to power 1/2/3) into L/Q/S.
PhaseProfile extract(const Circuit& c);

uint32_t eval_profile(const PhaseProfile& p, const std::vector<uint32_t>& x);

/// Circuit with exactly m() M gates realizing the implementation's cubic
/// phase and identity basis action: per column, a P/SUM subcircuit puts the
/// column's linear form on the lowest-index wire in its support, M^lambda
/// fires there, and the subcircuit is uncomputed.
Circuit synthesize_cubic(const Implementation& imp);

/// SUM/P-only circuit whose extracted E equals the given invertible matrix.
Circuit decompose_linear(const MatrixZd& E);

/// S/Z circuit (with SUM conjugation for cross terms) realizing the phase
/// x^T Q x + L.x with zero M gates.
Circuit synthesize_clifford_diagonal(const MatrixZd& Q, const std::vector<uint32_t>& L);

/// k disjoint doubly-controlled-Z phases: n = 3k, one 1/6 entry per block.
SignatureTensor ccz_tensor_power(size_t k, PrimeModulus d);

/// m doubly-controlled-Z phases sharing one control: n = 2m+1.
SignatureTensor ccz_shared_control(size_t m, PrimeModulus d);

/// Exact unitary equality by exhaustive basis simulation. Guarded at
/// d^n <= 10^6; throws DimensionTooLarge above that.
bool circuits_equal(const Circuit& a, const Circuit& b);

}  // namespace qdc
