#pragma once

#include <cassert>
#include <cstdint>
#include <string>

#include "qdc/errors.hpp"

namespace qdc {

/// Prime qudit dimension d. The whole pipeline needs 2, 3 and 6 to be
/// invertible mod d, hence d > 3. Trial division keeps construction cheap
/// for the supported range 3 < d < 2^16.
class PrimeModulus {
  public:
    explicit PrimeModulus(uint32_t d);

    uint32_t d() const { return d_; }

    friend bool operator==(PrimeModulus a, PrimeModulus b) { return a.d_ == b.d_; }
    friend bool operator!=(PrimeModulus a, PrimeModulus b) { return a.d_ != b.d_; }

  private:
    uint32_t d_;
};

// Raw helpers on residues in [0, d). Hot loops use these directly; the
// FieldScalar wrapper below carries its modulus for API-level values.
inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t d) {
    uint32_t s = a + b;
    return s >= d ? s - d : s;
}

inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t d) {
    return a >= b ? a - b : a + d - b;
}

inline uint32_t neg_mod(uint32_t a, uint32_t d) {
    return a == 0 ? 0 : d - a;
}

inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t d) {
    return static_cast<uint32_t>((uint64_t(a) * b) % d);
}

inline uint32_t cube_mod(uint32_t a, uint32_t d) {
    return mul_mod(mul_mod(a, a, d), a, d);
}

/// Canonical residue of an arbitrary (possibly negative) integer.
inline uint32_t reduce_int(int64_t v, uint32_t d) {
    int64_t r = v % int64_t(d);
    if (r < 0) r += d;
    return static_cast<uint32_t>(r);
}

/// Multiplicative inverse by extended Euclid. Throws DivisionByZero for a = 0.
uint32_t inv_mod(uint32_t a, uint32_t d);

/// A residue mod a prime d > 3. Always stored reduced.
class FieldScalar {
  public:
    FieldScalar(uint32_t value, PrimeModulus m) : v_(value % m.d()), mod_(m) {}

    static FieldScalar from_int(int64_t value, PrimeModulus m) {
        return FieldScalar(reduce_int(value, m.d()), m);
    }

    uint32_t value() const { return v_; }
    PrimeModulus modulus() const { return mod_; }

    friend FieldScalar operator+(FieldScalar a, FieldScalar b) {
        assert(a.mod_ == b.mod_);
        return FieldScalar(add_mod(a.v_, b.v_, a.mod_.d()), a.mod_);
    }
    friend FieldScalar operator-(FieldScalar a, FieldScalar b) {
        assert(a.mod_ == b.mod_);
        return FieldScalar(sub_mod(a.v_, b.v_, a.mod_.d()), a.mod_);
    }
    friend FieldScalar operator*(FieldScalar a, FieldScalar b) {
        assert(a.mod_ == b.mod_);
        return FieldScalar(mul_mod(a.v_, b.v_, a.mod_.d()), a.mod_);
    }
    FieldScalar operator-() const { return FieldScalar(neg_mod(v_, mod_.d()), mod_); }

    FieldScalar cube() const { return FieldScalar(cube_mod(v_, mod_.d()), mod_); }
    FieldScalar inv() const { return FieldScalar(inv_mod(v_, mod_.d()), mod_); }

    friend bool operator==(FieldScalar a, FieldScalar b) {
        assert(a.mod_ == b.mod_);
        return a.v_ == b.v_;
    }
    friend bool operator!=(FieldScalar a, FieldScalar b) { return !(a == b); }

  private:
    uint32_t v_;
    PrimeModulus mod_;
};

/// (num/den) mod d, accepting arbitrary integer literals such as 1/24 or -1/3.
/// Throws DivisionByZero when den vanishes mod d.
FieldScalar fraction(int64_t num, int64_t den, PrimeModulus m);

}  // namespace qdc
