#include "qdc/field.hpp"

namespace qdc {

PrimeModulus::PrimeModulus(uint32_t d) : d_(d) {
    if (d <= 3) throw Error("qudit dimension must be a prime greater than 3, got " + std::to_string(d));
    if (d >= (1u << 16)) throw Error("qudit dimension out of supported range (< 2^16): " + std::to_string(d));
    for (uint32_t p = 2; p * p <= d; ++p) {
        if (d % p == 0) throw Error("qudit dimension must be prime, got " + std::to_string(d));
    }
}

uint32_t inv_mod(uint32_t a, uint32_t d) {
    if (a % d == 0) throw DivisionByZero("no multiplicative inverse of 0 mod " + std::to_string(d));
    // Extended Euclid on (a, d); d prime guarantees gcd 1.
    int64_t r0 = a % d, r1 = d;
    int64_t s0 = 1, s1 = 0;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        int64_t s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    return reduce_int(s0, d);
}

FieldScalar fraction(int64_t num, int64_t den, PrimeModulus m) {
    uint32_t d = m.d();
    uint32_t q = reduce_int(den, d);
    if (q == 0) throw DivisionByZero("denominator divisible by " + std::to_string(d));
    return FieldScalar(mul_mod(reduce_int(num, d), inv_mod(q, d), d), m);
}

}  // namespace qdc
