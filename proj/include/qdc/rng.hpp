#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace qdc {

/// Splits a master seed into independent streams. Splitmix64 finalizer, so
/// derived seeds are stable across platforms and runs.
uint64_t derive_seed(uint64_t master, uint64_t stream);

/// Stream id from a text label (FNV-1a), for per-benchmark-row seeding.
uint64_t label_stream(std::string_view label);

/// Deterministic RNG. mt19937_64 output is pinned by the standard; the
/// sampling helpers below avoid std::uniform_int_distribution, whose results
/// are implementation-defined.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    /// Unbiased draw from [0, bound). bound must be nonzero.
    uint64_t below(uint64_t bound);

    /// Uniform nonzero residue in [1, d).
    uint32_t nonzero_mod(uint32_t d) { return 1 + static_cast<uint32_t>(below(d - 1)); }

    /// Uniform residue in [0, d).
    uint32_t mod(uint32_t d) { return static_cast<uint32_t>(below(d)); }

    bool coin() { return (next_u64() & 1) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace qdc
