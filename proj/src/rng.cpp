#include "qdc/rng.hpp"

namespace qdc {

static uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t master, uint64_t stream) {
    return splitmix64(master ^ splitmix64(stream));
}

uint64_t label_stream(std::string_view label) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char c : label) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

uint64_t Rng::below(uint64_t bound) {
    // Rejection sampling over the largest multiple of bound below 2^64.
    uint64_t limit = ~uint64_t(0) - ~uint64_t(0) % bound;
    uint64_t r;
    do {
        r = next_u64();
    } while (r >= limit);
    return r % bound;
}

}  // namespace qdc
