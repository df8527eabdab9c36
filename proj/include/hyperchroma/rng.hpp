#pragma once

#include <cstdint>
#include <vector>

namespace hyperchroma {

// Counter-based splittable PRNG. Every random decision in the library flows
// through one of these so that a 64-bit seed replays a whole run bit-exactly.
// next() hashes (key, counter) with the splitmix64 finalizer; split(tag)
// derives an independent child stream without disturbing the parent.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : key_(hash64(seed ^ 0x6A09E667F3BCC909ULL)) {}

    static constexpr std::uint64_t hash64(std::uint64_t x) {
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return x;
    }

    std::uint64_t next() { return hash64(key_ + 0x9E3779B97F4A7C15ULL * ++ctr_); }

    // Child stream; deterministic in (parent seed, tag), independent of ctr_.
    Rng split(std::uint64_t tag) const {
        Rng child(0);
        child.key_ = hash64(key_ ^ hash64(tag + 0xD1B54A32D192ED03ULL));
        child.ctr_ = 0;
        return child;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform in [0, n); rejection sampling keeps it unbiased.
    std::uint64_t below(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % n;
    }

    int below_int(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t key_ = 0;
    std::uint64_t ctr_ = 0;
};

}  // namespace hyperchroma
