#ifndef FOURCYCLE_RNG_HPP
#define FOURCYCLE_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace fourcycle {

// Deterministic RNG for every randomized operation in the library.
// mt19937_64 output is pinned by the standard; bounded draws use rejection
// sampling instead of std::uniform_int_distribution, whose mapping is
// implementation-defined and would break cross-platform reproducibility.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next_u64() { return gen_(); }

    // uniform integer in [0, bound); bound == 0 is treated as 1
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = gen_();
            if (r >= threshold) return r % bound;
        }
    }

    // uniform integer in [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 gen_;
};

} // namespace fourcycle

#endif
