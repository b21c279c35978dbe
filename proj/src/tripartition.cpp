#include "fourcycle/tripartition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fourcycle/rng.hpp"

namespace fourcycle {

Tripartition tripartition(const TripleSystem& h, uint64_t seed) {
    const int n = h.vertex_count();
    if (n < 3) throw std::invalid_argument("tripartition requires n >= 3");

    const long long need = (2LL * h.triple_count() + 8) / 9;  // ceil(2m/9)
    const int s1 = (n + 2) / 3;
    const int s2 = (n + 1) / 3;

    Rng rng(seed);
    std::vector<Vertex> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int8_t> cls(static_cast<size_t>(n));

    Tripartition out;
    for (;;) {
        ++out.attempts;
        rng.shuffle(order);
        for (int i = 0; i < n; ++i) {
            int c = i < s1 ? 0 : (i < s1 + s2 ? 1 : 2);
            cls[static_cast<size_t>(order[static_cast<size_t>(i)])] = static_cast<int8_t>(c);
        }
        std::vector<Triple> kept;
        for (const Triple& t : h.triples()) {
            int c0 = cls[static_cast<size_t>(t[0])];
            int c1 = cls[static_cast<size_t>(t[1])];
            int c2 = cls[static_cast<size_t>(t[2])];
            if (c0 != c1 && c0 != c2 && c1 != c2) kept.push_back(t);
        }
        if (static_cast<long long>(kept.size()) >= need) {
            for (auto& cl : out.classes) cl.clear();
            for (int v = 0; v < n; ++v)
                out.classes[static_cast<size_t>(cls[static_cast<size_t>(v)])].push_back(v);
            out.sub = TripleSystem(n, std::move(kept));
            return out;
        }
    }
}

} // namespace fourcycle
