// Test-only oracle for special four-cycle detection. Enumerates every
// ordered base 4-tuple and every apex combination directly from the shells,
// with no shared machinery with the detector's pair-graph path.
#ifndef FOURCYCLE_TESTS_NAIVE_ORACLE_HPP
#define FOURCYCLE_TESTS_NAIVE_ORACLE_HPP

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "fourcycle/detect.hpp"
#include "fourcycle/patterns.hpp"
#include "fourcycle/triple_system.hpp"

namespace fourcycle::testing {

using EmbeddingKey = std::pair<std::array<Vertex, 4>, std::array<Vertex, 4>>;

inline SlotPartition naive_coincidence(const std::array<Vertex, 4>& w) {
    SlotPartition part;
    std::array<bool, 4> used{};
    for (int i = 0; i < 4; ++i) {
        if (used[static_cast<size_t>(i)]) continue;
        std::vector<int> block{i + 1};
        for (int j = i + 1; j < 4; ++j)
            if (w[static_cast<size_t>(j)] == w[static_cast<size_t>(i)]) {
                block.push_back(j + 1);
                used[static_cast<size_t>(j)] = true;
            }
        part.push_back(std::move(block));
    }
    std::sort(part.begin(), part.end());
    return part;
}

// all 8 dihedral relabelings of (base, apex)
inline std::vector<EmbeddingKey> naive_images(const std::array<Vertex, 4>& base,
                                              const std::array<Vertex, 4>& apex) {
    std::vector<EmbeddingKey> out;
    for (int start = 0; start < 4; ++start) {
        for (int dir : {1, -1}) {
            std::array<Vertex, 4> nb{}, na{};
            for (int i = 0; i < 4; ++i) {
                int pos = ((start + dir * i) % 4 + 4) % 4;
                nb[static_cast<size_t>(i)] = base[static_cast<size_t>(pos)];
                int slot = dir == 1 ? (start + i) % 4 : ((start - i - 1) % 4 + 4) % 4;
                na[static_cast<size_t>(i)] = apex[static_cast<size_t>(slot)];
            }
            out.emplace_back(nb, na);
        }
    }
    return out;
}

// dihedral-orbit representative with the canonical coincidence pattern
inline EmbeddingKey naive_normalize(PatternClass cls, const std::array<Vertex, 4>& base,
                                    const std::array<Vertex, 4>& apex) {
    const SlotPartition& canon = pattern(cls).partition;
    bool have = false;
    EmbeddingKey best{};
    for (const EmbeddingKey& img : naive_images(base, apex)) {
        if (naive_coincidence(img.second) != canon) continue;
        if (!have || img < best) best = img;
        have = true;
    }
    return best;
}

// per class: the set of normalized embeddings found by raw enumeration
inline std::array<std::set<EmbeddingKey>, kPatternCount> naive_embeddings(const TripleSystem& h) {
    std::array<std::set<EmbeddingKey>, kPatternCount> out;
    const int n = h.vertex_count();
    std::array<Vertex, 4> base{};
    for (base[0] = 0; base[0] < n; ++base[0])
        for (base[1] = 0; base[1] < n; ++base[1])
            for (base[2] = 0; base[2] < n; ++base[2])
                for (base[3] = 0; base[3] < n; ++base[3]) {
                    if (base[0] == base[1] || base[0] == base[2] || base[0] == base[3] ||
                        base[1] == base[2] || base[1] == base[3] || base[2] == base[3])
                        continue;
                    std::array<std::vector<Vertex>, 4> cand;
                    bool dry = false;
                    for (int i = 0; i < 4 && !dry; ++i) {
                        Vertex u = base[static_cast<size_t>(i)];
                        Vertex v = base[static_cast<size_t>((i + 1) % 4)];
                        for (Vertex z = 0; z < n; ++z) {
                            if (z == base[0] || z == base[1] || z == base[2] || z == base[3])
                                continue;
                            if (h.contains(sorted_triple(u, v, z)))
                                cand[static_cast<size_t>(i)].push_back(z);
                        }
                        if (cand[static_cast<size_t>(i)].empty()) dry = true;
                    }
                    if (dry) continue;
                    std::array<Vertex, 4> w{};
                    for (Vertex w0 : cand[0])
                        for (Vertex w1 : cand[1])
                            for (Vertex w2 : cand[2])
                                for (Vertex w3 : cand[3]) {
                                    w = {w0, w1, w2, w3};
                                    PatternClass cls = classify_partition(naive_coincidence(w));
                                    out[static_cast<size_t>(pattern_index(cls))].insert(
                                        naive_normalize(cls, base, w));
                                }
                }
    return out;
}

// Berge four-cycle presence by brute force: every base tuple, every
// assignment of four pairwise distinct triples to the four edges.
inline bool naive_berge(const TripleSystem& h) {
    const int n = h.vertex_count();
    const auto& ts = h.triples();
    std::array<Vertex, 4> b{};
    for (b[0] = 0; b[0] < n; ++b[0])
        for (b[1] = 0; b[1] < n; ++b[1])
            for (b[2] = 0; b[2] < n; ++b[2])
                for (b[3] = 0; b[3] < n; ++b[3]) {
                    if (b[0] == b[1] || b[0] == b[2] || b[0] == b[3] || b[1] == b[2] ||
                        b[1] == b[3] || b[2] == b[3])
                        continue;
                    std::array<std::vector<int>, 4> cand;
                    bool dry = false;
                    for (int i = 0; i < 4 && !dry; ++i) {
                        Vertex u = b[static_cast<size_t>(i)];
                        Vertex v = b[static_cast<size_t>((i + 1) % 4)];
                        for (size_t t = 0; t < ts.size(); ++t) {
                            bool hasu = std::binary_search(ts[t].begin(), ts[t].end(), u);
                            bool hasv = std::binary_search(ts[t].begin(), ts[t].end(), v);
                            if (hasu && hasv) cand[static_cast<size_t>(i)].push_back(
                                static_cast<int>(t));
                        }
                        if (cand[static_cast<size_t>(i)].empty()) dry = true;
                    }
                    if (dry) continue;
                    for (int t0 : cand[0])
                        for (int t1 : cand[1]) {
                            if (t1 == t0) continue;
                            for (int t2 : cand[2]) {
                                if (t2 == t0 || t2 == t1) continue;
                                for (int t3 : cand[3])
                                    if (t3 != t0 && t3 != t1 && t3 != t2) return true;
                            }
                        }
                }
    return false;
}

} // namespace fourcycle::testing

#endif
