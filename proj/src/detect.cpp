#include "fourcycle/detect.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace fourcycle {

namespace {

inline int64_t pair_key(int n, Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return static_cast<int64_t>(u) * n + v;
}

// Pair graph of a triple system: u ~ v iff some triple contains both. Keeps
// bitset adjacency rows plus the shell (third-vertex list) of every pair.
struct PairGraph {
    int n = 0;
    int words = 0;
    std::vector<uint64_t> adj;
    std::vector<Vertex> pool;  // concatenated sorted shells
    std::unordered_map<int64_t, std::pair<uint32_t, uint32_t>> shells;

    explicit PairGraph(const TripleSystem& h) : n(h.vertex_count()) {
        words = (n + 63) / 64;
        adj.assign(static_cast<size_t>(n) * words, 0);

        std::vector<std::pair<int64_t, Vertex>> entries;
        entries.reserve(h.triples().size() * 3);
        for (const Triple& t : h.triples()) {
            entries.emplace_back(pair_key(n, t[0], t[1]), t[2]);
            entries.emplace_back(pair_key(n, t[0], t[2]), t[1]);
            entries.emplace_back(pair_key(n, t[1], t[2]), t[0]);
        }
        std::sort(entries.begin(), entries.end());
        pool.reserve(entries.size());
        for (size_t i = 0; i < entries.size();) {
            size_t j = i;
            while (j < entries.size() && entries[j].first == entries[i].first) ++j;
            int64_t key = entries[i].first;
            auto u = static_cast<Vertex>(key / n);
            auto v = static_cast<Vertex>(key % n);
            shells.emplace(key, std::make_pair(static_cast<uint32_t>(pool.size()),
                                               static_cast<uint32_t>(j - i)));
            for (size_t k = i; k < j; ++k) pool.push_back(entries[k].second);
            set_bit(u, v);
            set_bit(v, u);
            i = j;
        }
    }

    void set_bit(Vertex u, Vertex v) {
        adj[static_cast<size_t>(u) * words + static_cast<size_t>(v >> 6)] |= 1ULL
                                                                             << (v & 63);
    }

    const uint64_t* row(Vertex u) const { return adj.data() + static_cast<size_t>(u) * words; }

    bool adjacent(Vertex u, Vertex v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1ULL;
    }

    // sorted list of third vertices for the pair {u, v}
    std::pair<const Vertex*, int> shell_of(Vertex u, Vertex v) const {
        auto it = shells.find(pair_key(n, u, v));
        if (it == shells.end()) return {nullptr, 0};
        return {pool.data() + it->second.first, static_cast<int>(it->second.second)};
    }
};

// Visits every base 4-cycle once, in its canonical labeling: v1 is the least
// vertex, its smaller cycle-neighbor is v2. fn returns false to stop.
template <typename Fn>
void for_each_base_cycle(const PairGraph& pg, Fn&& fn) {
    const int n = pg.n;
    std::vector<Vertex> common;
    for (Vertex a = 0; a + 2 < n; ++a) {
        const uint64_t* ra = pg.row(a);
        for (Vertex c = a + 1; c < n; ++c) {
            const uint64_t* rc = pg.row(c);
            common.clear();
            for (int w = a >> 6; w < pg.words; ++w) {
                uint64_t m = ra[w] & rc[w];
                if (w == (a >> 6)) m &= ~((2ULL << (a & 63)) - 1);  // keep vertices > a
                while (m) {
                    int bit = __builtin_ctzll(m);
                    m &= m - 1;
                    common.push_back(static_cast<Vertex>((w << 6) + bit));
                }
            }
            for (size_t i = 0; i + 1 < common.size(); ++i)
                for (size_t j = i + 1; j < common.size(); ++j)
                    if (!fn(a, common[i], c, common[j])) return;
        }
    }
}

std::vector<Vertex> intersect_sorted(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::vector<Vertex> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Distinct representatives, one per candidate list, enumerated in order.
// visit returns false to stop; the return value mirrors that.
template <typename Visit>
bool for_each_sdr(const std::vector<std::vector<Vertex>>& cands, std::vector<Vertex>& chosen,
                  size_t idx, Visit&& visit) {
    if (idx == cands.size()) return visit(chosen);
    for (Vertex x : cands[idx]) {
        bool used = false;
        for (size_t k = 0; k < idx; ++k)
            if (chosen[k] == x) { used = true; break; }
        if (used) continue;
        chosen[idx] = x;
        if (!for_each_sdr(cands, chosen, idx + 1, visit)) return false;
    }
    return true;
}

struct Detector {
    const TripleSystem& h;
    PairGraph pg;
    std::array<std::vector<Vertex>, 4> S;  // apex candidates per slot, current cycle

    explicit Detector(const TripleSystem& sys) : h(sys), pg(sys) {}

    // Fills S for the cycle; false when some slot has no apex outside the base.
    bool load_apex_sets(Vertex v1, Vertex v2, Vertex v3, Vertex v4) {
        const std::array<Vertex, 4> base{v1, v2, v3, v4};
        for (int i = 0; i < 4; ++i) {
            auto [ptr, len] = pg.shell_of(base[static_cast<size_t>(i)],
                                          base[static_cast<size_t>((i + 1) % 4)]);
            auto& out = S[static_cast<size_t>(i)];
            out.clear();
            for (int k = 0; k < len; ++k) {
                Vertex z = ptr[k];
                if (z != v1 && z != v2 && z != v3 && z != v4) out.push_back(z);
            }
            if (out.empty()) return false;
        }
        return true;
    }

    // candidate vertices per block of the partition; false if a block is dry
    bool block_candidates(const SlotPartition& part, std::vector<std::vector<Vertex>>& cands) {
        cands.clear();
        for (const auto& block : part) {
            std::vector<Vertex> cur = S[static_cast<size_t>(block[0] - 1)];
            for (size_t k = 1; k < block.size() && !cur.empty(); ++k)
                cur = intersect_sorted(cur, S[static_cast<size_t>(block[k] - 1)]);
            if (cur.empty()) return false;
            cands.push_back(std::move(cur));
        }
        return true;
    }

    static Embedding assemble(const std::array<Vertex, 4>& base, const SlotPartition& part,
                              const std::vector<Vertex>& reps, PatternClass cls) {
        Embedding e;
        e.base = base;
        e.cls = cls;
        for (size_t b = 0; b < part.size(); ++b)
            for (int s : part[b]) e.apex[static_cast<size_t>(s - 1)] = reps[b];
        return normalize(e);
    }

    // One representative per dihedral orbit: among the 8 relabelings of the
    // base cycle, keep those whose coincidence pattern is the canonical
    // partition of cls and take the lexicographically least (base, apex).
    static Embedding normalize(const Embedding& e) {
        const SlotPartition& canon = pattern(e.cls).partition;
        Embedding best = e;
        bool have = false;
        for (int start = 0; start < 4; ++start) {
            for (int dir : {1, -1}) {
                Embedding img;
                img.cls = e.cls;
                for (int i = 0; i < 4; ++i) {
                    int pos = ((start + dir * i) % 4 + 4) % 4;
                    img.base[static_cast<size_t>(i)] = e.base[static_cast<size_t>(pos)];
                    int slot = dir == 1 ? (start + i) % 4 : ((start - i - 1) % 4 + 4) % 4;
                    img.apex[static_cast<size_t>(i)] = e.apex[static_cast<size_t>(slot)];
                }
                if (coincidence_partition(img.apex) != canon) continue;
                if (!have || img < best) best = img;
                have = true;
            }
        }
        return best;
    }

    static SlotPartition coincidence_partition(const std::array<Vertex, 4>& apex) {
        SlotPartition part;
        std::array<bool, 4> done{};
        for (int i = 0; i < 4; ++i) {
            if (done[static_cast<size_t>(i)]) continue;
            std::vector<int> block{i + 1};
            for (int j = i + 1; j < 4; ++j)
                if (apex[static_cast<size_t>(j)] == apex[static_cast<size_t>(i)]) {
                    block.push_back(j + 1);
                    done[static_cast<size_t>(j)] = true;
                }
            part.push_back(std::move(block));
        }
        std::sort(part.begin(), part.end());
        return part;
    }

    // presence decision on the current cycle; the SDR only needs truncated
    // candidate lists (block count + 1 per block keeps Hall's condition)
    std::optional<Embedding> first_on_cycle(const std::array<Vertex, 4>& base, PatternClass cls) {
        std::vector<std::vector<Vertex>> cands;
        std::vector<Vertex> chosen;
        for (const SlotPartition& part : class_orbit(cls)) {
            if (!block_candidates(part, cands)) continue;
            size_t cap = cands.size() + 1;
            for (auto& c : cands)
                if (c.size() > cap) c.resize(cap);
            chosen.assign(cands.size(), -1);
            std::optional<Embedding> found;
            for_each_sdr(cands, chosen, 0, [&](const std::vector<Vertex>& reps) {
                found = assemble(base, part, reps, cls);
                return false;
            });
            if (found) return found;
        }
        return std::nullopt;
    }

    // full enumeration on the current cycle
    template <typename Out>
    bool all_on_cycle(const std::array<Vertex, 4>& base, PatternClass cls, Out&& out) {
        std::vector<std::vector<Vertex>> cands;
        std::vector<Vertex> chosen;
        for (const SlotPartition& part : class_orbit(cls)) {
            if (!block_candidates(part, cands)) continue;
            chosen.assign(cands.size(), -1);
            bool go = for_each_sdr(cands, chosen, 0, [&](const std::vector<Vertex>& reps) {
                return out(assemble(base, part, reps, cls));
            });
            if (!go) return false;
        }
        return true;
    }
};

} // namespace

std::array<Triple, 4> Embedding::triples() const {
    std::array<Triple, 4> out;
    for (int i = 0; i < 4; ++i)
        out[static_cast<size_t>(i)] =
            sorted_triple(apex[static_cast<size_t>(i)], base[static_cast<size_t>(i)],
                          base[static_cast<size_t>((i + 1) % 4)]);
    return out;
}

std::vector<std::pair<std::vector<int>, Vertex>> Embedding::apex_by_block() const {
    std::vector<std::pair<std::vector<int>, Vertex>> out;
    for (const auto& block : pattern(cls).partition)
        out.emplace_back(block, apex[static_cast<size_t>(block[0] - 1)]);
    return out;
}

bool Embedding::valid_in(const TripleSystem& h) const {
    const int n = h.vertex_count();
    for (Vertex v : base)
        if (v < 0 || v >= n) return false;
    for (Vertex w : apex)
        if (w < 0 || w >= n) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (base[static_cast<size_t>(i)] == base[static_cast<size_t>(j)]) return false;
    for (Vertex w : apex)
        for (Vertex v : base)
            if (w == v) return false;
    if (Detector::coincidence_partition(apex) != pattern(cls).partition) return false;
    for (const Triple& t : triples())
        if (!h.contains(t)) return false;
    return true;
}

std::vector<Embedding> find_embeddings(const TripleSystem& h, PatternClass cls,
                                       std::optional<int> limit) {
    std::vector<Embedding> out;
    if (limit && *limit <= 0) return out;
    Detector det(h);
    for_each_base_cycle(det.pg, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
        if (!det.load_apex_sets(a, b, c, d)) return true;
        std::array<Vertex, 4> base{a, b, c, d};
        return det.all_on_cycle(base, cls, [&](Embedding e) {
            out.push_back(std::move(e));
            return !limit || static_cast<int>(out.size()) < *limit;
        });
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Embedding> find_embeddings(const TripleSystem& h, const ApexPattern& pat,
                                       std::optional<int> limit) {
    return find_embeddings(h, pat.class_id, limit);
}

Profile profile(const TripleSystem& h) {
    Profile p;
    Detector det(h);
    int missing = kPatternCount;
    for_each_base_cycle(det.pg, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
        if (!det.load_apex_sets(a, b, c, d)) return true;
        std::array<Vertex, 4> base{a, b, c, d};
        for (int i = 0; i < kPatternCount; ++i) {
            PatternClass cls = pattern_from_index(i);
            if (p.present.contains(cls)) continue;
            if (auto e = det.first_on_cycle(base, cls)) {
                p.present = p.present.with(cls);
                p.witness[static_cast<size_t>(i)] = *e;
                --missing;
            }
        }
        return missing > 0;
    });
    return p;
}

bool is_free(const TripleSystem& h, FamilySubset a) {
    if (a.empty()) return true;
    Detector det(h);
    bool free = true;
    for_each_base_cycle(det.pg, [&](Vertex x, Vertex b, Vertex c, Vertex d) {
        if (!det.load_apex_sets(x, b, c, d)) return true;
        std::array<Vertex, 4> base{x, b, c, d};
        for (PatternClass cls : a.members()) {
            if (det.first_on_cycle(base, cls)) {
                free = false;
                return false;
            }
        }
        return true;
    });
    return free;
}

namespace {

// SDR over triple lists, distinctness on the triples themselves
bool berge_on_cycle(const PairGraph& pg, const std::array<Vertex, 4>& base,
                    std::array<Triple, 4>& picked, size_t idx) {
    if (idx == 4) return true;
    Vertex u = base[idx];
    Vertex v = base[(idx + 1) % 4];
    auto [ptr, len] = pg.shell_of(u, v);
    int cap = std::min(len, 5);  // 4 sets: 5 candidates each decide existence
    for (int k = 0; k < cap; ++k) {
        Triple t = sorted_triple(u, v, ptr[k]);
        bool used = false;
        for (size_t j = 0; j < idx; ++j)
            if (picked[j] == t) { used = true; break; }
        if (used) continue;
        picked[idx] = t;
        if (berge_on_cycle(pg, base, picked, idx + 1)) return true;
    }
    return false;
}

} // namespace

std::optional<BergeWitness> find_berge_c4(const TripleSystem& h) {
    PairGraph pg(h);
    std::optional<BergeWitness> out;
    for_each_base_cycle(pg, [&](Vertex a, Vertex b, Vertex c, Vertex d) {
        std::array<Vertex, 4> base{a, b, c, d};
        std::array<Triple, 4> picked{};
        if (berge_on_cycle(pg, base, picked, 0)) {
            out = BergeWitness{base, picked};
            return false;
        }
        return true;
    });
    return out;
}

bool has_berge_c4(const TripleSystem& h) { return find_berge_c4(h).has_value(); }

namespace {

int union_size(const std::vector<uint64_t>& bits) {
    int s = 0;
    for (uint64_t w : bits) s += __builtin_popcountll(w);
    return s;
}

bool dense_set_exists(const TripleSystem& h, int maxv, int want, size_t start, int have,
                      std::vector<uint64_t>& bits) {
    if (have == want) return true;
    const auto& ts = h.triples();
    for (size_t i = start; i + static_cast<size_t>(want - have) <= ts.size(); ++i) {
        const Triple& t = ts[i];
        std::array<int, 3> added{};
        int na = 0;
        for (Vertex v : t)
            if (!((bits[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1ULL)) added[na++] = v;
        if (union_size(bits) + na > maxv) continue;
        for (int k = 0; k < na; ++k)
            bits[static_cast<size_t>(added[k] >> 6)] |= 1ULL << (added[k] & 63);
        if (dense_set_exists(h, maxv, want, i + 1, have + 1, bits)) return true;
        for (int k = 0; k < na; ++k)
            bits[static_cast<size_t>(added[k] >> 6)] &= ~(1ULL << (added[k] & 63));
    }
    return false;
}

} // namespace

bool check_sparsity(const TripleSystem& h, int v, int e) {
    if (!((v == 6 && e == 3) || (v == 7 && e == 4)))
        throw std::invalid_argument("check_sparsity supports (6,3) and (7,4) only");
    std::vector<uint64_t> bits(static_cast<size_t>((h.vertex_count() + 63) / 64), 0);
    return !dense_set_exists(h, v, e, 0, 0, bits);
}

} // namespace fourcycle
