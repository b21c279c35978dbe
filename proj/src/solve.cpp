#include "fourcycle/solve.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "fourcycle/canonical.hpp"

namespace fourcycle {

namespace {

std::vector<Triple> triple_universe(int n, bool colex) {
    std::vector<Triple> univ;
    univ.reserve(static_cast<size_t>(n) * (n - 1) * (n - 2) / 6);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) univ.push_back({a, b, c});
    if (colex) std::sort(univ.begin(), univ.end(), colex_less);
    return univ;
}

// ---- naive classifier over four concrete triples --------------------------
//
// Decides which classes the four triples realize as a special four-cycle, by
// direct structural search: assign the triples to the cycle positions (three
// arrangements up to symmetry), pick base vertices from consecutive
// intersections, read the apexes off and classify their coincidences.

void intersect3(const Triple& a, const Triple& b, Vertex out[3], int& len) {
    len = 0;
    for (Vertex x : a)
        for (Vertex y : b)
            if (x == y) out[len++] = x;
}

uint8_t classify_four(const std::array<Triple, 4>& ts) {
    static const int kOrders[3][4] = {{0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3}};
    uint8_t mask = 0;
    for (const auto& ord : kOrders) {
        const Triple* u[4];
        for (int i = 0; i < 4; ++i) u[i] = &ts[static_cast<size_t>(ord[i])];

        Vertex inter[4][3];
        int ilen[4];
        bool dry = false;
        for (int i = 0; i < 4 && !dry; ++i) {
            intersect3(*u[(i + 3) % 4], *u[i], inter[i], ilen[i]);  // b_i choices
            if (ilen[i] == 0) dry = true;
        }
        if (dry) continue;

        std::array<Vertex, 4> b{};
        for (int i0 = 0; i0 < ilen[0]; ++i0)
            for (int i1 = 0; i1 < ilen[1]; ++i1)
                for (int i2 = 0; i2 < ilen[2]; ++i2)
                    for (int i3 = 0; i3 < ilen[3]; ++i3) {
                        b = {inter[0][i0], inter[1][i1], inter[2][i2], inter[3][i3]};
                        bool distinct = true;
                        for (int i = 0; i < 4 && distinct; ++i)
                            for (int j = i + 1; j < 4; ++j)
                                if (b[static_cast<size_t>(i)] == b[static_cast<size_t>(j)]) {
                                    distinct = false;
                                    break;
                                }
                        if (!distinct) continue;

                        // w_i is what remains of u_i beyond its base edge
                        std::array<Vertex, 4> w{};
                        bool ok = true;
                        for (int i = 0; i < 4 && ok; ++i) {
                            Vertex bi = b[static_cast<size_t>(i)];
                            Vertex bj = b[static_cast<size_t>((i + 1) % 4)];
                            int found = -1;
                            for (Vertex x : *u[i])
                                if (x != bi && x != bj) {
                                    if (found >= 0) { found = -2; break; }
                                    found = x;
                                }
                            if (found < 0) { ok = false; break; }
                            w[static_cast<size_t>(i)] = found;
                        }
                        if (!ok) continue;
                        for (Vertex wi : w)
                            for (Vertex bi : b)
                                if (wi == bi) { ok = false; }
                        if (!ok) continue;

                        SlotPartition part;
                        std::array<bool, 4> done{};
                        for (int i = 0; i < 4; ++i) {
                            if (done[static_cast<size_t>(i)]) continue;
                            std::vector<int> block{i + 1};
                            for (int j = i + 1; j < 4; ++j)
                                if (w[static_cast<size_t>(j)] == w[static_cast<size_t>(i)]) {
                                    block.push_back(j + 1);
                                    done[static_cast<size_t>(j)] = true;
                                }
                            part.push_back(std::move(block));
                        }
                        mask |= static_cast<uint8_t>(
                            1 << pattern_index(classify_partition(part)));
                    }
    }
    return mask;
}

// ---- brute force over all subsets of triples -------------------------------
//
// One pass enumerates every subset of the triple universe and records, for
// each exact 7-bit class mask, the largest subset realizing it. All 127
// families then read their answer off the same table.

struct BruteTable {
    int n = 0;
    int m = 0;
    uint64_t nodes = 0;
    std::array<int, 128> best{};
    std::array<uint32_t, 128> wit{};
    std::vector<Triple> univ;
};

struct BruteBuilder {
    int n, m;
    std::vector<Triple> univ;
    std::vector<uint8_t> quad;  // classify_four per 4-subset, flat index
    BruteTable table;
    std::vector<int> chosen;
    uint32_t chosen_bits = 0;

    explicit BruteBuilder(int n_) : n(n_), univ(triple_universe(n_, false)) {
        m = static_cast<int>(univ.size());
        table.n = n;
        table.m = m;
        table.univ = univ;
        table.best.fill(-1);
        table.wit.fill(0);
        quad.assign(static_cast<size_t>(m) * m * m * m, 0);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = j + 1; k < m; ++k)
                    for (int l = k + 1; l < m; ++l)
                        quad[flat(i, j, k, l)] = classify_four(
                            {univ[static_cast<size_t>(i)], univ[static_cast<size_t>(j)],
                             univ[static_cast<size_t>(k)], univ[static_cast<size_t>(l)]});
    }

    size_t flat(int i, int j, int k, int l) const {
        return ((static_cast<size_t>(i) * m + j) * m + k) * m + l;
    }

    void record(uint8_t cm) {
        ++table.nodes;
        int sz = static_cast<int>(chosen.size());
        if (sz > table.best[cm]) {
            table.best[cm] = sz;
            table.wit[cm] = chosen_bits;
        }
    }

    uint8_t gained(int t) const {
        uint8_t cm = 0;
        int k = static_cast<int>(chosen.size());
        for (int x = 0; x < k; ++x)
            for (int y = x + 1; y < k; ++y)
                for (int z = y + 1; z < k; ++z)
                    cm |= quad[flat(chosen[static_cast<size_t>(x)],
                                    chosen[static_cast<size_t>(y)],
                                    chosen[static_cast<size_t>(z)], t)];
        return cm;
    }

    void dfs(int start, uint8_t cm) {
        record(cm);
        for (int t = start; t < m; ++t) {
            uint8_t cm2 = static_cast<uint8_t>(cm | gained(t));
            chosen.push_back(t);
            chosen_bits |= 1u << t;
            dfs(t + 1, cm2);
            chosen_bits &= ~(1u << t);
            chosen.pop_back();
        }
    }

    BruteTable run() {
        dfs(0, 0);
        return std::move(table);
    }
};

const BruteTable& brute_table(int n) {
    static std::mutex mu;
    static std::map<int, BruteTable> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, BruteBuilder(n).run()).first;
    return it->second;
}

// ---- incremental mask-based feasibility for the exact solver ---------------

constexpr int kMaxExactN = 32;

struct MaskState {
    int n = 0;
    std::array<uint32_t, kMaxExactN> adj{};
    std::array<std::array<uint32_t, kMaxExactN>, kMaxExactN> shell{};

    void add(const Triple& t) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                Vertex u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>(j)];
                Vertex z = t[static_cast<size_t>(3 - i - j)];
                shell[static_cast<size_t>(u)][static_cast<size_t>(v)] |= 1u << z;
                shell[static_cast<size_t>(v)][static_cast<size_t>(u)] |= 1u << z;
                adj[static_cast<size_t>(u)] |= 1u << v;
                adj[static_cast<size_t>(v)] |= 1u << u;
            }
    }

    void remove(const Triple& t) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                Vertex u = t[static_cast<size_t>(i)], v = t[static_cast<size_t>(j)];
                Vertex z = t[static_cast<size_t>(3 - i - j)];
                shell[static_cast<size_t>(u)][static_cast<size_t>(v)] &= ~(1u << z);
                shell[static_cast<size_t>(v)][static_cast<size_t>(u)] &= ~(1u << z);
                if (!shell[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
                    adj[static_cast<size_t>(u)] &= ~(1u << v);
                    adj[static_cast<size_t>(v)] &= ~(1u << u);
                }
            }
    }
};

bool sdr_masks(const uint32_t* cand, int k, uint32_t used) {
    if (k == 0) return true;
    uint32_t avail = cand[0] & ~used;
    int tried = 0;
    while (avail && tried < 5) {  // 5 candidates per set decide existence for <= 4 sets
        uint32_t bit = avail & (0u - avail);
        avail ^= bit;
        ++tried;
        if (sdr_masks(cand + 1, k - 1, used | bit)) return true;
    }
    return false;
}

// class presence on one labeled base cycle, via the partition orbit
bool class_on_cycle(const std::array<uint32_t, 4>& s, PatternClass cls) {
    for (const SlotPartition& part : class_orbit(cls)) {
        uint32_t cand[4];
        int k = 0;
        bool dry = false;
        for (const auto& block : part) {
            uint32_t c = 0xffffffffu;
            for (int slot : block) c &= s[static_cast<size_t>(slot - 1)];
            if (!c) { dry = true; break; }
            cand[k++] = c;
        }
        if (dry) continue;
        if (sdr_masks(cand, k, 0)) return true;
    }
    return false;
}

// does the state (already containing t) hold a forbidden configuration on a
// base cycle through one of t's pairs?
bool creates_violation(const MaskState& st, const Triple& t, FamilySubset fam) {
    auto members = fam.members();
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Vertex x = t[static_cast<size_t>(i)], y = t[static_cast<size_t>(j)];
            uint32_t v3cand = st.adj[static_cast<size_t>(y)] & ~(1u << x);
            uint32_t m3 = v3cand;
            while (m3) {
                uint32_t b3 = m3 & (0u - m3);
                m3 ^= b3;
                Vertex v3 = static_cast<Vertex>(__builtin_ctz(b3));
                uint32_t v4cand = st.adj[static_cast<size_t>(x)] &
                                  st.adj[static_cast<size_t>(v3)] & ~(1u << y) & ~b3;
                uint32_t m4 = v4cand;
                while (m4) {
                    uint32_t b4 = m4 & (0u - m4);
                    m4 ^= b4;
                    Vertex v4 = static_cast<Vertex>(__builtin_ctz(b4));
                    uint32_t basemask = (1u << x) | (1u << y) | b3 | b4;
                    std::array<uint32_t, 4> s{};
                    s[0] = st.shell[static_cast<size_t>(x)][static_cast<size_t>(y)] & ~basemask;
                    if (!s[0]) continue;
                    s[1] = st.shell[static_cast<size_t>(y)][static_cast<size_t>(v3)] & ~basemask;
                    if (!s[1]) continue;
                    s[2] = st.shell[static_cast<size_t>(v3)][static_cast<size_t>(v4)] & ~basemask;
                    if (!s[2]) continue;
                    s[3] = st.shell[static_cast<size_t>(v4)][static_cast<size_t>(x)] & ~basemask;
                    if (!s[3]) continue;
                    for (PatternClass cls : members)
                        if (class_on_cycle(s, cls)) return true;
                }
            }
        }
    return false;
}

// ---- exact branch and bound -------------------------------------------------

struct ExactSearch {
    int n;
    FamilySubset fam;
    SolveOptions opts;
    std::vector<Triple> univ;
    MaskState st;
    std::vector<int> chosen;
    int best = 0;
    std::vector<int> best_set;
    uint64_t nodes = 0;
    bool overflow = false;

    ExactSearch(int n_, FamilySubset fam_, const SolveOptions& opts_)
        : n(n_), fam(fam_), opts(opts_), univ(triple_universe(n_, opts_.isomorph_reject)) {}

    bool addable(int idx) {
        const Triple& t = univ[static_cast<size_t>(idx)];
        st.add(t);
        bool bad = creates_violation(st, t, fam);
        st.remove(t);
        return !bad;
    }

    void record() {
        if (static_cast<int>(chosen.size()) > best) {
            best = static_cast<int>(chosen.size());
            best_set = chosen;
        }
    }

    // current chosen list (ascending in the search order, which is colex
    // here) must equal the canonical colex-least list of its own system
    bool chosen_is_canonical() {
        std::vector<Triple> cur;
        cur.reserve(chosen.size());
        for (int idx : chosen) cur.push_back(univ[static_cast<size_t>(idx)]);
        TripleSystem sys(n, cur);
        return canonical_triples(sys) == cur;
    }

    void dfs(const std::vector<uint16_t>& feasible) {
        if (overflow) return;
        if (++nodes > opts.node_budget) {
            overflow = true;
            return;
        }
        record();
        std::vector<uint16_t> child;
        for (size_t pos = 0; pos < feasible.size(); ++pos) {
            if (static_cast<int>(chosen.size() + feasible.size() - pos) <= best) break;
            int idx = feasible[pos];
            const Triple& t = univ[static_cast<size_t>(idx)];
            st.add(t);
            chosen.push_back(idx);
            bool explore = !opts.isomorph_reject || chosen_is_canonical();
            if (explore) {
                child.clear();
                for (size_t q = pos + 1; q < feasible.size(); ++q)
                    if (addable(feasible[q])) child.push_back(feasible[q]);
                dfs(child);
            }
            chosen.pop_back();
            st.remove(t);
            if (overflow) return;
        }
    }
};

int index_of_triple(const std::vector<Triple>& univ, const Triple& t) {
    for (size_t i = 0; i < univ.size(); ++i)
        if (univ[i] == t) return static_cast<int>(i);
    return -1;
}

} // namespace

SolveResult turan_bruteforce(int n, FamilySubset a) {
    if (n < 0 || n > 6)
        throw std::invalid_argument("turan_bruteforce handles n <= 6 (C(n,3) <= 20)");
    if (a.empty()) throw std::invalid_argument("the forbidden family must be nonempty");
    const BruteTable& table = brute_table(n);
    SolveResult res;
    res.n = n;
    res.family = a;
    res.mode = SolveMode::brute_force;
    res.nodes = table.nodes;
    res.value = 0;
    uint32_t bits = 0;
    for (int cm = 0; cm < 128; ++cm) {
        if (cm & a.mask()) continue;
        if (table.best[static_cast<size_t>(cm)] > res.value) {
            res.value = table.best[static_cast<size_t>(cm)];
            bits = table.wit[static_cast<size_t>(cm)];
        }
    }
    std::vector<Triple> wit;
    for (int i = 0; i < table.m; ++i)
        if ((bits >> i) & 1) wit.push_back(table.univ[static_cast<size_t>(i)]);
    res.witness = TripleSystem(n, std::move(wit));
    return res;
}

SolveResult turan_exact(int n, FamilySubset a, const SolveOptions& opts) {
    if (a.empty()) throw std::invalid_argument("the forbidden family must be nonempty");
    if (n < 0 || n > kMaxExactN) throw std::invalid_argument("turan_exact handles n <= 32");

    SolveResult res;
    res.n = n;
    res.family = a;
    res.mode = SolveMode::branch_bound;

    // below the smallest configuration nothing can embed
    int min_cfg = 9;
    for (PatternClass c : a.members()) min_cfg = std::min(min_cfg, min_config_vertices(c));
    if (n < min_cfg) {
        res.value = n * (n - 1) * (n - 2) / 6;
        res.witness = TripleSystem(n, triple_universe(n, false));
        return res;
    }

    ExactSearch search(n, a, opts);
    const auto& univ = search.univ;
    const int m = static_cast<int>(univ.size());

    // the maximum is attained by a system containing {0,1,2} (relabeling),
    // with second triple canonical under the stabilizer of the first
    search.record();
    search.st.add(univ[0]);
    search.chosen.push_back(0);
    ++search.nodes;
    search.record();

    std::vector<uint16_t> level1;
    for (int f = 1; f < m; ++f)
        if (search.addable(f)) level1.push_back(static_cast<uint16_t>(f));

    std::vector<int> reps;
    for (const Triple& t : {Triple{0, 1, 3}, Triple{0, 3, 4}, Triple{3, 4, 5}}) {
        if (t[2] < n) {
            int idx = index_of_triple(univ, t);
            if (idx > 0) reps.push_back(idx);
        }
    }
    std::sort(reps.begin(), reps.end());

    struct Task {
        int rep;
        std::vector<uint16_t> feasible;
    };
    std::vector<Task> tasks;
    for (int rep : reps) {
        if (!std::binary_search(level1.begin(), level1.end(), static_cast<uint16_t>(rep)))
            continue;
        search.st.add(univ[static_cast<size_t>(rep)]);
        search.chosen.push_back(rep);
        ++search.nodes;
        search.record();
        Task task;
        task.rep = rep;
        for (uint16_t f : level1)
            if (f > rep && search.addable(f)) task.feasible.push_back(f);
        tasks.push_back(std::move(task));
        search.chosen.pop_back();
        search.st.remove(univ[static_cast<size_t>(rep)]);
    }

    auto run_task = [&](const Task& task, ExactSearch& es) {
        es.st.add(univ[0]);
        es.chosen.push_back(0);
        es.st.add(univ[static_cast<size_t>(task.rep)]);
        es.chosen.push_back(task.rep);
        es.dfs(task.feasible);
    };

    if (opts.threads > 1 && tasks.size() > 1) {
        // Independent branch solves keep the result deterministic: no shared
        // bound, values merged afterwards. Each branch gets the full budget.
        std::vector<std::future<ExactSearch>> futs;
        for (const Task& task : tasks) {
            futs.push_back(std::async(std::launch::async, [&, task]() {
                ExactSearch es(n, a, opts);
                es.best = search.best;
                run_task(task, es);
                return es;
            }));
        }
        for (auto& f : futs) {
            ExactSearch es = f.get();
            search.nodes += es.nodes;
            search.overflow = search.overflow || es.overflow;
            if (es.best > search.best) {
                search.best = es.best;
                search.best_set = es.best_set;
            }
        }
    } else {
        for (const Task& task : tasks) {
            search.st.add(univ[static_cast<size_t>(task.rep)]);
            search.chosen.push_back(task.rep);
            search.dfs(task.feasible);
            search.chosen.pop_back();
            search.st.remove(univ[static_cast<size_t>(task.rep)]);
            if (search.overflow) break;
        }
    }

    res.value = search.best;
    res.nodes = search.nodes;
    res.complete = !search.overflow;
    std::vector<Triple> wit;
    for (int idx : search.best_set) wit.push_back(univ[static_cast<size_t>(idx)]);
    res.witness = TripleSystem(n, std::move(wit));
    return res;
}

std::vector<TripleSystem> fold_outs(const TripleSystem& g) {
    if (g.triple_count() == 0) throw std::invalid_argument("fold_outs needs at least one triple");
    const int n = g.vertex_count();
    std::set<std::string> seen;
    std::vector<std::pair<std::string, TripleSystem>> keyed;
    for (int ei = 0; ei < g.triple_count(); ++ei) {
        const Triple& e = g.triple(ei);
        for (int drop = 0; drop < 3; ++drop) {
            // keep the pair of e that excludes position `drop`
            Vertex v = e[static_cast<size_t>((drop + 1) % 3)];
            Vertex w = e[static_cast<size_t>((drop + 2) % 3)];
            std::vector<Triple> triples;
            triples.reserve(static_cast<size_t>(g.triple_count()));
            for (int i = 0; i < g.triple_count(); ++i)
                if (i != ei) triples.push_back(g.triple(i));
            triples.push_back(sorted_triple(v, w, n));
            TripleSystem sys(n + 1, std::move(triples));
            std::string key = canonical_key(sys);
            if (seen.insert(key).second) keyed.emplace_back(std::move(key), canonical_form(sys));
        }
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<TripleSystem> out;
    out.reserve(keyed.size());
    for (auto& [key, sys] : keyed) out.push_back(std::move(sys));
    return out;
}

bool is_fold_out(const TripleSystem& g1, const TripleSystem& g) {
    if (g.triple_count() == 0) return false;
    if (g1.vertex_count() != g.vertex_count() + 1) return false;
    std::string key = canonical_key(g1);
    for (const TripleSystem& f : fold_outs(g))
        if (canonical_key(f) == key) return true;
    return false;
}

long long foldout_bound(long long ex_g_at_n, int v_g, long long n) {
    if (ex_g_at_n < 0 || v_g < 0 || n < 0)
        throw std::invalid_argument("foldout_bound needs nonnegative inputs");
    long long pairs = n * (n - 1) / 2;
    long long slack = v_g >= 2 ? static_cast<long long>(v_g - 2) * pairs : 0;
    return ex_g_at_n + slack;
}

} // namespace fourcycle
