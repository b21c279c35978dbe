#ifndef FOURCYCLE_SOLVE_HPP
#define FOURCYCLE_SOLVE_HPP

#include <cstdint>
#include <vector>

#include "fourcycle/patterns.hpp"
#include "fourcycle/triple_system.hpp"

namespace fourcycle {

enum class SolveMode { branch_bound, brute_force };

struct SolveResult {
    int n = 0;
    FamilySubset family;
    int value = 0;            // exact when complete, best lower bound otherwise
    TripleSystem witness;     // A-free system attaining value
    uint64_t nodes = 0;
    SolveMode mode = SolveMode::branch_bound;
    bool complete = true;
};

struct SolveOptions {
    uint64_t node_budget = 200'000'000;
    int threads = 1;
    // Orderly generation: keep only colex-canonical partial systems. Pays
    // off only on dense families around n >= 10; extension switches from
    // lexicographic to colex triple order so prefixes stay canonical.
    bool isomorph_reject = false;
};

// Exhaustive oracle over every subset of triples; n <= 6 (C(n,3) <= 20).
// One full enumeration per n is cached and shared across families.
SolveResult turan_bruteforce(int n, FamilySubset a);

// Depth-first extension above the last added triple with incremental
// feasibility checks and an admissible remaining-candidates bound.
SolveResult turan_exact(int n, FamilySubset a, const SolveOptions& opts = {});

// All systems obtained by replacing one triple e by {v, w, x} with v, w a
// pair inside e and x a fresh vertex; deduplicated up to isomorphism and
// returned in canonical form order.
std::vector<TripleSystem> fold_outs(const TripleSystem& g);

// True iff g1 is isomorphic to some fold-out of g.
bool is_fold_out(const TripleSystem& g1, const TripleSystem& g);

// Turán transfer bound for a fold-out: ex_g_at_n + (v_g - 2) * C(n, 2).
long long foldout_bound(long long ex_g_at_n, int v_g, long long n);

} // namespace fourcycle

#endif
