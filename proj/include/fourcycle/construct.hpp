#ifndef FOURCYCLE_CONSTRUCT_HPP
#define FOURCYCLE_CONSTRUCT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fourcycle/patterns.hpp"
#include "fourcycle/triple_system.hpp"

namespace fourcycle {

// All C(n-1,2) triples through the hub vertex 0. Requires n >= 3.
TripleSystem star(int n);

// Classes A1, A2, A3 of sizes ceil(n/3), floor(n/3) and the rest; the i-th
// vertices of A1 and A2 are paired and every pair is extended with each
// vertex of A3, giving floor(n/3) * |A3| triples. Requires n >= 3.
TripleSystem tripartite_matching(int n);

// A subset of [1, m] with no 3-term arithmetic progression; the larger of a
// digit-sphere construction and (for m <= 30) the exhaustive optimum.
std::vector<int> behrend_set(int m);

// Tripartite system on 6m vertices: classes X = [m], Y = [2m], Z = [3m];
// each x in X and difference s from behrend_set(m) yields the triple
// (x, x+s, x+2s) with coordinates taken in X, Y, Z. m * |behrend_set(m)|
// triples, no six vertices carry three of them.
TripleSystem ruzsa_szemeredi(int m);

// Points and lines of binary projective space: vertices are the nonzero
// m-bit vectors (as ids value-1), triples are {x, y, x^y}. A Steiner triple
// system on 2^m - 1 vertices. Requires m >= 2.
TripleSystem projective_sts(int m);

inline constexpr uint64_t kDefaultAntiPaschBudget = 50'000'000;

struct AntiPaschResult {
    std::optional<TripleSystem> system;  // empty: not found
    uint64_t nodes = 0;
    bool exhausted = false;  // search space fully explored (definitive answer)
};

// Backtracking search for a Steiner triple system on n vertices with no
// Pasch configuration, covering pairs lexicographically with incremental
// Pasch rejection. Deterministic for fixed (n, budget). Requires
// n = 1 or 3 (mod 6).
AntiPaschResult anti_pasch_sts(int n, uint64_t node_budget = kDefaultAntiPaschBudget);

// Balanced 3-partite system from the projective plane of order q: classes
// are points, lines and a third class W of the same size q^2+q+1; every
// incident point-line pair is extended with each w in W. The point-line
// incidence graph is C4-free, so the result contains no Pasch
// configuration. (q+1)(q^2+q+1)^2 triples. Requires prime q.
TripleSystem rodl_phelps(int q);

// Random greedy packing: seeded random candidate triples are inserted
// unless one shares two vertices with an existing triple or closes a Berge
// four-cycle. The output is linear and Berge-C4-free, hence free of all
// seven special four-cycle classes. Requires n >= 3.
TripleSystem girth5_greedy(int n, uint64_t seed);

struct ConstructionParams {
    std::optional<int> n, m, q;
    uint64_t seed = 0;
    uint64_t budget = kDefaultAntiPaschBudget;
};

struct ConstructionSpec {
    std::string name;
    std::string parameter;        // "n", "m" or "q"
    bool uses_seed = false;
    bool uses_budget = false;
    FamilySubset claimed_profile; // classes the output may contain
    std::string summary;
};

const std::vector<ConstructionSpec>& construction_catalog();
const ConstructionSpec& construction_spec(const std::string& name);

struct BuiltConstruction {
    TripleSystem system;
    ConstructionSpec spec;
    std::string params_text;
    bool found = true;        // anti_pasch_sts may report NotFound
    uint64_t nodes = 0;
    bool exhausted = false;
};

// Unified entry point used by the CLI; throws std::invalid_argument on an
// unknown name, a missing parameter or a violated precondition.
BuiltConstruction run_construction(const std::string& name, const ConstructionParams& params);

} // namespace fourcycle

#endif
