#ifndef FOURCYCLE_DETECT_HPP
#define FOURCYCLE_DETECT_HPP

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "fourcycle/patterns.hpp"
#include "fourcycle/triple_system.hpp"

namespace fourcycle {

// A witnessed occurrence of a pattern: base 4-cycle (v1..v4) plus the apex
// of every slot. Reported embeddings are normalized: the apex coincidence
// pattern equals the canonical partition of cls and the base tuple is the
// lexicographically least one among the dihedral relabelings achieving that.
struct Embedding {
    std::array<Vertex, 4> base{};
    std::array<Vertex, 4> apex{};
    PatternClass cls = PatternClass::F1;

    std::array<Triple, 4> triples() const;
    std::vector<std::pair<std::vector<int>, Vertex>> apex_by_block() const;

    // recheck every invariant against the host system
    bool valid_in(const TripleSystem& h) const;

    friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

// Embeddings of a class, one representative per dihedral orbit of the base
// cycle, sorted by (base, apex). With a limit the enumeration stops after
// that many embeddings; the returned list is still sorted.
std::vector<Embedding> find_embeddings(const TripleSystem& h, PatternClass cls,
                                       std::optional<int> limit = std::nullopt);
std::vector<Embedding> find_embeddings(const TripleSystem& h, const ApexPattern& pat,
                                       std::optional<int> limit = std::nullopt);

struct Profile {
    FamilySubset present;
    std::array<std::optional<Embedding>, kPatternCount> witness;

    const std::optional<Embedding>& witness_for(PatternClass c) const {
        return witness[static_cast<size_t>(pattern_index(c))];
    }
};

// Which classes embed in h, with one witness each.
Profile profile(const TripleSystem& h);

// True iff no member of a embeds in h.
bool is_free(const TripleSystem& h, FamilySubset a);

struct BergeWitness {
    std::array<Vertex, 4> base{};
    std::array<Triple, 4> triples{};
};

// Berge four-cycle: distinct base vertices v1..v4 and four pairwise distinct
// triples t_i with {v_i, v_{i+1}} inside t_i; apexes may lie in the base.
std::optional<BergeWitness> find_berge_c4(const TripleSystem& h);
bool has_berge_c4(const TripleSystem& h);

// (6,3): no six vertices carry three triples; (7,4): no seven vertices carry
// four. Throws std::invalid_argument for any other shape.
bool check_sparsity(const TripleSystem& h, int v, int e);

} // namespace fourcycle

#endif
