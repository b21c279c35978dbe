#ifndef FOURCYCLE_CANONICAL_HPP
#define FOURCYCLE_CANONICAL_HPP

#include <string>
#include <vector>

#include "fourcycle/triple_system.hpp"

namespace fourcycle {

// Colex order on sorted triples: compare (c,b,a) lexicographically. Triples
// whose vertices all lie below p precede every triple reaching p or higher,
// which is what makes prefix pruning and orderly extension work.
bool colex_less(const Triple& a, const Triple& b);

// The colex-least relabeled triple list over all vertex relabelings of h
// (isolated vertices participate; they only pad the label space). Computed
// by label-by-label backtracking with prefix pruning; intended for
// configuration-sized systems (roughly n <= 14).
std::vector<Triple> canonical_triples(const TripleSystem& h);

// Same system with the canonical relabeling applied.
TripleSystem canonical_form(const TripleSystem& h);

// Equal vertex count and equal canonical triple list.
bool is_isomorphic(const TripleSystem& a, const TripleSystem& b);

// Stable serialization of (n, canonical triples) for hash-set dedup.
std::string canonical_key(const TripleSystem& h);

} // namespace fourcycle

#endif
