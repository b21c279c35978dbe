#ifndef FOURCYCLE_TRIPARTITION_HPP
#define FOURCYCLE_TRIPARTITION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "fourcycle/triple_system.hpp"

namespace fourcycle {

struct Tripartition {
    std::array<std::vector<Vertex>, 3> classes;  // balanced, each sorted
    TripleSystem sub;                            // transversal triples only, same n
    int attempts = 0;                            // balanced partitions tried
};

// Balanced random 3-partition keeping only the transversal triples (one
// vertex in each class). Retries fresh seeded partitions until the kept
// subsystem has at least ceil(2/9 * |E|) triples; a partition that good
// always exists because the expected transversal fraction of a balanced
// random partition exceeds 2/9. Requires n >= 3.
Tripartition tripartition(const TripleSystem& h, uint64_t seed);

} // namespace fourcycle

#endif
