#ifndef FOURCYCLE_TRIPLE_SYSTEM_HPP
#define FOURCYCLE_TRIPLE_SYSTEM_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace fourcycle {

using Vertex = int32_t;

// A triple is kept sorted ascending at all times.
using Triple = std::array<Vertex, 3>;

Triple sorted_triple(Vertex a, Vertex b, Vertex c);

// 3-uniform set system on vertices 0..n-1. Isolated vertices are allowed
// (n is independent of the support of the edge set). Immutable after
// construction: each triple is sorted and the triple list is sorted
// lexicographically with duplicates merged, so equal systems compare equal
// and serialize bit-identically.
class TripleSystem {
public:
    TripleSystem() = default;

    // Validates ids, sorts and dedupes. Throws std::invalid_argument on
    // out-of-range ids or a repeated vertex inside a triple.
    TripleSystem(int n, std::vector<Triple> triples);

    int vertex_count() const { return n_; }
    int triple_count() const { return static_cast<int>(triples_.size()); }
    const std::vector<Triple>& triples() const { return triples_; }
    const Triple& triple(int i) const { return triples_[static_cast<size_t>(i)]; }

    // t must be sorted; binary search over the sorted triple list.
    bool contains(const Triple& t) const;

    bool operator==(const TripleSystem& other) const = default;

private:
    int n_ = 0;
    std::vector<Triple> triples_;
};

TripleSystem make_system(int n, const std::vector<Triple>& triples);

// All z completing the pair {u,v} to a triple of h.
struct Shell {
    Vertex u = 0, v = 0;            // stored with u < v
    std::vector<Vertex> vertices;   // sorted
    int size() const { return static_cast<int>(vertices.size()); }
};

// Throws std::invalid_argument when u == v or an id is out of range.
Shell shell(const TripleSystem& h, Vertex u, Vertex v);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg);
};

// .tsys text format. First non-comment line is "n m", then m lines "a b c"
// with 0-based vertex ids; '#' starts a comment line. The reader accepts
// triples in any order and unsorted within a line; duplicates (after
// sorting) are an error unless merge_duplicates is set. The writer is
// canonical: each line sorted ascending, lines sorted lexicographically.
TripleSystem read_system(std::istream& in, bool merge_duplicates = false);
TripleSystem read_system_file(const std::string& path, bool merge_duplicates = false);
void write_system(const TripleSystem& h, std::ostream& out);
void write_system_file(const TripleSystem& h, const std::string& path);
std::string to_tsys(const TripleSystem& h);

} // namespace fourcycle

#endif
