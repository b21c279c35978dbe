#include "fourcycle/triple_system.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fourcycle {

Triple sorted_triple(Vertex a, Vertex b, Vertex c) {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

static void validate_triple(int n, const Triple& t) {
    for (Vertex v : t) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex id " + std::to_string(v) +
                                        " out of range [0, " + std::to_string(n) + ")");
    }
    if (t[0] == t[1] || t[1] == t[2])
        throw std::invalid_argument("triple has a repeated vertex");
}

TripleSystem::TripleSystem(int n, std::vector<Triple> triples) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& t : triples) {
        std::sort(t.begin(), t.end());
        validate_triple(n, t);
    }
    std::sort(triples.begin(), triples.end());
    triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
    triples_ = std::move(triples);
}

bool TripleSystem::contains(const Triple& t) const {
    return std::binary_search(triples_.begin(), triples_.end(), t);
}

TripleSystem make_system(int n, const std::vector<Triple>& triples) {
    return TripleSystem(n, triples);
}

Shell shell(const TripleSystem& h, Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("shell requires two distinct vertices");
    const int n = h.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("shell vertex out of range");
    Shell s;
    s.u = std::min(u, v);
    s.v = std::max(u, v);
    for (const Triple& t : h.triples()) {
        if (std::binary_search(t.begin(), t.end(), s.u) &&
            std::binary_search(t.begin(), t.end(), s.v)) {
            for (Vertex z : t)
                if (z != s.u && z != s.v) s.vertices.push_back(z);
        }
    }
    std::sort(s.vertices.begin(), s.vertices.end());
    return s;
}

ParseError::ParseError(int line_, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}

TripleSystem read_system(std::istream& in, bool merge_duplicates) {
    std::string raw;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<Triple> triples;
    std::vector<int> triple_lines;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> m)) {
                std::string tok;
                std::istringstream probe(line);
                if (probe >> tok) throw ParseError(lineno, "expected header \"n m\"");
                n = -1;  // blank or comment-only line before the header
                continue;
            }
            std::string extra;
            if (ss >> extra) throw ParseError(lineno, "trailing token after header: " + extra);
            if (n < 0 || m < 0) throw ParseError(lineno, "negative count in header");
            continue;
        }
        long long a, b, c;
        if (!(ss >> a)) continue;  // blank line
        if (!(ss >> b >> c)) throw ParseError(lineno, "expected three vertex ids");
        std::string extra;
        if (ss >> extra) throw ParseError(lineno, "trailing token after triple: " + extra);
        for (long long x : {a, b, c})
            if (x < 0 || x >= n)
                throw ParseError(lineno, "vertex id " + std::to_string(x) + " out of range [0, " +
                                             std::to_string(n) + ")");
        Triple t = sorted_triple(static_cast<Vertex>(a), static_cast<Vertex>(b),
                                 static_cast<Vertex>(c));
        if (t[0] == t[1] || t[1] == t[2]) throw ParseError(lineno, "repeated vertex in triple");
        triples.push_back(t);
        triple_lines.push_back(lineno);
    }
    if (n < 0) throw ParseError(lineno, "missing header \"n m\"");
    if (static_cast<long long>(triples.size()) != m)
        throw ParseError(lineno, "header announced " + std::to_string(m) + " triples, found " +
                                     std::to_string(triples.size()));
    if (!merge_duplicates) {
        auto order = triples;
        std::vector<size_t> idx(order.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(),
                  [&](size_t x, size_t y) { return triples[x] < triples[y]; });
        for (size_t i = 1; i < idx.size(); ++i)
            if (triples[idx[i]] == triples[idx[i - 1]])
                throw ParseError(triple_lines[idx[i]], "duplicate triple");
    }
    return TripleSystem(static_cast<int>(n), std::move(triples));
}

TripleSystem read_system_file(const std::string& path, bool merge_duplicates) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_system(in, merge_duplicates);
}

void write_system(const TripleSystem& h, std::ostream& out) {
    out << h.vertex_count() << ' ' << h.triple_count() << '\n';
    for (const Triple& t : h.triples()) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
}

void write_system_file(const TripleSystem& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_system(h, out);
}

std::string to_tsys(const TripleSystem& h) {
    std::ostringstream ss;
    write_system(h, ss);
    return ss.str();
}

} // namespace fourcycle
