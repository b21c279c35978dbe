#include <doctest.h>

#include <set>
#include <sstream>

#include "fourcycle/construct.hpp"
#include "fourcycle/rng.hpp"
#include "fourcycle/tripartition.hpp"
#include "fourcycle/triple_system.hpp"

using namespace fourcycle;

namespace {

TripleSystem complete_system(int n) {
    std::vector<Triple> ts;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) ts.push_back({a, b, c});
    return TripleSystem(n, std::move(ts));
}

TripleSystem random_system(Rng& rng, int n, int m) {
    std::vector<Triple> ts;
    for (int i = 0; i < m; ++i) {
        Vertex a = static_cast<Vertex>(rng.below(static_cast<uint64_t>(n)));
        Vertex b = static_cast<Vertex>(rng.below(static_cast<uint64_t>(n)));
        Vertex c = static_cast<Vertex>(rng.below(static_cast<uint64_t>(n)));
        if (a == b || a == c || b == c) continue;
        ts.push_back(sorted_triple(a, b, c));
    }
    return TripleSystem(n, std::move(ts));
}

} // namespace

TEST_SUITE("core") {

TEST_CASE("make_system validates and dedupes") {
    TripleSystem k4 = make_system(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(k4.triple_count() == 4);

    TripleSystem dup = make_system(5, {{0, 1, 2}, {2, 1, 0}});
    CHECK(dup.triple_count() == 1);

    CHECK_THROWS_AS(make_system(3, {{0, 1, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(make_system(3, {{0, 1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_system(3, {{0, 1, -1}}), std::invalid_argument);
}

TEST_CASE("shell") {
    TripleSystem k4 = complete_system(4);
    Shell s = shell(k4, 0, 1);
    CHECK(s.vertices == std::vector<Vertex>{2, 3});

    TripleSystem empty(5, {});
    CHECK(shell(empty, 1, 3).vertices.empty());

    // star(6): only triples through the hub exist
    CHECK(shell(star(6), 1, 2).vertices == std::vector<Vertex>{0});

    CHECK_THROWS_AS(shell(k4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(shell(k4, 0, 9), std::invalid_argument);
}

TEST_CASE("shell sizes sum to 3|E|") {
    Rng rng(7);
    for (int round = 0; round < 20; ++round) {
        int n = 4 + static_cast<int>(rng.below(6));
        TripleSystem h = random_system(rng, n, 12);
        long long total = 0;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) total += shell(h, u, v).size();
        CHECK(total == 3LL * h.triple_count());
    }
}

TEST_CASE("tsys round trip and canonical bytes") {
    TripleSystem k5 = complete_system(5);
    std::string text = to_tsys(k5);
    std::istringstream in(text);
    TripleSystem back = read_system(in);
    CHECK(back == k5);
    CHECK(to_tsys(back) == text);

    // unsorted input normalizes to the same canonical bytes
    std::istringstream scrambled("3 1\n2 0 1\n");
    std::istringstream plain("3 1\n0 1 2\n");
    CHECK(to_tsys(read_system(scrambled)) == to_tsys(read_system(plain)));
}

TEST_CASE("tsys parsing") {
    std::istringstream ok("3 1\n0 1 2\n");
    TripleSystem h = read_system(ok);
    CHECK(h.vertex_count() == 3);
    CHECK(h.triple_count() == 1);

    std::istringstream comments("# header comment\n4 2 # inline\n0 1 2\n# mid\n1 2 3\n");
    CHECK(read_system(comments).triple_count() == 2);

    auto expect_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            read_system(in);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_error("3 1\n0 1 1\n", 2);       // repeated vertex
    expect_error("3 1\n0 1 5\n", 2);       // out of range
    expect_error("3 1\n0 1\n", 2);         // short line
    expect_error("3 2\n0 1 2\n", 2);       // count mismatch (reported at EOF)
    expect_error("x y\n", 1);              // bad header
    expect_error("4 2\n0 1 2\n2 1 0\n", 3);  // duplicate triple

    std::istringstream mergeable("4 2\n0 1 2\n2 1 0\n");
    CHECK(read_system(mergeable, true).triple_count() == 1);
}

TEST_CASE("tripartition keeps at least 2/9 of the triples") {
    TripleSystem h0(5, {});
    Tripartition t0 = tripartition(h0, 1);
    CHECK(t0.sub.triple_count() == 0);

    TripleSystem k6 = complete_system(6);
    Tripartition t = tripartition(k6, 0);
    CHECK(t.sub.triple_count() >= 5);  // ceil(20 * 2/9) = 5

    Rng rng(123);
    for (int round = 0; round < 100; ++round) {
        int n = 3 + static_cast<int>(rng.below(28));
        TripleSystem h = random_system(rng, n, 2 * n);
        Tripartition part = tripartition(h, rng.next_u64());

        long long need = (2LL * h.triple_count() + 8) / 9;
        CHECK(part.sub.triple_count() >= need);

        // balanced classes
        std::multiset<size_t> sizes{part.classes[0].size(), part.classes[1].size(),
                                    part.classes[2].size()};
        CHECK(*sizes.rbegin() - *sizes.begin() <= 1);
        CHECK(part.classes[0].size() + part.classes[1].size() + part.classes[2].size() ==
              static_cast<size_t>(n));

        // subsystem of h, transversal w.r.t. the classes
        std::vector<int> cls(static_cast<size_t>(n), -1);
        for (int c = 0; c < 3; ++c)
            for (Vertex v : part.classes[static_cast<size_t>(c)]) cls[static_cast<size_t>(v)] = c;
        for (const Triple& tr : part.sub.triples()) {
            CHECK(h.contains(tr));
            std::set<int> seen{cls[static_cast<size_t>(tr[0])], cls[static_cast<size_t>(tr[1])],
                               cls[static_cast<size_t>(tr[2])]};
            CHECK(seen.size() == 3);
        }
    }
}

TEST_CASE("tripartition of a complete system keeps all transversal triples") {
    TripleSystem k6 = complete_system(6);
    Tripartition t = tripartition(k6, 42);
    CHECK(t.sub.triple_count() == 8);  // 2*2*2 transversal triples
}

} // TEST_SUITE
