#include <doctest.h>

#include "fourcycle/construct.hpp"
#include "fourcycle/detect.hpp"
#include "fourcycle/rng.hpp"
#include "naive_oracle.hpp"

using namespace fourcycle;

namespace {

TripleSystem complete_system(int n) {
    std::vector<Triple> ts;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c) ts.push_back({a, b, c});
    return TripleSystem(n, std::move(ts));
}

TripleSystem random_system(Rng& rng, int max_n, int max_m) {
    int n = 4 + static_cast<int>(rng.below(static_cast<uint64_t>(max_n - 3)));
    int m = static_cast<int>(rng.below(static_cast<uint64_t>(max_m + 1)));
    std::vector<Triple> ts;
    for (int tries = 0; static_cast<int>(ts.size()) < m && tries < 20 * m; ++tries) {
        Vertex a = static_cast<Vertex>(rng.below(static_cast<uint64_t>(n)));
        Vertex b = static_cast<Vertex>(rng.below(static_cast<uint64_t>(n)));
        Vertex c = static_cast<Vertex>(rng.below(static_cast<uint64_t>(n)));
        if (a == b || a == c || b == c) continue;
        ts.push_back(sorted_triple(a, b, c));
    }
    return TripleSystem(n, std::move(ts));
}

} // namespace

TEST_SUITE("detect") {

TEST_CASE("star contains the one-apex class") {
    TripleSystem s5 = star(5);
    auto embs = find_embeddings(s5, PatternClass::F2);
    REQUIRE(!embs.empty());
    bool found = false;
    for (const Embedding& e : embs) {
        CHECK(e.valid_in(s5));
        if (e.base == std::array<Vertex, 4>{1, 2, 3, 4} &&
            e.apex == std::array<Vertex, 4>{0, 0, 0, 0})
            found = true;
    }
    CHECK(found);
}

TEST_CASE("F1 needs eight vertices") {
    CHECK(find_embeddings(complete_system(7), PatternClass::F1).empty());
    CHECK(!find_embeddings(complete_system(8), PatternClass::F1).empty());
}

TEST_CASE("complete system on 5 vertices has the one-apex class") {
    CHECK(!find_embeddings(complete_system(5), PatternClass::F2, 1).empty());
}

TEST_CASE("limit returns a subset of the full enumeration") {
    TripleSystem k6 = complete_system(6);
    auto all = find_embeddings(k6, PatternClass::F3);
    auto some = find_embeddings(k6, PatternClass::F3, 3);
    CHECK(some.size() == 3);
    for (const Embedding& e : some)
        CHECK(std::find(all.begin(), all.end(), e) != all.end());
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(find_embeddings(k6, PatternClass::F3, 0).empty());
}

TEST_CASE("every reported embedding validates") {
    Rng rng(99);
    for (int round = 0; round < 50; ++round) {
        TripleSystem h = random_system(rng, 7, 8);
        for (PatternClass c : all_patterns())
            for (const Embedding& e : find_embeddings(h, c)) CHECK(e.valid_in(h));
    }
}

TEST_CASE("profile of the constructions") {
    CHECK(profile(star(8)).present == FamilySubset::of({PatternClass::F2}));
    CHECK(profile(tripartite_matching(9)).present == FamilySubset::of({PatternClass::F3}));
    CHECK(profile(tripartite_matching(12)).present == FamilySubset::of({PatternClass::F3}));

    // projective plane on 7 points: the opposite-pair (Pasch) class only
    TripleSystem fano = projective_sts(3);
    CHECK(profile(fano).present == FamilySubset::of({PatternClass::F4}));
}

TEST_CASE("profile witnesses validate") {
    TripleSystem k6 = complete_system(6);
    Profile p6 = profile(k6);
    for (PatternClass c : p6.present.members()) CHECK(p6.witness_for(c)->valid_in(k6));
    // six vertices only fit the configurations on at most six
    CHECK(p6.present == FamilySubset::of({PatternClass::F2, PatternClass::F3, PatternClass::F4,
                                          PatternClass::F5}));

    TripleSystem k7 = complete_system(7);
    CHECK(profile(k7).present == FamilySubset::all().without(PatternClass::F1));
}

TEST_CASE("is_free") {
    TripleSystem s8 = star(8);
    CHECK(is_free(s8, FamilySubset()));
    CHECK(is_free(s8, FamilySubset::of({PatternClass::F1, PatternClass::F3})));
    CHECK(!is_free(s8, FamilySubset::of({PatternClass::F2})));
}

TEST_CASE("freeness of a union splits") {
    Rng rng(4242);
    for (int round = 0; round < 60; ++round) {
        TripleSystem h = random_system(rng, 7, 8);
        FamilySubset a(static_cast<uint8_t>(rng.below(128)));
        FamilySubset b(static_cast<uint8_t>(rng.below(128)));
        CHECK(is_free(h, a.unite(b)) == (is_free(h, a) && is_free(h, b)));
    }
}

TEST_CASE("adding a triple never removes a class") {
    Rng rng(2024);
    for (int round = 0; round < 60; ++round) {
        TripleSystem h = random_system(rng, 7, 7);
        int n = h.vertex_count();
        Vertex a = static_cast<Vertex>(rng.below(static_cast<uint64_t>(n)));
        Vertex b = static_cast<Vertex>(rng.below(static_cast<uint64_t>(n)));
        Vertex c = static_cast<Vertex>(rng.below(static_cast<uint64_t>(n)));
        if (a == b || a == c || b == c) continue;
        auto ts = h.triples();
        ts.push_back(sorted_triple(a, b, c));
        TripleSystem h2(n, ts);
        FamilySubset before = profile(h).present;
        FamilySubset after = profile(h2).present;
        CHECK(before.subset_of(after));
    }
}

TEST_CASE("berge four-cycles") {
    // every special four-cycle configuration is a Berge four-cycle
    for (PatternClass c : all_patterns()) CHECK(has_berge_c4(pattern_configuration(c)));

    // complete system on 4 vertices: the four triples around base 0,1,2,3
    CHECK(has_berge_c4(complete_system(4)));

    auto w = find_berge_c4(complete_system(4));
    REQUIRE(w.has_value());
    for (int i = 0; i < 4; ++i) {
        Vertex u = w->base[static_cast<size_t>(i)];
        Vertex v = w->base[static_cast<size_t>((i + 1) % 4)];
        const Triple& t = w->triples[static_cast<size_t>(i)];
        CHECK(std::binary_search(t.begin(), t.end(), u));
        CHECK(std::binary_search(t.begin(), t.end(), v));
        CHECK(complete_system(4).contains(t));
        for (int j = i + 1; j < 4; ++j) CHECK(t != w->triples[static_cast<size_t>(j)]);
    }

    // a star IS a Berge four-cycle host (its one-apex class is one); a
    // matching of disjoint triples is not
    CHECK(has_berge_c4(star(8)));
    CHECK(!has_berge_c4(make_system(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}})));
    CHECK(!has_berge_c4(girth5_greedy(30, 7)));

    // no special four-cycle can exist when no Berge four-cycle does
    Rng rng(31337);
    for (int round = 0; round < 40; ++round) {
        TripleSystem h = random_system(rng, 7, 7);
        if (!has_berge_c4(h)) CHECK(profile(h).present.empty());
    }
}

TEST_CASE("berge detector agrees with brute force") {
    Rng rng(555);
    for (int round = 0; round < 300; ++round) {
        TripleSystem h = random_system(rng, 7, 8);
        CHECK(has_berge_c4(h) == testing::naive_berge(h));
    }
}

TEST_CASE("sparsity checks") {
    CHECK(!check_sparsity(complete_system(6), 6, 3));
    CHECK(check_sparsity(make_system(7, {{0, 1, 2}, {3, 4, 5}}), 6, 3));
    CHECK(check_sparsity(make_system(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}), 6, 3));
    CHECK(!check_sparsity(complete_system(7), 7, 4));
    CHECK(check_sparsity(ruzsa_szemeredi(5), 6, 3));
    CHECK_THROWS_AS(check_sparsity(complete_system(5), 5, 2), std::invalid_argument);
}

TEST_CASE("detector matches the naive oracle on random systems") {
    Rng rng(20240);
    int rounds = 0;
    while (rounds < 1000) {
        TripleSystem h = random_system(rng, 7, 8);
        ++rounds;
        auto oracle = testing::naive_embeddings(h);
        for (PatternClass c : all_patterns()) {
            auto found = find_embeddings(h, c);
            std::set<testing::EmbeddingKey> got;
            for (const Embedding& e : found) got.emplace(e.base, e.apex);
            REQUIRE(got.size() == found.size());
            const auto& expect = oracle[static_cast<size_t>(pattern_index(c))];
            CHECK(got == expect);
            CHECK(find_embeddings(h, c, 1).empty() == expect.empty());
        }
    }
}

} // TEST_SUITE
