#include <doctest.h>

#include <map>
#include <set>

#include "fourcycle/patterns.hpp"

using namespace fourcycle;

namespace {

// independent orbit enumeration: all 15 set partitions of {1,2,3,4} under
// the 8 dihedral maps, grouped by orbit
std::vector<std::set<SlotPartition>> enumerate_orbits() {
    std::vector<SlotPartition> all;
    // partitions of a 4-set via restricted growth strings
    for (int b1 = 0; b1 < 1; ++b1)
        for (int b2 = 0; b2 <= 1; ++b2)
            for (int b3 = 0; b3 <= std::max(b1, b2) + 1 && b3 <= 2; ++b3)
                for (int b4 = 0; b4 <= std::max({b1, b2, b3}) + 1 && b4 <= 3; ++b4) {
                    std::map<int, std::vector<int>> blocks;
                    int code[4] = {b1, b2, b3, b4};
                    for (int i = 0; i < 4; ++i) blocks[code[i]].push_back(i + 1);
                    SlotPartition p;
                    for (auto& [k, v] : blocks) p.push_back(v);
                    all.push_back(normalize_partition(p));
                }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    std::vector<std::set<SlotPartition>> orbits;
    std::set<SlotPartition> placed;
    for (const SlotPartition& p : all) {
        if (placed.count(p)) continue;
        std::set<SlotPartition> orbit;
        for (const auto& sigma : dihedral_slot_maps()) orbit.insert(apply_slot_map(p, sigma));
        for (const SlotPartition& q : orbit) placed.insert(q);
        orbits.push_back(orbit);
    }
    return orbits;
}

} // namespace

TEST_SUITE("patterns") {

TEST_CASE("catalog lists the seven canonical classes") {
    const auto& catalog = pattern_catalog();
    REQUIRE(catalog.size() == 7);
    CHECK(catalog[0].partition == SlotPartition{{1}, {2}, {3}, {4}});
    CHECK(catalog[1].partition == SlotPartition{{1, 2, 3, 4}});
    CHECK(catalog[2].partition == SlotPartition{{1, 2}, {3, 4}});
    CHECK(catalog[3].partition == SlotPartition{{1, 3}, {2, 4}});
    CHECK(catalog[4].partition == SlotPartition{{1, 2, 3}, {4}});
    CHECK(catalog[5].partition == SlotPartition{{1, 3}, {2}, {4}});
    CHECK(catalog[6].partition == SlotPartition{{1, 2}, {3}, {4}});

    // configuration vertex counts (8,5,6,6,6,7,7)
    const int expect[7] = {8, 5, 6, 6, 6, 7, 7};
    for (int i = 0; i < 7; ++i) {
        CHECK(catalog[static_cast<size_t>(i)].config_vertices() == expect[i]);
        CHECK(min_config_vertices(pattern_from_index(i)) == expect[i]);
    }
}

TEST_CASE("the 15 slot partitions fall into 7 dihedral orbits") {
    auto orbits = enumerate_orbits();
    CHECK(orbits.size() == 7);

    size_t total = 0;
    std::map<PatternClass, size_t> orbit_size;
    for (const auto& orbit : orbits) {
        total += orbit.size();
        PatternClass cls = classify_partition(*orbit.begin());
        orbit_size[cls] = orbit.size();
        // every member classifies identically and agrees with class_orbit
        for (const SlotPartition& p : orbit) CHECK(classify_partition(p) == cls);
        std::set<SlotPartition> expected(class_orbit(cls).begin(), class_orbit(cls).end());
        CHECK(expected == orbit);
    }
    CHECK(total == 15);

    CHECK(orbit_size[PatternClass::F1] == 1);
    CHECK(orbit_size[PatternClass::F2] == 1);
    CHECK(orbit_size[PatternClass::F3] == 2);
    CHECK(orbit_size[PatternClass::F4] == 1);
    CHECK(orbit_size[PatternClass::F5] == 4);
    CHECK(orbit_size[PatternClass::F6] == 2);
    CHECK(orbit_size[PatternClass::F7] == 4);
}

TEST_CASE("classify_partition examples") {
    CHECK(classify_partition({{1, 2}, {3, 4}}) == PatternClass::F3);
    CHECK(classify_partition({{2, 3}, {1, 4}}) == PatternClass::F3);
    CHECK(classify_partition({{2, 4}, {1}, {3}}) == PatternClass::F6);
    CHECK(classify_partition({{4}, {1, 2, 3}}) == PatternClass::F5);
    CHECK_THROWS_AS(classify_partition({{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(classify_partition({{1, 2}, {2, 3, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(classify_partition({{0, 1}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("classify_partition is constant on dihedral orbits") {
    for (const ApexPattern& pat : pattern_catalog())
        for (const auto& sigma : dihedral_slot_maps())
            CHECK(classify_partition(apply_slot_map(pat.partition, sigma)) == pat.class_id);
}

TEST_CASE("family subsets") {
    FamilySubset fam = FamilySubset::of({PatternClass::F1, PatternClass::F3});
    CHECK(fam.size() == 2);
    CHECK(fam.contains(PatternClass::F1));
    CHECK(!fam.contains(PatternClass::F2));
    CHECK(fam.to_string() == "F1,F3");
    CHECK(FamilySubset().to_string() == "{}");

    CHECK(FamilySubset::parse("f2, F4") == FamilySubset::of({PatternClass::F2, PatternClass::F4}));
    CHECK(FamilySubset::parse("") == FamilySubset());
    CHECK(!FamilySubset::parse("F8"));
    CHECK(!FamilySubset::parse("F1,junk"));

    CHECK(FamilySubset::all().size() == 7);
    CHECK(fam.subset_of(FamilySubset::all()));
    CHECK(fam.with(PatternClass::F2).size() == 3);
    CHECK(fam.without(PatternClass::F1) == FamilySubset::of({PatternClass::F3}));
}

TEST_CASE("pattern configurations") {
    TripleSystem f2 = pattern_configuration(PatternClass::F2);
    CHECK(f2.vertex_count() == 5);
    CHECK(f2.triple_count() == 4);
    CHECK(f2.contains(sorted_triple(4, 0, 1)));
    CHECK(f2.contains(sorted_triple(4, 3, 0)));

    for (PatternClass c : all_patterns()) {
        TripleSystem cfg = pattern_configuration(c);
        CHECK(cfg.vertex_count() == min_config_vertices(c));
        CHECK(cfg.triple_count() == 4);
    }
}

} // TEST_SUITE
