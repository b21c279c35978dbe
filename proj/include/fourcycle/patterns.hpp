#ifndef FOURCYCLE_PATTERNS_HPP
#define FOURCYCLE_PATTERNS_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fourcycle/triple_system.hpp"

namespace fourcycle {

// A special four-cycle has base vertices v1..v4 and four triples
// {w_i, v_i, v_{i+1}} (indices mod 4) with every apex w_i outside the base.
// The coincidence pattern among (w_1..w_4) falls into one of seven classes.
enum class PatternClass : uint8_t { F1 = 0, F2, F3, F4, F5, F6, F7 };

constexpr int kPatternCount = 7;

constexpr int pattern_index(PatternClass c) { return static_cast<int>(c); }
PatternClass pattern_from_index(int i);
std::string pattern_name(PatternClass c);
std::optional<PatternClass> pattern_from_name(std::string_view name);
std::array<PatternClass, kPatternCount> all_patterns();

// Set partition of the apex slots {1,2,3,4}; slot i carries the apex of
// cycle edge (v_i, v_{i+1 mod 4}). Blocks are sorted internally and by
// their smallest element.
using SlotPartition = std::vector<std::vector<int>>;

struct ApexPattern {
    SlotPartition partition;
    PatternClass class_id;

    int block_count() const { return static_cast<int>(partition.size()); }
    // every configuration uses 4 base vertices plus one apex per block
    int config_vertices() const { return 4 + block_count(); }
};

// The 7 canonical patterns in index order F1..F7.
const std::array<ApexPattern, kPatternCount>& pattern_catalog();
const ApexPattern& pattern(PatternClass c);

// The 8 symmetries of the base cycle as permutations of the slot indices;
// maps[k][i-1] is the image of slot i.
const std::array<std::array<int, 4>, 8>& dihedral_slot_maps();

// Sorts blocks and elements; throws std::invalid_argument unless p is a
// set partition of exactly {1,2,3,4}.
SlotPartition normalize_partition(SlotPartition p);
SlotPartition apply_slot_map(const SlotPartition& p, const std::array<int, 4>& sigma);

// Orbit label of p under the dihedral action on slots.
PatternClass classify_partition(const SlotPartition& p);

// All partitions whose orbit label is c (the canonical one included).
const std::vector<SlotPartition>& class_orbit(PatternClass c);

// Subset of {F1..F7} as a 7-bit mask (bit i <=> F_{i+1}).
class FamilySubset {
public:
    FamilySubset() = default;
    explicit constexpr FamilySubset(uint8_t mask) : mask_(mask & 0x7f) {}
    static constexpr FamilySubset all() { return FamilySubset(0x7f); }
    static FamilySubset of(std::initializer_list<PatternClass> cs);
    static std::optional<FamilySubset> parse(std::string_view csv);

    constexpr uint8_t mask() const { return mask_; }
    constexpr bool empty() const { return mask_ == 0; }
    int size() const;
    bool contains(PatternClass c) const { return (mask_ >> pattern_index(c)) & 1; }
    bool subset_of(FamilySubset other) const { return (mask_ & ~other.mask_) == 0; }
    bool intersects(FamilySubset other) const { return (mask_ & other.mask_) != 0; }

    FamilySubset with(PatternClass c) const;
    FamilySubset without(PatternClass c) const;
    FamilySubset unite(FamilySubset other) const { return FamilySubset(mask_ | other.mask_); }
    FamilySubset intersect(FamilySubset other) const { return FamilySubset(mask_ & other.mask_); }

    std::vector<PatternClass> members() const;
    std::string to_string() const;  // "F1,F3"; "{}" for the empty subset

    bool operator==(const FamilySubset&) const = default;

private:
    uint8_t mask_ = 0;
};

// The configuration realizing a pattern on its minimum vertex set: base
// vertices 0..3 as (v1..v4) and one apex per block numbered from 4 in
// block order.
TripleSystem pattern_configuration(PatternClass c);
int min_config_vertices(PatternClass c);

} // namespace fourcycle

#endif
