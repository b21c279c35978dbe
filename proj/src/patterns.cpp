#include "fourcycle/patterns.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace fourcycle {

PatternClass pattern_from_index(int i) {
    if (i < 0 || i >= kPatternCount) throw std::invalid_argument("pattern index out of range");
    return static_cast<PatternClass>(i);
}

std::string pattern_name(PatternClass c) { return "F" + std::to_string(pattern_index(c) + 1); }

std::optional<PatternClass> pattern_from_name(std::string_view name) {
    if (name.size() != 2) return std::nullopt;
    if (name[0] != 'F' && name[0] != 'f') return std::nullopt;
    if (name[1] < '1' || name[1] > '7') return std::nullopt;
    return static_cast<PatternClass>(name[1] - '1');
}

std::array<PatternClass, kPatternCount> all_patterns() {
    std::array<PatternClass, kPatternCount> out{};
    for (int i = 0; i < kPatternCount; ++i) out[static_cast<size_t>(i)] = pattern_from_index(i);
    return out;
}

const std::array<ApexPattern, kPatternCount>& pattern_catalog() {
    static const std::array<ApexPattern, kPatternCount> catalog = {{
        {{{1}, {2}, {3}, {4}}, PatternClass::F1},     // all apexes distinct
        {{{1, 2, 3, 4}}, PatternClass::F2},           // all apexes coincide
        {{{1, 2}, {3, 4}}, PatternClass::F3},         // adjacent pairs coincide
        {{{1, 3}, {2, 4}}, PatternClass::F4},         // opposite pairs coincide (Pasch)
        {{{1, 2, 3}, {4}}, PatternClass::F5},         // three consecutive coincide
        {{{1, 3}, {2}, {4}}, PatternClass::F6},       // one opposite pair coincides
        {{{1, 2}, {3}, {4}}, PatternClass::F7},       // one adjacent pair coincides
    }};
    return catalog;
}

const ApexPattern& pattern(PatternClass c) {
    return pattern_catalog()[static_cast<size_t>(pattern_index(c))];
}

const std::array<std::array<int, 4>, 8>& dihedral_slot_maps() {
    // Slot i sits on cycle edge (v_i, v_{i+1}); relabeling the base cycle by
    // a rotation or reflection permutes the slots as below.
    static const std::array<std::array<int, 4>, 8> maps = {{
        {1, 2, 3, 4},
        {2, 3, 4, 1},
        {3, 4, 1, 2},
        {4, 1, 2, 3},
        {4, 3, 2, 1},
        {2, 1, 4, 3},
        {1, 4, 3, 2},
        {3, 2, 1, 4},
    }};
    return maps;
}

SlotPartition normalize_partition(SlotPartition p) {
    int seen = 0;
    for (auto& block : p) {
        if (block.empty()) throw std::invalid_argument("partition has an empty block");
        for (int s : block) {
            if (s < 1 || s > 4) throw std::invalid_argument("slot index out of {1,2,3,4}");
            if (seen & (1 << s)) throw std::invalid_argument("slot repeated across blocks");
            seen |= 1 << s;
        }
        std::sort(block.begin(), block.end());
    }
    if (seen != 0b11110) throw std::invalid_argument("partition does not cover {1,2,3,4}");
    std::sort(p.begin(), p.end());
    return p;
}

SlotPartition apply_slot_map(const SlotPartition& p, const std::array<int, 4>& sigma) {
    SlotPartition out;
    out.reserve(p.size());
    for (const auto& block : p) {
        std::vector<int> image;
        image.reserve(block.size());
        for (int s : block) image.push_back(sigma[static_cast<size_t>(s - 1)]);
        std::sort(image.begin(), image.end());
        out.push_back(std::move(image));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// orbit label for every normalized partition, built once
const std::map<SlotPartition, PatternClass>& orbit_labels() {
    static const std::map<SlotPartition, PatternClass> labels = [] {
        std::map<SlotPartition, PatternClass> out;
        for (const ApexPattern& pat : pattern_catalog()) {
            for (const auto& sigma : dihedral_slot_maps()) {
                out.emplace(apply_slot_map(pat.partition, sigma), pat.class_id);
            }
        }
        return out;
    }();
    return labels;
}

} // namespace

PatternClass classify_partition(const SlotPartition& p) {
    SlotPartition key = normalize_partition(p);
    return orbit_labels().at(key);
}

const std::vector<SlotPartition>& class_orbit(PatternClass c) {
    static const std::array<std::vector<SlotPartition>, kPatternCount> orbits = [] {
        std::array<std::vector<SlotPartition>, kPatternCount> out;
        for (const auto& [part, cls] : orbit_labels())
            out[static_cast<size_t>(pattern_index(cls))].push_back(part);
        return out;
    }();
    return orbits[static_cast<size_t>(pattern_index(c))];
}

FamilySubset FamilySubset::of(std::initializer_list<PatternClass> cs) {
    uint8_t m = 0;
    for (PatternClass c : cs) m |= static_cast<uint8_t>(1 << pattern_index(c));
    return FamilySubset(m);
}

std::optional<FamilySubset> FamilySubset::parse(std::string_view csv) {
    uint8_t m = 0;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos
                                                                               : comma - pos);
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b != std::string_view::npos) {
            auto c = pattern_from_name(tok.substr(b, e - b + 1));
            if (!c) return std::nullopt;
            m |= static_cast<uint8_t>(1 << pattern_index(*c));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return FamilySubset(m);
}

int FamilySubset::size() const { return __builtin_popcount(mask_); }

FamilySubset FamilySubset::with(PatternClass c) const {
    return FamilySubset(static_cast<uint8_t>(mask_ | (1 << pattern_index(c))));
}

FamilySubset FamilySubset::without(PatternClass c) const {
    return FamilySubset(static_cast<uint8_t>(mask_ & ~(1 << pattern_index(c))));
}

std::vector<PatternClass> FamilySubset::members() const {
    std::vector<PatternClass> out;
    for (int i = 0; i < kPatternCount; ++i)
        if ((mask_ >> i) & 1) out.push_back(pattern_from_index(i));
    return out;
}

std::string FamilySubset::to_string() const {
    if (empty()) return "{}";
    std::string out;
    for (PatternClass c : members()) {
        if (!out.empty()) out += ',';
        out += pattern_name(c);
    }
    return out;
}

TripleSystem pattern_configuration(PatternClass c) {
    const ApexPattern& pat = pattern(c);
    std::array<Vertex, 4> apex_of_slot{};
    Vertex next = 4;
    for (const auto& block : pat.partition) {
        for (int s : block) apex_of_slot[static_cast<size_t>(s - 1)] = next;
        ++next;
    }
    std::vector<Triple> triples;
    for (int i = 0; i < 4; ++i)
        triples.push_back(sorted_triple(apex_of_slot[static_cast<size_t>(i)], i, (i + 1) % 4));
    return TripleSystem(pat.config_vertices(), std::move(triples));
}

int min_config_vertices(PatternClass c) { return pattern(c).config_vertices(); }

} // namespace fourcycle
