#include "fourcycle/classify.hpp"

#include <stdexcept>

#include "fourcycle/construct.hpp"
#include "fourcycle/detect.hpp"

namespace fourcycle {

std::string status_name(TuranStatus s) {
    switch (s) {
        case TuranStatus::ALL_TRIPLES: return "ALL_TRIPLES";
        case TuranStatus::THETA_N_3_2: return "THETA_N_3_2";
        case TuranStatus::THETA_N_5_2: return "THETA_N_5_2";
        case TuranStatus::THETA_N_2: return "THETA_N_2";
        case TuranStatus::OPEN: return "OPEN";
    }
    return "?";
}

std::string rule_name(ClassifyRule r) {
    switch (r) {
        case ClassifyRule::EMPTY_FAMILY: return "empty-family";
        case ClassifyRule::F2_EXACT: return "f2-exact-order";
        case ClassifyRule::THREE_HALVES: return "f1f2f3-threehalves";
        case ClassifyRule::STAR_LOWER: return "star-lower";
        case ClassifyRule::MATCHING_LOWER: return "matching-lower";
        case ClassifyRule::ANTI_PASCH_LOWER: return "anti-pasch-lower";
        case ClassifyRule::PROJECTIVE_LOWER: return "projective-lower";
        case ClassifyRule::UNSOLVED: return "open";
    }
    return "?";
}

std::string OrderBound::to_string() const {
    std::string out = "n^";
    if (den == 1) {
        out += std::to_string(num);
    } else {
        out += "(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    }
    if (minus_epsilon) out += "-o(1)";
    if (!source.empty()) out += " [" + source + "]";
    return out;
}

namespace {

const FamilySubset F2 = FamilySubset::of({PatternClass::F2});
const FamilySubset F3 = FamilySubset::of({PatternClass::F3});
const FamilySubset F4 = FamilySubset::of({PatternClass::F4});
const FamilySubset F137 =
    FamilySubset::of({PatternClass::F1, PatternClass::F3, PatternClass::F7});
const FamilySubset F17 = FamilySubset::of({PatternClass::F1, PatternClass::F7});
const FamilySubset F123 =
    FamilySubset::of({PatternClass::F1, PatternClass::F2, PatternClass::F3});
const FamilySubset F23 = FamilySubset::of({PatternClass::F2, PatternClass::F3});
const FamilySubset F23457 = FamilySubset::of(
    {PatternClass::F2, PatternClass::F3, PatternClass::F4, PatternClass::F5, PatternClass::F7});
const FamilySubset F236 =
    FamilySubset::of({PatternClass::F2, PatternClass::F3, PatternClass::F6});
const FamilySubset F23567 = FamilySubset::of(
    {PatternClass::F2, PatternClass::F3, PatternClass::F5, PatternClass::F6, PatternClass::F7});
const FamilySubset F245 =
    FamilySubset::of({PatternClass::F2, PatternClass::F4, PatternClass::F5});
const FamilySubset F2346 = FamilySubset::of(
    {PatternClass::F2, PatternClass::F3, PatternClass::F4, PatternClass::F6});
const FamilySubset F234567 =
    FamilySubset::all().without(PatternClass::F1);

int open_group_of(FamilySubset a) {
    if (a.contains(PatternClass::F6)) {
        if (F2346.subset_of(a) && a.subset_of(F234567)) return 5;
        if (a.without(PatternClass::F6).subset_of(F245)) return 1;
        return 0;
    }
    FamilySubset core = a.without(PatternClass::F2);
    if (core == FamilySubset::of({PatternClass::F5})) return 2;
    if (core == FamilySubset::of({PatternClass::F4, PatternClass::F5})) return 3;
    if (core == FamilySubset::of({PatternClass::F4})) return 4;
    return 0;
}

} // namespace

ClassificationStatus classify_subset(FamilySubset a) {
    ClassificationStatus row;
    row.subset = a;

    if (a.empty()) {
        row.status = TuranStatus::ALL_TRIPLES;
        row.rule = ClassifyRule::EMPTY_FAMILY;
        row.lower = {3, 1, false, "complete system"};
        row.upper = {3, 1, false, "all triples"};
        return row;
    }
    if (a == F2) {
        row.status = TuranStatus::THETA_N_5_2;
        row.rule = ClassifyRule::F2_EXACT;
        row.lower = {5, 2, false, "known extremal family (not constructed here)"};
        row.upper = {5, 2, false, "known"};
        return row;
    }
    if (F123.subset_of(a)) {
        row.status = TuranStatus::THETA_N_3_2;
        row.rule = ClassifyRule::THREE_HALVES;
        row.lower = {3, 2, false, "girth5_greedy"};
        row.upper = {3, 2, false, "known"};
        return row;
    }
    if (!a.contains(PatternClass::F2) && a.intersects(F137)) {
        row.status = TuranStatus::THETA_N_2;
        row.rule = ClassifyRule::STAR_LOWER;
        row.lower = {2, 1, false, "star"};
        row.upper = {2, 1, false, "known (fold-out chain to the pair-cover bound)"};
        return row;
    }
    if (!a.contains(PatternClass::F3) && a.intersects(F17)) {
        row.status = TuranStatus::THETA_N_2;
        row.rule = ClassifyRule::MATCHING_LOWER;
        row.lower = {2, 1, false, "tripartite_matching"};
        row.upper = {2, 1, false, "known (fold-out chain to the pair-cover bound)"};
        return row;
    }
    if (F23.subset_of(a) && a.subset_of(F23457)) {
        row.status = TuranStatus::THETA_N_2;
        row.rule = ClassifyRule::ANTI_PASCH_LOWER;
        row.lower = {2, 1, false, "anti_pasch_sts"};
        row.upper = {2, 1, false, "known (pair-cover bound)"};
        return row;
    }
    if (F236.subset_of(a) && a.subset_of(F23567)) {
        row.status = TuranStatus::THETA_N_2;
        row.rule = ClassifyRule::PROJECTIVE_LOWER;
        row.lower = {2, 1, false, "projective_sts"};
        row.upper = {2, 1, false, "known (pair-cover bound)"};
        return row;
    }

    row.status = TuranStatus::OPEN;
    row.rule = ClassifyRule::UNSOLVED;
    row.open_group = open_group_of(a);

    if (a == F4) {
        row.lower = {5, 2, false, "rodl_phelps"};
    } else if (!a.contains(PatternClass::F3)) {
        row.lower = {2, 1, false, "tripartite_matching"};
    } else {
        row.lower = {2, 1, true, "ruzsa_szemeredi"};
    }

    if (a.contains(PatternClass::F3)) {
        row.upper = {2, 1, false, "known (pair-cover bound)"};
    } else if (a.contains(PatternClass::F2)) {
        row.upper = {5, 2, false, "implied by monotonicity from the F2-only family"};
    } else if (a.contains(PatternClass::F4)) {
        row.upper = a == F4 ? OrderBound{11, 4, false, "known"}
                            : OrderBound{11, 4, false,
                                         "implied by monotonicity from the F4-only family"};
    } else {
        row.upper = {3, 1, false, "trivial"};
    }

    if (row.open_group == 1)
        row.notes.push_back(
            "sandwich: within 7*C(n,2) of the F6-only value via fold-out transfer");
    if (a.contains(PatternClass::F4))
        row.notes.push_back("the F4-only value is known to lie between n^(5/2) and n^(11/4)");
    if (row.open_group == 5)
        row.notes.push_back("the (6,3) lower bound can be strengthened to the (7,4) bound");
    return row;
}

ClassificationTable classification_table() {
    ClassificationTable table;
    table.rows.reserve(128);
    for (int mask = 0; mask < 128; ++mask)
        table.rows.push_back(classify_subset(FamilySubset(static_cast<uint8_t>(mask))));
    return table;
}

std::array<int, 5> ClassificationTable::status_histogram() const {
    std::array<int, 5> hist{};
    for (const auto& row : rows) ++hist[static_cast<size_t>(row.status)];
    return hist;
}

std::map<ClassifyRule, int> ClassificationTable::rule_counts() const {
    std::map<ClassifyRule, int> counts;
    for (const auto& row : rows) ++counts[row.rule];
    return counts;
}

std::array<int, 5> ClassificationTable::open_group_sizes() const {
    std::array<int, 5> sizes{};
    for (const auto& row : rows)
        if (row.status == TuranStatus::OPEN && row.open_group >= 1 && row.open_group <= 5)
            ++sizes[static_cast<size_t>(row.open_group - 1)];
    return sizes;
}

AuditReport consistency_audit(const ClassificationTable& table) {
    // one desk-scale witness per construction, profiled once
    struct WitnessInfo {
        std::string name;
        FamilySubset present;
    };
    std::vector<WitnessInfo> infos;
    auto add = [&](const std::string& name, const TripleSystem& sys) {
        infos.push_back({name, profile(sys).present});
    };
    add("star", star(8));
    add("tripartite_matching", tripartite_matching(12));
    add("girth5_greedy", girth5_greedy(40, 0));
    add("projective_sts", projective_sts(4));
    add("ruzsa_szemeredi", ruzsa_szemeredi(6));
    add("rodl_phelps", rodl_phelps(3));
    AntiPaschResult ap = anti_pasch_sts(9);
    if (!ap.system) throw std::runtime_error("audit: no anti-Pasch Steiner system on 9 points");
    add("anti_pasch_sts", *ap.system);

    AuditReport report;
    for (const auto& row : table.rows) {
        const std::string& witness = row.lower.source;
        for (const auto& info : infos) {
            if (info.name != witness) continue;
            AuditCheck check;
            check.subset = row.subset;
            check.witness = witness;
            check.ok = !info.present.intersects(row.subset);
            if (!check.ok) ++report.failures;
            report.checks.push_back(check);
        }
    }
    return report;
}

} // namespace fourcycle
