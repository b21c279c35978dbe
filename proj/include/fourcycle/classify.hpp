#ifndef FOURCYCLE_CLASSIFY_HPP
#define FOURCYCLE_CLASSIFY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fourcycle/patterns.hpp"

namespace fourcycle {

enum class TuranStatus { ALL_TRIPLES, THETA_N_3_2, THETA_N_5_2, THETA_N_2, OPEN };

// First matching rule decides a subset's status; the order below is fixed so
// the per-rule attribution counts are reproducible (56 / 24 / 8 / 4 for the
// four quadratic rules).
enum class ClassifyRule {
    EMPTY_FAMILY,      // nothing forbidden
    F2_EXACT,          // exactly the one-apex class; order n^{5/2} is known
    THREE_HALVES,      // contains F1, F2 and F3; order n^{3/2}
    STAR_LOWER,        // no F2 and meets {F1,F3,F7}; star gives n^2
    MATCHING_LOWER,    // no F3 and meets {F1,F7}; tripartite matching gives n^2
    ANTI_PASCH_LOWER,  // {F2,F3} <= A <= {F2,F3,F4,F5,F7}; anti-Pasch STS
    PROJECTIVE_LOWER,  // {F2,F3,F6} <= A <= {F2,F3,F5,F6,F7}; projective STS
    UNSOLVED,
};

std::string status_name(TuranStatus s);
std::string rule_name(ClassifyRule r);

// Order-of-magnitude bound n^{num/den}, optionally n^{num/den - o(1)}.
struct OrderBound {
    int num = 0;
    int den = 1;
    bool minus_epsilon = false;
    std::string source;  // witness construction or bound provenance

    double exponent() const { return static_cast<double>(num) / den; }
    std::string to_string() const;
};

struct ClassificationStatus {
    FamilySubset subset;
    TuranStatus status = TuranStatus::OPEN;
    ClassifyRule rule = ClassifyRule::UNSOLVED;
    OrderBound lower, upper;
    int open_group = 0;  // 1..5 when status == OPEN
    std::vector<std::string> notes;
};

ClassificationStatus classify_subset(FamilySubset a);

struct ClassificationTable {
    std::vector<ClassificationStatus> rows;  // indexed by subset mask, 128 rows

    std::array<int, 5> status_histogram() const;  // by TuranStatus order
    std::map<ClassifyRule, int> rule_counts() const;
    std::array<int, 5> open_group_sizes() const;  // groups 1..5
};

ClassificationTable classification_table();

struct AuditCheck {
    FamilySubset subset;
    std::string witness;  // construction backing the lower bound
    bool ok = false;
};

struct AuditReport {
    std::vector<AuditCheck> checks;
    int failures = 0;
};

// Rebuilds every named lower-bound witness at a fixed desk-scale size and
// verifies with the detector that it is genuinely free of its subset.
AuditReport consistency_audit(const ClassificationTable& table);

} // namespace fourcycle

#endif
