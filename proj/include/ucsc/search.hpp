#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ucsc/checkers.hpp"
#include "ucsc/enumeration.hpp"
#include "ucsc/family.hpp"

namespace ucsc {

enum class SearchTarget { FranklFail, S1Fail, S2Fail, Q1Fail, Q2Fail, Q3Fail };

std::string target_name(SearchTarget t);
std::optional<SearchTarget> parse_target(const std::string& name);

struct Provenance {
    enum class Kind { Exhaustive, Random, Fixture };
    Kind kind = Kind::Fixture;
    EnumCheckpoint checkpoint;       // Exhaustive
    std::uint64_t seed = 0;          // Random
    std::uint64_t iteration = 0;     // Random
};

struct Finding {
    Family family;
    SearchTarget target;
    Verdict verdict;
    Provenance provenance;
};

// The 11-member n=9 family witnessing that the k-abundant-elements claim
// can fail with T(F)=4 but only 3 abundant elements.
Family paper_example();

struct PaperExampleReport {
    struct Check {
        std::string name;
        bool ok = false;
        std::string detail;
    };
    std::vector<Check> checks;
    bool ok = true;
};

PaperExampleReport verify_paper_example();

// True when the family meets the target's T-precondition (S1/S2: T >= 2,
// Q1: T=3, Q2: T=2, Q3: 2T > n; Frankl: any).
bool target_applicable(SearchTarget target, const Family& f);

// Verdict for the target's claim on this family, absent if inapplicable.
// A Fails status means the family violates the target's claim.
std::optional<Verdict> evaluate_target(SearchTarget target, const Family& f);

struct ScanResult {
    std::vector<Finding> findings;
    std::uint64_t checked = 0;
    std::uint64_t suppressed = 0;  // findings beyond the cap
};

ScanResult exhaustive_scan(int n, std::span<const SearchTarget> targets, int threads = 1,
                           std::size_t cap = 100);

struct RandomSearchParams {
    std::uint64_t seed = 0;
    std::uint64_t iterations = 1000;
    int gen_count_min = 2, gen_count_max = 6;
    int size_min = 1, size_max = 0;  // 0 means n
    std::size_t cap = 100;
    int threads = 1;
};

// Seeded closure sampling: draw generators, close under union, adjoin ∅,
// keep full-universe families meeting the target's precondition.  Pure
// function of (seed, parameters); thread count does not change results.
ScanResult random_closure_search(int n, SearchTarget target, const RandomSearchParams& params);

// Block-structured probe for larger-T failures shaped like the n=9
// example: disjoint blocks plus a shared spine; each block enters with an
// assigned spine subset and with the full spine, then everything is
// closed under union.  Scans all spine-subset assignments.
ScanResult block_template_scan(int n, int block_count, int block_size, int spine_size,
                               SearchTarget target, std::size_t cap = 100);

struct QuestionScanReport {
    struct PerQuestion {
        std::uint64_t instances = 0;
        std::uint64_t violations = 0;
        std::optional<Family> first_violation;
    };
    PerQuestion q1, q2, q3;
    std::uint64_t families = 0;
};

QuestionScanReport question_scan(int n, int threads = 1);

}  // namespace ucsc
