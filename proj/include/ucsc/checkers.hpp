#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ucsc/family.hpp"

namespace ucsc {

enum class Conjecture { Frankl, S1, S2, Q1, Q2, Q3 };
enum class Status { Holds, Fails, NotApplicable };

std::string conjecture_name(Conjecture c);
std::string status_name(Status s);

struct Verdict {
    Conjecture conjecture{};
    Status status{};
    int t = 0;
    int m = 0;
    int n = 0;
    std::vector<int> witnesses;  // Holds: the abundant elements
    int required = 0;            // Fails
    int achieved = 0;            // Fails
    std::string reason;          // NotApplicable

    bool operator==(const Verdict&) const = default;
};

// Thrown when a checker precondition fails (not union-closed, ∅ missing,
// no nonempty member); kept distinct from a Fails verdict.
struct PreconditionError : FamilyError {
    using FamilyError::FamilyError;
};

Verdict check_frankl(const Family& f, Half rule = Half::AtLeast);
Verdict check_s1(const Family& f, Half rule = Half::AtLeast);
Verdict check_s2(const Family& f, Half rule = Half::AtLeast);

// T(F)=2 criterion: first disjoint pair of size-2 members, if any.
std::optional<std::pair<Mask, Mask>> lemma_1_2_witness(const Family& f);

// Mean-frequency sufficiency over proper members (those other than ∅ and
// M_n).  Returns a guaranteed-abundant element when the bound applies,
// absent when inconclusive.  Requires ∅ ∈ f, universe M_n, union-closed.
std::optional<int> averaging_argument(const Family& f);

struct QuestionReport {
    bool q1_applicable = false, q1_holds = false;  // T=3: 3 abundant?
    bool q2_applicable = false, q2_holds = false;  // T=2: 2 abundant?
    bool q3_applicable = false, q3_holds = false;  // 2T>n: T abundant?
    bool operator==(const QuestionReport&) const = default;
};

QuestionReport evaluate_questions(const Family& f);

}  // namespace ucsc
