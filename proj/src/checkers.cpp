#include "ucsc/checkers.hpp"

#include <algorithm>

namespace ucsc {

std::string conjecture_name(Conjecture c) {
    switch (c) {
        case Conjecture::Frankl: return "frankl";
        case Conjecture::S1: return "s1";
        case Conjecture::S2: return "s2";
        case Conjecture::Q1: return "q1";
        case Conjecture::Q2: return "q2";
        case Conjecture::Q3: return "q3";
    }
    return "?";
}

std::string status_name(Status s) {
    switch (s) {
        case Status::Holds: return "holds";
        case Status::Fails: return "fails";
        case Status::NotApplicable: return "not_applicable";
    }
    return "?";
}

namespace {

void require_preconditions(const Family& f) {
    if (!f.contains(0))
        throw PreconditionError("precondition: ∅ must be a member");
    if (f.size() == 1)
        throw PreconditionError("precondition: family has no nonempty member");
    if (auto v = union_closed_violation(f))
        throw PreconditionError("precondition: family is not union-closed");
}

Verdict base_verdict(Conjecture c, const Family& f) {
    Verdict v;
    v.conjecture = c;
    v.t = t_value(f);
    v.m = f.size();
    v.n = f.n();
    return v;
}

Verdict abundance_verdict(Conjecture c, const Family& f, int required, Half rule) {
    Verdict v = base_verdict(c, f);
    auto abundant = abundant_elements(f, rule);
    if (static_cast<int>(abundant.size()) >= required) {
        v.status = Status::Holds;
        v.witnesses = std::move(abundant);
    } else {
        v.status = Status::Fails;
        v.required = required;
        v.achieved = static_cast<int>(abundant.size());
    }
    return v;
}

}  // namespace

Verdict check_frankl(const Family& f, Half rule) {
    require_preconditions(f);
    return abundance_verdict(Conjecture::Frankl, f, 1, rule);
}

Verdict check_s1(const Family& f, Half rule) {
    require_preconditions(f);
    Verdict v = base_verdict(Conjecture::S1, f);
    if (f.n() < 2) {
        v.status = Status::NotApplicable;
        v.reason = "n=1";
        return v;
    }
    if (v.t < 2) {
        v.status = Status::NotApplicable;
        v.reason = "T(F)=1";
        return v;
    }
    return abundance_verdict(Conjecture::S1, f, v.t, rule);
}

Verdict check_s2(const Family& f, Half rule) {
    require_preconditions(f);
    Verdict v = base_verdict(Conjecture::S2, f);
    if (f.n() < 2) {
        v.status = Status::NotApplicable;
        v.reason = "n=1";
        return v;
    }
    if (v.t < 2) {
        v.status = Status::NotApplicable;
        v.reason = "T(F)=1";
        return v;
    }
    return abundance_verdict(Conjecture::S2, f, 2, rule);
}

std::optional<std::pair<Mask, Mask>> lemma_1_2_witness(const Family& f) {
    bool has_nonempty = std::any_of(f.members().begin(), f.members().end(),
                                    [](Mask m) { return m != 0; });
    if (!has_nonempty || t_value(f) != 2) return std::nullopt;
    std::vector<Mask> pairs;
    for (Mask m : f.members())
        if (set_size(m) == 2) pairs.push_back(m);
    for (size_t i = 0; i < pairs.size(); ++i)
        for (size_t j = i + 1; j < pairs.size(); ++j)
            if ((pairs[i] & pairs[j]) == 0) return std::pair{pairs[i], pairs[j]};
    return std::nullopt;
}

std::optional<int> averaging_argument(const Family& f) {
    require_preconditions(f);
    const Mask full = full_mask(f.n());
    if (universe(f) != full)
        throw PreconditionError("precondition: universe must be the full ground set");

    long long size_sum = 0;  // Σ|A| over proper members
    int proper_count = 0;
    std::vector<int> proper_freq(f.n(), 0);
    for (Mask m : f.members()) {
        if (m == 0 || m == full) continue;
        ++proper_count;
        size_sum += set_size(m);
        for (int i = 0; i < f.n(); ++i)
            if (m >> i & 1) ++proper_freq[i];
    }
    if (proper_count == 0) return 1;  // f = {∅, M_n}, every element in half

    // Mean proper frequency is size_sum/n; the maximizing element reaches
    // at least ⌈size_sum/n⌉.  With ∅ and M_n adjoined (m = c + 2) this
    // makes it abundant exactly when 2·⌈size_sum/n⌉ ≥ c.
    long long ceil_mean = (size_sum + f.n() - 1) / f.n();
    if (2 * ceil_mean < proper_count) return std::nullopt;
    int best = 0;
    for (int i = 1; i < f.n(); ++i)
        if (proper_freq[i] > proper_freq[best]) best = i;
    return best + 1;
}

QuestionReport evaluate_questions(const Family& f) {
    require_preconditions(f);
    const int t = t_value(f);
    if (t < 2) throw PreconditionError("precondition: questions require T(F) >= 2");
    const int abundant = static_cast<int>(abundant_elements(f).size());
    QuestionReport r;
    r.q1_applicable = t == 3;
    r.q2_applicable = t == 2;
    r.q3_applicable = 2 * t > f.n();
    r.q1_holds = r.q1_applicable && abundant >= 3;
    r.q2_holds = r.q2_applicable && abundant >= 2;
    r.q3_holds = r.q3_applicable && abundant >= t;
    return r;
}

}  // namespace ucsc
