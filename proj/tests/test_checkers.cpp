#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "ucsc/checkers.hpp"
#include "ucsc/enumeration.hpp"
#include "ucsc/search.hpp"

using namespace ucsc;

namespace {

Family power_set(int n) {
    std::vector<Mask> members;
    for (Mask m = 0; m <= full_mask(n); ++m) members.push_back(m);
    return Family(n, std::move(members));
}

}  // namespace

TEST_CASE("check_frankl") {
    Verdict v = check_frankl(paper_example());
    CHECK(v.status == Status::Holds);
    CHECK(v.witnesses == std::vector<int>{7, 8, 9});

    Verdict single = check_frankl(Family(1, {0, mask_of({1})}));
    CHECK(single.status == Status::Holds);
    CHECK(single.witnesses == std::vector<int>{1});

    Verdict cube = check_frankl(power_set(3));
    CHECK(cube.status == Status::Holds);
    CHECK(cube.witnesses == std::vector<int>{1, 2, 3});
}

TEST_CASE("checker preconditions throw, distinct from Fails") {
    CHECK_THROWS_AS(check_frankl(Family(2, {0, mask_of({1}), mask_of({2})})), PreconditionError);
    CHECK_THROWS_AS(check_frankl(Family(2, {mask_of({1}), mask_of({1, 2})})), PreconditionError);
    CHECK_THROWS_AS(check_frankl(Family(2, {0})), PreconditionError);
    CHECK_THROWS_AS(check_s1(Family(2, {0})), PreconditionError);
}

TEST_CASE("check_s1") {
    Verdict paper = check_s1(paper_example());
    CHECK(paper.status == Status::Fails);
    CHECK(paper.required == 4);
    CHECK(paper.achieved == 3);

    Verdict minimal = check_s1(Family(3, {0, full_mask(3)}));
    CHECK(minimal.status == Status::Holds);
    CHECK(minimal.witnesses == std::vector<int>{1, 2, 3});

    Verdict t1 = check_s1(Family(2, {0, mask_of({1}), mask_of({1, 2})}));
    CHECK(t1.status == Status::NotApplicable);
    CHECK(t1.reason == "T(F)=1");

    Verdict n1 = check_s1(Family(1, {0, mask_of({1})}));
    CHECK(n1.status == Status::NotApplicable);
    CHECK(n1.reason == "n=1");
}

TEST_CASE("check_s2") {
    CHECK(check_s2(paper_example()).status == Status::Holds);

    Verdict pair = check_s2(Family(2, {0, full_mask(2)}));
    CHECK(pair.status == Status::Holds);
    CHECK(pair.witnesses == std::vector<int>{1, 2});

    CHECK(check_s2(Family(2, {0, mask_of({1}), mask_of({1, 2})})).status == Status::NotApplicable);
}

TEST_CASE("lemma_1_2_witness") {
    auto found = lemma_1_2_witness(
        Family(4, {0, mask_of({1, 2}), mask_of({3, 4}), mask_of({1, 2, 3, 4})}));
    REQUIRE(found.has_value());
    CHECK(found->first == mask_of({1, 2}));
    CHECK(found->second == mask_of({3, 4}));

    CHECK_FALSE(lemma_1_2_witness(paper_example()).has_value());
    CHECK_FALSE(lemma_1_2_witness(
                    Family(3, {0, mask_of({1, 2}), mask_of({1, 3}), mask_of({1, 2, 3})}))
                    .has_value());
}

TEST_CASE("averaging_argument") {
    CHECK(averaging_argument(Family(3, {0, full_mask(3)})) == 1);
    // S=48 over 9 proper members, 2*ceil(48/9)=12 >= 9; 7,8,9 tie at
    // proper frequency 8, smallest wins.
    CHECK(averaging_argument(paper_example()) == 7);
    // S=4, c=3, 2*ceil(4/9)=2 < 3: inconclusive.
    CHECK_FALSE(averaging_argument(
                    Family(9, {0, mask_of({1}), mask_of({2}), mask_of({1, 2}), full_mask(9)}))
                    .has_value());
    // Universe must cover the ground set.
    CHECK_THROWS_AS(averaging_argument(Family(3, {0, mask_of({1, 2})})), PreconditionError);
}

TEST_CASE("averaging soundness over the enumerable range") {
    for (int n = 1; n <= 4; ++n) {
        enumerate_union_closed(n, {}, [&](const Family& f) {
            auto witness = averaging_argument(f);
            if (witness) {
                auto abundant = abundant_elements(f);
                CHECK(std::binary_search(abundant.begin(), abundant.end(), *witness));
            }
            if (2 * t_value(f) >= f.n()) CHECK(witness.has_value());
        });
    }
}

TEST_CASE("evaluate_questions") {
    QuestionReport paper = evaluate_questions(paper_example());
    CHECK_FALSE(paper.q1_applicable);
    CHECK_FALSE(paper.q2_applicable);
    CHECK_FALSE(paper.q3_applicable);  // 2*4 = 8 <= 9

    QuestionReport top = evaluate_questions(Family(5, {0, full_mask(5)}));
    CHECK(top.q3_applicable);
    CHECK(top.q3_holds);

    QuestionReport t2 = evaluate_questions(
        Family(5, {0, mask_of({1, 2}), mask_of({1, 2, 3}), full_mask(5)}));
    CHECK(t2.q2_applicable);
    CHECK(t2.q2_holds);

    CHECK_THROWS_AS(evaluate_questions(Family(2, {0, mask_of({1}), mask_of({1, 2})})),
                    PreconditionError);
}

TEST_CASE("implication chain over the enumerable range") {
    for (int n = 2; n <= 4; ++n) {
        EnumFilter filter;
        filter.t_min = 2;
        enumerate_union_closed(n, filter, [](const Family& f) {
            Verdict s1 = check_s1(f);
            Verdict s2 = check_s2(f);
            Verdict frankl = check_frankl(f);
            if (s1.status == Status::Holds) CHECK(s2.status == Status::Holds);
            if (s2.status == Status::Holds) CHECK(frankl.status == Status::Holds);
        });
    }
}

TEST_CASE("witness soundness") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<Mask> mask_dist;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        std::vector<Mask> gens{0};
        int count = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < count; ++i) gens.push_back(mask_dist(rng) & full_mask(n));
        Family f = union_closure(Family(n, std::move(gens)));
        if (f.size() < 2) continue;
        auto counts = frequency_profile(f);
        for (const Verdict& v : {check_frankl(f), check_s1(f), check_s2(f)})
            if (v.status == Status::Holds)
                for (int e : v.witnesses) CHECK(2 * counts[e - 1] >= f.size());
    }
}

TEST_CASE("verdicts are invariant under permutation") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        std::vector<Mask> gens{0};
        for (int i = 0; i < 4; ++i)
            gens.push_back(static_cast<Mask>(rng()) & full_mask(n));
        Family f = union_closure(Family(n, std::move(gens)));
        if (f.size() < 2) continue;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        Family g = permute(f, perm);
        for (auto check : {check_frankl, check_s1, check_s2}) {
            Verdict a = check(f, Half::AtLeast);
            Verdict b = check(g, Half::AtLeast);
            CHECK(a.status == b.status);
            CHECK(a.required == b.required);
            CHECK(a.achieved == b.achieved);
            std::vector<int> mapped;
            for (int e : a.witnesses) mapped.push_back(perm[e - 1]);
            std::sort(mapped.begin(), mapped.end());
            CHECK(b.witnesses == mapped);
        }
    }
}
