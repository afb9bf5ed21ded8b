#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "ucsc/family.hpp"

using namespace ucsc;

namespace {

// Seeded generator family for property tests.
Family random_generators(std::mt19937_64& rng, int n, int count) {
    std::uniform_int_distribution<Mask> mask_dist(0, full_mask(n));
    std::vector<Mask> members;
    for (int i = 0; i < count; ++i) members.push_back(mask_dist(rng));
    return Family(n, std::move(members));
}

bool is_union_of_generators(Mask member, const Family& generators) {
    // Union of all generators contained in `member`; equals it iff member
    // is a union of a nonempty subfamily.
    Mask u = 0;
    bool any = false;
    for (Mask g : generators.members())
        if ((g | member) == member) {
            u |= g;
            any = true;
        }
    return any && u == member;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

Family power_set(int n) {
    std::vector<Mask> members;
    for (Mask m = 0; m <= full_mask(n); ++m) members.push_back(m);
    return Family(n, std::move(members));
}

const Family kPaper = Family(9, {
    mask_of({}),
    mask_of({1, 2, 7, 8}),
    mask_of({3, 4, 7, 9}),
    mask_of({5, 6, 8, 9}),
    mask_of({1, 2, 7, 8, 9}),
    mask_of({3, 4, 7, 8, 9}),
    mask_of({5, 6, 7, 8, 9}),
    mask_of({1, 2, 3, 4, 7, 8, 9}),
    mask_of({1, 2, 5, 6, 7, 8, 9}),
    mask_of({3, 4, 5, 6, 7, 8, 9}),
    mask_of({1, 2, 3, 4, 5, 6, 7, 8, 9}),
});

}  // namespace

TEST_CASE("parse_family basics") {
    Family f = parse_family("{}\n1,2\n");
    CHECK(f.n() == 2);
    CHECK(f.members() == std::vector<Mask>{0, 0b11});

    Family dup = parse_family("1,2\n2,1\n");
    CHECK(dup.size() == 1);
    CHECK(dup.members()[0] == 0b11);

    Family pinned = parse_family("n=5\n1,2\n");
    CHECK(pinned.n() == 5);

    Family commented = parse_family("# header\n\n{}\n# mid\n1\n");
    CHECK(commented.size() == 2);
}

TEST_CASE("parse_family errors") {
    CHECK_THROWS_AS(parse_family(""), ParseError);
    CHECK_THROWS_AS(parse_family("# only comments\n"), ParseError);
    CHECK_THROWS_AS(parse_family("1,,2\n"), ParseError);
    CHECK_THROWS_AS(parse_family("1,x\n"), ParseError);
    CHECK_THROWS_AS(parse_family("17\n"), ParseError);
    CHECK_THROWS_AS(parse_family("0\n"), ParseError);
    CHECK_THROWS_AS(parse_family("n=2\n1,3\n"), ParseError);
}

TEST_CASE("parse of the 11-line paper family") {
    Family f = parse_family(
        "{}\n1,2,7,8\n3,4,7,9\n5,6,8,9\n1,2,7,8,9\n3,4,7,8,9\n5,6,7,8,9\n"
        "1,2,3,4,7,8,9\n1,2,5,6,7,8,9\n3,4,5,6,7,8,9\n1,2,3,4,5,6,7,8,9\n");
    CHECK(f.size() == 11);
    CHECK(f.n() == 9);
    CHECK(f == kPaper);
}

TEST_CASE("format/parse round-trips to an identical member sequence") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 16);
        Family f = random_generators(rng, n, 1 + static_cast<int>(rng() % 10));
        Family back = parse_family(format_family(f));
        CHECK(back == f);
    }
}

TEST_CASE("is_union_closed") {
    CHECK(is_union_closed(kPaper));
    CHECK_FALSE(is_union_closed(Family(2, {0, 0b01, 0b10})));
    CHECK(is_union_closed(power_set(3)));

    auto violation = union_closed_violation(Family(2, {0, 0b01, 0b10}));
    REQUIRE(violation.has_value());
    CHECK((violation->first | violation->second) == 0b11);
}

TEST_CASE("union_closure examples") {
    Family one_new = union_closure(Family(3, {mask_of({1, 2}), mask_of({2, 3})}));
    CHECK(one_new == Family(3, {mask_of({1, 2}), mask_of({2, 3}), mask_of({1, 2, 3})}));

    Family empty_only = union_closure(Family(1, {0}));
    CHECK(empty_only == Family(1, {0}));

    Family from_generators = union_closure(Family(9, {
        mask_of({}),
        mask_of({1, 2, 7, 8}),
        mask_of({3, 4, 7, 9}),
        mask_of({5, 6, 8, 9}),
        mask_of({1, 2, 7, 8, 9}),
        mask_of({3, 4, 7, 8, 9}),
        mask_of({5, 6, 7, 8, 9}),
    }));
    CHECK(from_generators == kPaper);
}

TEST_CASE("closure idempotence, soundness, minimality") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Family gens = random_generators(rng, n, 1 + static_cast<int>(rng() % 6));
        Family closed = union_closure(gens);
        CHECK(is_union_closed(closed));
        CHECK(union_closure(closed) == closed);
        for (Mask g : gens.members()) CHECK(closed.contains(g));
        for (Mask m : closed.members()) CHECK(is_union_of_generators(m, gens));
    }
}

TEST_CASE("universe") {
    CHECK(universe(kPaper) == full_mask(9));
    CHECK(universe(Family(1, {0})) == 0);
    CHECK(universe(Family(3, {mask_of({1}), mask_of({3})})) == mask_of({1, 3}));
}

TEST_CASE("t_value") {
    CHECK(t_value(kPaper) == 4);
    CHECK(t_value(Family(2, {0, full_mask(2)})) == 2);
    CHECK(t_value(Family(2, {0, mask_of({1}), mask_of({1, 2})})) == 1);
    CHECK_THROWS_AS(t_value(Family(3, {0})), FamilyError);
}

TEST_CASE("frequency_profile") {
    auto counts = frequency_profile(kPaper);
    CHECK(counts == std::vector<int>{5, 5, 5, 5, 5, 5, 9, 9, 9});
    CHECK(frequency_profile(Family(2, {0, full_mask(2)})) == std::vector<int>{1, 1});
}

TEST_CASE("frequency conservation") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 16);
        Family f = random_generators(rng, n, 1 + static_cast<int>(rng() % 12));
        auto counts = frequency_profile(f);
        long long freq_sum = std::accumulate(counts.begin(), counts.end(), 0LL);
        long long size_sum = 0;
        for (Mask m : f.members()) size_sum += set_size(m);
        CHECK(freq_sum == size_sum);
    }
}

TEST_CASE("abundant_elements") {
    CHECK(abundant_elements(kPaper) == std::vector<int>{7, 8, 9});
    CHECK(abundant_elements(Family(4, {0, full_mask(4)})) == std::vector<int>{1, 2, 3, 4});
    CHECK(abundant_elements(Family(2, {0, mask_of({1}), mask_of({1, 2})})) == std::vector<int>{1});
}

TEST_CASE("strict-half variant excludes exactly-half elements") {
    Family f(2, {0, full_mask(2)});
    CHECK(abundant_elements(f, Half::AtLeast) == std::vector<int>{1, 2});
    CHECK(abundant_elements(f, Half::MoreThan).empty());
}

TEST_CASE("size_profile") {
    auto profile = size_profile(kPaper);
    std::vector<int> expected(10, 0);
    expected[0] = 1;
    expected[4] = 3;
    expected[5] = 3;
    expected[7] = 3;
    expected[9] = 1;
    CHECK(profile == expected);
    CHECK(size_profile(Family(3, {0, full_mask(3)})) == std::vector<int>{1, 0, 0, 1});
    CHECK(size_profile(power_set(2)) == std::vector<int>{1, 2, 1});
}

TEST_CASE("permute") {
    Family f(2, {0, mask_of({2}), mask_of({1, 2})});
    std::vector<int> identity{1, 2};
    CHECK(permute(f, identity) == f);
    std::vector<int> swap12{2, 1};
    CHECK(permute(f, swap12) == Family(2, {0, mask_of({1}), mask_of({1, 2})}));

    std::vector<int> not_bijection{1, 1};
    CHECK_THROWS_AS(permute(f, not_bijection), FamilyError);
}

TEST_CASE("permutation equivariance of the statistics") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Family f = union_closure(random_generators(rng, n, 1 + static_cast<int>(rng() % 5)));
        auto perm = random_permutation(rng, n);
        Family g = permute(f, perm);

        CHECK(g.size() == f.size());
        CHECK(is_union_closed(g) == is_union_closed(f));
        CHECK(size_profile(g) == size_profile(f));
        if (f.contains(0) ? f.size() > 1 : true) CHECK(t_value(g) == t_value(f));

        auto freq = frequency_profile(f);
        auto freq_mapped = frequency_profile(g);
        for (int i = 0; i < n; ++i) CHECK(freq_mapped[perm[i] - 1] == freq[i]);

        auto abundant = abundant_elements(f);
        std::vector<int> mapped;
        for (int e : abundant) mapped.push_back(perm[e - 1]);
        std::sort(mapped.begin(), mapped.end());
        CHECK(abundant_elements(g) == mapped);
    }
    CHECK(t_value(permute(kPaper, std::vector<int>{9, 8, 7, 6, 5, 4, 3, 2, 1})) == 4);
}

TEST_CASE("canonical_form examples") {
    CHECK(canonical_form(Family(2, {0, mask_of({2}), mask_of({1, 2})})) ==
          Family(2, {0, mask_of({1}), mask_of({1, 2})}));
    Family already(2, {0, mask_of({1}), mask_of({1, 2})});
    CHECK(canonical_form(already) == already);
    CHECK(canonical_form(Family(3, {0, mask_of({3}), mask_of({1, 3}), mask_of({2, 3}),
                                    mask_of({1, 2, 3})})) ==
          Family(3, {0, mask_of({1}), mask_of({1, 2}), mask_of({1, 3}), mask_of({1, 2, 3})}));
    CHECK_THROWS_AS(canonical_form(Family(9, {0, full_mask(9)})), FamilyError);
}

TEST_CASE("canonical_form is invariant under relabeling") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Family f = random_generators(rng, n, 1 + static_cast<int>(rng() % 6));
        auto perm = random_permutation(rng, n);
        CHECK(canonical_form(permute(f, perm)) == canonical_form(f));
    }
}

TEST_CASE("union-closed family with nonempty member contains its universe") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Family f = union_closure(random_generators(rng, n, 1 + static_cast<int>(rng() % 6)));
        CHECK(f.contains(universe(f)));
    }
}
