#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ucsc/family.hpp"

namespace ucsc {

// Tag for the mask processing order baked into checkpoints; a checkpoint
// written under a different order must fail loudly on resume.
inline constexpr const char* kEnumOrderVersion = "popdesc-1";

inline constexpr int kMaxEnumGround = 6;

struct EnumFilter {
    std::optional<int> t_min;
    std::optional<int> t_exact;  // mutually exclusive with t_min
    bool canonical_only = false;
    std::optional<int> max_m;
};

struct EnumCheckpoint {
    int n = 0;
    std::string order_version = kEnumOrderVersion;
    std::string decisions;  // '1' include / '0' exclude along the DFS prefix
};

struct EnumError : FamilyError {
    using FamilyError::FamilyError;
};

using FamilySink = std::function<void(const Family&)>;

// The 2^n - 2 proper nonempty masks in decreasing popcount, then
// increasing numeric value.  This order makes the DFS pruning rule sound:
// the union of two incomparable masks is always decided earlier.
std::vector<Mask> enumeration_order(int n);

// Emits every union-closed family with ∅ ∈ F and ∪F = M_n (∅ and M_n
// forced members) passing the filter, exactly once, in DFS order with the
// include branch explored first.  Returns the emission count.
std::uint64_t enumerate_union_closed(int n, const EnumFilter& filter, const FamilySink& sink);

// Independent oracle: brute force over all subsets of the proper nonempty
// masks, sorted into the same deterministic order.  n <= 4.
std::vector<Family> naive_enumerate(int n);

// Feasible DFS decision prefixes of the given depth, in DFS order.
// Resuming them all, concatenated, reproduces the full enumeration.
std::vector<EnumCheckpoint> partition_tasks(int n, int depth);

std::uint64_t resume(const EnumCheckpoint& checkpoint, const EnumFilter& filter,
                     const FamilySink& sink);

// Partitioned run across worker threads.  The sink is invoked
// concurrently and must be thread-safe; the returned count is exact and
// thread-count independent.
std::uint64_t enumerate_threaded(int n, const EnumFilter& filter, int threads,
                                 const FamilySink& sink);

}  // namespace ucsc
