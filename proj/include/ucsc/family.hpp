#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ucsc {

// Subset of the ground set {1..n}, element i at bit (i-1).  n <= 16.
using Mask = std::uint32_t;

constexpr int kMaxGround = 16;

constexpr Mask full_mask(int n) { return n <= 0 ? 0u : (Mask{1} << n) - 1; }

inline int set_size(Mask m) { return std::popcount(m); }

Mask mask_of(std::initializer_list<int> elements);
std::vector<int> elements_of(Mask m);

struct FamilyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : FamilyError {
    using FamilyError::FamilyError;
};

// A finite family of subsets of {1..n}.  Members are stored unique and
// sorted ascending by mask value; that order is the canonical storage
// order used everywhere (output, comparison, enumeration).
class Family {
public:
    Family(int n, std::vector<Mask> members);

    int n() const { return n_; }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<Mask>& members() const { return members_; }
    bool contains(Mask m) const;

    bool operator==(const Family&) const = default;

private:
    int n_;
    std::vector<Mask> members_;
};

bool is_union_closed(const Family& f);

// First (A, B) in member order with A|B missing, if any.
std::optional<std::pair<Mask, Mask>> union_closed_violation(const Family& f);

// Minimal union-closed superfamily of the generators (pairwise-union fixpoint).
Family union_closure(const Family& generators);

Mask universe(const Family& f);

// Minimum cardinality over nonempty members.  Throws FamilyError on {∅}.
int t_value(const Family& f);

// counts[i-1] = number of members containing element i.
std::vector<int> frequency_profile(const Family& f);

// "at least half" by default; MoreThan is the strict experimental variant.
enum class Half { AtLeast, MoreThan };

std::vector<int> abundant_elements(const Family& f, Half rule = Half::AtLeast);

// by_size[k] = number of members of cardinality k, k = 0..n.
std::vector<int> size_profile(const Family& f);

// perm[i-1] = image of element i; must be a bijection on 1..n.
Family permute(const Family& f, std::span<const int> perm);
Mask permute_mask(Mask m, std::span<const int> perm);

// Lexicographically smallest member sequence over all n! relabelings.
// Brute-force scan, capped at n <= 8.
Family canonical_form(const Family& f);

// Text format: '#' comments, blank lines ignored, optional "n=<int>"
// header, one member per line as "{}" or ascending comma-separated
// elements.  format_family emits the canonical round-trip form.
Family parse_family(const std::string& text);
std::string format_family(const Family& f);

}  // namespace ucsc
