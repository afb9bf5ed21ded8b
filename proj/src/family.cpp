#include "ucsc/family.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ucsc {

Mask mask_of(std::initializer_list<int> elements) {
    Mask m = 0;
    for (int e : elements) {
        if (e < 1 || e > kMaxGround)
            throw FamilyError("element out of range: " + std::to_string(e));
        m |= Mask{1} << (e - 1);
    }
    return m;
}

std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    for (int i = 0; i < kMaxGround; ++i)
        if (m >> i & 1) out.push_back(i + 1);
    return out;
}

Family::Family(int n, std::vector<Mask> members) : n_(n), members_(std::move(members)) {
    if (n_ < 1 || n_ > kMaxGround)
        throw FamilyError("ground-set size must be in 1..16, got " + std::to_string(n_));
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty()) throw FamilyError("family must have at least one member");
    if (members_.back() > full_mask(n_))
        throw FamilyError("member does not fit within ground set of size " + std::to_string(n_));
}

bool Family::contains(Mask m) const {
    return std::binary_search(members_.begin(), members_.end(), m);
}

bool is_union_closed(const Family& f) {
    return !union_closed_violation(f).has_value();
}

std::optional<std::pair<Mask, Mask>> union_closed_violation(const Family& f) {
    const auto& mem = f.members();
    for (size_t i = 0; i < mem.size(); ++i)
        for (size_t j = i + 1; j < mem.size(); ++j) {
            Mask u = mem[i] | mem[j];
            if (u != mem[i] && u != mem[j] && !f.contains(u))
                return std::pair{mem[i], mem[j]};
        }
    return std::nullopt;
}

Family union_closure(const Family& generators) {
    // Worklist fixpoint with a presence bitmap indexed by mask value.
    std::vector<bool> present(size_t{1} << generators.n(), false);
    std::vector<Mask> all = generators.members();
    for (Mask m : all) present[m] = true;
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            Mask u = all[i] | all[j];
            if (!present[u]) {
                present[u] = true;
                all.push_back(u);
            }
        }
    return Family(generators.n(), std::move(all));
}

Mask universe(const Family& f) {
    Mask u = 0;
    for (Mask m : f.members()) u |= m;
    return u;
}

int t_value(const Family& f) {
    int best = kMaxGround + 1;
    for (Mask m : f.members())
        if (m != 0) best = std::min(best, set_size(m));
    if (best > kMaxGround)
        throw FamilyError("t_value undefined: family has no nonempty member");
    return best;
}

std::vector<int> frequency_profile(const Family& f) {
    std::vector<int> counts(f.n(), 0);
    for (Mask m : f.members())
        for (int i = 0; i < f.n(); ++i)
            if (m >> i & 1) ++counts[i];
    return counts;
}

std::vector<int> abundant_elements(const Family& f, Half rule) {
    auto counts = frequency_profile(f);
    const int m = f.size();
    std::vector<int> out;
    for (int i = 0; i < f.n(); ++i) {
        bool ok = rule == Half::AtLeast ? 2 * counts[i] >= m : 2 * counts[i] > m;
        if (ok) out.push_back(i + 1);
    }
    return out;
}

std::vector<int> size_profile(const Family& f) {
    std::vector<int> by_size(f.n() + 1, 0);
    for (Mask m : f.members()) ++by_size[set_size(m)];
    return by_size;
}

Mask permute_mask(Mask m, std::span<const int> perm) {
    Mask out = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        if (m >> i & 1) out |= Mask{1} << (perm[i] - 1);
    return out;
}

Family permute(const Family& f, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != f.n())
        throw FamilyError("permutation size does not match ground set");
    Mask seen = 0;
    for (int p : perm) {
        if (p < 1 || p > f.n()) throw FamilyError("permutation image out of range");
        seen |= Mask{1} << (p - 1);
    }
    if (seen != full_mask(f.n())) throw FamilyError("permutation is not a bijection");
    std::vector<Mask> out;
    out.reserve(f.members().size());
    for (Mask m : f.members()) out.push_back(permute_mask(m, perm));
    return Family(f.n(), std::move(out));
}

Family canonical_form(const Family& f) {
    if (f.n() > 8)
        throw FamilyError("canonical_form is capped at n <= 8");
    std::vector<int> perm(f.n());
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<Mask> best = f.members();
    do {
        std::vector<Mask> cand;
        cand.reserve(f.members().size());
        for (Mask m : f.members()) cand.push_back(permute_mask(m, perm));
        std::sort(cand.begin(), cand.end());
        if (cand < best) best = std::move(cand);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Family(f.n(), std::move(best));
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, int lineno) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw ParseError("line " + std::to_string(lineno) + ": bad integer '" + std::string(s) + "'");
    return v;
}

}  // namespace

Family parse_family(const std::string& text) {
    std::vector<Mask> members;
    std::optional<int> pinned_n;
    int max_elem = 0;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool first_content = true;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (first_content && line.starts_with("n=")) {
            int n = parse_int(line.substr(2), lineno);
            if (n < 1 || n > kMaxGround)
                throw ParseError("line " + std::to_string(lineno) + ": n out of range 1..16");
            pinned_n = n;
            first_content = false;
            continue;
        }
        first_content = false;
        if (line == "{}") {
            members.push_back(0);
            continue;
        }
        Mask m = 0;
        size_t pos = 0;
        while (pos <= line.size()) {
            size_t comma = line.find(',', pos);
            std::string_view tok = trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
            if (tok.empty())
                throw ParseError("line " + std::to_string(lineno) + ": malformed member '" + std::string(line) + "'");
            int e = parse_int(tok, lineno);
            if (e < 1 || e > kMaxGround)
                throw ParseError("line " + std::to_string(lineno) + ": element out of range 1..16");
            m |= Mask{1} << (e - 1);
            max_elem = std::max(max_elem, e);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        members.push_back(m);
    }
    if (members.empty()) throw ParseError("empty input: no members");
    int n = pinned_n.value_or(std::max(max_elem, 1));
    if (max_elem > n) throw ParseError("element exceeds pinned ground-set size n=" + std::to_string(n));
    return Family(n, std::move(members));
}

std::string format_family(const Family& f) {
    std::string out = "n=" + std::to_string(f.n()) + "\n";
    for (Mask m : f.members()) {
        if (m == 0) {
            out += "{}\n";
            continue;
        }
        bool first = true;
        for (int e : elements_of(m)) {
            if (!first) out += ',';
            out += std::to_string(e);
            first = false;
        }
        out += '\n';
    }
    return out;
}

}  // namespace ucsc
