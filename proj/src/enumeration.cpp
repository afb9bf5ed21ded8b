#include "ucsc/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace ucsc {

namespace {

void validate_filter(int n, const EnumFilter& filter) {
    if (filter.t_exact && filter.t_min)
        throw EnumError("filter: t_exact and t_min are mutually exclusive");
    for (auto bound : {filter.t_exact, filter.t_min})
        if (bound && (*bound < 1 || *bound > n))
            throw EnumError("filter: T bound out of range 1..n");
}

// DFS over include/exclude decisions for the proper nonempty masks.
// Invariant kept by can_include: the included set, plus forced ∅ and M_n,
// is union-closed at every node.
class Dfs {
public:
    Dfs(int n, const EnumFilter& filter, const FamilySink& sink)
        : n_(n), full_(full_mask(n)), order_(enumeration_order(n)), filter_(filter), sink_(sink) {
        if (n < 1 || n > kMaxEnumGround)
            throw EnumError("enumeration requires 1 <= n <= 6");
        validate_filter(n, filter);
        // Masks below the T lower bound can never survive the filter.
        min_popcount_ = filter.t_exact ? *filter.t_exact : filter.t_min.value_or(1);
    }

    bool can_include(Mask a) const {
        for (Mask b : included_) {
            Mask u = a | b;
            if (u != full_ && !(present_ >> u & 1)) return false;
        }
        return true;
    }

    bool include_allowed(Mask a) const {
        if (set_size(a) < min_popcount_) return false;
        if (filter_.max_m && static_cast<int>(included_.size()) + 3 > *filter_.max_m)
            return false;
        return can_include(a);
    }

    void push(Mask a) {
        included_.push_back(a);
        present_ |= std::uint64_t{1} << a;
    }
    void pop() {
        present_ &= ~(std::uint64_t{1} << included_.back());
        included_.pop_back();
    }

    void run(size_t pos) {
        if (pos == order_.size()) {
            emit();
            return;
        }
        Mask a = order_[pos];
        if (include_allowed(a)) {
            push(a);
            run(pos + 1);
            pop();
        }
        run(pos + 1);
    }

    // Replays a decision prefix; includes must be structurally legal.
    size_t replay(const std::string& decisions) {
        if (decisions.size() > order_.size())
            throw EnumError("checkpoint: decision string longer than the mask order");
        for (size_t pos = 0; pos < decisions.size(); ++pos) {
            char c = decisions[pos];
            if (c == '1') {
                if (!can_include(order_[pos]))
                    throw EnumError("checkpoint: infeasible include at position " + std::to_string(pos));
                push(order_[pos]);
            } else if (c != '0') {
                throw EnumError("checkpoint: corrupt decision string");
            }
        }
        return decisions.size();
    }

    std::uint64_t count() const { return count_; }

private:
    void emit() {
        std::vector<Mask> members;
        members.reserve(included_.size() + 2);
        members.push_back(0);
        members.insert(members.end(), included_.begin(), included_.end());
        members.push_back(full_);
        Family f(n_, std::move(members));
        int t = included_.empty() ? n_ : t_value(f);
        if (filter_.t_exact && t != *filter_.t_exact) return;
        if (filter_.t_min && t < *filter_.t_min) return;
        if (filter_.max_m && f.size() > *filter_.max_m) return;
        if (filter_.canonical_only && canonical_form(f) != f) return;
        ++count_;
        if (sink_) sink_(f);
    }

    int n_;
    Mask full_;
    std::vector<Mask> order_;
    EnumFilter filter_;
    FamilySink sink_;
    int min_popcount_ = 1;
    std::vector<Mask> included_;
    std::uint64_t present_ = 0;  // bit per mask value; fits since n <= 6
    std::uint64_t count_ = 0;
};

}  // namespace

std::vector<Mask> enumeration_order(int n) {
    std::vector<Mask> order;
    for (Mask m = 1; m < full_mask(n); ++m) order.push_back(m);
    std::stable_sort(order.begin(), order.end(),
                     [](Mask a, Mask b) { return set_size(a) > set_size(b); });
    return order;
}

std::uint64_t enumerate_union_closed(int n, const EnumFilter& filter, const FamilySink& sink) {
    Dfs dfs(n, filter, sink);
    dfs.run(0);
    return dfs.count();
}

std::vector<Family> naive_enumerate(int n) {
    if (n < 1 || n > 4) throw EnumError("naive_enumerate requires 1 <= n <= 4");
    const Mask full = full_mask(n);
    const int proper = static_cast<int>(full) - 1;  // 2^n - 2 masks
    std::vector<Family> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << proper); ++bits) {
        std::vector<Mask> members{0, full};
        for (int i = 0; i < proper; ++i)
            if (bits >> i & 1) members.push_back(static_cast<Mask>(i + 1));
        Family f(n, std::move(members));
        if (is_union_closed(f)) out.push_back(std::move(f));
    }
    // Sort into DFS emission order: include decisions compare as '1' before '0'.
    auto order = enumeration_order(n);
    auto key = [&](const Family& f) {
        std::string k(order.size(), '0');
        for (size_t i = 0; i < order.size(); ++i)
            if (f.contains(order[i])) k[i] = '1';
        return k;
    };
    std::sort(out.begin(), out.end(),
              [&](const Family& a, const Family& b) { return key(a) > key(b); });
    return out;
}

std::vector<EnumCheckpoint> partition_tasks(int n, int depth) {
    Dfs probe(n, EnumFilter{}, nullptr);
    auto order = enumeration_order(n);
    if (depth < 0 || static_cast<size_t>(depth) > order.size())
        throw EnumError("partition depth out of range");
    std::vector<EnumCheckpoint> tasks;
    std::string prefix;
    // Collect feasible prefixes in DFS order (include branch first).
    auto walk = [&](auto&& self, size_t pos) -> void {
        if (static_cast<int>(pos) == depth) {
            tasks.push_back({n, kEnumOrderVersion, prefix});
            return;
        }
        if (probe.can_include(order[pos])) {
            probe.push(order[pos]);
            prefix.push_back('1');
            self(self, pos + 1);
            prefix.pop_back();
            probe.pop();
        }
        prefix.push_back('0');
        self(self, pos + 1);
        prefix.pop_back();
    };
    walk(walk, 0);
    return tasks;
}

std::uint64_t resume(const EnumCheckpoint& checkpoint, const EnumFilter& filter,
                     const FamilySink& sink) {
    if (checkpoint.order_version != kEnumOrderVersion)
        throw EnumError("checkpoint: order_version mismatch (" + checkpoint.order_version +
                        " vs " + kEnumOrderVersion + ")");
    Dfs dfs(checkpoint.n, filter, sink);
    size_t pos = dfs.replay(checkpoint.decisions);
    dfs.run(pos);
    return dfs.count();
}

std::uint64_t enumerate_threaded(int n, const EnumFilter& filter, int threads,
                                 const FamilySink& sink) {
    if (threads < 1) throw EnumError("thread count must be >= 1");
    if (threads == 1) return enumerate_union_closed(n, filter, sink);
    validate_filter(n, filter);

    int depth = 0;
    std::vector<EnumCheckpoint> tasks = partition_tasks(n, 0);
    const int max_depth = std::min<int>(12, (1 << n) - 2);
    while (static_cast<int>(tasks.size()) < 4 * threads && depth < max_depth) {
        ++depth;
        tasks = partition_tasks(n, depth);
    }

    std::atomic<size_t> next{0};
    std::atomic<std::uint64_t> total{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            total += resume(tasks[i], filter, sink);
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return total.load();
}

}  // namespace ucsc
