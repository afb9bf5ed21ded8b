#include "ucsc/search.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

namespace ucsc {

std::string target_name(SearchTarget t) {
    switch (t) {
        case SearchTarget::FranklFail: return "frankl-fail";
        case SearchTarget::S1Fail: return "s1-fail";
        case SearchTarget::S2Fail: return "s2-fail";
        case SearchTarget::Q1Fail: return "q1";
        case SearchTarget::Q2Fail: return "q2";
        case SearchTarget::Q3Fail: return "q3";
    }
    return "?";
}

std::optional<SearchTarget> parse_target(const std::string& name) {
    if (name == "frankl-fail") return SearchTarget::FranklFail;
    if (name == "s1-fail") return SearchTarget::S1Fail;
    if (name == "s2-fail") return SearchTarget::S2Fail;
    if (name == "q1") return SearchTarget::Q1Fail;
    if (name == "q2") return SearchTarget::Q2Fail;
    if (name == "q3") return SearchTarget::Q3Fail;
    return std::nullopt;
}

Family paper_example() {
    return Family(9, {
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
}

namespace {

template <typename T>
std::string show(const std::vector<T>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

void add_check(PaperExampleReport& r, std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
    r.ok = r.ok && ok;
}

}  // namespace

PaperExampleReport verify_paper_example() {
    PaperExampleReport r;
    Family f = paper_example();

    add_check(r, "union_closed", is_union_closed(f), "");
    add_check(r, "m", f.size() == 11, "m=" + std::to_string(f.size()));
    add_check(r, "t_value", t_value(f) == 4, "T=" + std::to_string(t_value(f)));

    auto freq = frequency_profile(f);
    add_check(r, "frequencies", freq == std::vector<int>{5, 5, 5, 5, 5, 5, 9, 9, 9}, show(freq));

    auto abundant = abundant_elements(f);
    add_check(r, "abundant", abundant == std::vector<int>{7, 8, 9}, show(abundant));

    Verdict s1 = check_s1(f);
    add_check(r, "s1_fails_4_3",
              s1.status == Status::Fails && s1.required == 4 && s1.achieved == 3,
              status_name(s1.status) + " required=" + std::to_string(s1.required) +
                  " achieved=" + std::to_string(s1.achieved));

    Verdict s2 = check_s2(f);
    add_check(r, "s2_holds", s2.status == Status::Holds, status_name(s2.status));

    Verdict frankl = check_frankl(f);
    add_check(r, "frankl_holds", frankl.status == Status::Holds, status_name(frankl.status));
    return r;
}

bool target_applicable(SearchTarget target, const Family& f) {
    int t = t_value(f);
    switch (target) {
        case SearchTarget::FranklFail: return true;
        case SearchTarget::S1Fail:
        case SearchTarget::S2Fail: return t >= 2 && f.n() >= 2;
        case SearchTarget::Q1Fail: return t == 3;
        case SearchTarget::Q2Fail: return t == 2;
        case SearchTarget::Q3Fail: return 2 * t > f.n();
    }
    return false;
}

std::optional<Verdict> evaluate_target(SearchTarget target, const Family& f) {
    if (!target_applicable(target, f)) return std::nullopt;
    switch (target) {
        case SearchTarget::FranklFail: return check_frankl(f);
        case SearchTarget::S1Fail: return check_s1(f);
        case SearchTarget::S2Fail: return check_s2(f);
        default: break;
    }
    // Question targets: required abundance count is 3 / 2 / T(F).
    Verdict v;
    v.t = t_value(f);
    v.m = f.size();
    v.n = f.n();
    switch (target) {
        case SearchTarget::Q1Fail: v.conjecture = Conjecture::Q1; v.required = 3; break;
        case SearchTarget::Q2Fail: v.conjecture = Conjecture::Q2; v.required = 2; break;
        default: v.conjecture = Conjecture::Q3; v.required = v.t; break;
    }
    auto abundant = abundant_elements(f);
    if (static_cast<int>(abundant.size()) >= v.required) {
        v.status = Status::Holds;
        v.witnesses = std::move(abundant);
        v.required = 0;
    } else {
        v.status = Status::Fails;
        v.achieved = static_cast<int>(abundant.size());
    }
    return v;
}

namespace {

EnumFilter filter_for_target(int n, SearchTarget target) {
    EnumFilter filter;
    switch (target) {
        case SearchTarget::FranklFail: break;
        case SearchTarget::S1Fail:
        case SearchTarget::S2Fail: filter.t_min = 2; break;
        case SearchTarget::Q1Fail: filter.t_exact = 3; break;
        case SearchTarget::Q2Fail: filter.t_exact = 2; break;
        case SearchTarget::Q3Fail: filter.t_min = std::min(n, n / 2 + 1); break;
    }
    return filter;
}

// Runs the partitioned enumeration on a pool, collecting per-task results
// and merging them in task order so the output is thread-count invariant.
template <typename PerFamily>
std::uint64_t scan_tasks(int n, const EnumFilter& filter, int threads, PerFamily&& per_family,
                         std::vector<std::vector<Finding>>& merged) {
    auto tasks = partition_tasks(n, threads > 1 ? std::min(6, (1 << n) - 2) : 0);
    merged.assign(tasks.size(), {});
    std::atomic<size_t> next{0};
    std::atomic<std::uint64_t> checked{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            checked += resume(tasks[i], filter, [&](const Family& f) {
                per_family(f, tasks[i], merged[i]);
            });
        }
    };
    std::vector<std::thread> pool;
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return checked.load();
}

void apply_cap(ScanResult& result, std::size_t cap) {
    if (result.findings.size() > cap) {
        result.suppressed = result.findings.size() - cap;
        result.findings.erase(result.findings.begin() + static_cast<std::ptrdiff_t>(cap),
                              result.findings.end());
    }
}

}  // namespace

ScanResult exhaustive_scan(int n, std::span<const SearchTarget> targets, int threads,
                           std::size_t cap) {
    ScanResult result;
    for (SearchTarget target : targets) {
        std::vector<std::vector<Finding>> merged;
        auto per_family = [&](const Family& f, const EnumCheckpoint& task,
                              std::vector<Finding>& out) {
            auto verdict = evaluate_target(target, f);
            if (verdict && verdict->status == Status::Fails) {
                Provenance prov;
                prov.kind = Provenance::Kind::Exhaustive;
                prov.checkpoint = task;
                out.push_back({f, target, *verdict, prov});
            }
        };
        result.checked += scan_tasks(n, filter_for_target(n, target), threads, per_family, merged);
        for (auto& part : merged)
            for (auto& finding : part) result.findings.push_back(std::move(finding));
    }
    apply_cap(result, cap);
    return result;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

ScanResult random_closure_search(int n, SearchTarget target, const RandomSearchParams& params) {
    if (n < 1 || n > kMaxGround) throw FamilyError("n out of range 1..16");
    int size_max = params.size_max == 0 ? n : params.size_max;
    if (params.size_min < 1 || size_max > n || params.size_min > size_max ||
        params.gen_count_min < 1 || params.gen_count_min > params.gen_count_max)
        throw FamilyError("invalid random search parameter ranges");

    const Mask full = full_mask(n);
    auto run_iteration = [&](std::uint64_t iter) -> std::optional<Finding> {
        std::mt19937_64 rng(splitmix64(params.seed ^ splitmix64(iter)));
        std::uniform_int_distribution<int> count_dist(params.gen_count_min, params.gen_count_max);
        std::uniform_int_distribution<int> size_dist(params.size_min, size_max);
        std::vector<Mask> gens{0};
        int count = count_dist(rng);
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i) pool[i] = i;
        for (int g = 0; g < count; ++g) {
            int size = size_dist(rng);
            // Partial Fisher-Yates draw of `size` distinct elements.
            Mask m = 0;
            for (int k = 0; k < size; ++k) {
                std::uniform_int_distribution<int> pick(k, n - 1);
                std::swap(pool[k], pool[pick(rng)]);
                m |= Mask{1} << pool[k];
            }
            gens.push_back(m);
        }
        Family closed = union_closure(Family(n, std::move(gens)));
        if (universe(closed) != full) return std::nullopt;
        auto verdict = evaluate_target(target, closed);
        if (!verdict || verdict->status != Status::Fails) return std::nullopt;
        Provenance prov;
        prov.kind = Provenance::Kind::Random;
        prov.seed = params.seed;
        prov.iteration = iter;
        return Finding{std::move(closed), target, std::move(*verdict), prov};
    };

    ScanResult result;
    int threads = std::max(1, params.threads);
    if (threads == 1) {
        for (std::uint64_t iter = 0; iter < params.iterations; ++iter) {
            ++result.checked;
            if (auto finding = run_iteration(iter)) result.findings.push_back(std::move(*finding));
        }
    } else {
        // Chunked by iteration range; merged in chunk order, so the output
        // equals the sequential run.
        std::uint64_t chunk = (params.iterations + threads - 1) / threads;
        std::vector<std::vector<Finding>> parts(threads);
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                std::uint64_t lo = w * chunk;
                std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, params.iterations);
                for (std::uint64_t iter = lo; iter < hi; ++iter)
                    if (auto finding = run_iteration(iter)) parts[w].push_back(std::move(*finding));
            });
        for (auto& t : pool) t.join();
        result.checked = params.iterations;
        for (auto& part : parts)
            for (auto& finding : part) result.findings.push_back(std::move(finding));
    }
    apply_cap(result, params.cap);
    return result;
}

ScanResult block_template_scan(int n, int block_count, int block_size, int spine_size,
                               SearchTarget target, std::size_t cap) {
    if (block_count < 1 || block_size < 1 || spine_size < 0 ||
        block_count * block_size + spine_size > n)
        throw FamilyError("block template does not fit the ground set");
    const Mask full = full_mask(n);
    std::vector<Mask> blocks;
    for (int b = 0; b < block_count; ++b) {
        Mask m = 0;
        for (int k = 0; k < block_size; ++k) m |= Mask{1} << (b * block_size + k);
        blocks.push_back(m);
    }
    const int spine_base = block_count * block_size;
    const std::uint32_t spine_subsets = std::uint32_t{1} << spine_size;

    ScanResult result;
    // Assignment index in base 2^spine_size: which spine subset each block gets.
    std::uint64_t total = 1;
    for (int b = 0; b < block_count; ++b) total *= spine_subsets;
    const Mask full_spine = (spine_subsets - 1) << spine_base;
    for (std::uint64_t assignment = 0; assignment < total; ++assignment) {
        std::vector<Mask> gens{0};
        std::uint64_t rest = assignment;
        for (const Mask block : blocks) {
            Mask spine = static_cast<Mask>(rest % spine_subsets) << spine_base;
            rest /= spine_subsets;
            gens.push_back(block | spine);
            gens.push_back(block | full_spine);
        }
        Family closed = union_closure(Family(n, std::move(gens)));
        if (universe(closed) != full) continue;
        ++result.checked;
        auto verdict = evaluate_target(target, closed);
        if (verdict && verdict->status == Status::Fails) {
            Provenance prov;
            prov.kind = Provenance::Kind::Random;
            prov.seed = assignment;
            result.findings.push_back({std::move(closed), target, std::move(*verdict), prov});
        }
    }
    apply_cap(result, cap);
    return result;
}

QuestionScanReport question_scan(int n, int threads) {
    QuestionScanReport report;
    EnumFilter filter;
    filter.t_min = 2;
    struct Partial {
        QuestionScanReport::PerQuestion q1, q2, q3;
        std::uint64_t families = 0;
    };
    auto tasks = partition_tasks(n, threads > 1 ? std::min(6, (1 << n) - 2) : 0);
    std::vector<Partial> parts(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            resume(tasks[i], filter, [&](const Family& f) {
                Partial& p = parts[i];
                ++p.families;
                QuestionReport qr = evaluate_questions(f);
                auto tally = [&](bool applicable, bool holds, QuestionScanReport::PerQuestion& q) {
                    if (!applicable) return;
                    ++q.instances;
                    if (!holds) {
                        ++q.violations;
                        if (!q.first_violation) q.first_violation = f;
                    }
                };
                tally(qr.q1_applicable, qr.q1_holds, p.q1);
                tally(qr.q2_applicable, qr.q2_holds, p.q2);
                tally(qr.q3_applicable, qr.q3_holds, p.q3);
            });
        }
    };
    std::vector<std::thread> pool;
    int workers = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    auto merge = [](QuestionScanReport::PerQuestion& into, const QuestionScanReport::PerQuestion& from) {
        into.instances += from.instances;
        into.violations += from.violations;
        if (!into.first_violation) into.first_violation = from.first_violation;
    };
    for (const Partial& p : parts) {
        report.families += p.families;
        merge(report.q1, p.q1);
        merge(report.q2, p.q2);
        merge(report.q3, p.q3);
    }
    return report;
}

}  // namespace ucsc
