#include "ucsc/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "ucsc/checkers.hpp"
#include "ucsc/enumeration.hpp"
#include "ucsc/family.hpp"
#include "ucsc/json_io.hpp"
#include "ucsc/search.hpp"

namespace ucsc {

namespace {

using nlohmann::json;

constexpr int kExitHolds = 0;
constexpr int kExitNotApplicable = 2;
constexpr int kExitFails = 3;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;
constexpr int kExitInternal = 1;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Family load_family(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadInput("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_family_auto(buf.str());
    } catch (const std::exception& e) {
        throw BadInput(path + ": " + e.what());
    }
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string mask_text(Mask m) {
    return m == 0 ? "{}" : join(elements_of(m));
}

void print_verdict_text(std::ostream& out, const Verdict& v) {
    out << conjecture_name(v.conjecture) << ": " << status_name(v.status);
    switch (v.status) {
        case Status::Holds: out << " (witnesses " << join(v.witnesses) << ")"; break;
        case Status::Fails:
            out << " (required " << v.required << ", achieved " << v.achieved << ")";
            break;
        case Status::NotApplicable: out << " (" << v.reason << ")"; break;
    }
    out << "\n";
}

int verdict_exit(const Verdict& v) {
    switch (v.status) {
        case Status::Holds: return kExitHolds;
        case Status::NotApplicable: return kExitNotApplicable;
        case Status::Fails: return kExitFails;
    }
    return kExitInternal;
}

int cmd_check(const std::string& file, const std::string& conjecture, bool as_json,
              bool strict_half, std::ostream& out) {
    Family f = load_family(file);
    if (auto violation = union_closed_violation(f)) {
        auto [a, b] = *violation;
        throw BadInput("family is not union-closed: " + mask_text(a) + " ∪ " + mask_text(b) +
                       " = " + mask_text(a | b) + " is missing");
    }
    Half rule = strict_half ? Half::MoreThan : Half::AtLeast;
    std::vector<Verdict> verdicts;
    if (conjecture == "frankl" || conjecture == "all") verdicts.push_back(check_frankl(f, rule));
    if (conjecture == "s1" || conjecture == "all") verdicts.push_back(check_s1(f, rule));
    if (conjecture == "s2" || conjecture == "all") verdicts.push_back(check_s2(f, rule));
    if (as_json) {
        if (verdicts.size() == 1) {
            out << verdict_to_json(verdicts[0]).dump() << "\n";
        } else {
            json arr = json::array();
            for (const auto& v : verdicts) arr.push_back(verdict_to_json(v));
            out << arr.dump() << "\n";
        }
    } else {
        for (const auto& v : verdicts) print_verdict_text(out, v);
    }
    int exit_code = kExitHolds;
    for (const auto& v : verdicts) exit_code = std::max(exit_code, verdict_exit(v));
    return exit_code;
}

int cmd_closure(const std::string& file, bool as_json, std::ostream& out) {
    Family closed = union_closure(load_family(file));
    if (as_json)
        out << family_to_json(closed).dump() << "\n";
    else
        out << format_family(closed);
    return kExitHolds;
}

int cmd_enumerate(int n, std::optional<int> t_min, std::optional<int> t_exact, bool canonical,
                  bool count_only, const std::string& check, const std::string& checkpoint_file,
                  int threads, std::ostream& out, std::ostream& err) {
    EnumFilter filter;
    filter.t_min = t_min;
    filter.t_exact = t_exact;
    filter.canonical_only = canonical;

    std::mutex io_mutex;
    std::uint64_t violations = 0;
    std::optional<Family> first_violation;
    FamilySink sink;
    if (!check.empty()) {
        sink = [&](const Family& f) {
            Verdict v = check == "frankl" ? check_frankl(f) : check == "s1" ? check_s1(f) : check_s2(f);
            if (v.status == Status::Fails) {
                std::lock_guard lock(io_mutex);
                ++violations;
                if (!first_violation) first_violation = f;
                out << json{{"family", family_to_json(f)}, {"verdict", verdict_to_json(v)}}.dump()
                    << "\n";
            }
        };
    } else if (!count_only) {
        sink = [&](const Family& f) {
            std::lock_guard lock(io_mutex);
            out << family_to_json(f).dump() << "\n";
        };
    }

    auto start = std::chrono::steady_clock::now();
    std::uint64_t count;
    if (!checkpoint_file.empty()) {
        std::ifstream in(checkpoint_file, std::ios::binary);
        if (!in) throw BadInput("cannot open checkpoint: " + checkpoint_file);
        json j;
        try {
            in >> j;
            count = resume(checkpoint_from_json(j), filter, sink);
        } catch (const EnumError&) {
            throw;
        } catch (const std::exception& e) {
            throw BadInput(checkpoint_file + ": " + e.what());
        }
    } else {
        count = enumerate_threaded(n, filter, threads, sink);
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "enumerated " << count << " families in " << secs << "s ("
        << static_cast<std::uint64_t>(secs > 0 ? count / secs : 0) << " families/s)\n";
    if (count_only || !check.empty()) out << count << "\n";
    if (!check.empty()) {
        err << "violations of " << check << ": " << violations << "\n";
        if (violations > 0) return kExitFails;
    }
    return kExitHolds;
}

int cmd_search(const std::string& mode, int n, const std::string& target_str, std::uint64_t seed,
               std::uint64_t iters, int threads, std::size_t cap, int gen_min, int gen_max,
               int size_min, int size_max, int blocks, int block_size, int spine, bool as_json,
               std::ostream& out, std::ostream& err) {
    auto target = parse_target(target_str);
    if (!target) throw BadInput("unknown target: " + target_str);
    ScanResult result;
    if (mode == "exhaustive") {
        SearchTarget targets[] = {*target};
        result = exhaustive_scan(n, targets, threads, cap);
    } else if (mode == "random") {
        RandomSearchParams params;
        params.seed = seed;
        params.iterations = iters;
        params.gen_count_min = gen_min;
        params.gen_count_max = gen_max;
        params.size_min = size_min;
        params.size_max = size_max;
        params.cap = cap;
        params.threads = threads;
        result = random_closure_search(n, *target, params);
    } else {
        result = block_template_scan(n, blocks, block_size, spine, *target, cap);
    }
    for (const Finding& f : result.findings) out << finding_to_json(f).dump() << "\n";
    if (as_json)
        err << json{{"checked", result.checked},
                    {"found", result.findings.size()},
                    {"suppressed", result.suppressed}}
                   .dump()
            << "\n";
    else
        err << "checked " << result.checked << " families, found " << result.findings.size()
            << " (suppressed " << result.suppressed << ")\n";
    return result.findings.empty() ? kExitHolds : kExitFails;
}

int cmd_verify_paper_example(bool as_json, std::ostream& out) {
    PaperExampleReport report = verify_paper_example();
    if (as_json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        out << json{{"ok", report.ok}, {"checks", std::move(checks)}}.dump() << "\n";
    } else {
        for (const auto& c : report.checks)
            out << (c.ok ? "PASS" : "FAIL") << " " << c.name
                << (c.detail.empty() ? "" : " " + c.detail) << "\n";
        out << (report.ok ? "OK" : "MISMATCH") << "\n";
    }
    return report.ok ? kExitHolds : kExitInternal;
}

int cmd_stats(const std::string& file, std::ostream& out) {
    Family f = load_family(file);
    out << "m: " << f.size() << "\n";
    out << "n: " << f.n() << "\n";
    try {
        out << "T(F): " << t_value(f) << "\n";
    } catch (const FamilyError&) {
        out << "T(F): undefined (no nonempty member)\n";
    }
    out << "frequency_profile: " << join(frequency_profile(f)) << "\n";
    out << "size_profile: " << join(size_profile(f)) << "\n";
    out << "abundant: " << join(abundant_elements(f)) << "\n";
    out << "union_closed: " << (is_union_closed(f) ? "yes" : "no") << "\n";
    return kExitHolds;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"union-closed set family laboratory"};
    app.require_subcommand(1);
    int default_threads = static_cast<int>(std::thread::hardware_concurrency());
    if (default_threads < 1) default_threads = 1;

    // check
    auto* check = app.add_subcommand("check", "evaluate conjectures on a family file");
    std::string check_conjecture = "all", check_file;
    bool check_json = false, strict_half = false;
    check->add_option("--conjecture", check_conjecture)
        ->check(CLI::IsMember({"frankl", "s1", "s2", "all"}));
    check->add_flag("--json", check_json);
    check->add_flag("--strict-half", strict_half, "experimental strict majority threshold");
    check->add_option("file", check_file)->required();

    // closure
    auto* closure = app.add_subcommand("closure", "union-closure of a generator file");
    std::string closure_file;
    bool closure_json = false;
    closure->add_flag("--json", closure_json);
    closure->add_option("file", closure_file)->required();

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "enumerate union-closed families");
    int enum_n = 0, enum_threads = default_threads;
    std::optional<int> t_min, t_exact;
    bool canonical = false, count_only = false;
    std::string enum_check, checkpoint_file;
    enumerate->add_option("--n", enum_n)->required()->check(CLI::Range(1, kMaxEnumGround));
    auto* tmin_opt = enumerate->add_option("--t-min", t_min);
    enumerate->add_option("--t-exact", t_exact)->excludes(tmin_opt);
    enumerate->add_flag("--canonical", canonical);
    enumerate->add_flag("--count-only", count_only);
    enumerate->add_option("--check", enum_check)->check(CLI::IsMember({"frankl", "s1", "s2"}));
    enumerate->add_option("--checkpoint", checkpoint_file);
    enumerate->add_option("--threads", enum_threads)->check(CLI::PositiveNumber);

    // search
    auto* search = app.add_subcommand("search", "counterexample search");
    std::string mode, target_str;
    int search_n = 0, search_threads = default_threads;
    std::uint64_t seed = 0, iters = 1000;
    std::size_t cap = 100;
    int gen_min = 2, gen_max = 6, size_min = 1, size_max = 0;
    int blocks = 3, block_size = 2, spine = 3;
    bool search_json = false;
    search->add_option("--mode", mode)->required()->check(CLI::IsMember({"exhaustive", "random", "block"}));
    search->add_option("--n", search_n)->required()->check(CLI::Range(1, kMaxGround));
    search->add_option("--target", target_str)->required();
    search->add_option("--seed", seed);
    search->add_option("--iters", iters);
    search->add_option("--cap", cap);
    search->add_option("--gen-min", gen_min);
    search->add_option("--gen-max", gen_max);
    search->add_option("--size-min", size_min);
    search->add_option("--size-max", size_max);
    search->add_option("--blocks", blocks);
    search->add_option("--block-size", block_size);
    search->add_option("--spine", spine);
    search->add_option("--threads", search_threads)->check(CLI::PositiveNumber);
    search->add_flag("--json", search_json);

    // verify-paper-example
    auto* verify = app.add_subcommand("verify-paper-example", "check the n=9 fixture facts");
    bool verify_json = false;
    verify->add_flag("--json", verify_json);

    // stats
    auto* stats = app.add_subcommand("stats", "print family statistics");
    std::string stats_file;
    stats->add_option("file", stats_file)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitHolds;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(check_file, check_conjecture, check_json, strict_half, out);
        if (closure->parsed()) return cmd_closure(closure_file, closure_json, out);
        if (enumerate->parsed())
            return cmd_enumerate(enum_n, t_min, t_exact, canonical, count_only, enum_check,
                                 checkpoint_file, enum_threads, out, err);
        if (search->parsed())
            return cmd_search(mode, search_n, target_str, seed, iters, search_threads, cap, gen_min,
                              gen_max, size_min, size_max, blocks, block_size, spine, search_json,
                              out, err);
        if (verify->parsed()) return cmd_verify_paper_example(verify_json, out);
        if (stats->parsed()) return cmd_stats(stats_file, out);
    } catch (const BadInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace ucsc
