#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "ucsc/checkers.hpp"
#include "ucsc/enumeration.hpp"
#include "ucsc/family.hpp"
#include "ucsc/json_io.hpp"
#include "ucsc/search.hpp"

namespace py = pybind11;
using namespace ucsc;

namespace {

Family family_from_sets(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<Mask> members;
    for (const auto& set : sets) {
        Mask m = 0;
        for (int e : set) {
            if (e < 1 || e > kMaxGround) throw FamilyError("element out of range 1..16");
            m |= Mask{1} << (e - 1);
        }
        members.push_back(m);
    }
    return Family(n, std::move(members));
}

std::vector<std::vector<int>> family_sets(const Family& f) {
    std::vector<std::vector<int>> out;
    for (Mask m : f.members()) out.push_back(elements_of(m));
    return out;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict d;
    d["conjecture"] = conjecture_name(v.conjecture);
    d["status"] = status_name(v.status);
    d["t_value"] = v.t;
    d["m"] = v.m;
    d["n"] = v.n;
    if (v.status == Status::Holds) d["witnesses"] = v.witnesses;
    if (v.status == Status::Fails) {
        d["required"] = v.required;
        d["achieved"] = v.achieved;
    }
    if (v.status == Status::NotApplicable) d["reason"] = v.reason;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ucsc, m) {
    m.doc() = "union-closed set family core operations";

    py::register_exception<FamilyError>(m, "FamilyError");

    py::class_<Family>(m, "Family")
        .def(py::init(&family_from_sets), py::arg("n"), py::arg("sets"))
        .def_property_readonly("n", &Family::n)
        .def_property_readonly("m", &Family::size)
        .def_property_readonly("sets", &family_sets)
        .def("__len__", &Family::size)
        .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
        .def("__repr__", [](const Family& f) {
            return "Family(n=" + std::to_string(f.n()) + ", m=" + std::to_string(f.size()) + ")";
        });

    m.def("parse_family", [](const std::string& text) { return parse_family_auto(text); });
    m.def("format_family", &format_family);
    m.def("is_union_closed", &is_union_closed);
    m.def("union_closure", &union_closure);
    m.def("universe", [](const Family& f) { return elements_of(universe(f)); });
    m.def("t_value", &t_value);
    m.def("frequency_profile", &frequency_profile);
    m.def("abundant_elements",
          [](const Family& f, bool strict) {
              return abundant_elements(f, strict ? Half::MoreThan : Half::AtLeast);
          },
          py::arg("family"), py::arg("strict") = false);
    m.def("size_profile", &size_profile);
    m.def("permute", [](const Family& f, const std::vector<int>& perm) { return permute(f, perm); });
    m.def("canonical_form", &canonical_form);

    m.def("check_frankl", [](const Family& f) { return verdict_dict(check_frankl(f)); });
    m.def("check_s1", [](const Family& f) { return verdict_dict(check_s1(f)); });
    m.def("check_s2", [](const Family& f) { return verdict_dict(check_s2(f)); });
    m.def("lemma_1_2_witness", [](const Family& f) -> py::object {
        auto w = lemma_1_2_witness(f);
        if (!w) return py::none();
        return py::make_tuple(elements_of(w->first), elements_of(w->second));
    });
    m.def("averaging_argument", [](const Family& f) -> py::object {
        auto e = averaging_argument(f);
        if (!e) return py::none();
        return py::int_(*e);
    });
    m.def("evaluate_questions", [](const Family& f) {
        QuestionReport r = evaluate_questions(f);
        py::dict d;
        d["q1_applicable"] = r.q1_applicable;
        d["q1_holds"] = r.q1_holds;
        d["q2_applicable"] = r.q2_applicable;
        d["q2_holds"] = r.q2_holds;
        d["q3_applicable"] = r.q3_applicable;
        d["q3_holds"] = r.q3_holds;
        return d;
    });

    m.def("enumerate_union_closed",
          [](int n, py::object sink, std::optional<int> t_min, std::optional<int> t_exact,
             bool canonical_only) {
              EnumFilter filter{t_min, t_exact, canonical_only, std::nullopt};
              FamilySink cb;
              if (!sink.is_none()) cb = [&sink](const Family& f) { sink(f); };
              return enumerate_union_closed(n, filter, cb);
          },
          py::arg("n"), py::arg("sink") = py::none(), py::arg("t_min") = py::none(),
          py::arg("t_exact") = py::none(), py::arg("canonical_only") = false);
    m.def("naive_enumerate", &naive_enumerate);

    m.def("paper_example", &paper_example);
    m.def("verify_paper_example", []() {
        PaperExampleReport r = verify_paper_example();
        py::list checks;
        for (const auto& c : r.checks) {
            py::dict d;
            d["name"] = c.name;
            d["ok"] = c.ok;
            d["detail"] = c.detail;
            checks.append(d);
        }
        py::dict out;
        out["ok"] = r.ok;
        out["checks"] = checks;
        return out;
    });
    m.def("exhaustive_scan",
          [](int n, const std::string& target_str, int threads) {
              auto target = parse_target(target_str);
              if (!target) throw FamilyError("unknown target: " + target_str);
              SearchTarget targets[] = {*target};
              ScanResult r = exhaustive_scan(n, targets, threads);
              py::list findings;
              for (const Finding& f : r.findings)
                  findings.append(py::make_tuple(f.family, verdict_dict(f.verdict)));
              return py::make_tuple(r.checked, findings);
          },
          py::arg("n"), py::arg("target"), py::arg("threads") = 1);
    m.def("random_closure_search",
          [](int n, const std::string& target_str, std::uint64_t seed, std::uint64_t iterations,
             int gen_min, int gen_max, int size_min, int size_max) {
              auto target = parse_target(target_str);
              if (!target) throw FamilyError("unknown target: " + target_str);
              RandomSearchParams params;
              params.seed = seed;
              params.iterations = iterations;
              params.gen_count_min = gen_min;
              params.gen_count_max = gen_max;
              params.size_min = size_min;
              params.size_max = size_max;
              ScanResult r = random_closure_search(n, *target, params);
              py::list findings;
              for (const Finding& f : r.findings)
                  findings.append(py::make_tuple(f.family, verdict_dict(f.verdict)));
              return py::make_tuple(r.checked, findings);
          },
          py::arg("n"), py::arg("target"), py::arg("seed") = 0, py::arg("iterations") = 1000,
          py::arg("gen_min") = 2, py::arg("gen_max") = 6, py::arg("size_min") = 1,
          py::arg("size_max") = 0);
}
