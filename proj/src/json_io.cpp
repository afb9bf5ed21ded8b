#include "ucsc/json_io.hpp"

#include <nlohmann/json.hpp>

namespace ucsc {

using nlohmann::json;

json family_to_json(const Family& f) {
    json sets = json::array();
    for (Mask m : f.members()) sets.push_back(elements_of(m));
    return json{{"n", f.n()}, {"sets", std::move(sets)}};
}

Family family_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("sets"))
        throw ParseError("family JSON must be {\"n\": ..., \"sets\": [...]}");
    int n = j.at("n").get<int>();
    std::vector<Mask> members;
    for (const auto& set : j.at("sets")) {
        Mask m = 0;
        for (const auto& e : set) {
            int v = e.get<int>();
            if (v < 1 || v > kMaxGround) throw ParseError("element out of range 1..16");
            m |= Mask{1} << (v - 1);
        }
        members.push_back(m);
    }
    if (members.empty()) throw ParseError("family JSON has no sets");
    return Family(n, std::move(members));
}

json verdict_to_json(const Verdict& v) {
    json j{{"conjecture", conjecture_name(v.conjecture)},
           {"status", status_name(v.status)},
           {"t_value", v.t},
           {"m", v.m},
           {"n", v.n}};
    switch (v.status) {
        case Status::Holds:
            j["witnesses"] = v.witnesses;
            break;
        case Status::Fails:
            j["required"] = v.required;
            j["achieved"] = v.achieved;
            break;
        case Status::NotApplicable:
            j["reason"] = v.reason;
            break;
    }
    return j;
}

json finding_to_json(const Finding& f) {
    json prov;
    switch (f.provenance.kind) {
        case Provenance::Kind::Exhaustive:
            prov = {{"kind", "exhaustive"}, {"checkpoint", checkpoint_to_json(f.provenance.checkpoint)}};
            break;
        case Provenance::Kind::Random:
            prov = {{"kind", "random"}, {"seed", f.provenance.seed}, {"iteration", f.provenance.iteration}};
            break;
        case Provenance::Kind::Fixture:
            prov = {{"kind", "fixture"}};
            break;
    }
    return json{{"target", target_name(f.target)},
                {"family", family_to_json(f.family)},
                {"verdict", verdict_to_json(f.verdict)},
                {"provenance", std::move(prov)}};
}

json checkpoint_to_json(const EnumCheckpoint& c) {
    return json{{"n", c.n}, {"order_version", c.order_version}, {"decisions", c.decisions}};
}

EnumCheckpoint checkpoint_from_json(const json& j) {
    EnumCheckpoint c;
    c.n = j.at("n").get<int>();
    c.order_version = j.at("order_version").get<std::string>();
    c.decisions = j.at("decisions").get<std::string>();
    for (char d : c.decisions)
        if (d != '0' && d != '1') throw EnumError("checkpoint: corrupt decision string");
    return c;
}

Family parse_family_auto(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        // The text format can open with "{}" but never with "{" + '"'.
        if (c == '{' && text.find('"') != std::string::npos)
            return family_from_json(json::parse(text));
        break;
    }
    return parse_family(text);
}

}  // namespace ucsc
