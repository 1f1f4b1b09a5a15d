#include "slnstate/diagrams.hpp"

#include <json.hpp>

namespace slnstate {

using ojson = nlohmann::ordered_json;

std::string to_pd_json(const KnottedMoyGraph& d) {
    ojson j;
    j["N"] = d.N;
    j["arcs"] = ojson::array();
    for (const auto& e : d.arcs) j["arcs"].push_back({{"id", e.id}, {"color", e.color}});
    j["crossings"] = ojson::array();
    for (const auto& c : d.crossings)
        j["crossings"].push_back(
            {{"sign", c.sign}, {"a1", c.a[0]}, {"a2", c.a[1]}, {"a3", c.a[2]}, {"a4", c.a[3]}});
    j["vertices"] = ojson::array();
    for (const auto& v : d.vertices) j["vertices"].push_back({{"in", v.in}, {"out", v.out}});
    return j.dump() + "\n";
}

namespace {

int get_int(const ojson& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<int> get_ints(const ojson& j, const char* key) {
    if (!j.contains(key)) return {};
    const auto& v = j.at(key);
    if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) throw ParseError(std::string("field '") + key + "' must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

const ojson& get_array(const ojson& j, const char* key) {
    static const ojson empty = ojson::array();
    if (!j.contains(key)) return empty;
    const auto& v = j.at(key);
    if (!v.is_array()) throw ParseError(std::string("field '") + key + "' must be an array");
    return v;
}

}  // namespace

KnottedMoyGraph parse_pd_json(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("diagram JSON must be an object");
    KnottedMoyGraph d;
    d.N = get_int(j, "N");
    for (const auto& a : get_array(j, "arcs")) d.arcs.push_back({get_int(a, "id"), get_int(a, "color")});
    for (const auto& c : get_array(j, "crossings")) {
        Crossing x;
        x.sign = get_int(c, "sign");
        x.a = {get_int(c, "a1"), get_int(c, "a2"), get_int(c, "a3"), get_int(c, "a4")};
        d.crossings.push_back(x);
    }
    for (const auto& v : get_array(j, "vertices")) {
        if (!v.is_object()) throw ParseError("vertex entries must be objects");
        d.vertices.push_back({get_ints(v, "in"), get_ints(v, "out")});
    }
    validate(d);
    return d;
}

}  // namespace slnstate
