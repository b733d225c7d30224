#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "semitop/consensus.hpp"
#include "semitop/duality.hpp"
#include "semitop/semiframe.hpp"
#include "semitop/semitopology.hpp"

namespace semitop {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

inline void reject_unknown_fields(const json& j, const std::set<std::string>& allowed,
                                  const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            throw input_error("unknown field at " + where + "/" + it.key());
}

inline void check_kind(const json& j, const std::string& kind) {
    if (j.contains("kind") && j.at("kind") != kind)
        throw input_error("document kind is " + j.at("kind").get<std::string>() +
                          ", expected " + kind);
    if (j.contains("schema") && j.at("schema") != kSchemaVersion)
        throw input_error("unsupported schema version");
}

inline std::vector<std::string> string_list(const json& j, const std::string& where) {
    if (!j.is_array()) throw input_error(where + " must be an array");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) throw input_error(where + " entries must be strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

inline json render_set_list(const Semitopology& s, const Bitset& b) {
    json a = json::array();
    for (auto i : b.members()) a.push_back(s.points()[i]);
    return a;
}

// ---- semitopology documents -------------------------------------------

inline Semitopology parse_semitopology(const json& j) {
    if (!j.is_object()) throw input_error("semitopology document must be an object");
    check_kind(j, "semitopology");
    reject_unknown_fields(j, {"kind", "schema", "points", "generators", "opens"}, "");
    if (!j.contains("points")) throw input_error("missing field /points");
    auto points = string_list(j.at("points"), "/points");
    std::vector<std::vector<std::string>> gens;
    if (j.contains("generators")) {
        for (const auto& g : j.at("generators"))
            gens.push_back(string_list(g, "/generators"));
    }
    if (!j.contains("opens") && !j.contains("generators"))
        throw input_error("semitopology document needs /generators or /opens");
    if (!j.contains("opens"))
        return Semitopology::build_named(std::move(points), gens);

    // Opens given explicitly: they must already be a union-closed family
    // containing the empty set and the whole space.
    std::vector<std::vector<std::string>> opens_in;
    for (const auto& o : j.at("opens"))
        opens_in.push_back(string_list(o, "/opens"));
    auto all = opens_in;
    for (const auto& g : gens) all.push_back(g);
    Semitopology s = Semitopology::build_named(std::move(points), all);
    std::set<Bitset> given;
    {
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < s.points().size(); ++i) index[s.points()[i]] = i;
        for (const auto& o : opens_in) {
            Bitset b(s.size());
            for (const auto& id : o) b.set(index.at(id));
            given.insert(b);
        }
        given.insert(s.empty_set());
        given.insert(s.whole());
    }
    for (const auto& o : s.opens())
        if (!given.count(o))
            throw input_error("opens family is not union-closed: missing " +
                              s.render_set(o));
    return s;
}

inline json render_semitopology(const Semitopology& s) {
    json j;
    j["kind"] = "semitopology";
    j["schema"] = kSchemaVersion;
    j["points"] = s.points();
    json opens = json::array();
    for (const auto& o : s.opens()) opens.push_back(render_set_list(s, o));
    j["opens"] = opens;
    return j;
}

// ---- semiframe documents ----------------------------------------------

inline Semiframe parse_semiframe(const json& j) {
    if (!j.is_object()) throw input_error("semiframe document must be an object");
    check_kind(j, "semiframe");
    reject_unknown_fields(j, {"kind", "schema", "elements", "leq", "compat", "bottom", "top"},
                          "");
    if (!j.contains("elements")) throw input_error("missing field /elements");
    auto ids = string_list(j.at("elements"), "/elements");
    auto pair_list = [&](const char* field) {
        std::vector<std::pair<std::string, std::string>> out;
        if (!j.contains(field)) return out;
        for (const auto& p : j.at(field)) {
            if (!p.is_array() || p.size() != 2)
                throw input_error(std::string("/") + field + " entries must be pairs");
            out.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
        }
        return out;
    };
    Semiframe x = Semiframe::build_named(std::move(ids), pair_list("leq"), pair_list("compat"));
    if (j.contains("bottom") && j.at("bottom") != x.ids()[x.bottom()])
        throw input_error("declared bottom does not match the order");
    if (j.contains("top") && j.at("top") != x.ids()[x.top()])
        throw input_error("declared top does not match the order");
    return x;
}

inline json render_semiframe(const Semiframe& x) {
    json j;
    j["kind"] = "semiframe";
    j["schema"] = kSchemaVersion;
    j["elements"] = x.ids();
    json leq = json::array();
    json compat = json::array();
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < x.size(); ++b) {
            if (a != b && x.leq(a, b)) leq.push_back(json::array({x.ids()[a], x.ids()[b]}));
            if (a <= b && x.compat(a, b))
                compat.push_back(json::array({x.ids()[a], x.ids()[b]}));
        }
    j["leq"] = leq;
    j["compat"] = compat;
    j["bottom"] = x.ids()[x.bottom()];
    j["top"] = x.ids()[x.top()];
    return j;
}

// ---- assignment documents ----------------------------------------------

inline std::map<std::string, std::string> parse_assignment(const json& j) {
    if (!j.is_object()) throw input_error("assignment document must be an object");
    check_kind(j, "assignment");
    reject_unknown_fields(j, {"kind", "schema", "assignment"}, "");
    if (!j.contains("assignment")) throw input_error("missing field /assignment");
    std::map<std::string, std::string> out;
    for (auto it = j.at("assignment").begin(); it != j.at("assignment").end(); ++it) {
        if (!it.value().is_string())
            throw input_error("assignment values must be strings");
        out[it.key()] = it.value().get<std::string>();
    }
    return out;
}

inline json render_assignment(const Semitopology& s, const ValueAssignment& f) {
    json j;
    j["kind"] = "assignment";
    j["schema"] = kSchemaVersion;
    json a = json::object();
    for (std::size_t i = 0; i < s.size(); ++i) a[s.points()[i]] = f.values[i];
    j["assignment"] = a;
    return j;
}

// ---- map documents ------------------------------------------------------

struct MapDocument {
    std::string map_kind;  // "space" or "frame"
    json source;
    json target;
    std::map<std::string, std::string> assoc;
};

inline MapDocument parse_map_document(const json& j) {
    if (!j.is_object()) throw input_error("map document must be an object");
    check_kind(j, "map");
    reject_unknown_fields(j, {"kind", "schema", "map_kind", "source", "target", "map"}, "");
    MapDocument d;
    if (!j.contains("map_kind")) throw input_error("missing field /map_kind");
    d.map_kind = j.at("map_kind").get<std::string>();
    if (d.map_kind != "space" && d.map_kind != "frame")
        throw input_error("/map_kind must be \"space\" or \"frame\"");
    if (!j.contains("source") || !j.contains("target") || !j.contains("map"))
        throw input_error("map document needs /source, /target and /map");
    d.source = j.at("source");
    d.target = j.at("target");
    for (auto it = j.at("map").begin(); it != j.at("map").end(); ++it)
        d.assoc[it.key()] = it.value().get<std::string>();
    return d;
}

} // namespace semitop
