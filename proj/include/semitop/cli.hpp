#pragma once

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "semitop/fixtures.hpp"
#include "semitop/graphs.hpp"
#include "semitop/io.hpp"

namespace semitop::cli {

inline json classification_json(const Semitopology& s) {
    SpaceReport rep = space_report(s);
    json j;
    j["kind"] = "analysis";
    j["schema"] = kSchemaVersion;
    json pts = json::array();
    for (const auto& c : rep.points) {
        json p;
        p["point"] = c.point;
        p["intertwined"] = render_set_list(s, c.intertwined);
        p["community"] = render_set_list(s, c.community);
        p["grade"] = grade_name(c.grade);
        p["conflicted"] = c.conflicted;
        p["strongly_compatible"] = c.strongly_compatible;
        pts.push_back(std::move(p));
    }
    j["points"] = pts;
    json part;
    json mt = json::array();
    for (const auto& t : rep.partition.maximal_topens) mt.push_back(render_set_list(s, t));
    part["maximal_topens"] = mt;
    part["irregular_points"] = render_set_list(s, rep.partition.irregular_points);
    j["topen_partition"] = part;
    json flags;
    flags["regular"] = rep.regular;
    flags["weakly_regular"] = rep.weakly_regular;
    flags["quasiregular"] = rep.quasiregular;
    flags["unconflicted"] = rep.unconflicted;
    flags["strongly_compatible"] = rep.strongly_compatible_points;
    flags["hausdorff"] = rep.hausdorff;
    flags["t0"] = rep.t0;
    flags["t1"] = rep.t1;
    flags["discrete"] = rep.discrete;
    j["space"] = flags;
    return j;
}

inline json abstract_points_json(const Semiframe& x) {
    auto pts = abstract_points(x);
    json arr = json::array();
    for (const auto& ap : pts) {
        json p;
        p["name"] = ap.name(x);
        json members = json::array();
        for (auto i : ap.members.members()) members.push_back(x.ids()[i]);
        p["members"] = members;
        p["witness"] = x.ids()[ap.witness];
        if (ap.matched) p["matched_point"] = *ap.matched;
        arr.push_back(std::move(p));
    }
    json j;
    j["kind"] = "abstract-points";
    j["schema"] = kSchemaVersion;
    j["count"] = pts.size();
    j["points"] = arr;
    return j;
}

struct Io {
    std::ostream& out;
    std::ostream& err;
    bool pretty = false;

    void emit(const json& j) const { out << (pretty ? j.dump(2) : j.dump()) << "\n"; }
};

inline json load_document(const std::string& input) {
    if (input.rfind("fixture:", 0) == 0)
        return render_semitopology(fixture(input.substr(8)));
    std::ifstream f(input);
    if (!f) throw input_error("cannot open input: " + input);
    json j;
    try {
        j = json::parse(f);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error("malformed JSON in " + input + ": " + e.what());
    }
    return j;
}

inline std::string doc_kind(const json& j) {
    if (j.is_object() && j.contains("kind")) return j.at("kind").get<std::string>();
    if (j.is_object() && j.contains("elements")) return "semiframe";
    if (j.is_object() && j.contains("points")) return "semitopology";
    if (j.is_object() && j.contains("assignment")) return "assignment";
    throw input_error("cannot determine document kind");
}

inline Semitopology load_space(const std::string& input) {
    return parse_semitopology(load_document(input));
}

// Frame-level commands accept a semiframe document or any space (fr applied).
inline Semiframe load_frame(const std::string& input) {
    json j = load_document(input);
    if (doc_kind(j) == "semiframe") return parse_semiframe(j);
    return Semiframe::fr(parse_semitopology(j));
}

inline Bitset parse_point_args(const Semitopology& s,
                               const std::vector<std::string>& ids) {
    Bitset b(s.size());
    for (const auto& id : ids) b.set(s.point_index(id));
    return b;
}

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Io io{out, err};
    try {
        // strip global flags
        std::vector<std::string> rest;
        for (const auto& a : args) {
            if (a == "--pretty") io.pretty = true;
            else rest.push_back(a);
        }
        if (rest.empty()) {
            err << "usage: semitop <command> [input] [args...]\n"
                << "commands: validate analyze topens intertwined community closure\n"
                << "  interior fr st points soberify check-sober check-spatial\n"
                << "  check-strong-compat roundtrip graph consensus split morphism fixtures\n";
            return 2;
        }
        const std::string cmd = rest[0];
        std::vector<std::string> pos(rest.begin() + 1, rest.end());
        auto need = [&](std::size_t n, const char* what) {
            if (pos.size() < n) throw input_error(std::string("missing argument: ") + what);
        };

        if (cmd == "fixtures") {
            json arr = json::array();
            for (const auto& f : fixture_catalogue()) {
                json e;
                e["name"] = f.name;
                e["description"] = f.description;
                e["points"] = f.points;
                arr.push_back(std::move(e));
            }
            json j;
            j["kind"] = "fixtures";
            j["schema"] = kSchemaVersion;
            j["fixtures"] = arr;
            io.emit(j);
            return 0;
        }
        if (cmd == "validate") {
            need(1, "input document");
            json j = load_document(pos[0]);
            std::string kind = doc_kind(j);
            json outj;
            outj["kind"] = "validation";
            outj["schema"] = kSchemaVersion;
            outj["document_kind"] = kind;
            if (kind == "semitopology") {
                Semitopology s = parse_semitopology(j);
                outj["points"] = s.size();
                outj["opens"] = s.opens().size();
            } else if (kind == "semiframe") {
                Semiframe x = parse_semiframe(j);
                outj["elements"] = x.size();
                outj["bottom"] = x.ids()[x.bottom()];
                outj["top"] = x.ids()[x.top()];
            } else if (kind == "assignment") {
                parse_assignment(j);
            } else if (kind == "map") {
                parse_map_document(j);
            } else {
                throw input_error("unknown document kind: " + kind);
            }
            outj["ok"] = true;
            io.emit(outj);
            return 0;
        }
        if (cmd == "analyze") {
            need(1, "input space");
            io.emit(classification_json(load_space(pos[0])));
            return 0;
        }
        if (cmd == "topens") {
            need(1, "input space");
            Semitopology s = load_space(pos[0]);
            json arr = json::array();
            for (const auto& t : topens(s)) arr.push_back(render_set_list(s, t));
            json part;
            auto mp = maximal_topen_partition(s);
            json mt = json::array();
            for (const auto& t : mp.maximal_topens) mt.push_back(render_set_list(s, t));
            json j;
            j["kind"] = "topens";
            j["schema"] = kSchemaVersion;
            j["topens"] = arr;
            j["maximal_topens"] = mt;
            j["irregular_points"] = render_set_list(s, mp.irregular_points);
            io.emit(j);
            return 0;
        }
        if (cmd == "intertwined" || cmd == "community") {
            need(1, "input space");
            Semitopology s = load_space(pos[0]);
            json j;
            j["kind"] = cmd;
            j["schema"] = kSchemaVersion;
            auto one = [&](std::size_t p) {
                Bitset r = cmd == "intertwined" ? intertwined_set(s, p) : community(s, p);
                return render_set_list(s, r);
            };
            if (pos.size() >= 2) {
                j["point"] = pos[1];
                j["result"] = one(s.point_index(pos[1]));
            } else {
                json m = json::object();
                for (std::size_t p = 0; p < s.size(); ++p) m[s.points()[p]] = one(p);
                j["result"] = m;
            }
            io.emit(j);
            return 0;
        }
        if (cmd == "closure" || cmd == "interior") {
            need(1, "input space");
            Semitopology s = load_space(pos[0]);
            Bitset a = parse_point_args(s, {pos.begin() + 1, pos.end()});
            Bitset r = cmd == "closure" ? s.closure(a) : s.interior(a);
            json j;
            j["kind"] = cmd;
            j["schema"] = kSchemaVersion;
            j["set"] = render_set_list(s, a);
            j["result"] = render_set_list(s, r);
            io.emit(j);
            return 0;
        }
        if (cmd == "fr") {
            need(1, "input space");
            io.emit(render_semiframe(Semiframe::fr(load_space(pos[0]))));
            return 0;
        }
        if (cmd == "st") {
            need(1, "input semiframe");
            Semiframe x = load_frame(pos[0]);
            StResult r = st(x);
            json j;
            j["kind"] = "st";
            j["schema"] = kSchemaVersion;
            j["space"] = render_semitopology(r.space);
            j["points"] = abstract_points_json(x)["points"];
            io.emit(j);
            return 0;
        }
        if (cmd == "points") {
            need(1, "input semiframe or space");
            io.emit(abstract_points_json(load_frame(pos[0])));
            return 0;
        }
        if (cmd == "soberify") {
            need(1, "input space");
            Semitopology s = load_space(pos[0]);
            SoberifyResult r = soberify(s);
            json j;
            j["kind"] = "soberify";
            j["schema"] = kSchemaVersion;
            j["space"] = render_semitopology(r.space);
            json m = json::object();
            for (std::size_t p = 0; p < s.size(); ++p)
                m[s.points()[p]] = r.space.points()[r.map[p]];
            j["map"] = m;
            j["map_continuous"] = r.map_continuous;
            j["target_sober"] = r.target_sober;
            j["opens_isomorphic"] = r.opens_isomorphic;
            j["kernel_is_indistinguishability"] = r.kernel_is_indistinguishability;
            io.emit(j);
            return 0;
        }
        if (cmd == "check-sober") {
            need(1, "input space");
            auto v = is_sober(load_space(pos[0]));
            json j;
            j["kind"] = "check-sober";
            j["schema"] = kSchemaVersion;
            j["sober"] = v.sober;
            if (!v.sober) j["witness"] = v.witness;
            io.emit(j);
            return v.sober ? 0 : 1;
        }
        if (cmd == "check-spatial") {
            need(1, "input semiframe or space");
            auto v = is_spatial(load_frame(pos[0]));
            json j;
            j["kind"] = "check-spatial";
            j["schema"] = kSchemaVersion;
            j["spatial"] = v.spatial;
            if (!v.spatial) j["witness"] = v.witness;
            io.emit(j);
            return v.spatial ? 0 : 1;
        }
        if (cmd == "check-strong-compat") {
            need(1, "input space");
            auto v = is_strongly_compatible_space(load_space(pos[0]));
            json j;
            j["kind"] = "check-strong-compat";
            j["schema"] = kSchemaVersion;
            j["strongly_compatible"] = v.strongly_compatible;
            if (!v.strongly_compatible) j["witness"] = v.witness;
            io.emit(j);
            return v.strongly_compatible ? 0 : 1;
        }
        if (cmd == "roundtrip") {
            need(1, "input space or semiframe");
            json doc = load_document(pos[0]);
            RoundtripReport r = doc_kind(doc) == "semiframe"
                                    ? roundtrip_frame(parse_semiframe(doc))
                                    : roundtrip_space(parse_semitopology(doc));
            json j;
            j["kind"] = "roundtrip";
            j["schema"] = kSchemaVersion;
            j["precondition_ok"] = r.precondition_ok;
            if (!r.precondition_witness.empty()) j["witness"] = r.precondition_witness;
            j["roundtrip_ok"] = r.roundtrip_ok;
            j["detail"] = r.detail;
            io.emit(j);
            return r.precondition_ok && r.roundtrip_ok ? 0 : 1;
        }
        if (cmd == "graph") {
            need(1, "input");
            std::string kind = "intersection", format = "json";
            std::vector<std::string> p2;
            for (std::size_t i = 0; i < pos.size(); ++i) {
                if (pos[i] == "--kind" && i + 1 < pos.size()) kind = pos[++i];
                else if (pos[i] == "--format" && i + 1 < pos.size()) format = pos[++i];
                else p2.push_back(pos[i]);
            }
            if (kind == "intersection") {
                IntersectionGraph g = intersection_graph(load_space(p2.at(0)));
                if (format == "dot") {
                    out << intersection_graph_dot(g);
                } else if (format == "json") {
                    json j;
                    j["kind"] = "intersection-graph";
                    j["schema"] = kSchemaVersion;
                    j["nodes"] = g.labels;
                    json edges = json::array();
                    for (std::size_t i = 0; i < g.nodes.size(); ++i)
                        for (std::size_t k = i + 1; k < g.nodes.size(); ++k)
                            if (g.adj[i].test(k))
                                edges.push_back(json::array({g.labels[i], g.labels[k]}));
                    j["edges"] = edges;
                    io.emit(j);
                } else {
                    throw input_error("unknown --format: " + format);
                }
            } else if (kind == "straddle") {
                StraddleGraph g = straddle_graph(load_frame(p2.at(0)));
                if (format == "dot") {
                    out << straddle_graph_dot(g);
                } else if (format == "json") {
                    json j;
                    j["kind"] = "straddle-graph";
                    j["schema"] = kSchemaVersion;
                    j["nodes"] = g.labels;
                    json edges = json::array();
                    for (std::size_t i = 0; i < g.nodes.size(); ++i)
                        for (std::size_t k = 0; k < g.nodes.size(); ++k)
                            if (g.out_edges[i].test(k))
                                edges.push_back(json::array({g.labels[i], g.labels[k]}));
                    j["edges"] = edges;
                    io.emit(j);
                } else {
                    throw input_error("unknown --format: " + format);
                }
            } else {
                throw input_error("unknown --kind: " + kind);
            }
            return 0;
        }
        if (cmd == "consensus") {
            need(2, "input space and assignment");
            Semitopology s = load_space(pos[0]);
            ValueAssignment f = make_assignment(s, parse_assignment(load_document(pos[1])));
            ConsensusReport r = check_consensus(s, f);
            json j;
            j["kind"] = "consensus";
            j["schema"] = kSchemaVersion;
            j["continuity_points"] = render_set_list(s, continuity_points(s, f));
            json ts = json::array();
            for (const auto& tc : r.topens) {
                json e;
                e["topen"] = render_set_list(s, tc.topen);
                e["all_continuous"] = tc.all_continuous;
                e["constant"] = tc.constant;
                if (tc.constant) e["value"] = tc.value;
                ts.push_back(std::move(e));
            }
            j["maximal_topens"] = ts;
            json viol = json::array();
            for (const auto& v : r.violations) viol.push_back(render_set_list(s, v));
            j["violations"] = viol;
            j["intersecting_topens_agree"] = r.intersecting_topens_agree;
            io.emit(j);
            return r.violations.empty() ? 0 : 1;
        }
        if (cmd == "split") {
            need(1, "input space");
            std::string v0 = "a", v1 = "b";
            std::vector<std::string> ids;
            for (std::size_t i = 1; i < pos.size(); ++i) {
                if (pos[i] == "--values" && i + 1 < pos.size()) {
                    std::string vs = pos[++i];
                    auto comma = vs.find(',');
                    if (comma == std::string::npos)
                        throw input_error("--values needs two comma-separated tokens");
                    v0 = vs.substr(0, comma);
                    v1 = vs.substr(comma + 1);
                } else {
                    ids.push_back(pos[i]);
                }
            }
            Semitopology s = load_space(pos[0]);
            Bitset t = parse_point_args(s, ids);
            SplitResult r = find_splitting(s, t, v0, v1);
            json j;
            j["kind"] = "split";
            j["schema"] = kSchemaVersion;
            j["set"] = render_set_list(s, t);
            j["transitive"] = r.transitive;
            if (!r.transitive) {
                j["assignment"] = render_assignment(s, r.assignment)["assignment"];
                j["witness_points"] = json::array({s.points()[r.p], s.points()[r.q]});
                j["opens"] = json::array(
                    {render_set_list(s, r.open_a), render_set_list(s, r.open_b)});
            }
            io.emit(j);
            return 0;
        }
        if (cmd == "morphism") {
            need(1, "map document");
            MapDocument d = parse_map_document(load_document(pos[0]));
            json j;
            j["kind"] = "morphism";
            j["schema"] = kSchemaVersion;
            j["map_kind"] = d.map_kind;
            bool ok;
            std::string witness;
            if (d.map_kind == "space") {
                Semitopology src = parse_semitopology(d.source);
                Semitopology dst = parse_semitopology(d.target);
                std::vector<std::size_t> assoc;
                for (const auto& p : src.points()) {
                    auto it = d.assoc.find(p);
                    if (it == d.assoc.end())
                        throw input_error("map missing source point: " + p);
                    assoc.push_back(dst.point_index(it->second));
                }
                SpaceMap m = validate_space_map(src, dst, std::move(assoc));
                ok = m.continuous;
                witness = m.witness;
                j["continuous"] = ok;
            } else {
                Semiframe src = parse_semiframe(d.source);
                Semiframe dst = parse_semiframe(d.target);
                std::vector<std::size_t> assoc;
                for (const auto& e : src.ids()) {
                    auto it = d.assoc.find(e);
                    if (it == d.assoc.end())
                        throw input_error("map missing source element: " + e);
                    assoc.push_back(dst.element_index(it->second));
                }
                FrameMap m = validate_frame_map(src, dst, std::move(assoc));
                ok = m.valid;
                witness = m.witness;
                j["valid"] = ok;
            }
            if (!ok) j["witness"] = witness;
            io.emit(j);
            return ok ? 0 : 1;
        }
        throw input_error("unknown command: " + cmd);
    } catch (const resource_error& e) {
        err << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const semiframe_error& e) {
        err << "input error [" << e.kind << "]: " << e.what() << "\n";
        return 2;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace semitop::cli
