#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semitop/regularity.hpp"
#include "semitop/semiframe.hpp"

namespace semitop {

struct AbstractPoint {
    Bitset members;       // over parent frame elements; a completely prime semifilter
    std::size_t witness;  // element m with members = { x : x ⋢ m }
    std::optional<std::string> matched;  // concrete point, when parent is fr(S)

    std::string name(const Semiframe& x) const {
        return matched ? *matched : "pt@" + x.ids()[witness];
    }
};

// A subset is up-closed and completely prime iff its complement is a
// principal downset ↓m; it remains to filter by pairwise compatibility.
inline std::vector<AbstractPoint> abstract_points(const Semiframe& x) {
    std::vector<AbstractPoint> out;
    std::vector<std::optional<std::size_t>> matched_points;
    for (std::size_t m = 0; m < x.size(); ++m) {
        if (m == x.top()) continue;
        Bitset p(x.size());
        for (std::size_t e = 0; e < x.size(); ++e)
            if (!x.leq(e, m)) p.set(e);
        if (!x.is_pairwise_compatible(p)) continue;
        AbstractPoint ap;
        ap.members = p;
        ap.witness = m;
        out.push_back(std::move(ap));
    }
    if (x.origin_space()) {
        const auto& s = *x.origin_space();
        const auto& opens = x.origin_opens();
        for (auto& ap : out) {
            for (std::size_t pt = 0; pt < s.size(); ++pt) {
                bool same = true;
                for (std::size_t e = 0; e < opens.size(); ++e)
                    if (ap.members.test(e) != opens[e].test(pt)) { same = false; break; }
                if (same) { ap.matched = s.points()[pt]; break; }
            }
        }
    }
    return out;
}

// Op(x): the abstract points containing x, as a mask over `pts` indices.
inline Bitset op_set(const Semiframe& x, const std::vector<AbstractPoint>& pts,
                     std::size_t e) {
    if (e >= x.size()) throw input_error("element index out of range");
    Bitset r(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (pts[i].members.test(e)) r.set(i);
    return r;
}

struct StResult {
    Semitopology space;
    std::vector<AbstractPoint> points;          // aligned with space.points()
    std::vector<std::size_t> element_to_open;   // frame element -> index in space.opens()
};

inline StResult st(const Semiframe& x) {
    StResult r;
    r.points = abstract_points(x);
    std::vector<std::string> names;
    names.reserve(r.points.size());
    for (const auto& ap : r.points) names.push_back(ap.name(x));
    std::vector<Bitset> gens;
    gens.reserve(x.size());
    for (std::size_t e = 0; e < x.size(); ++e) gens.push_back(op_set(x, r.points, e));
    r.space = Semitopology::build(names, gens);
    r.element_to_open.resize(x.size());
    for (std::size_t e = 0; e < x.size(); ++e) {
        const auto& opens = r.space.opens();
        auto it = std::lower_bound(opens.begin(), opens.end(), gens[e]);
        r.element_to_open[e] = static_cast<std::size_t>(it - opens.begin());
    }
    return r;
}

struct SoberVerdict {
    bool sober = false;
    std::string witness;  // unmatched abstract point, or an indistinguishable pair
};

inline SoberVerdict is_sober(const Semitopology& s) {
    SoberVerdict v;
    Semiframe x = Semiframe::fr(s);
    auto pts = abstract_points(x);
    for (const auto& ap : pts)
        if (!ap.matched) {
            v.witness = "abstract point " + ap.name(x) + " with members " +
                        x.render_elements(ap.members) +
                        " is not the neighbourhood semifilter of any point";
            return v;
        }
    for (std::size_t p = 0; p < s.size(); ++p)
        for (std::size_t q = p + 1; q < s.size(); ++q)
            if (s.indistinguishable(p, q)) {
                v.witness = "points " + s.points()[p] + " and " + s.points()[q] +
                            " share a neighbourhood semifilter";
                return v;
            }
    v.sober = true;
    return v;
}

struct SpatialVerdict {
    bool spatial = false;
    std::string witness;
};

inline SpatialVerdict is_spatial(const Semiframe& x) {
    SpatialVerdict v;
    auto pts = abstract_points(x);
    std::vector<Bitset> ops;
    ops.reserve(x.size());
    for (std::size_t e = 0; e < x.size(); ++e) ops.push_back(op_set(x, pts, e));
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = 0; b < x.size(); ++b) {
            if (ops[a].subset_of(ops[b]) && !x.leq(a, b)) {
                v.witness = "Op(" + x.ids()[a] + ") ⊆ Op(" + x.ids()[b] + ") but " +
                            x.ids()[a] + " ⋢ " + x.ids()[b];
                return v;
            }
            if (x.compat(a, b) && !ops[a].intersects(ops[b])) {
                v.witness = x.ids()[a] + " ∗ " + x.ids()[b] + " but Op sets are disjoint";
                return v;
            }
        }
    v.spatial = true;
    return v;
}

struct SoberifyResult {
    Semitopology space;                  // St(Fr(S))
    std::vector<AbstractPoint> points;   // abstract points of fr(S)
    std::vector<std::size_t> map;        // original point -> index in space.points()
    bool map_continuous = false;
    bool target_sober = false;
    bool opens_isomorphic = false;       // nbhd induces a semiframe iso on opens
    bool kernel_is_indistinguishability = false;
};

struct SpaceMap {
    const Semitopology* source = nullptr;
    const Semitopology* target = nullptr;
    std::vector<std::size_t> map;  // source point index -> target point index
    bool continuous = false;
    std::string witness;
};

inline SpaceMap validate_space_map(const Semitopology& src, const Semitopology& dst,
                                   std::vector<std::size_t> assoc) {
    if (assoc.size() != src.size())
        throw input_error("space map must be total on the source points");
    for (auto t : assoc)
        if (t >= dst.size()) throw input_error("space map targets unknown point");
    SpaceMap m;
    m.source = &src;
    m.target = &dst;
    m.map = std::move(assoc);
    m.continuous = true;
    for (const auto& o : dst.opens()) {
        Bitset pre(src.size());
        for (std::size_t p = 0; p < src.size(); ++p)
            if (o.test(m.map[p])) pre.set(p);
        if (!src.is_open(pre)) {
            m.continuous = false;
            m.witness = "preimage of " + dst.render_set(o) + " is " +
                        src.render_set(pre) + ", not open";
            break;
        }
    }
    return m;
}

struct FrameMap {
    const Semiframe* source = nullptr;
    const Semiframe* target = nullptr;
    std::vector<std::size_t> map;  // source element -> target element
    bool valid = false;
    std::string witness;
};

// Morphism of semiframes: commutes with joins, preserves ⊤, and reflects
// compatibility (g(a) ∗ g(b) implies a ∗ b).
inline FrameMap validate_frame_map(const Semiframe& src, const Semiframe& dst,
                                   std::vector<std::size_t> assoc) {
    if (assoc.size() != src.size())
        throw input_error("frame map must be total on the source elements");
    for (auto t : assoc)
        if (t >= dst.size()) throw input_error("frame map targets unknown element");
    FrameMap m;
    m.source = &src;
    m.target = &dst;
    m.map = std::move(assoc);
    m.valid = true;
    if (m.map[src.top()] != dst.top()) {
        m.valid = false;
        m.witness = "top is not preserved";
        return m;
    }
    if (m.map[src.bottom()] != dst.bottom()) {
        m.valid = false;
        m.witness = "bottom (empty join) is not preserved";
        return m;
    }
    for (std::size_t a = 0; a < src.size() && m.valid; ++a)
        for (std::size_t b = a; b < src.size(); ++b) {
            if (m.map[src.join(a, b)] != dst.join(m.map[a], m.map[b])) {
                m.valid = false;
                m.witness = "join not preserved at (" + src.ids()[a] + ", " +
                            src.ids()[b] + ")";
                break;
            }
            if (dst.compat(m.map[a], m.map[b]) && !src.compat(a, b)) {
                m.valid = false;
                m.witness = "compatibility not reflected at (" + src.ids()[a] + ", " +
                            src.ids()[b] + ")";
                break;
            }
        }
    return m;
}

// Inverse-image frame map of a continuous f : S -> S'. Maps each open of the
// target space to its preimage; a morphism fr(S') -> fr(S).
inline FrameMap inverse_image_frame_map(const SpaceMap& f, const Semiframe& fr_src,
                                        const Semiframe& fr_dst) {
    if (!f.continuous) throw input_error("inverse image needs a continuous map");
    // fr_src = fr(f.target), fr_dst = fr(f.source)
    const auto& t_opens = fr_src.origin_opens();
    const auto& s_opens = fr_dst.origin_opens();
    std::vector<std::size_t> assoc(t_opens.size());
    for (std::size_t i = 0; i < t_opens.size(); ++i) {
        Bitset pre(f.source->size());
        for (std::size_t p = 0; p < f.source->size(); ++p)
            if (t_opens[i].test(f.map[p])) pre.set(p);
        auto it = std::lower_bound(s_opens.begin(), s_opens.end(), pre);
        if (it == s_opens.end() || *it != pre)
            throw input_error("inverse image is not open (map not continuous)");
        assoc[i] = static_cast<std::size_t>(it - s_opens.begin());
    }
    return validate_frame_map(fr_src, fr_dst, std::move(assoc));
}

// g∘(P) for a frame map g : X' -> X and abstract point P of X:
// { x' : g(x') ∈ P }, an abstract point of X'.
inline AbstractPoint g_circ(const FrameMap& g, const AbstractPoint& p) {
    if (!g.valid) throw input_error("g_circ needs a valid frame map");
    const Semiframe& xp = *g.source;
    Bitset members(xp.size());
    for (std::size_t e = 0; e < xp.size(); ++e)
        if (p.members.test(g.map[e])) members.set(e);
    AbstractPoint out;
    out.members = members;
    out.witness = xp.join_of(members.complement());
    auto v = validate_semifilter(xp, members);
    if (!(v.valid() && v.completely_prime))
        throw input_error("g_circ produced a non-abstract-point (invalid frame map?)");
    if (xp.origin_space()) {
        const auto& s = *xp.origin_space();
        const auto& opens = xp.origin_opens();
        for (std::size_t pt = 0; pt < s.size(); ++pt) {
            bool same = true;
            for (std::size_t e = 0; e < opens.size(); ++e)
                if (members.test(e) != opens[e].test(pt)) { same = false; break; }
            if (same) { out.matched = s.points()[pt]; break; }
        }
    }
    return out;
}

// Lift g : X' -> X to the continuous map st(X) -> st(X') given the two
// abstract-point lists; returns indices into pts_src'.
inline std::vector<std::size_t> lift_frame_map(const FrameMap& g,
                                               const std::vector<AbstractPoint>& pts_of_target,
                                               const std::vector<AbstractPoint>& pts_of_source) {
    std::vector<std::size_t> out;
    out.reserve(pts_of_target.size());
    for (const auto& p : pts_of_target) {
        AbstractPoint q = g_circ(g, p);
        bool found = false;
        for (std::size_t i = 0; i < pts_of_source.size(); ++i)
            if (pts_of_source[i].members == q.members) {
                out.push_back(i);
                found = true;
                break;
            }
        if (!found) throw input_error("lifted point not found among abstract points");
    }
    return out;
}

inline SoberifyResult soberify(const Semitopology& s) {
    SoberifyResult r;
    Semiframe x = Semiframe::fr(s);
    StResult str = st(x);
    r.space = std::move(str.space);
    r.points = std::move(str.points);
    r.map.resize(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) {
        bool found = false;
        const auto& opens = s.opens();
        for (std::size_t i = 0; i < r.points.size() && !found; ++i) {
            bool same = true;
            for (std::size_t e = 0; e < opens.size(); ++e)
                if (r.points[i].members.test(e) != opens[e].test(p)) { same = false; break; }
            if (same) {
                r.map[p] = i;
                found = true;
            }
        }
        if (!found) throw input_error("nbhd(p) missing from abstract points (bug)");
    }
    r.map_continuous = validate_space_map(s, r.space, r.map).continuous;
    r.target_sober = is_sober(r.space).sober;
    // nbhd⁻¹ : fr(soberified) -> fr(S) must be a semiframe isomorphism.
    {
        Semiframe xs = Semiframe::fr(r.space);
        SpaceMap f = validate_space_map(s, r.space, r.map);
        r.opens_isomorphic = false;
        if (s.opens().size() == r.space.opens().size()) {
            FrameMap inv = inverse_image_frame_map(f, xs, x);
            bool bijective = true;
            std::vector<bool> hit(x.size(), false);
            for (auto t : inv.map) {
                if (hit[t]) { bijective = false; break; }
                hit[t] = true;
            }
            if (inv.valid && bijective) {
                // both relations preserved and reflected
                bool iso = true;
                for (std::size_t a = 0; a < xs.size() && iso; ++a)
                    for (std::size_t b = 0; b < xs.size() && iso; ++b) {
                        if (xs.leq(a, b) != x.leq(inv.map[a], inv.map[b])) iso = false;
                        if (xs.compat(a, b) != x.compat(inv.map[a], inv.map[b])) iso = false;
                    }
                r.opens_isomorphic = iso;
            }
        }
    }
    r.kernel_is_indistinguishability = true;
    for (std::size_t p = 0; p < s.size(); ++p)
        for (std::size_t q = 0; q < s.size(); ++q)
            if ((r.map[p] == r.map[q]) != s.indistinguishable(p, q))
                r.kernel_is_indistinguishability = false;
    return r;
}

struct RoundtripReport {
    bool precondition_ok = false;   // sober (space) / spatial (frame)
    std::string precondition_witness;
    bool roundtrip_ok = false;
    std::string detail;
};

inline RoundtripReport roundtrip_space(const Semitopology& s) {
    RoundtripReport r;
    auto sv = is_sober(s);
    r.precondition_ok = sv.sober;
    r.precondition_witness = sv.witness;
    if (!r.precondition_ok) {
        r.detail = "input space is not sober";
        return r;
    }
    auto sob = soberify(s);
    bool bij = sob.space.size() == s.size();
    std::vector<bool> hit(sob.space.size(), false);
    for (auto t : sob.map) {
        if (t < hit.size() && !hit[t]) hit[t] = true;
        else bij = false;
    }
    r.roundtrip_ok = bij && sob.map_continuous && sob.opens_isomorphic;
    r.detail = r.roundtrip_ok ? "nbhd is a continuous bijection with isomorphic opens"
                              : "round trip failed";
    return r;
}

inline RoundtripReport roundtrip_frame(const Semiframe& x) {
    RoundtripReport r;
    auto sv = is_spatial(x);
    r.precondition_ok = sv.spatial;
    r.precondition_witness = sv.witness;
    if (!r.precondition_ok) {
        r.detail = "input semiframe is not spatial";
        return r;
    }
    StResult str = st(x);
    Semiframe y = Semiframe::fr(str.space);
    // Op : X -> fr(st(X)), element e -> the open Op(e)
    const auto& e2o = str.element_to_open;
    bool bij = x.size() == y.size();
    std::vector<bool> hit(y.size(), false);
    for (auto t : e2o) {
        if (t < hit.size() && !hit[t]) hit[t] = true;
        else bij = false;
    }
    bool rel = true;
    for (std::size_t a = 0; a < x.size() && rel; ++a)
        for (std::size_t b = 0; b < x.size() && rel; ++b) {
            if (x.leq(a, b) != y.leq(e2o[a], e2o[b])) rel = false;
            if (x.compat(a, b) != y.compat(e2o[a], e2o[b])) rel = false;
        }
    r.roundtrip_ok = bij && rel;
    r.detail = r.roundtrip_ok ? "Op is a bijection preserving and reflecting ⊑ and ∗"
                              : "round trip failed";
    return r;
}

struct StrongCompatVerdict {
    bool strongly_compatible = false;
    std::string witness;
};

inline StrongCompatVerdict is_strongly_compatible_space(const Semitopology& s) {
    StrongCompatVerdict v;
    Semiframe x = Semiframe::fr(s);
    for (const auto& ap : abstract_points(x)) {
        if (!x.is_strongly_compatible_filter(ap.members)) {
            v.witness = "abstract point " + ap.name(x) + " is not strongly compatible";
            return v;
        }
    }
    v.strongly_compatible = true;
    return v;
}

} // namespace semitop
