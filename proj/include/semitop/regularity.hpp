#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semitop/semitopology.hpp"

namespace semitop {

enum class Grade { regular, weakly_regular, quasiregular, irregular };

inline const char* grade_name(Grade g) {
    switch (g) {
        case Grade::regular: return "regular";
        case Grade::weakly_regular: return "weakly-regular";
        case Grade::quasiregular: return "quasiregular";
        default: return "irregular-not-quasiregular";
    }
}

struct PointClassification {
    std::string point;
    Bitset intertwined;
    Bitset community;
    Grade grade = Grade::irregular;
    bool conflicted = false;
    bool strongly_compatible = false;

    bool is_regular() const { return grade == Grade::regular; }
    bool is_weakly_regular() const { return grade <= Grade::weakly_regular; }
    bool is_quasiregular() const { return grade <= Grade::quasiregular; }
};

struct TopenPartition {
    std::vector<Bitset> maximal_topens;
    Bitset irregular_points;
};

// T is transitive when O ≬ T ≬ O' implies O ≬ O' for all opens O, O'.
inline bool is_transitive_set(const Semitopology& s, const Bitset& t) {
    s.check_universe(t);
    std::vector<const Bitset*> meeting;
    for (const auto& o : s.opens())
        if (o.intersects(t)) meeting.push_back(&o);
    for (std::size_t i = 0; i < meeting.size(); ++i)
        for (std::size_t j = i + 1; j < meeting.size(); ++j)
            if (!meeting[i]->intersects(*meeting[j])) return false;
    return true;
}

inline bool is_topen(const Semitopology& s, const Bitset& t) {
    return !t.empty() && s.is_open(t) && is_transitive_set(s, t);
}

inline std::vector<Bitset> topens(const Semitopology& s) {
    std::vector<Bitset> out;
    for (const auto& o : s.opens())
        if (!o.empty() && is_transitive_set(s, o)) out.push_back(o);
    return out;
}

inline bool intertwined_points(const Semitopology& s, std::size_t p, std::size_t q) {
    for (const auto& o : s.opens()) {
        if (!o.test(p)) continue;
        for (const auto& o2 : s.opens())
            if (o2.test(q) && !o.intersects(o2)) return false;
    }
    return true;
}

inline Bitset intertwined_set(const Semitopology& s, std::size_t p) {
    if (p >= s.size()) throw input_error("point index out of range");
    Bitset r(s.size());
    for (std::size_t q = 0; q < s.size(); ++q)
        if (intertwined_points(s, p, q)) r.set(q);
    return r;
}

inline Bitset community(const Semitopology& s, std::size_t p) {
    return s.interior(intertwined_set(s, p));
}

// nbhd(p)* at set level: opens meeting every open neighbourhood of p.
inline std::vector<Bitset> nbhd_star(const Semitopology& s, std::size_t p) {
    auto nb = s.nbhd(p);
    std::vector<Bitset> out;
    for (const auto& o : s.opens()) {
        bool all = true;
        for (const auto& m : nb)
            if (!o.intersects(m)) { all = false; break; }
        if (all) out.push_back(o);
    }
    return out;
}

inline bool is_strongly_compatible_point(const Semitopology& s, std::size_t p) {
    auto star = nbhd_star(s, p);
    // Drop the empty open: compatibility is about nonempty intersection.
    std::vector<const Bitset*> ne;
    for (const auto& o : star)
        if (!o.empty()) ne.push_back(&o);
    if (ne.empty()) return false;
    for (std::size_t i = 0; i < ne.size(); ++i)
        for (std::size_t j = i + 1; j < ne.size(); ++j)
            if (!ne[i]->intersects(*ne[j])) return false;
    return true;
}

inline PointClassification classify_point(const Semitopology& s, std::size_t p) {
    PointClassification c;
    c.point = s.points()[p];
    c.intertwined = intertwined_set(s, p);
    c.community = s.interior(c.intertwined);
    if (c.community.test(p) && is_topen(s, c.community))
        c.grade = Grade::regular;
    else if (c.community.test(p))
        c.grade = Grade::weakly_regular;
    else if (!c.community.empty())
        c.grade = Grade::quasiregular;
    else
        c.grade = Grade::irregular;
    // conflicted: some p' ≬ p ≬ p'' with ¬(p' ≬ p'').
    auto tw = c.intertwined.members();
    c.conflicted = false;
    for (std::size_t i = 0; i < tw.size() && !c.conflicted; ++i)
        for (std::size_t j = i + 1; j < tw.size() && !c.conflicted; ++j)
            if (!intertwined_points(s, tw[i], tw[j])) c.conflicted = true;
    c.strongly_compatible = is_strongly_compatible_point(s, p);
    return c;
}

inline PointClassification classify_point(const Semitopology& s, const std::string& id) {
    return classify_point(s, s.point_index(id));
}

// Maximal topens are the distinct communities of regular points.
inline TopenPartition maximal_topen_partition(const Semitopology& s) {
    TopenPartition part;
    part.irregular_points = Bitset(s.size());
    for (std::size_t p = 0; p < s.size(); ++p) {
        Bitset tw = intertwined_set(s, p);
        Bitset com = s.interior(tw);
        if (com.test(p) && is_topen(s, com)) {
            if (std::find(part.maximal_topens.begin(), part.maximal_topens.end(), com) ==
                part.maximal_topens.end())
                part.maximal_topens.push_back(com);
        } else {
            part.irregular_points.set(p);
        }
    }
    std::sort(part.maximal_topens.begin(), part.maximal_topens.end());
    return part;
}

// Closed sets with nonempty interior, canonical order.
inline std::vector<Bitset> closed_neighbourhoods(const Semitopology& s) {
    std::vector<Bitset> out;
    for (const auto& c : s.closed_sets())
        if (!s.interior(c).empty()) out.push_back(c);
    return out;
}

struct MinClosedNbhdReport {
    std::string point;
    Bitset intertwined;
    bool is_closed_nbhd_of_point = false;   // p in interior(intertwined p)
    bool is_least_closed_nbhd = false;      // least among closed nbhds of p
    bool is_minimal_closed_nbhd = false;    // minimal among all closed nbhds
    std::vector<Bitset> minimal_inside;     // minimal closed nbhds within intertwined p
};

inline MinClosedNbhdReport min_closed_nbhd_report(const Semitopology& s, std::size_t p) {
    MinClosedNbhdReport r;
    r.point = s.points()[p];
    r.intertwined = intertwined_set(s, p);
    auto all_cn = closed_neighbourhoods(s);
    std::vector<Bitset> cn_of_p;
    for (const auto& c : all_cn)
        if (s.interior(c).test(p)) cn_of_p.push_back(c);
    r.is_closed_nbhd_of_point = s.interior(r.intertwined).test(p);
    if (r.is_closed_nbhd_of_point) {
        r.is_least_closed_nbhd = true;
        for (const auto& c : cn_of_p)
            if (!r.intertwined.subset_of(c)) { r.is_least_closed_nbhd = false; break; }
    }
    auto minimal_among = [&](const Bitset& c) {
        for (const auto& d : all_cn)
            if (d != c && d.subset_of(c)) return false;
        return true;
    };
    r.is_minimal_closed_nbhd =
        s.is_closed(r.intertwined) && !s.interior(r.intertwined).empty() &&
        minimal_among(r.intertwined);
    for (const auto& c : all_cn)
        if (c.subset_of(r.intertwined) && minimal_among(c))
            r.minimal_inside.push_back(c);
    return r;
}

inline MinClosedNbhdReport min_closed_nbhd_report(const Semitopology& s, const std::string& id) {
    return min_closed_nbhd_report(s, s.point_index(id));
}

struct SpaceReport {
    bool regular = true;
    bool weakly_regular = true;
    bool quasiregular = true;
    bool unconflicted = true;
    bool strongly_compatible_points = true;
    bool hausdorff = true;
    bool t0 = true;
    bool t1 = true;
    bool discrete = true;
    TopenPartition partition;
    std::vector<PointClassification> points;
};

inline bool has_disjoint_nbhds(const Semitopology& s, std::size_t p, std::size_t q) {
    for (const auto& o : s.opens()) {
        if (!o.test(p)) continue;
        for (const auto& o2 : s.opens())
            if (o2.test(q) && !o.intersects(o2)) return true;
    }
    return false;
}

inline SpaceReport space_report(const Semitopology& s) {
    SpaceReport r;
    r.partition = maximal_topen_partition(s);
    for (std::size_t p = 0; p < s.size(); ++p) {
        auto c = classify_point(s, p);
        r.regular &= c.is_regular();
        r.weakly_regular &= c.is_weakly_regular();
        r.quasiregular &= c.is_quasiregular();
        r.unconflicted &= !c.conflicted;
        r.strongly_compatible_points &= c.strongly_compatible;
        Bitset single(s.size());
        single.set(p);
        r.discrete &= s.is_open(single);
        r.points.push_back(std::move(c));
    }
    r.t0 = s.is_t0();
    for (std::size_t p = 0; p < s.size(); ++p)
        for (std::size_t q = 0; q < s.size(); ++q) {
            if (p == q) continue;
            bool sep = false;
            for (const auto& o : s.opens())
                if (o.test(p) && !o.test(q)) { sep = true; break; }
            r.t1 &= sep;
            if (q > p) r.hausdorff &= has_disjoint_nbhds(s, p, q);
        }
    return r;
}

} // namespace semitop
