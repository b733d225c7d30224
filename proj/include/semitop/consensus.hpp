#pragma once

#include <string>
#include <vector>

#include "semitop/regularity.hpp"

namespace semitop {

// Total assignment of value tokens to points; values[i] belongs to point i.
struct ValueAssignment {
    std::vector<std::string> values;
};

inline ValueAssignment make_assignment(const Semitopology& s,
                                       const std::map<std::string, std::string>& assoc) {
    ValueAssignment f;
    f.values.reserve(s.size());
    for (const auto& p : s.points()) {
        auto it = assoc.find(p);
        if (it == assoc.end())
            throw input_error("assignment missing point: " + p);
        f.values.push_back(it->second);
    }
    if (assoc.size() != s.size())
        throw input_error("assignment references unknown points");
    return f;
}

inline bool constant_on(const ValueAssignment& f, const Bitset& a) {
    auto ms = a.members();
    for (std::size_t i = 1; i < ms.size(); ++i)
        if (f.values[ms[i]] != f.values[ms[0]]) return false;
    return true;
}

// Points with a monochrome open neighbourhood (local constancy; for a
// discrete value space this is continuity at the point).
inline Bitset continuity_points(const Semitopology& s, const ValueAssignment& f) {
    if (f.values.size() != s.size()) throw input_error("assignment not total");
    Bitset r(s.size());
    for (const auto& o : s.opens()) {
        if (o.empty() || !constant_on(f, o)) continue;
        r = r | o;
    }
    return r;
}

struct TopenConsensus {
    Bitset topen;
    bool all_continuous = false;
    bool constant = false;
    std::string value;  // set when constant and nonempty
};

struct ConsensusReport {
    std::vector<TopenConsensus> topens;
    // Maximal topens where every point is continuous but f is not constant.
    // The consensus theorem says this is always empty.
    std::vector<Bitset> violations;
    bool intersecting_topens_agree = true;
};

inline ConsensusReport check_consensus(const Semitopology& s, const ValueAssignment& f) {
    ConsensusReport rep;
    Bitset cont = continuity_points(s, f);
    auto part = maximal_topen_partition(s);
    for (const auto& t : part.maximal_topens) {
        TopenConsensus tc;
        tc.topen = t;
        tc.all_continuous = t.subset_of(cont);
        tc.constant = constant_on(f, t);
        if (tc.constant && !t.empty()) tc.value = f.values[t.members()[0]];
        if (tc.all_continuous && !tc.constant) rep.violations.push_back(t);
        rep.topens.push_back(std::move(tc));
    }
    // Intersecting topens with a continuous assignment share their value.
    auto all_topens = topens(s);
    for (std::size_t i = 0; i < all_topens.size(); ++i)
        for (std::size_t j = i + 1; j < all_topens.size(); ++j) {
            if (!all_topens[i].intersects(all_topens[j])) continue;
            const Bitset both = all_topens[i] | all_topens[j];
            if (!both.subset_of(cont)) continue;
            if (!constant_on(f, both)) rep.intersecting_topens_agree = false;
        }
    return rep;
}

struct SplitResult {
    bool transitive = false;
    ValueAssignment assignment;  // two-valued splitting, when not transitive
    std::size_t p = 0, q = 0;    // continuity witnesses with different values
    Bitset open_a, open_b;       // the disjoint opens behind the split
};

// If T is not transitive there are opens O ≬ T ≬ O' with O ⋂ O' = ∅; mapping
// O to one value and the rest to another splits T while staying continuous
// at a point of T ⋂ O and a point of T ⋂ O'.
inline SplitResult find_splitting(const Semitopology& s, const Bitset& t,
                                  const std::string& v0 = "a",
                                  const std::string& v1 = "b") {
    s.check_universe(t);
    if (v0 == v1) throw input_error("find_splitting needs two distinct values");
    SplitResult r;
    std::vector<const Bitset*> meeting;
    for (const auto& o : s.opens())
        if (o.intersects(t)) meeting.push_back(&o);
    for (std::size_t i = 0; i < meeting.size(); ++i)
        for (std::size_t j = i + 1; j < meeting.size(); ++j)
            if (!meeting[i]->intersects(*meeting[j])) {
                r.open_a = *meeting[i];
                r.open_b = *meeting[j];
                r.assignment.values.assign(s.size(), v1);
                for (auto m : r.open_a.members()) r.assignment.values[m] = v0;
                r.p = (r.open_a & t).members()[0];
                r.q = (r.open_b & t).members()[0];
                return r;
            }
    r.transitive = true;
    return r;
}

} // namespace semitop
