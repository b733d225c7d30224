#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "semitop/bitset.hpp"
#include "semitop/error.hpp"

namespace semitop {

inline constexpr std::size_t kDefaultOpensCap = std::size_t{1} << 20;

inline std::size_t opens_cap_from_env() {
    if (const char* v = std::getenv("SEMITOP_OPENS_CAP")) {
        char* end = nullptr;
        unsigned long long n = std::strtoull(v, &end, 10);
        if (end && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
    }
    return kDefaultOpensCap;
}

// A finite semitopology: named points plus the union-closed open-set family
// (always containing the empty set and the whole space), held in canonical
// (cardinality, mask) order.
class Semitopology {
public:
    Semitopology() = default;

    static Semitopology build(std::vector<std::string> point_ids,
                              const std::vector<Bitset>& generators,
                              std::size_t opens_cap = opens_cap_from_env()) {
        Semitopology s;
        s.points_ = std::move(point_ids);
        {
            std::set<std::string> seen;
            for (const auto& id : s.points_)
                if (!seen.insert(id).second)
                    throw input_error("duplicate point id: " + id);
        }
        const std::size_t n = s.points_.size();
        std::set<Bitset> family;
        family.insert(Bitset(n));
        family.insert(Bitset::full(n));
        for (const auto& g : generators) {
            if (g.universe() != n)
                throw input_error("generator universe mismatch");
            family.insert(g);
        }
        // Pairwise-union fixpoint; suffices for finite families.
        std::vector<Bitset> work(family.begin(), family.end());
        for (std::size_t i = 0; i < work.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                Bitset u = work[i] | work[j];
                if (family.insert(u).second) {
                    work.push_back(u);
                    if (family.size() > opens_cap)
                        throw resource_error(
                            "opens family exceeds cap of " + std::to_string(opens_cap) +
                            " sets (set SEMITOP_OPENS_CAP to raise)");
                }
            }
        }
        s.opens_.assign(family.begin(), family.end());
        std::sort(s.opens_.begin(), s.opens_.end());
        return s;
    }

    static Semitopology build_named(std::vector<std::string> point_ids,
                                    const std::vector<std::vector<std::string>>& generators,
                                    std::size_t opens_cap = opens_cap_from_env()) {
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < point_ids.size(); ++i) index[point_ids[i]] = i;
        std::vector<Bitset> gens;
        gens.reserve(generators.size());
        for (const auto& g : generators) {
            Bitset b(point_ids.size());
            for (const auto& id : g) {
                auto it = index.find(id);
                if (it == index.end())
                    throw input_error("generator references unknown point: " + id);
                b.set(it->second);
            }
            gens.push_back(b);
        }
        return build(std::move(point_ids), gens, opens_cap);
    }

    const std::vector<std::string>& points() const { return points_; }
    const std::vector<Bitset>& opens() const { return opens_; }
    std::size_t size() const { return points_.size(); }

    std::size_t point_index(const std::string& id) const {
        for (std::size_t i = 0; i < points_.size(); ++i)
            if (points_[i] == id) return i;
        throw input_error("unknown point id: " + id);
    }

    Bitset empty_set() const { return Bitset(size()); }
    Bitset whole() const { return Bitset::full(size()); }

    void check_universe(const Bitset& a) const {
        if (a.universe() != size())
            throw input_error("point set does not match this space's universe");
    }

    bool is_open(const Bitset& a) const {
        check_universe(a);
        return std::binary_search(opens_.begin(), opens_.end(), a);
    }

    // closure(A) = { p : every open neighbourhood of p intersects A }
    Bitset closure(const Bitset& a) const {
        check_universe(a);
        Bitset r = whole();
        for (const auto& o : opens_)
            if (!o.intersects(a))
                r = r - o;
        return r;
    }

    // interior(A) = union of opens contained in A; greatest open subset.
    Bitset interior(const Bitset& a) const {
        check_universe(a);
        Bitset r(size());
        for (const auto& o : opens_)
            if (o.subset_of(a))
                r = r | o;
        return r;
    }

    bool is_closed(const Bitset& a) const { return is_open(a.complement()); }

    std::vector<Bitset> closed_sets() const {
        std::vector<Bitset> out;
        out.reserve(opens_.size());
        for (const auto& o : opens_) out.push_back(o.complement());
        std::sort(out.begin(), out.end());
        return out;
    }

    // All opens containing p, in canonical order.
    std::vector<Bitset> nbhd(std::size_t p) const {
        if (p >= size()) throw input_error("point index out of range");
        std::vector<Bitset> out;
        for (const auto& o : opens_)
            if (o.test(p)) out.push_back(o);
        return out;
    }
    std::vector<Bitset> nbhd(const std::string& id) const { return nbhd(point_index(id)); }

    bool indistinguishable(std::size_t p, std::size_t q) const {
        if (p >= size() || q >= size()) throw input_error("point index out of range");
        for (const auto& o : opens_)
            if (o.test(p) != o.test(q)) return false;
        return true;
    }

    bool is_t0() const {
        for (std::size_t p = 0; p < size(); ++p)
            for (std::size_t q = p + 1; q < size(); ++q)
                if (indistinguishable(p, q)) return false;
        return true;
    }

    bool operator==(const Semitopology& o) const {
        return points_ == o.points_ && opens_ == o.opens_;
    }

    std::string render_set(const Bitset& a) const {
        std::string s = "{";
        bool first = true;
        for (auto i : a.members()) {
            if (!first) s += ",";
            s += points_[i];
            first = false;
        }
        s += "}";
        return s;
    }

private:
    std::vector<std::string> points_;
    std::vector<Bitset> opens_;
};

} // namespace semitop
