#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "semitop/semitopology.hpp"

namespace semitop {

// Raised when a hand-built semiframe fails an axiom. `kind` is machine
// readable; `witness` holds the offending element ids.
struct semiframe_error : input_error {
    semiframe_error(std::string kind_, std::vector<std::string> witness_,
                    const std::string& msg)
        : input_error(msg), kind(std::move(kind_)), witness(std::move(witness_)) {}
    std::string kind;
    std::vector<std::string> witness;
    // For distributivity failures: every violating (x, a, b) triple.
    std::vector<std::array<std::string, 3>> triples;
};

// A finite compatible complete join-semilattice. Relations are stored as
// row bitmasks over element indices; the binary join table is precomputed.
class Semiframe {
public:
    static Semiframe build(std::vector<std::string> ids,
                           const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs,
                           const std::vector<std::pair<std::size_t, std::size_t>>& compat_pairs) {
        Semiframe x;
        x.ids_ = std::move(ids);
        const std::size_t n = x.ids_.size();
        {
            std::set<std::string> seen;
            for (const auto& id : x.ids_)
                if (!seen.insert(id).second)
                    throw semiframe_error("duplicate-element", {id},
                                          "duplicate element id: " + id);
        }
        if (n == 0)
            throw semiframe_error("empty", {}, "semiframe needs at least one element");
        x.up_.assign(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i) x.up_[i].set(i);
        for (auto [a, b] : leq_pairs) {
            if (a >= n || b >= n) throw input_error("leq pair references unknown element");
            x.up_[a].set(b);
        }
        // transitive closure
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (x.up_[i].test(j) && !x.up_[j].subset_of(x.up_[i])) {
                        x.up_[i] = x.up_[i] | x.up_[j];
                        changed = true;
                    }
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (x.up_[i].test(j) && x.up_[j].test(i))
                    throw semiframe_error("not-antisymmetric", {x.ids_[i], x.ids_[j]},
                                          "order is not antisymmetric: " + x.ids_[i] +
                                              " and " + x.ids_[j]);
        x.finish_order();
        x.compat_.assign(n, Bitset(n));
        for (auto [a, b] : compat_pairs) {
            if (a >= n || b >= n) throw input_error("compat pair references unknown element");
            x.compat_[a].set(b);
            x.compat_[b].set(a);
        }
        x.validate_compat();
        return x;
    }

    static Semiframe build_named(
        std::vector<std::string> ids,
        const std::vector<std::pair<std::string, std::string>>& leq_pairs,
        const std::vector<std::pair<std::string, std::string>>& compat_pairs) {
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
        auto resolve = [&](const std::string& id) {
            auto it = index.find(id);
            if (it == index.end()) throw input_error("unknown element id: " + id);
            return it->second;
        };
        std::vector<std::pair<std::size_t, std::size_t>> lp, cp;
        for (const auto& [a, b] : leq_pairs) lp.emplace_back(resolve(a), resolve(b));
        for (const auto& [a, b] : compat_pairs) cp.emplace_back(resolve(a), resolve(b));
        return build(std::move(ids), lp, cp);
    }

    // The opens semiframe (Opens, ⊆, ≬) of a semitopology. Always valid.
    static Semiframe fr(const Semitopology& s) {
        Semiframe x;
        const auto& opens = s.opens();
        const std::size_t n = opens.size();
        x.ids_.reserve(n);
        for (const auto& o : opens) x.ids_.push_back(s.render_set(o));
        x.up_.assign(n, Bitset(n));
        x.compat_.assign(n, Bitset(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (opens[i].subset_of(opens[j])) x.up_[i].set(j);
                if (opens[i].intersects(opens[j])) x.compat_[i].set(j);
            }
        x.finish_order();
        x.validate_compat();
        x.origin_space_ = s;
        x.origin_opens_ = opens;
        return x;
    }

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    std::size_t bottom() const { return bottom_; }
    std::size_t top() const { return top_; }
    bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
    bool compat(std::size_t a, std::size_t b) const { return compat_[a].test(b); }
    std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
    const Bitset& up_set(std::size_t a) const { return up_[a]; }

    const std::optional<Semitopology>& origin_space() const { return origin_space_; }
    const std::vector<Bitset>& origin_opens() const { return origin_opens_; }

    std::size_t element_index(const std::string& id) const {
        for (std::size_t i = 0; i < ids_.size(); ++i)
            if (ids_[i] == id) return i;
        throw input_error("unknown element id: " + id);
    }

    // join of an arbitrary subset; join(∅) = ⊥.
    std::size_t join_of(const Bitset& subset) const {
        std::size_t r = bottom_;
        for (auto i : subset.members()) r = join_[r][i];
        return r;
    }

    // x* = { y : y ∗ x }
    const Bitset& compat_system(std::size_t x) const { return compat_[x]; }

    // x ≠ ⊥ and a ∗ x ∗ b implies a ∗ b.
    bool is_transitive_element(std::size_t x) const {
        if (x == bottom_) return false;
        auto ms = compat_[x].members();
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = i + 1; j < ms.size(); ++j)
                if (!compat_[ms[i]].test(ms[j])) return false;
        return true;
    }

    Bitset up_closure(const Bitset& f) const {
        Bitset r(size());
        for (auto i : f.members()) r = r | up_[i];
        return r;
    }

    bool is_up_closed(const Bitset& f) const { return up_closure(f) == f; }

    bool is_pairwise_compatible(const Bitset& f) const {
        auto ms = f.members();
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = i; j < ms.size(); ++j)
                if (!compat_[ms[i]].test(ms[j])) return false;
        return true;
    }

    // F* = ⋂ { x* : x ∈ F }; empty F gives all elements.
    Bitset filter_star(const Bitset& f) const {
        Bitset r = Bitset::full(size());
        for (auto i : f.members()) r = r & compat_[i];
        return r;
    }

    bool is_strongly_compatible_filter(const Bitset& f) const {
        Bitset star = filter_star(f);
        return !star.empty() && is_pairwise_compatible(star);
    }

    // ∂F = ⋁ of the non-members.
    std::size_t cclo(const Bitset& f) const { return join_of(f.complement()); }
    std::size_t cast_filter(const Bitset& f) const { return cclo(filter_star(f)); }
    std::size_t cast_element(std::size_t x) const { return cclo(compat_[x]); }
    std::size_t framecommunity(const Bitset& f) const {
        return cast_element(cast_filter(f));
    }

    std::string render_elements(const Bitset& f) const {
        std::string s = "{";
        bool first = true;
        for (auto i : f.members()) {
            if (!first) s += ", ";
            s += ids_[i];
            first = false;
        }
        return s + "}";
    }

    bool operator==(const Semiframe& o) const {
        return ids_ == o.ids_ && up_ == o.up_ && compat_ == o.compat_;
    }

private:
    void finish_order() {
        const std::size_t n = ids_.size();
        // global least element
        bool found = false;
        for (std::size_t i = 0; i < n; ++i)
            if (up_[i].count() == n) {
                bottom_ = i;
                found = true;
                break;
            }
        if (!found)
            throw semiframe_error("no-least-element", {}, "order has no least element");
        join_.assign(n, std::vector<std::uint32_t>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                Bitset upper = up_[i] & up_[j];
                std::optional<std::size_t> least;
                for (auto u : upper.members())
                    if (upper.subset_of(up_[u])) { least = u; break; }
                if (!least)
                    throw semiframe_error("no-join", {ids_[i], ids_[j]},
                                          "pair lacks a join: " + ids_[i] + ", " + ids_[j]);
                join_[i][j] = join_[j][i] = static_cast<std::uint32_t>(*least);
            }
        top_ = bottom_;
        for (std::size_t i = 0; i < n; ++i) top_ = join_[top_][i];
    }

    void validate_compat() {
        const std::size_t n = ids_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (compat_[i].test(bottom_))
                throw semiframe_error("compat-with-bottom", {ids_[i]},
                                      "element compatible with bottom: " + ids_[i]);
            bool self = compat_[i].test(i);
            if (self != (i != bottom_))
                throw semiframe_error("reflexivity", {ids_[i]},
                                      self ? "bottom is self-compatible"
                                           : "non-bottom element not self-compatible: " +
                                                 ids_[i]);
        }
        // x ∗ (a ∨ b) iff x ∗ a or x ∗ b, for all triples
        std::vector<std::array<std::string, 3>> bad;
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    bool lhs = compat_[x].test(join_[a][b]);
                    bool rhs = compat_[x].test(a) || compat_[x].test(b);
                    if (lhs != rhs) bad.push_back({ids_[x], ids_[a], ids_[b]});
                }
        if (!bad.empty()) {
            semiframe_error e("distributivity", {bad[0][0], bad[0][1], bad[0][2]},
                              "compatibility does not distribute over join; witness (" +
                                  bad[0][0] + ", " + bad[0][1] + ", " + bad[0][2] + ")");
            e.triples = std::move(bad);
            throw e;
        }
    }

    std::vector<std::string> ids_;
    std::vector<Bitset> up_;      // up_[i] = { j : i ⊑ j }
    std::vector<Bitset> compat_;  // compat_[i] = { j : i ∗ j }
    std::vector<std::vector<std::uint32_t>> join_;
    std::size_t bottom_ = 0;
    std::size_t top_ = 0;
    std::optional<Semitopology> origin_space_;
    std::vector<Bitset> origin_opens_;
};

enum class FilterGrade { regular, weakly_regular, quasiregular, none };

inline const char* filter_grade_name(FilterGrade g) {
    switch (g) {
        case FilterGrade::regular: return "regular";
        case FilterGrade::weakly_regular: return "weakly-regular";
        case FilterGrade::quasiregular: return "quasiregular";
        default: return "none";
    }
}

struct Semifilter {
    Bitset members;
    bool nonempty = false;
    bool up_closed = false;
    bool compatible = false;
    bool completely_prime = false;
    bool maximal = false;
    bool strongly_compatible = false;
    std::vector<std::string> witness;  // first failing evidence, if any

    bool valid() const { return nonempty && up_closed && compatible; }
};

inline Semifilter validate_semifilter(const Semiframe& x, const Bitset& f) {
    Semifilter r;
    r.members = f;
    r.nonempty = !f.empty();
    r.up_closed = x.is_up_closed(f);
    if (!r.up_closed) {
        for (auto i : f.members()) {
            if (!r.witness.empty()) break;
            for (auto j : x.up_set(i).members())
                if (!f.test(j)) {
                    r.witness = {x.ids()[i], x.ids()[j]};
                    break;
                }
        }
    }
    r.compatible = x.is_pairwise_compatible(f);
    if (!r.compatible && r.witness.empty()) {
        auto ms = f.members();
        for (std::size_t i = 0; i < ms.size() && r.witness.empty(); ++i)
            for (std::size_t j = i; j < ms.size(); ++j)
                if (!x.compat(ms[i], ms[j])) {
                    r.witness = {x.ids()[ms[i]], x.ids()[ms[j]]};
                    break;
                }
    }
    // completely prime, finite reduction: ⊥ ∉ F plus binary primeness
    r.completely_prime = !f.test(x.bottom());
    for (std::size_t a = 0; a < x.size() && r.completely_prime; ++a)
        for (std::size_t b = a; b < x.size() && r.completely_prime; ++b)
            if (f.test(x.join(a, b)) && !f.test(a) && !f.test(b))
                r.completely_prime = false;
    if (r.valid()) {
        // maximal iff F* ⊆ F
        r.maximal = x.filter_star(f).subset_of(f);
        r.strongly_compatible = x.is_strongly_compatible_filter(f);
    }
    return r;
}

inline bool is_maximal_semifilter(const Semiframe& x, const Bitset& f) {
    auto v = validate_semifilter(x, f);
    if (!v.valid()) throw input_error("not a valid semifilter");
    return v.maximal;
}

// Greedy extension in canonical element order; deterministic witness of the
// Zorn-style extension.
inline Semifilter extend_to_maximal(const Semiframe& x, const Bitset& f) {
    auto v = validate_semifilter(x, f);
    if (!v.valid()) throw input_error("not a valid semifilter");
    Bitset cur = f;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t e = 0; e < x.size(); ++e) {
            if (cur.test(e)) continue;
            if (cur.subset_of(x.compat_system(e)) && x.compat(e, e)) {
                cur = cur | x.up_set(e);
                changed = true;
            }
        }
    }
    return validate_semifilter(x, cur);
}

struct SemifilterGradeReport {
    FilterGrade grade = FilterGrade::none;
    std::size_t framecommunity = 0;
    bool community_in_filter = false;
    bool community_transitive = false;
};

inline SemifilterGradeReport classify_semifilter(const Semiframe& x, const Bitset& f) {
    auto v = validate_semifilter(x, f);
    if (!v.valid()) throw input_error("not a valid semifilter");
    SemifilterGradeReport r;
    r.framecommunity = x.framecommunity(f);
    r.community_in_filter = f.test(r.framecommunity);
    r.community_transitive = x.is_transitive_element(r.framecommunity);
    if (r.community_in_filter && r.community_transitive)
        r.grade = FilterGrade::regular;
    else if (r.community_in_filter)
        r.grade = FilterGrade::weakly_regular;
    else if (r.framecommunity != x.bottom())
        r.grade = FilterGrade::quasiregular;
    else
        r.grade = FilterGrade::none;
    return r;
}

} // namespace semitop
