#pragma once

#include <string>
#include <vector>

#include "semitop/semitopology.hpp"

namespace semitop {

struct Fixture {
    std::string name;
    std::string description;
    std::vector<std::string> points;
    std::vector<std::vector<std::string>> generators;
};

inline const std::vector<Fixture>& fixture_catalogue() {
    static const std::vector<Fixture> cat = [] {
        std::vector<Fixture> v;
        v.push_back({"SIERP", "Sierpinski space on {0,1}; only nontrivial open is {1}",
                     {"0", "1"}, {{"1"}}});
        v.push_back({"TL3",
                     "three points with opens generated by {0} and {2}; two maximal "
                     "topens and a weakly regular, conflicted middle point",
                     {"0", "1", "2"}, {{"0"}, {"2"}}});
        v.push_back({"TR3",
                     "three points with opens generated by {0},{0,1},{2},{1,2}; the "
                     "middle point is irregular with empty community",
                     {"0", "1", "2"}, {{"0"}, {"0", "1"}, {"2"}, {"1", "2"}}});
        v.push_back({"STAR4",
                     "three singleton topens plus a quasiregular hub point *",
                     {"0", "1", "2", "*"},
                     {{"0"}, {"1"}, {"2"}, {"0", "1", "*"}, {"1", "2", "*"}}});
        v.push_back({"TRI3",
                     "three pairwise-overlapping two-point opens; a single topen space "
                     "that is not sober",
                     {"0", "1", "2"}, {{"0", "1"}, {"1", "2"}, {"0", "2"}}});
        v.push_back({"SQ4",
                     "four points in a cycle of two-point opens; no topens at all",
                     {"0", "1", "2", "3"},
                     {{"3", "0"}, {"0", "1"}, {"1", "2"}, {"2", "3"}}});
        v.push_back({"IRR5",
                     "five points where community(0) is open and nonempty but excludes "
                     "0; two minimal closed neighbourhoods inside intertwined(0)",
                     {"0", "1", "2", "3", "4"},
                     {{"1"}, {"2"}, {"3"}, {"4"}, {"0", "1", "2", "3"},
                      {"0", "1", "2", "4"}}});
        v.push_back({"CHAIN5",
                     "five points in a path of adjacent-pair opens",
                     {"-2", "-1", "0", "1", "2"},
                     {{"-2", "-1"}, {"-1", "0"}, {"0", "1"}, {"1", "2"}}});
        {
            // all subsets of size >= 4 of six points; any two of them intersect
            Fixture f;
            f.name = "MAJ6";
            f.description = "six points with opens = all subsets of size >= 4; a single "
                            "maximal topen covering the space";
            for (int i = 0; i < 6; ++i) f.points.push_back(std::to_string(i));
            for (int mask = 0; mask < 64; ++mask) {
                if (std::popcount(static_cast<unsigned>(mask)) != 4) continue;
                std::vector<std::string> g;
                for (int i = 0; i < 6; ++i)
                    if (mask & (1 << i)) g.push_back(std::to_string(i));
                f.generators.push_back(std::move(g));
            }
            v.push_back(std::move(f));
        }
        return v;
    }();
    return cat;
}

inline Semitopology fixture(const std::string& name) {
    for (const auto& f : fixture_catalogue())
        if (f.name == name) {
            auto pts = f.points;
            return Semitopology::build_named(std::move(pts), f.generators);
        }
    throw input_error("unknown fixture: " + name);
}

} // namespace semitop
