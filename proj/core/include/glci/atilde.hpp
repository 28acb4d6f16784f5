#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "glci/algebra.hpp"
#include "glci/grading.hpp"

namespace glci {

// Orbit quiver on [0, dc] with one arrow per (vertex, label); arrows whose
// naive target leaves [0, dc] are marked as cut and redirected to the
// interval representative modulo Z omega.
struct OrbitQuiverWithCut {
    WeightSystem presentation;  // normalized and padded to n = d + 1
    Quiver quiver;              // no relations; Arrow::cut marks the cut
};

// Unique element of [0, dc] congruent to x modulo Z omega (requires n <= d+1).
GroupElement interval_representative(const WeightSystem& presentation, GroupElement x);

OrbitQuiverWithCut atilde_presentation(const WeightSystem& w);

struct CutReport {
    bool acyclic = false;
    bool matches_canonical = false;
    std::size_t walks_checked = 0;
    std::size_t walks_failed = 0;
    std::vector<std::size_t> passing_walks_per_vertex;
    std::string detail;
    bool ok() const { return acyclic && matches_canonical && walks_failed == 0; }
};

// Walk enumeration visits |V| (d+1)! paths; max_d bounds the cost.
CutReport verify_cut(const OrbitQuiverWithCut& q, int max_d = 5);

}  // namespace glci
