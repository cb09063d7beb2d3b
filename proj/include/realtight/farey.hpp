#pragma once

#include "realtight/slopes.hpp"

#include <vector>

namespace rt {

struct FareyDist {
  int steps = 0;
  friend bool operator==(const FareyDist&, const FareyDist&) = default;
};

bool is_farey_edge(const Slope& a, const Slope& b);

// Position of b when walking counterclockwise (increasing slope, wrapping at infinity)
// from a; a finite rational, strictly increasing along the walk. Undefined for b == a.
Rational ccw_offset(const Slope& a, const Slope& b);

// Greedy counterclockwise walk from a to b; the returned path starts at a and ends at b.
std::vector<Slope> farey_walk(const Slope& a, const Slope& b);
FareyDist farey_distance(const Slope& a, const Slope& b);

// Breadth-first search over slopes with |num|, |den| <= bound, along counterclockwise-monotone
// Farey paths.
FareyDist farey_distance_bfs(const Slope& a, const Slope& b, Int bound);

// All slopes with |num|, |den| <= bound.
std::vector<Slope> bounded_slopes(Int bound);

// Single-source search: distances from a to every slope in bounded_slopes(bound); -1 if unreachable.
std::vector<int> farey_bfs_all(const Slope& a, Int bound);

}  // namespace rt
