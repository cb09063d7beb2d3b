#include "realtight/farey.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>

namespace rt {

namespace {

Int det(const CurveClass& u, const CurveClass& v) {
  return checked_sub(checked_mul(u.x, v.y), checked_mul(u.y, v.x));
}

// Orientation-preserving matrix sending a to infinity, so that counterclockwise order from a
// becomes the ordinary order of finite slopes.
MappingClass to_infinity(const Slope& a) {
  CurveClass v = class_of_slope(a);
  ExtGcd e = ext_gcd(v.x, v.y);  // e.x * v.x + e.y * v.y = 1
  return {v.y, checked_neg(v.x), e.x, e.y};
}

}  // namespace

bool is_farey_edge(const Slope& a, const Slope& b) {
  return std::llabs(det(class_of_slope(a), class_of_slope(b))) == 1;
}

Rational ccw_offset(const Slope& a, const Slope& b) {
  if (a == b) throw DomainError("offset of a slope from itself is undefined");
  // maps the class of a to (0, -1) up to sign; slope of the image is finite
  CurveClass w = to_infinity(a).apply(class_of_slope(b));
  return Rational(w.y, w.x);
}

std::vector<Slope> farey_walk(const Slope& a, const Slope& b) {
  std::vector<Slope> path{a};
  Slope cur = a;
  while (!(cur == b)) {
    CurveClass v = class_of_slope(cur);
    CurveClass w = class_of_slope(b);
    if (det(v, w) < 0) w = {checked_neg(w.x), checked_neg(w.y)};
    // u with det(v, u) = 1
    ExtGcd e = ext_gcd(v.x, v.y);
    CurveClass u{checked_neg(e.y), e.x};
    Int beta = det(v, w);
    Int alpha = det(w, u);
    Int t = ceil_div(alpha, beta);
    CurveClass next{checked_add(u.x, checked_mul(t, v.x)), checked_add(u.y, checked_mul(t, v.y))};
    Slope nxt = slope_of_class(next);
    // termination witness: strictly counterclockwise of cur and not past b
    if (!(nxt == b)) {
      if (!(cur == a) && !(ccw_offset(a, cur) < ccw_offset(a, nxt)))
        throw std::logic_error("farey walk failed to progress");
      if (!(ccw_offset(a, nxt) < ccw_offset(a, b))) throw std::logic_error("farey walk overshot");
    }
    // uniqueness: the next neighbor counterclockwise of nxt already overshoots b
    CurveClass beyond{checked_sub(next.x, v.x), checked_sub(next.y, v.y)};
    if (!(ccw_offset(cur, b) < ccw_offset(cur, slope_of_class(beyond))))
      throw std::logic_error("farey walk step is not the farthest admissible neighbor");
    path.push_back(nxt);
    cur = nxt;
  }
  return path;
}

FareyDist farey_distance(const Slope& a, const Slope& b) {
  return {static_cast<int>(farey_walk(a, b).size()) - 1};
}

std::vector<Slope> bounded_slopes(Int bound) {
  std::vector<Slope> out;
  out.push_back(Slope::infinity());
  for (Int den = 1; den <= bound; ++den)
    for (Int num = -bound; num <= bound; ++num)
      if (gcd(num, den) == 1) out.emplace_back(num, den);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> farey_bfs_all(const Slope& a, Int bound) {
  std::vector<Slope> nodes = bounded_slopes(bound);
  std::map<std::pair<Int, Int>, size_t> index;
  for (size_t i = 0; i < nodes.size(); ++i) index[{nodes[i].num(), nodes[i].den()}] = i;
  auto src = index.find({a.num(), a.den()});
  if (src == index.end()) throw DomainError("increase bound");

  MappingClass m = to_infinity(a);
  auto key = [&](size_t i) {
    CurveClass w = m.apply(class_of_slope(nodes[i]));
    return Rational(w.y, w.x);
  };

  std::vector<int> dist(nodes.size(), -1);
  dist[src->second] = 0;
  std::deque<size_t> queue{src->second};
  while (!queue.empty()) {
    size_t i = queue.front();
    queue.pop_front();
    CurveClass v = class_of_slope(nodes[i]);
    ExtGcd e = ext_gcd(v.x, v.y);
    CurveClass u{checked_neg(e.y), e.x};
    // neighbors are u + t v; scan every t keeping both coordinates within the bound
    Int span = 2 * bound + 2;
    Int t0 = 0;
    if (v.x != 0) t0 = -u.x / v.x;
    else t0 = -u.y / v.y;
    for (Int t = t0 - span; t <= t0 + span; ++t) {
      CurveClass n{u.x + t * v.x, u.y + t * v.y};
      if (std::llabs(n.x) > bound || std::llabs(n.y) > bound) continue;
      auto it = index.find({slope_of_class(n).num(), slope_of_class(n).den()});
      if (it == index.end()) continue;
      size_t j = it->second;
      if (j == src->second || dist[j] != -1) continue;
      if (i != src->second && !(key(i) < key(j))) continue;
      dist[j] = dist[i] + 1;
      queue.push_back(j);
    }
  }
  return dist;
}

FareyDist farey_distance_bfs(const Slope& a, const Slope& b, Int bound) {
  if (a == b) return {0};
  std::vector<Slope> nodes = bounded_slopes(bound);
  auto it = std::lower_bound(nodes.begin(), nodes.end(), b);
  if (it == nodes.end() || !(*it == b)) throw DomainError("increase bound");
  std::vector<int> dist = farey_bfs_all(a, bound);
  int d = dist[static_cast<size_t>(it - nodes.begin())];
  if (d < 0) throw DomainError("increase bound");
  return {d};
}

}  // namespace rt
