#include "realtight/dividing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace rt {

namespace {

using Pairing = std::vector<std::pair<int, int>>;

// Non-crossing perfect matchings of a list of points taken in order.
std::vector<Pairing> linear_matchings(const std::vector<int>& pts, size_t lo, size_t hi) {
  if (lo >= hi) return {Pairing{}};
  if ((hi - lo) % 2) return {};
  std::vector<Pairing> out;
  for (size_t k = lo + 1; k < hi; k += 2) {
    for (const auto& inside : linear_matchings(pts, lo + 1, k)) {
      for (const auto& rest : linear_matchings(pts, k + 1, hi)) {
        Pairing p{{pts[lo], pts[k]}};
        p.insert(p.end(), inside.begin(), inside.end());
        p.insert(p.end(), rest.begin(), rest.end());
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

std::vector<Pairing> linear_matchings(const std::vector<int>& pts) {
  return linear_matchings(pts, 0, pts.size());
}

DiskMatching normalized(int m, Pairing p) {
  for (auto& [a, b] : p)
    if (a > b) std::swap(a, b);
  std::sort(p.begin(), p.end());
  return {m, std::move(p)};
}

bool strictly_inside(int x, int a, int b, int n) {
  // x in the open counterclockwise interval from a to b on a circle of n points
  int dx = ((x - a) % n + n) % n;
  int db = ((b - a) % n + n) % n;
  return dx > 0 && dx < db;
}

}  // namespace

bool is_perfect_matching(const DiskMatching& d) {
  std::vector<int> seen(2 * d.m, 0);
  if (static_cast<int>(d.pairs.size()) != d.m) return false;
  for (auto [a, b] : d.pairs) {
    if (a < 0 || b < 0 || a >= 2 * d.m || b >= 2 * d.m || a == b) return false;
    if (seen[a]++ || seen[b]++) return false;
  }
  return true;
}

bool is_noncrossing(const DiskMatching& d) {
  for (size_t i = 0; i < d.pairs.size(); ++i) {
    for (size_t j = i + 1; j < d.pairs.size(); ++j) {
      auto [a, b] = d.pairs[i];
      auto [c, e] = d.pairs[j];
      if (a > b) std::swap(a, b);
      bool c_in = a < c && c < b;
      bool e_in = a < e && e < b;
      if (c_in != e_in) return false;
    }
  }
  return true;
}

std::vector<DiskMatching> enumerate_disk_matchings(int m) {
  if (m < 0) throw DomainError("negative arc count");
  std::vector<int> pts(2 * m);
  for (int i = 0; i < 2 * m; ++i) pts[i] = i;
  std::vector<DiskMatching> out;
  for (auto& p : linear_matchings(pts)) out.push_back(normalized(m, std::move(p)));
  std::sort(out.begin(), out.end());
  return out;
}

DiskMatching rotate(const DiskMatching& d, int steps) {
  int n = 2 * d.m;
  if (n == 0) return d;
  Pairing p;
  for (auto [a, b] : d.pairs) p.emplace_back(((a + steps) % n + n) % n, ((b + steps) % n + n) % n);
  return normalized(d.m, std::move(p));
}

Count count_disk_classes_fixed_arc(int m) {
  if (m < 1) throw DomainError("at least one arc is required");
  return catalan(m - 1);
}

std::vector<DiskMatching> matchings_with_fixed_arc(int m) {
  std::vector<DiskMatching> out;
  for (auto& d : enumerate_disk_matchings(m))
    if (std::find(d.pairs.begin(), d.pairs.end(), std::make_pair(0, 1)) != d.pairs.end())
      out.push_back(d);
  return out;
}

int count_disk_rotation_orbits(int m) {
  std::set<DiskMatching> reps;
  for (auto& d : enumerate_disk_matchings(m)) {
    DiskMatching best = d;
    for (int s = 1; s < 2 * m; ++s) best = std::min(best, rotate(d, s));
    reps.insert(best);
  }
  return static_cast<int>(reps.size());
}

void AnnulusArcSystem::canonicalize() { std::sort(arcs.begin(), arcs.end()); }

int AnnulusArcSystem::traversing_count() const {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(),
                                        [](const AnnulusArc& a) { return a.kind == ArcKind::Traversing; }));
}

Rational AnnulusArcSystem::inner_position(int i) const { return Rational(2 * i + 1, 2 * n_in); }

Rational AnnulusArcSystem::outer_position(int j) const { return Rational(j, n_out); }

Rational AnnulusArcSystem::displacement(const AnnulusArc& arc) const {
  return outer_position(arc.b) + Rational(arc.wind) - inner_position(arc.a);
}

void verify_embedding(const AnnulusArcSystem& s) {
  if (s.n_in < 0 || s.n_out < 0) throw DomainError("negative endpoint count");
  if ((s.n_in + s.n_out) % 2) throw DomainError("endpoint total must be even");
  std::vector<int> used_in(s.n_in, 0), used_out(s.n_out, 0);
  auto use = [](std::vector<int>& v, int i, const char* where) {
    if (i < 0 || i >= static_cast<int>(v.size())) throw DomainError(std::string("endpoint out of range on ") + where);
    if (v[i]++) throw DomainError(std::string("endpoint used twice on ") + where);
  };
  std::vector<const AnnulusArc*> trav;
  for (const auto& a : s.arcs) {
    switch (a.kind) {
      case ArcKind::Inner:
        use(used_in, a.a, "inner boundary");
        use(used_in, a.b, "inner boundary");
        break;
      case ArcKind::Outer:
        use(used_out, a.a, "outer boundary");
        use(used_out, a.b, "outer boundary");
        break;
      case ArcKind::Traversing:
        use(used_in, a.a, "inner boundary");
        use(used_out, a.b, "outer boundary");
        trav.push_back(&a);
        break;
    }
  }
  for (int v : used_in)
    if (v != 1) throw DomainError("inner endpoint not used");
  for (int v : used_out)
    if (v != 1) throw DomainError("outer endpoint not used");

  // parallel arcs: nested or disjoint intervals, free of traversing endpoints
  for (ArcKind side : {ArcKind::Inner, ArcKind::Outer}) {
    int n = side == ArcKind::Inner ? s.n_in : s.n_out;
    std::vector<const AnnulusArc*> par;
    for (const auto& a : s.arcs)
      if (a.kind == side) par.push_back(&a);
    for (const auto* p : par) {
      for (const auto* q : par) {
        if (p == q) continue;
        bool qa = strictly_inside(q->a, p->a, p->b, n);
        if (qa != strictly_inside(q->b, p->a, p->b, n)) throw DomainError("parallel arcs cross");
        // q sits inside the disk cut off by p, so its own disk must too
        if (qa && strictly_inside(p->a, q->a, q->b, n)) throw DomainError("parallel arcs cross");
      }
      for (const auto* t : trav) {
        int x = side == ArcKind::Inner ? t->a : t->b;
        if (strictly_inside(x, p->a, p->b, n)) throw DomainError("parallel arc crosses a traversing arc");
      }
    }
  }

  // traversing arcs: outer lifts increase with inner order and span less than one turn
  std::vector<std::pair<Rational, Rational>> ends;
  for (const auto* t : trav) ends.emplace_back(s.inner_position(t->a), s.inner_position(t->a) + s.displacement(*t));
  std::sort(ends.begin(), ends.end());
  for (size_t i = 1; i < ends.size(); ++i)
    if (!(ends[i - 1].second < ends[i].second)) throw DomainError("traversing arcs cross");
  if (ends.size() > 1 && !(ends.back().second < ends.front().second + Rational(1)))
    throw DomainError("traversing arcs cross");
}

bool is_embedded(const AnnulusArcSystem& s) {
  try {
    verify_embedding(s);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

namespace {

// Matchings of n points on a circle, each arc recorded by the counterclockwise interval it cuts off
// away from the rest of the annulus.
std::vector<Pairing> circle_systems(int n) {
  std::set<Pairing> out;
  if (n == 0) return {Pairing{}};
  for (int c = 0; c < n; ++c) {
    std::vector<int> seq(n);
    for (int t = 0; t < n; ++t) seq[t] = (c + t) % n;
    for (auto& p : linear_matchings(seq)) {
      std::sort(p.begin(), p.end());
      out.insert(p);
    }
  }
  return {out.begin(), out.end()};
}

void combinations(int n, int k, std::vector<std::vector<int>>& out) {
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<int> cyclic_gap(int from, int to, int n, bool full) {
  // points strictly after `from` and strictly before `to`; full = all other points
  std::vector<int> g;
  for (int t = 1; t < n; ++t) {
    int x = (from + t) % n;
    if (!full && x == to) break;
    g.push_back(x);
  }
  return g;
}

}  // namespace

std::vector<AnnulusArcSystem> enumerate_annulus_systems(int n_in, int n_out, int window) {
  if (n_in < 0 || n_out < 0) throw DomainError("endpoint counts must be nonnegative");
  if ((n_in + n_out) % 2) throw DomainError("endpoint total must be even");
  if (window < 0) throw DomainError("window must be nonnegative");
  std::set<AnnulusArcSystem> out;

  if (n_in % 2 == 0 && n_out % 2 == 0) {
    for (const auto& pi : circle_systems(n_in)) {
      for (const auto& po : circle_systems(n_out)) {
        AnnulusArcSystem s{n_in, n_out, {}};
        for (auto [a, b] : pi) s.arcs.push_back({ArcKind::Inner, a, b, 0});
        for (auto [a, b] : po) s.arcs.push_back({ArcKind::Outer, a, b, 0});
        s.canonicalize();
        out.insert(s);
      }
    }
  }

  for (int k = 1; k <= std::min(n_in, n_out); ++k) {
    if ((n_in - k) % 2 || (n_out - k) % 2) continue;
    std::vector<std::vector<int>> ins_all, outs_all;
    combinations(n_in, k, ins_all);
    combinations(n_out, k, outs_all);
    for (const auto& ins : ins_all) {
      for (const auto& outs : outs_all) {
        for (int r = -k * window; r < k * (window + 1); ++r) {
          AnnulusArcSystem base{n_in, n_out, {}};
          std::vector<int> end_j(k);
          for (int a = 0; a < k; ++a) {
            int idx = a + r;
            int q = static_cast<int>(floor_div(idx, k));
            int m = idx - q * k;
            end_j[a] = outs[m];
            base.arcs.push_back({ArcKind::Traversing, ins[a], outs[m], q});
          }
          std::vector<std::vector<Pairing>> gap_in(k), gap_out(k);
          bool ok = true;
          for (int a = 0; a < k && ok; ++a) {
            auto ig = cyclic_gap(ins[a], ins[(a + 1) % k], n_in, k == 1);
            auto og = cyclic_gap(end_j[a], end_j[(a + 1) % k], n_out, k == 1);
            gap_in[a] = linear_matchings(ig);
            gap_out[a] = linear_matchings(og);
            ok = !gap_in[a].empty() && !gap_out[a].empty();
          }
          if (!ok) continue;
          std::function<void(int, AnnulusArcSystem&)> rec = [&](int a, AnnulusArcSystem& acc) {
            if (a == k) {
              AnnulusArcSystem s = acc;
              s.canonicalize();
              out.insert(s);
              return;
            }
            for (const auto& pi : gap_in[a]) {
              for (const auto& po : gap_out[a]) {
                size_t mark = acc.arcs.size();
                for (auto [x, y] : pi) acc.arcs.push_back({ArcKind::Inner, x, y, 0});
                for (auto [x, y] : po) acc.arcs.push_back({ArcKind::Outer, x, y, 0});
                rec(a + 1, acc);
                acc.arcs.resize(mark);
              }
            }
          };
          rec(0, base);
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

std::string to_string(InvolutionKind k) {
  switch (k) {
    case InvolutionKind::Identity: return "identity";
    case InvolutionKind::RotationHalf: return "rotation-by-half";
    case InvolutionKind::Reflection: return "reflection";
    case InvolutionKind::BoundarySwap: return "boundary-swap";
    case InvolutionKind::Custom: return "custom";
  }
  return "?";
}

InvolutionKind parse_involution_kind(const std::string& text) {
  if (text == "identity") return InvolutionKind::Identity;
  if (text == "rotation-by-half" || text == "rotation") return InvolutionKind::RotationHalf;
  if (text == "reflection") return InvolutionKind::Reflection;
  if (text == "boundary-swap" || text == "swap") return InvolutionKind::BoundarySwap;
  throw DomainError("unknown involution '" + text + "'");
}

InvolutionOnMarks InvolutionOnMarks::make(InvolutionKind kind, int n_in, int n_out) {
  InvolutionOnMarks inv;
  inv.kind = kind;
  inv.n_in = n_in;
  inv.n_out = n_out;
  switch (kind) {
    case InvolutionKind::Identity:
    case InvolutionKind::Custom:
      break;
    case InvolutionKind::RotationHalf:
      inv.offset_in = inv.offset_out = Rational(1, 2);
      break;
    case InvolutionKind::Reflection:
      inv.sign_in = inv.sign_out = -1;
      break;
    case InvolutionKind::BoundarySwap:
      if (n_in != n_out) throw DomainError("boundary swap needs equal endpoint counts");
      inv.swap = true;
      if (n_in > 0) {
        inv.offset_in = Rational(-1, 2 * n_in);
        inv.offset_out = Rational(1, 2 * n_in);
      }
      break;
  }
  return inv;
}

namespace {

struct Placement {
  int n_in, n_out;
  Rational pos(bool inner, int i) const {
    return inner ? Rational(2 * i + 1, 2 * n_in) : Rational(i, n_out);
  }
  int index(bool inner, const Rational& x) const {
    Rational f = frac(x);
    Rational t = inner ? (f * Rational(2 * n_in) - Rational(1)) / Rational(2) : f * Rational(n_out);
    if (!t.is_integer()) throw DomainError("involution does not preserve the marked points");
    return static_cast<int>(t.num());
  }
};

// image of boundary point x: (lands on inner?, new position)
std::pair<bool, Rational> image(const InvolutionOnMarks& inv, bool inner, const Rational& x) {
  int s = inner ? inv.sign_in : inv.sign_out;
  const Rational& c = inner ? inv.offset_in : inv.offset_out;
  bool lands_inner = inv.swap ? !inner : inner;
  return {lands_inner, Rational(s) * x + c};
}

}  // namespace

std::vector<int> InvolutionOnMarks::permutation() const {
  if (swap && n_in != n_out) throw DomainError("boundary swap needs equal endpoint counts");
  Placement pl{n_in, n_out};
  std::vector<int> perm;
  for (int i = 0; i < n_in + n_out; ++i) {
    bool inner = i < n_in;
    int local = inner ? i : i - n_in;
    auto [li, x] = image(*this, inner, pl.pos(inner, local));
    int j = pl.index(li, x);
    perm.push_back(li ? j : j + n_in);
  }
  return perm;
}

bool InvolutionOnMarks::is_involution() const {
  if (sign_in * sign_in != 1 || sign_out * sign_out != 1) return false;
  std::vector<int> perm;
  try {
    perm = permutation();
  } catch (const DomainError&) {
    return false;
  }
  for (size_t i = 0; i < perm.size(); ++i)
    if (perm[perm[i]] != static_cast<int>(i)) return false;
  // the lifted square must be a deck translation so that windings are preserved
  auto square_shift = [&](bool inner) {
    Rational x(0);
    auto [b1, y] = image(*this, inner, x);
    auto [b2, z] = image(*this, b1, y);
    (void)b2;
    return z;
  };
  auto square_sign = [&](bool inner) {
    int s1 = inner ? sign_in : sign_out;
    bool next = swap ? !inner : inner;
    int s2 = next ? sign_in : sign_out;
    return s1 * s2;
  };
  for (bool inner : {true, false}) {
    if (square_sign(inner) != 1) return false;
    if (!square_shift(inner).is_integer()) return false;
  }
  return true;
}

AnnulusArcSystem apply(const InvolutionOnMarks& inv, const AnnulusArcSystem& s) {
  if (inv.n_in != s.n_in || inv.n_out != s.n_out)
    throw DomainError("involution acts on a different boundary pattern");
  Placement pl{s.n_in, s.n_out};
  AnnulusArcSystem out{s.n_in, s.n_out, {}};
  for (const auto& a : s.arcs) {
    if (a.kind == ArcKind::Traversing) {
      Rational xi = s.inner_position(a.a);
      Rational xo = s.outer_position(a.b) + Rational(a.wind);
      auto [ii, yi] = image(inv, true, xi);
      auto [io, yo] = image(inv, false, xo);
      (void)io;
      Rational new_in = ii ? yi : yo;
      Rational new_out = ii ? yo : yi;
      int i2 = pl.index(true, new_in);
      int j2 = pl.index(false, new_out);
      Rational w = (new_out - new_in) - (s.outer_position(j2) - s.inner_position(i2));
      if (!w.is_integer()) throw std::logic_error("non-integral winding under involution");
      out.arcs.push_back({ArcKind::Traversing, i2, j2, w.num()});
    } else {
      bool inner = a.kind == ArcKind::Inner;
      auto [la, ya] = image(inv, inner, pl.pos(inner, a.a));
      auto [lb, yb] = image(inv, inner, pl.pos(inner, a.b));
      (void)lb;
      int ia = pl.index(la, ya), ib = pl.index(la, yb);
      int sign = inner ? inv.sign_in : inv.sign_out;
      ArcKind k = la ? ArcKind::Inner : ArcKind::Outer;
      if (sign > 0) out.arcs.push_back({k, ia, ib, 0});
      else out.arcs.push_back({k, ib, ia, 0});
    }
  }
  out.canonicalize();
  return out;
}

std::vector<AnnulusArcSystem> filter_symmetric(const std::vector<AnnulusArcSystem>& systems,
                                               const InvolutionOnMarks& inv) {
  if (!inv.is_involution()) throw DomainError("action is not an involution");
  std::vector<AnnulusArcSystem> out;
  for (const auto& s : systems) {
    AnnulusArcSystem c = s;
    c.canonicalize();
    if (apply(inv, c) == c) out.push_back(s);
  }
  return out;
}

Face linear_face(std::string name, const std::vector<Rational>& start_positions, const Rational& shift) {
  Face f{std::move(name), {}};
  for (const auto& x : start_positions) f.arcs.push_back({0, frac(x), 1, frac(x + shift), shift});
  return f;
}

std::string to_string(Verdict v) { return v == Verdict::Tight ? "tight" : "overtwisted"; }

RoundResult assemble_and_round(const RoundedBoundarySpec& spec) {
  const int nf = static_cast<int>(spec.faces.size());
  if (nf == 0) throw DomainError("no faces");
  if (spec.rounding < -1 || spec.rounding > 1) throw DomainError("rounding must be -1, 0 or +1");

  using Key = std::tuple<int, int, Int, Int>;  // face, side, x
  auto key = [](int f, int side, const Rational& x) {
    Rational y = frac(x);
    return Key{f, side, y.num(), y.den()};
  };
  struct Link {
    Key to;
    Rational dx;
    int dm;
  };
  std::map<Key, Link> arc_link, corner_link;

  for (int f = 0; f < nf; ++f) {
    for (const auto& a : spec.faces[f].arcs) {
      if (a.from_side < 0 || a.from_side > 1 || a.to_side < 0 || a.to_side > 1)
        throw DomainError("face sides are 0 and 1");
      Key p = key(f, a.from_side, a.from_x), q = key(f, a.to_side, a.to_x);
      if (p == q) throw DomainError("arc with coincident endpoints");
      int dm = a.to_side - a.from_side;
      if (!arc_link.emplace(p, Link{q, a.dx, dm}).second || !arc_link.emplace(q, Link{p, -a.dx, -dm}).second)
        throw DomainError("endpoint used twice in face " + spec.faces[f].name);
    }
  }

  for (int e = 0; e < nf; ++e) {
    int before = (e + nf - 1) % nf, after = e;
    std::vector<Key> bs, as;
    for (const auto& [k, l] : arc_link) {
      (void)l;
      if (std::get<0>(k) == before && std::get<1>(k) == 1) bs.push_back(k);
      if (std::get<0>(k) == after && std::get<1>(k) == 0) as.push_back(k);
    }
    if (nf == 1) {
      // the single face is glued to itself; bs and as are drawn from the same face
    }
    if (bs.size() != as.size())
      throw DomainError("incompatible endpoint counts at edge " + std::to_string(e));
    if (bs.empty()) continue;
    Rational step = spec.rounding == 0 ? Rational(0) : Rational(spec.rounding, 2 * static_cast<Int>(bs.size()));
    for (const auto& b : bs) {
      Rational x(std::get<2>(b), std::get<3>(b));
      Key target = key(after, 0, x + step);
      if (!arc_link.count(target))
        throw DomainError("incompatible endpoint positions at edge " + std::to_string(e));
      if (!corner_link.emplace(b, Link{target, step, 0}).second ||
          !corner_link.emplace(target, Link{b, -step, 0}).second)
        throw DomainError("rounding is not a bijection at edge " + std::to_string(e));
    }
  }

  RoundResult res;
  std::set<Key> seen;
  for (const auto& [start, l0] : arc_link) {
    (void)l0;
    if (seen.count(start)) continue;
    Rational x(0);
    Int m = 0;
    Key cur = start;
    while (true) {
      seen.insert(cur);
      const Link& a = arc_link.at(cur);
      x += a.dx;
      m += a.dm;
      seen.insert(a.to);
      const Link& c = corner_link.at(a.to);
      x += c.dx;
      cur = c.to;
      if (cur == start) break;
      if (seen.count(cur)) throw std::logic_error("rounding produced a non-closed path");
    }
    if (m % nf) throw std::logic_error("curve does not close up across the faces");
    if (!x.is_integer()) throw std::logic_error("curve has non-integral winding");
    ClosedCurve cc{m / nf, x.num(), x.num() == 0};
    res.meridional_intersection += cc.meridian < 0 ? -cc.meridian : cc.meridian;
    res.curves.push_back(cc);
  }
  std::sort(res.curves.begin(), res.curves.end(), [](const ClosedCurve& a, const ClosedCurve& b) {
    return std::tie(a.meridian, a.longitude) < std::tie(b.meridian, b.longitude);
  });

  bool contractible = std::any_of(res.curves.begin(), res.curves.end(), [](const ClosedCurve& c) { return c.contractible; });
  res.verdict = contractible ? Verdict::Overtwisted : Verdict::Tight;
  if (!contractible && !res.curves.empty()) {
    // the framing (face loop, circle direction) is negatively oriented, hence the sign
    Slope s = slope_of_class({res.curves[0].meridian, -res.curves[0].longitude});
    bool parallel = std::all_of(res.curves.begin(), res.curves.end(), [&](const ClosedCurve& c) {
      return slope_of_class({c.meridian, -c.longitude}) == s;
    });
    if (parallel) res.slope = s;
  }
  return res;
}

}  // namespace rt
