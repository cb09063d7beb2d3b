#include "realtight/dividing.hpp"

#include <algorithm>
#include <set>

namespace rt {

std::string to_string(ProofName p) {
  switch (p) {
    case ProofName::NoBasic: return "nobasic";
    case ProofName::VarDouble: return "vardouble";
    case ProofName::C2TMinus1Minus2: return "c2_T_minus1_minus2";
  }
  return "?";
}

ProofName parse_proof_name(const std::string& text) {
  if (text == "nobasic") return ProofName::NoBasic;
  if (text == "vardouble") return ProofName::VarDouble;
  if (text == "c2_T_minus1_minus2") return ProofName::C2TMinus1Minus2;
  throw DomainError("unknown proof '" + text + "'");
}

namespace {

constexpr int kRounding = 1;

struct PlacedArc {
  ArcKind kind;
  int a, b;
  Rational d;  // traversing displacement
};

// Smallest |numerator| over slopes in [lo, hi], both negative.
Int min_numerator(const Rational& lo, const Rational& hi) {
  Rational a = -hi, b = -lo;  // 0 < a <= b
  for (Int p = 1;; ++p) {
    // q with a <= p/q <= b, i.e. p/b <= q <= p/a
    Rational qlo = Rational(p) / b, qhi = Rational(p) / a;
    if (qlo.ceil() <= qhi.floor()) return p;
  }
}

// Region bounded by A, a strip of T2, A', and a strip of T1. The annulus A sits at y = -1/4,
// A' = c1(A) at y = 1/4 with c1(x, y) = (1/2 - x, -y).
RoundedBoundarySpec build_region(const std::vector<PlacedArc>& arcs, const std::vector<Rational>& pin,
                                 const std::vector<Rational>& pout, const std::vector<Rational>& t2_start,
                                 const Rational& t2_shift, const std::vector<Rational>& t1_start,
                                 const Rational& t1_shift) {
  const Rational half(1, 2);
  Face a{"A", {}}, am{"A'", {}};
  for (const auto& arc : arcs) {
    switch (arc.kind) {
      case ArcKind::Traversing: {
        Rational xa = pin[arc.a], xb = xa + arc.d;
        a.arcs.push_back({0, xa, 1, frac(xb), arc.d});
        am.arcs.push_back({0, frac(half - xb), 1, frac(half - xa), arc.d});
        break;
      }
      case ArcKind::Inner: {
        Rational d = frac(pin[arc.b] - pin[arc.a]);
        a.arcs.push_back({0, pin[arc.a], 0, pin[arc.b], d});
        am.arcs.push_back({1, frac(half - pin[arc.a]), 1, frac(half - pin[arc.b]), -d});
        break;
      }
      case ArcKind::Outer: {
        Rational d = frac(pout[arc.b] - pout[arc.a]);
        a.arcs.push_back({1, pout[arc.a], 1, pout[arc.b], d});
        am.arcs.push_back({0, frac(half - pout[arc.a]), 0, frac(half - pout[arc.b]), -d});
        break;
      }
    }
  }
  RoundedBoundarySpec spec;
  spec.rounding = kRounding;
  spec.faces = {a, linear_face("T2", t2_start, t2_shift), am, linear_face("T1", t1_start, t1_shift)};
  return spec;
}

std::string judge(const RoundResult& r, Int twisting_bound) {
  if (r.verdict == Verdict::Overtwisted) return "overtwisted";
  if (r.meridional_intersection < twisting_bound) return "excess twisting";
  return "tight";
}

ProofReport replay_c1(ProofName name, Int outer_slope) {
  const int n_in = 2;
  const int n_out = static_cast<int>(2 * -outer_slope);
  const Rational half(1, 2), quarter(1, 4);
  ProofReport rep;
  rep.name = to_string(name);
  rep.inner_slope = Slope(-1, 1);
  rep.outer_slope = Slope(outer_slope, 1);
  rep.n_in = n_in;
  rep.n_out = n_out;
  rep.rounding = kRounding;
  rep.sign_decorations = 2;
  rep.scenario = "c1-real T(-1," + std::to_string(outer_slope) +
                 "), #Gamma = 2 on both boundary tori, ruling slope 0; annulus A and its image A' = c1(A) "
                 "cut the thick torus into two solid tori R and R'";
  Rational lo_window = Rational(-1) + Rational(1, n_out);
  rep.window = "every traversing arc of A has displacement D with " + lo_window.str() + " < D < 0";

  const Rational base_in = half;
  const Rational base_out = quarter + Rational(1, 2 * n_out);
  std::vector<Rational> pin(n_in), pout(n_out), t2(n_out);
  for (int i = 0; i < n_in; ++i) pin[i] = frac(base_in + Rational(2 * i + 1, 2 * n_in));
  for (int j = 0; j < n_out; ++j) pout[j] = frac(base_out + Rational(2 * j + 1, 2 * n_out));
  for (int j = 0; j < n_out; ++j) t2[j] = frac(base_out + Rational(j, n_out));
  const Rational t2_shift = half / Rational(outer_slope);
  const std::vector<Rational> t1{Rational(0), half};
  const Rational t1_shift = half;

  std::vector<Rational> pin_m(n_in), pout_m(n_out), t2_m(n_out), t1_m;
  for (int i = 0; i < n_in; ++i) pin_m[i] = frac(half - pin[i]);
  for (int j = 0; j < n_out; ++j) pout_m[j] = frac(half - pout[j]);
  for (int j = 0; j < n_out; ++j) t2_m[j] = frac(half - t2[j]);
  for (int k = 0; k < 2; ++k) t1_m.push_back(frac(quarter - Rational(3, 4) + Rational(k, 2)));

  const Int bound = 2 * min_numerator(Rational(outer_slope), Rational(-1));

  auto systems = enumerate_annulus_systems(n_in, n_out, 1);
  rep.enumerated = systems.size();
  rep.symmetric = systems.size();  // A' is defined as c1(A), so every A gives a c1-symmetric pair

  std::vector<AnnulusArcSystem> tight;
  for (const auto& s : systems) {
    std::vector<PlacedArc> placed;
    std::vector<Rational> ds;
    bool in_window = true;
    for (const auto& arc : s.arcs) {
      Rational d(0);
      if (arc.kind == ArcKind::Traversing) {
        d = (base_out + Rational(2 * arc.b + 1, 2 * n_out) + Rational(arc.wind)) -
            (base_in + Rational(2 * arc.a + 1, 2 * n_in));
        ds.push_back(d);
        if (!(lo_window < d && d < Rational(0))) in_window = false;
      }
      placed.push_back({arc.kind, arc.a, arc.b, d});
    }
    if (!in_window) continue;
    ++rep.considered;

    std::vector<PlacedArc> mirrored;
    for (const auto& p : placed) {
      if (p.kind == ArcKind::Traversing) mirrored.push_back({p.kind, p.a, p.b, -p.d});
      else mirrored.push_back({p.kind, p.b, p.a, p.d});
    }
    ReplayCase c;
    c.system = s;
    c.displacements = ds;
    c.region = assemble_and_round(build_region(placed, pin, pout, t2, t2_shift, t1, t1_shift));
    c.region_mirror = assemble_and_round(build_region(mirrored, pin_m, pout_m, t2_m, t2_shift, t1_m, t1_shift));
    std::string o1 = judge(*c.region, bound), o2 = judge(*c.region_mirror, bound);
    if (o1 == "overtwisted" || o2 == "overtwisted") {
      c.outcome = "overtwisted";
      ++rep.overtwisted;
    } else if (o1 == "excess twisting" || o2 == "excess twisting") {
      c.outcome = "excess twisting";
      ++rep.excess_twisting;
    } else {
      c.outcome = "tight";
      ++rep.tight_survivors;
      tight.push_back(s);
    }
    rep.cases.push_back(std::move(c));
  }

  auto rot = InvolutionOnMarks::make(InvolutionKind::RotationHalf, n_in, n_out);
  std::set<AnnulusArcSystem> classes;
  for (const auto& s : tight) classes.insert(std::min(s, apply(rot, s)));
  rep.classes_up_to_rotation = classes.size();

  rep.notes = {
      "marked points: n_in = #Gamma(T1) * |det(ruling, -1)| = 2, n_out = #Gamma(T2) * |det(ruling, " +
          std::to_string(outer_slope) + ")| = " + std::to_string(n_out),
      "edge rounding: a dividing curve of the preceding face meets the following face 1/(2n) further along the "
      "circle direction at every corner (one global direction)",
      "holonomy normalization: displacements are measured from the c1-fixed phases; configurations outside "
      "the window are twists of ones inside it",
      "a curve is contractible in R or R' when its circle winding is zero; any such curve makes the "
      "configuration overtwisted",
      "a configuration whose dividing curves meet a ruling circle fewer than " + std::to_string(bound) +
          " times would give a Legendrian ruling curve with more twisting than the slice allows",
      "k = 0 systems (no arc from T1 to T2) are enumerated and rejected by the same rules",
      "sign decorations are not identified for c1: each surviving configuration carries two",
  };
  return rep;
}

ProofReport replay_c2() {
  ProofReport rep;
  rep.name = to_string(ProofName::C2TMinus1Minus2);
  rep.inner_slope = Slope(-1, 1);
  rep.outer_slope = Slope(-2, 1);
  rep.n_in = 2;
  rep.n_out = 4;
  rep.rounding = kRounding;
  rep.sign_decorations = 1;
  rep.scenario = "c2-real T(-1,-2), #Gamma = 2, meridional annulus with c2 acting as rotation by half a turn";
  rep.window = "relative twisting within one full turn";
  auto systems = enumerate_annulus_systems(2, 4, 1);
  std::vector<AnnulusArcSystem> with_traversing;
  for (const auto& s : systems)
    if (s.traversing_count() > 0) with_traversing.push_back(s);
  rep.enumerated = with_traversing.size();
  auto sym = filter_symmetric(with_traversing, InvolutionOnMarks::make(InvolutionKind::RotationHalf, 2, 4));
  rep.symmetric = sym.size();
  rep.considered = sym.size();
  rep.tight_survivors = 0;
  for (const auto& s : sym) {
    ReplayCase c;
    c.system = s;
    c.outcome = "symmetric";
    rep.cases.push_back(c);
  }
  rep.tight_survivors = sym.size();
  rep.classes_up_to_rotation = sym.size();
  rep.notes = {
      "systems must contain an arc joining the two boundaries",
      "the single parallel arc on the outer boundary cannot be invariant under the half turn",
      "sign decorations are identified for c2",
  };
  return rep;
}

}  // namespace

ProofReport replay_proof(ProofName name) {
  switch (name) {
    case ProofName::NoBasic: return replay_c1(name, -2);
    case ProofName::VarDouble: return replay_c1(name, -3);
    case ProofName::C2TMinus1Minus2: return replay_c2();
  }
  throw DomainError("unknown proof");
}

}  // namespace rt
