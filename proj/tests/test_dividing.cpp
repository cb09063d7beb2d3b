#include "oracles.hpp"
#include "realtight/dividing.hpp"

#include <doctest.h>

#include <set>

using namespace rt;

TEST_CASE("disk matchings against brute force") {
  CHECK(enumerate_disk_matchings(0).size() == 1);
  auto all3 = oracle::all_matchings(3);
  CHECK(all3.size() == 15);
  for (int m = 0; m <= 6; ++m) {
    std::set<oracle::Matching> ref;
    for (const auto& x : oracle::all_matchings(m))
      if (oracle::noncrossing(x)) ref.insert(x);
    std::set<oracle::Matching> got;
    for (const auto& d : enumerate_disk_matchings(m)) {
      CHECK(is_perfect_matching(d));
      CHECK(is_noncrossing(d));
      got.insert(d.pairs);
    }
    CHECK(got == ref);
  }
  CHECK(enumerate_disk_matchings(3).size() == 5);
}

TEST_CASE("catalan counts") {
  for (int m = 0; m <= 10; ++m) CHECK(Count(enumerate_disk_matchings(m).size()) == oracle::catalan(m));
  for (int n = 0; n <= 30; ++n) CHECK(catalan(n) == oracle::catalan(n));
  CHECK(count_disk_classes_fixed_arc(3) == 2);
  CHECK(count_disk_classes_fixed_arc(1) == 1);
  CHECK(count_disk_classes_fixed_arc(5) == 14);
  CHECK_THROWS_AS(count_disk_classes_fixed_arc(0), DomainError);
}

TEST_CASE("fixed-arc classes equal the enumerated quotient") {
  for (int m = 1; m <= 8; ++m) {
    auto fixed = matchings_with_fixed_arc(m);
    CHECK(Count(fixed.size()) == count_disk_classes_fixed_arc(m));
    std::size_t direct = 0;
    for (const auto& d : enumerate_disk_matchings(m))
      direct += std::count(d.pairs.begin(), d.pairs.end(), std::pair<int, int>{0, 1});
    CHECK(direct == fixed.size());
  }
}

TEST_CASE("rotation orbits by brute force") {
  for (int m = 1; m <= 7; ++m) {
    std::set<oracle::Matching> seen;
    int orbits = 0;
    for (const auto& d : enumerate_disk_matchings(m)) {
      if (seen.count(d.pairs)) continue;
      ++orbits;
      for (int k = 0; k < 2 * m; ++k) seen.insert(rotate(d, k).pairs);
    }
    CHECK(count_disk_rotation_orbits(m) == orbits);
  }
  CHECK(count_disk_rotation_orbits(3) == 2);
}

TEST_CASE("small annulus systems") {
  auto empty = enumerate_annulus_systems(0, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].arcs.empty());

  auto s22 = enumerate_annulus_systems(2, 2);
  bool two_traversing = false, parallel_pair = false;
  for (const auto& s : s22) {
    CHECK(is_embedded(s));
    if (s.traversing_count() == 2) two_traversing = true;
    if (s.traversing_count() == 0) parallel_pair = true;
  }
  CHECK(two_traversing);
  CHECK(parallel_pair);

  bool shape = false;
  for (const auto& s : enumerate_annulus_systems(2, 4)) {
    int outer = 0;
    for (const auto& a : s.arcs) outer += a.kind == ArcKind::Outer;
    if (s.traversing_count() == 2 && outer == 1) shape = true;
  }
  CHECK(shape);
}

TEST_CASE("property: enumerated systems are embedded, distinct and complete at zero winding") {
  for (int n_in = 0; n_in <= 4; ++n_in)
    for (int n_out = 0; n_out <= 4; ++n_out) {
      if ((n_in + n_out) % 2) continue;
      auto systems = enumerate_annulus_systems(n_in, n_out);
      std::set<AnnulusArcSystem> uniq(systems.begin(), systems.end());
      CHECK(uniq.size() == systems.size());
      for (const auto& s : systems) CHECK(is_embedded(s));
      // systems without traversing arcs, brute force over all boundary-parallel pairings
      int n = n_in + n_out;
      std::set<AnnulusArcSystem> ref;
      for (const auto& m : oracle::all_matchings(n / 2)) {
        AnnulusArcSystem s{n_in, n_out, {}};
        bool ok = true;
        for (auto [a, b] : m) {
          bool ain = a < n_in, bin = b < n_in;
          if (ain != bin) ok = false;
          if (!ok) break;
          int x = ain ? a : a - n_in, y = ain ? b : b - n_in;
          ArcKind k = ain ? ArcKind::Inner : ArcKind::Outer;
          s.arcs.push_back({k, x, y, 0});
        }
        if (!ok) continue;
        // each arc may bound either complementary interval
        int arcs = static_cast<int>(s.arcs.size());
        for (int mask = 0; mask < (1 << arcs); ++mask) {
          AnnulusArcSystem t = s;
          for (int i = 0; i < arcs; ++i)
            if (mask >> i & 1) std::swap(t.arcs[i].a, t.arcs[i].b);
          t.canonicalize();
          if (is_embedded(t)) ref.insert(t);
        }
      }
      std::set<AnnulusArcSystem> got;
      for (const auto& s : systems)
        if (s.traversing_count() == 0) got.insert(s);
      CHECK(got == ref);
    }
}

TEST_CASE("involutions on marked points") {
  for (auto kind : {InvolutionKind::Identity, InvolutionKind::RotationHalf, InvolutionKind::Reflection,
                    InvolutionKind::BoundarySwap}) {
    auto inv = InvolutionOnMarks::make(kind, 4, 4);
    CHECK(inv.is_involution());
    auto perm = inv.permutation();
    for (size_t i = 0; i < perm.size(); ++i) CHECK(perm[perm[i]] == static_cast<int>(i));
  }
  auto systems = enumerate_annulus_systems(2, 2);
  CHECK(filter_symmetric(systems, InvolutionOnMarks::make(InvolutionKind::Identity, 2, 2)) == systems);

  auto rot = InvolutionOnMarks::make(InvolutionKind::RotationHalf, 2, 2);
  auto sym = filter_symmetric(systems, rot);
  bool two_traversing = false;
  for (const auto& s : sym) two_traversing = two_traversing || s.traversing_count() == 2;
  CHECK(two_traversing);

  std::vector<AnnulusArcSystem> with_traversing;
  for (const auto& s : enumerate_annulus_systems(2, 4))
    if (s.traversing_count() >= 1) with_traversing.push_back(s);
  CHECK(filter_symmetric(with_traversing, InvolutionOnMarks::make(InvolutionKind::RotationHalf, 2, 4)).empty());

  InvolutionOnMarks bad = InvolutionOnMarks::make(InvolutionKind::RotationHalf, 2, 2);
  bad.kind = InvolutionKind::Custom;
  bad.offset_in = Rational(1, 4);
  CHECK_THROWS_AS(filter_symmetric(systems, bad), DomainError);
}

TEST_CASE("property: symmetric filtering is idempotent") {
  for (auto [n_in, n_out] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {4, 4}, {2, 6}, {4, 2}})
    for (auto kind : {InvolutionKind::Identity, InvolutionKind::RotationHalf, InvolutionKind::Reflection}) {
      auto inv = InvolutionOnMarks::make(kind, n_in, n_out);
      auto once = filter_symmetric(enumerate_annulus_systems(n_in, n_out), inv);
      CHECK(filter_symmetric(once, inv) == once);
      for (const auto& s : once) CHECK(apply(inv, s) == s);
    }
}

TEST_CASE("edge rounding") {
  // single face, two parallel arcs each winding once along the circle, no corner shift
  RoundedBoundarySpec plain{{linear_face("F", {Rational(1, 4), Rational(3, 4)}, Rational(1))}, 0};
  RoundResult r = assemble_and_round(plain);
  CHECK(r.verdict == Verdict::Tight);
  REQUIRE(r.slope.has_value());
  CHECK(*r.slope == slope_of_class({1, -1}));
  CHECK(r.curves.size() == 2);
  for (const auto& c : r.curves) CHECK_FALSE(c.contractible);

  // without winding the curves are meridians and bound disks
  RoundedBoundarySpec meridians{{linear_face("F", {Rational(1, 4), Rational(3, 4)}, Rational(0))}, 0};
  RoundResult m = assemble_and_round(meridians);
  CHECK(m.verdict == Verdict::Overtwisted);
  CHECK_FALSE(m.slope.has_value());

  RoundedBoundarySpec bad{{linear_face("F", {Rational(1, 4)}, Rational(0)),
                           linear_face("G", {Rational(1, 4), Rational(3, 4)}, Rational(0))},
                          1};
  CHECK_THROWS_AS(assemble_and_round(bad), DomainError);
}

TEST_CASE("proof replays") {
  ProofReport nob = replay_proof(ProofName::NoBasic);
  CHECK(nob.tight_survivors == 0);
  CHECK(nob.considered == nob.overtwisted + nob.excess_twisting + nob.tight_survivors);

  ProofReport var = replay_proof(ProofName::VarDouble);
  CHECK(var.tight_survivors == 1);
  CHECK(var.classes_up_to_rotation == 1);
  CHECK(var.sign_decorations == 2);
  CHECK(var.considered == var.overtwisted + var.excess_twisting + var.tight_survivors);
  for (const auto& c : var.cases) {
    if (c.outcome != "tight") continue;
    REQUIRE(c.region.has_value());
    REQUIRE(c.region_mirror.has_value());
    CHECK(c.region->slope == Slope(-1, 1));
    CHECK(c.region_mirror->slope == Slope(-1, 1));
  }

  CHECK(replay_proof(ProofName::C2TMinus1Minus2).tight_survivors == 0);
}

TEST_CASE("property: rounding never pairs a contractible curve with a tight verdict") {
  for (auto name : {ProofName::NoBasic, ProofName::VarDouble})
    for (const auto& c : replay_proof(name).cases)
      for (const auto& r : {c.region, c.region_mirror}) {
        if (!r) continue;
        bool contractible = false;
        for (const auto& k : r->curves) contractible = contractible || k.contractible;
        if (contractible) CHECK(r->verdict == Verdict::Overtwisted);
      }
}

TEST_CASE("replays are deterministic") {
  for (auto name : {ProofName::NoBasic, ProofName::VarDouble, ProofName::C2TMinus1Minus2}) {
    ProofReport a = replay_proof(name), b = replay_proof(name);
    CHECK(a.enumerated == b.enumerated);
    CHECK(a.cases.size() == b.cases.size());
    for (size_t i = 0; i < a.cases.size(); ++i) {
      CHECK(a.cases[i].system == b.cases[i].system);
      CHECK(a.cases[i].outcome == b.cases[i].outcome);
    }
  }
}
