// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "oracles.hpp"
#include "realtight/serialize.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace rt;

namespace {

struct Check {
  bool ok = true;
  std::string first_failure;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) first_failure = what;
    ok = ok && cond;
  }
};

bool has_tag(const CountResult& c, const std::string& tag) { return c.note.find(tag) != std::string::npos; }

Check catalan_oracle() {
  Check c;
  for (int m = 0; m <= 10; ++m)
    c.expect(Count(enumerate_disk_matchings(m).size()) == oracle::catalan(m), "m=" + std::to_string(m));
  c.expect(count_disk_classes_fixed_arc(3) == 2, "fixed arc m=3");
  c.expect(matchings_with_fixed_arc(3).size() == 2, "fixed arc enumeration m=3");
  return c;
}

Check farey_oracle() {
  Check c;
  const Int bound = 20;
  auto slopes = bounded_slopes(bound);
  auto inside = [&](const std::vector<Slope>& path) {
    for (const Slope& v : path)
      if (std::abs(v.num()) > bound || std::abs(v.den()) > bound) return false;
    return true;
  };
  for (const Slope& a : slopes) {
    auto bfs = farey_bfs_all(a, bound);
    for (size_t j = 0; j < slopes.size(); ++j) {
      const Slope& b = slopes[j];
      int greedy = farey_distance(a, b).steps;
      int ref = bfs[j];
      if (ref < 0 || !inside(farey_walk(a, b))) ref = farey_distance_bfs(a, b, 4 * bound).steps;
      c.expect(greedy == ref, a.str() + " -> " + b.str());
    }
  }
  c.expect(farey_distance(Slope(-2, 1), Slope(-1, 1)).steps == 1, "basic slice");
  c.expect(farey_distance(Slope(-3, 1), Slope(-1, 1)).steps == 2, "double slice");
  return c;
}

Check honda_counts() {
  Check c;
  for (Int p = 3; p <= 50; ++p) {
    c.expect(honda_count_lens(p, 1) == p - 1, "L(p,1) p=" + std::to_string(p));
    c.expect(honda_count_lens(p, p - 1) == 1, "L(p,p-1) p=" + std::to_string(p));
  }
  return c;
}

Check bounds_table_check() {
  Check c;
  for (const BoundsRow& r : bounds_table(3, 12)) {
    Int p = r.p;
    std::string at = "(" + std::to_string(p) + "," + std::to_string(r.q) + ") ";
    const CountResult& a = r.entries.at("l_A");
    const CountResult& b = r.entries.at("l_B");
    const CountResult& cc = r.entries.at("l*_C");
    const CountResult& cp = r.entries.at("l*_C'");
    c.expect(has_tag(a, "[type-A-bound]") && has_tag(b, "[type-B-bound]"), at + "tags A/B");
    if (r.q == p - 1) {
      c.expect(b.exact && b.lower == 1, at + "l_B");
      c.expect(cc.exact && cc.lower == 0 && has_tag(cc, "[genus-1-obstruction]"), at + "l*_C");
      c.expect(cp.lower == 0 && cp.upper == Count(p % 2 == 0 ? 4 : 6) && has_tag(cp, "[heegaard-bound]"),
               at + "l*_C'");
      c.expect(a.lower >= 1, at + "l_A");
    } else {
      if (p % 2 == 0)
        c.expect(b.exact && b.lower == 1, at + "l_B even");
      else
        c.expect(!b.exact && b.upper == Count(1), at + "l_B odd");
      c.expect(a.lower == p - 1 && a.upper == oracle::catalan(static_cast<int>(p - 2)) + 1, at + "l_A");
      c.expect(cp.exact && cp.lower == 0 && has_tag(cp, "[genus-1-obstruction]"), at + "l*_C'");
      c.expect(cc.lower == 0 && cc.upper == Count(p % 2 == 0 ? p : 2 * p - 2) && has_tag(cc, "[heegaard-bound]"),
               at + "l*_C");
    }
  }
  for (Int p = 3; p <= 12; ++p)
    for (Int q = 2; q < p - 1; ++q)
      if (gcd(p, q) == 1) c.expect(l_B(p, q).exact && l_B(p, q).lower == 0, "l_B other q");
  return c;
}

Check tb_cross_checks() {
  Check c;
  for (Int p = 3; p <= 100; ++p) {
    std::string at = "p=" + std::to_string(p);
    TbValue plus = tb_singularity_link(p, 1), minus = tb_singularity_link(p, -1);
    c.expect(plus == tb_type_B(p, p - 1) && plus.value == Rational(-1, p), at + " plus");
    c.expect(minus == tb_type_Cprime(p, p - 1), at + " minus");
    c.expect(minus.value == (p % 2 ? Rational(p - 2) : Rational(p, 4) - Rational(1)), at + " minus value");
    c.expect(cross_check_links(p).pass, at + " report");
    // the obstruction rules out exactly (p,1) with C' and (p,p-1) with C
    ObstructionReport o1 = genus1_obstruction(p, 1), o2 = genus1_obstruction(p, p - 1);
    c.expect(o1.mismatch && o1.heegaard_type == LensType::Cp, at + " obstruction q=1");
    c.expect(o2.mismatch && o2.heegaard_type == LensType::C, at + " obstruction q=p-1");
    c.expect(l_star(p, 1, LensType::Cp).upper == Count(0) && l_star(p, p - 1, LensType::C).upper == Count(0),
             at + " obstruction consistent with table");
  }
  return c;
}

Check proof_replays() {
  Check c;
  c.expect(replay_proof(ProofName::NoBasic).tight_survivors == 0, "nobasic");
  c.expect(replay_proof(ProofName::C2TMinus1Minus2).tight_survivors == 0, "c2");
  ProofReport v = replay_proof(ProofName::VarDouble);
  c.expect(v.tight_survivors == 1 && v.classes_up_to_rotation == 1, "vardouble configurations");
  c.expect(v.classes_up_to_rotation * v.sign_decorations == 2, "vardouble with signs");
  return c;
}

Check heegaard_slopes() {
  Check c;
  for (Int p = 3; p <= 50; ++p) {
    std::string at = "p=" + std::to_string(p);
    c.expect(eigen_slope(gluing_involution(p, 1, LensType::C), -1) == Slope(-p, 2), at + " C");
    c.expect(eigen_slope(gluing_involution(p, p - 1, LensType::Cp), -1) == Slope(p, 2 - p), at + " C'");
    Int nc = heegaard_data(p, 1, LensType::C).solid_torus_count;
    Int ncp = heegaard_data(p, p - 1, LensType::Cp).solid_torus_count;
    c.expect(nc == (p % 2 == 0 ? p / 2 : p - 1), at + " count C");
    c.expect(ncp == (p % 2 == 0 ? 2 : 3), at + " count C'");
  }
  return c;
}

Check surgery_identification() {
  Check c;
  for (Int p = 3; p <= 50; ++p) {
    std::string at = "p=" + std::to_string(p);
    c.expect(lens_from_chain({std::vector<Int>(static_cast<size_t>(p - 1), -2)}) == LensSpace{p, p - 1}, at + " chain");
    LegendrianUnknotDatum d{-(p - 1), -1, Equivariance::C1Invariant};
    c.expect(lens_from_chain(chain_from_unknots({d})) == LensSpace{p, 1}, at + " unknot");
  }
  return c;
}

Check special_cases() {
  Check c;
  for (SpecialManifold m : {SpecialManifold::S3, SpecialManifold::RP3}) {
    CountResult r = classify_special(m);
    c.expect(r.exact && r.lower == 1, m == SpecialManifold::S3 ? "S3" : "RP3");
  }
  c.expect(tb_type_B(2, 1).value == Rational(-1, 2), "RP3 tb");
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Check()> run;
  };
  std::vector<Criterion> criteria{
      {1, "Catalan oracle", catalan_oracle},
      {2, "Farey oracle", farey_oracle},
      {3, "Honda counts", honda_counts},
      {4, "bounds table", bounds_table_check},
      {5, "tb cross-checks", tb_cross_checks},
      {6, "proof replays", proof_replays},
      {7, "Heegaard slopes", heegaard_slopes},
      {8, "surgery identification", surgery_identification},
      {9, "special cases", special_cases},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %d %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.name, secs, c.ok ? "" : ": ",
                c.first_failure.c_str());
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
