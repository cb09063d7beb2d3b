#include "realtight/serialize.hpp"

#include <doctest.h>

using namespace rt;

TEST_CASE("scalar round trips") {
  for (const char* text : {"-5/2", "inf", "0", "7"}) {
    Slope s = Slope::parse(text);
    CHECK(json(s).get<Slope>() == s);
  }
  Rational r(-13, 7);
  CHECK(json(r).get<Rational>() == r);
  CHECK(json(r).dump() == "\"-13/7\"");
  NegCF cf{{-4, -2}};
  CHECK(json(cf).get<NegCF>() == cf);
  MappingClass m{-1, 0, 2, 1};
  CHECK(json(m).get<MappingClass>() == m);
}

TEST_CASE("counts serialize as numbers until they do not fit") {
  CHECK(count_to_json(Count(42)).is_number_unsigned());
  Count huge = catalan(60);
  json j = count_to_json(huge);
  CHECK(j.is_string());
  CHECK(count_from_json(j) == huge);
  CountResult c = CountResult::between(4, Count(6), "[type-A-bound] x");
  CHECK(json(c).get<CountResult>() == c);
  CountResult open = CountResult::between(1, std::nullopt, "y");
  CHECK(json(open)["upper"].is_null());
  CHECK(json(open).get<CountResult>() == open);
}

TEST_CASE("arc systems serialize canonically") {
  for (const auto& s : enumerate_annulus_systems(2, 4)) {
    json j = s;
    CHECK(j.get<AnnulusArcSystem>() == s);
    for (const auto& a : j["arcs"]) CHECK(a.contains("kind"));
  }
  AnnulusArcSystem shuffled{2, 2, {{ArcKind::Outer, 0, 1, 0}, {ArcKind::Inner, 1, 0, 0}}};
  AnnulusArcSystem sorted = shuffled;
  sorted.canonicalize();
  CHECK(json(shuffled).dump() == json(sorted).dump());
  DiskMatching d = enumerate_disk_matchings(3)[2];
  CHECK(json(d).get<DiskMatching>() == d);
}

TEST_CASE("table formats") {
  auto rows = bounds_table(3, 4);
  json j = bounds_table_json(rows);
  CHECK(j.size() == rows.size() * 5);
  for (const auto& e : j)
    for (const char* key : {"p", "q", "type", "lower", "upper", "exact", "note", "witnesses"}) CHECK(e.contains(key));
  std::string md = bounds_table_markdown(rows);
  CHECK(md.rfind("| p | q | l_A | l_B | l*_C | l*_C' | honda | witnesses |", 0) == 0);
  std::string csv = bounds_table_csv(rows);
  CHECK(csv.rfind("p,q,l_A,l_B,l*_C,l*_C',honda,witnesses\n", 0) == 0);
  CHECK(csv.find("\n3,1,2,<=1,<=4,0,2,") != std::string::npos);
}

TEST_CASE("report serialization") {
  json j = replay_proof(ProofName::VarDouble);
  CHECK(j["tight_survivors"] == 1);
  CHECK(j["sign_decorations"] == 2);
  for (const auto& c : j["cases"]) CHECK(c["system"].get<AnnulusArcSystem>().n_out == 6);
  LegendrianUnknotDatum d{-4, -1, Equivariance::C1Invariant};
  json dj = d;
  LegendrianUnknotDatum back = dj.get<LegendrianUnknotDatum>();
  CHECK(back.tb == -4);
  CHECK(back.equivariance == Equivariance::C1Invariant);
  CHECK(json(LensSpace{5, 4}).get<LensSpace>() == LensSpace{5, 4});
  TbValue t{Rational(-1, 7)};
  CHECK(json(t).get<TbValue>() == t);
}
