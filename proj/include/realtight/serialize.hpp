#pragma once

#include "realtight/dividing.hpp"
#include "realtight/farey.hpp"
#include "realtight/invariants.hpp"
#include "realtight/lens.hpp"
#include "realtight/solid_torus.hpp"
#include "realtight/surgery.hpp"

#include <json.hpp>

#include <string>

namespace rt {

using json = nlohmann::ordered_json;

json count_to_json(const Count& c);
Count count_from_json(const json& j);

void to_json(json& j, const Rational& r);
void from_json(const json& j, Rational& r);
void to_json(json& j, const Slope& s);
void from_json(const json& j, Slope& s);
void to_json(json& j, const CurveClass& c);
void from_json(const json& j, CurveClass& c);
void to_json(json& j, const MappingClass& m);
void from_json(const json& j, MappingClass& m);
void to_json(json& j, const NegCF& cf);
void from_json(const json& j, NegCF& cf);
void to_json(json& j, const FareyDist& d);
void from_json(const json& j, FareyDist& d);
void to_json(json& j, const CountResult& c);
void from_json(const json& j, CountResult& c);
void to_json(json& j, const DiskMatching& d);
void from_json(const json& j, DiskMatching& d);
void to_json(json& j, const AnnulusArcSystem& s);
void from_json(const json& j, AnnulusArcSystem& s);
void to_json(json& j, const RoundResult& r);
void to_json(json& j, const ProofReport& r);
void to_json(json& j, const LensSpace& l);
void from_json(const json& j, LensSpace& l);
void to_json(json& j, const HeegaardData& h);
void to_json(json& j, const Witness& w);
void to_json(json& j, const TbValue& t);
void from_json(const json& j, TbValue& t);
void to_json(json& j, const CrossCheck& c);
void to_json(json& j, const ObstructionReport& r);
void to_json(json& j, const OpenBookVerdict& v);
void to_json(json& j, const LegendrianUnknotDatum& d);
void from_json(const json& j, LegendrianUnknotDatum& d);
void to_json(json& j, const EquivarianceVerdict& v);

// One record per (row, type) with fields p, q, type, lower, upper, exact, note, witnesses.
json bounds_table_json(const std::vector<BoundsRow>& rows);
std::string bounds_table_markdown(const std::vector<BoundsRow>& rows);
std::string bounds_table_csv(const std::vector<BoundsRow>& rows);

std::string count_range(const CountResult& c);  // "4..6", "1", ">=1", "<=1"
std::string proof_report_text(const ProofReport& r);

}  // namespace rt
