#include "realtight/serialize.hpp"

#include <limits>
#include <sstream>

namespace rt {

json count_to_json(const Count& c) {
  if (c >= 0 && c <= std::numeric_limits<std::uint64_t>::max()) return c.convert_to<std::uint64_t>();
  return c.str();
}

Count count_from_json(const json& j) {
  if (j.is_string()) return Count(j.get<std::string>());
  return Count(j.get<std::uint64_t>());
}

void to_json(json& j, const Rational& r) { j = r.str(); }
void from_json(const json& j, Rational& r) {
  r = j.is_number_integer() ? Rational(j.get<Int>()) : Rational::parse(j.get<std::string>());
}

void to_json(json& j, const Slope& s) { j = s.str(); }
void from_json(const json& j, Slope& s) {
  s = j.is_number_integer() ? Slope(j.get<Int>(), 1) : Slope::parse(j.get<std::string>());
}

void to_json(json& j, const CurveClass& c) { j = json::array({c.x, c.y}); }
void from_json(const json& j, CurveClass& c) { c = {j.at(0).get<Int>(), j.at(1).get<Int>()}; }

void to_json(json& j, const MappingClass& m) { j = json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }
void from_json(const json& j, MappingClass& m) {
  m = {j.at(0).at(0).get<Int>(), j.at(0).at(1).get<Int>(), j.at(1).at(0).get<Int>(), j.at(1).at(1).get<Int>()};
}

void to_json(json& j, const NegCF& cf) { j = cf.coeffs; }
void from_json(const json& j, NegCF& cf) { cf.coeffs = j.get<std::vector<Int>>(); }

void to_json(json& j, const FareyDist& d) { j = json{{"steps", d.steps}}; }
void from_json(const json& j, FareyDist& d) { d.steps = j.at("steps").get<int>(); }

void to_json(json& j, const CountResult& c) {
  j = json{{"lower", count_to_json(c.lower)},
           {"upper", c.upper ? count_to_json(*c.upper) : json(nullptr)},
           {"exact", c.exact},
           {"note", c.note}};
}

void from_json(const json& j, CountResult& c) {
  c.lower = count_from_json(j.at("lower"));
  c.upper = j.at("upper").is_null() ? std::nullopt : std::optional<Count>(count_from_json(j.at("upper")));
  c.exact = j.at("exact").get<bool>();
  c.note = j.at("note").get<std::string>();
}

void to_json(json& j, const DiskMatching& d) {
  j = json{{"m", d.m}, {"pairs", json::array()}};
  for (auto [a, b] : d.pairs) j["pairs"].push_back(json::array({a, b}));
}

void from_json(const json& j, DiskMatching& d) {
  d.m = j.at("m").get<int>();
  d.pairs.clear();
  for (const auto& p : j.at("pairs")) d.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
}

namespace {

const char* arc_kind_name(ArcKind k) {
  switch (k) {
    case ArcKind::Inner: return "inner";
    case ArcKind::Outer: return "outer";
    case ArcKind::Traversing: return "traversing";
  }
  return "?";
}

ArcKind parse_arc_kind(const std::string& s) {
  if (s == "inner") return ArcKind::Inner;
  if (s == "outer") return ArcKind::Outer;
  if (s == "traversing") return ArcKind::Traversing;
  throw DomainError("unknown arc kind '" + s + "'");
}

}  // namespace

void to_json(json& j, const AnnulusArcSystem& s) {
  AnnulusArcSystem c = s;
  c.canonicalize();
  j = json{{"n_in", c.n_in}, {"n_out", c.n_out}, {"arcs", json::array()}};
  for (const auto& a : c.arcs) {
    if (a.kind == ArcKind::Traversing)
      j["arcs"].push_back(json{{"kind", "traversing"}, {"inner", a.a}, {"outer", a.b}, {"wind", a.wind}});
    else
      j["arcs"].push_back(json{{"kind", arc_kind_name(a.kind)}, {"from", a.a}, {"to", a.b}});
  }
}

void from_json(const json& j, AnnulusArcSystem& s) {
  s.n_in = j.at("n_in").get<int>();
  s.n_out = j.at("n_out").get<int>();
  s.arcs.clear();
  for (const auto& a : j.at("arcs")) {
    ArcKind k = parse_arc_kind(a.at("kind").get<std::string>());
    if (k == ArcKind::Traversing)
      s.arcs.push_back({k, a.at("inner").get<int>(), a.at("outer").get<int>(), a.at("wind").get<Int>()});
    else
      s.arcs.push_back({k, a.at("from").get<int>(), a.at("to").get<int>(), 0});
  }
  s.canonicalize();
}

void to_json(json& j, const RoundResult& r) {
  j = json{{"verdict", to_string(r.verdict)}, {"curves", json::array()}};
  for (const auto& c : r.curves)
    j["curves"].push_back(json{{"meridian", c.meridian}, {"longitude", c.longitude}, {"contractible", c.contractible}});
  j["slope"] = r.slope ? json(*r.slope) : json(nullptr);
  j["meridional_intersection"] = r.meridional_intersection;
}

void to_json(json& j, const ProofReport& r) {
  j = json{{"name", r.name},
           {"scenario", r.scenario},
           {"inner_slope", r.inner_slope},
           {"outer_slope", r.outer_slope},
           {"n_in", r.n_in},
           {"n_out", r.n_out},
           {"rounding", r.rounding},
           {"window", r.window},
           {"enumerated", r.enumerated},
           {"symmetric", r.symmetric},
           {"considered", r.considered},
           {"overtwisted", r.overtwisted},
           {"excess_twisting", r.excess_twisting},
           {"tight_survivors", r.tight_survivors},
           {"classes_up_to_rotation", r.classes_up_to_rotation},
           {"sign_decorations", r.sign_decorations},
           {"cases", json::array()},
           {"notes", r.notes}};
  for (const auto& c : r.cases) {
    json cj{{"system", c.system}, {"displacements", c.displacements}, {"outcome", c.outcome}};
    if (c.region) cj["region"] = *c.region;
    if (c.region_mirror) cj["region_mirror"] = *c.region_mirror;
    j["cases"].push_back(cj);
  }
}

void to_json(json& j, const LensSpace& l) { j = json{{"p", l.p}, {"q", l.q}, {"name", l.str()}}; }
void from_json(const json& j, LensSpace& l) { l = LensSpace::make(j.at("p").get<Int>(), j.at("q").get<Int>()); }

void to_json(json& j, const HeegaardData& h) {
  j = json{{"real_slope", h.real_slope},
           {"dividing_slope", h.dividing_slope},
           {"cf", h.cf},
           {"solid_torus_count", h.solid_torus_count}};
}

void to_json(json& j, const Witness& w) {
  j = json{{"tag", w.tag},
           {"kind", w.kind},
           {"type", w.type ? json(to_string(*w.type)) : json(nullptr)},
           {"realizes", w.realizes},
           {"note", w.note}};
}

void to_json(json& j, const TbValue& t) { j = t.value.str(); }
void from_json(const json& j, TbValue& t) { t.value = Rational::parse(j.get<std::string>()); }

void to_json(json& j, const CrossCheck& c) {
  j = json{{"p", c.p},
           {"plus_link", c.plus_link},
           {"type_B", c.type_b},
           {"minus_link", c.minus_link},
           {"type_C'", c.type_cprime},
           {"pass", c.pass}};
}

void to_json(json& j, const ObstructionReport& r) {
  j = json{{"p", r.p},
           {"q", r.q},
           {"type", to_string(r.heegaard_type)},
           {"tb_B", r.tb_b},
           {"tb_heegaard", r.tb_heegaard},
           {"mismatch", r.mismatch},
           {"verdict", r.verdict}};
}

void to_json(json& j, const OpenBookVerdict& v) {
  j = json{{"p", v.p},
           {"monodromy_power", v.monodromy_power},
           {"supports_real_lens", v.supports_real_lens},
           {"overtwisted", v.overtwisted},
           {"verdict", v.verdict}};
}

void to_json(json& j, const LegendrianUnknotDatum& d) {
  j = json{{"tb", d.tb}, {"contact_coeff", d.contact_coeff}, {"equivariance", to_string(d.equivariance)}};
}

void from_json(const json& j, LegendrianUnknotDatum& d) {
  d.tb = j.at("tb").get<Int>();
  d.contact_coeff = j.at("contact_coeff").get<int>();
  d.equivariance = j.contains("equivariance") ? parse_equivariance(j.at("equivariance").get<std::string>())
                                              : Equivariance::None;
}

void to_json(json& j, const EquivarianceVerdict& v) {
  j = json{{"valid", v.valid},
           {"unique", v.unique},
           {"equivariant", v.equivariant},
           {"glue_back_slope", v.glue_back_slope ? json(*v.glue_back_slope) : json(nullptr)},
           {"note", v.note}};
}

namespace {

const std::vector<std::pair<std::string, std::string>>& table_columns() {
  static const std::vector<std::pair<std::string, std::string>> cols{
      {"l_A", "A"}, {"l_B", "B"}, {"l*_C", "C*"}, {"l*_C'", "C'*"}};
  return cols;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

std::string count_range(const CountResult& c) {
  if (c.exact) return to_string(c.lower);
  if (!c.upper) return ">=" + to_string(c.lower);
  if (c.lower == 0) return "<=" + to_string(*c.upper);
  return to_string(c.lower) + ".." + to_string(*c.upper);
}

json bounds_table_json(const std::vector<BoundsRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    for (const auto& [key, type] : table_columns()) {
      const CountResult& c = r.entries.at(key);
      out.push_back(json{{"p", r.p},
                         {"q", r.q},
                         {"type", type},
                         {"lower", count_to_json(c.lower)},
                         {"upper", c.upper ? count_to_json(*c.upper) : json(nullptr)},
                         {"exact", c.exact},
                         {"note", c.note},
                         {"witnesses", r.witnesses}});
    }
    out.push_back(json{{"p", r.p},
                       {"q", r.q},
                       {"type", "honda"},
                       {"lower", r.honda},
                       {"upper", r.honda},
                       {"exact", true},
                       {"note", "[honda-reference] tight structures without real structure"},
                       {"witnesses", r.witnesses}});
  }
  return out;
}

std::string bounds_table_markdown(const std::vector<BoundsRow>& rows) {
  std::ostringstream os;
  os << "| p | q | l_A | l_B | l*_C | l*_C' | honda | witnesses |\n";
  os << "|---|---|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    os << "| " << r.p << " | " << r.q;
    for (const auto& [key, type] : table_columns()) os << " | " << count_range(r.entries.at(key));
    os << " | " << r.honda << " | " << join(r.witnesses, ", ") << " |\n";
  }
  return os.str();
}

std::string bounds_table_csv(const std::vector<BoundsRow>& rows) {
  std::ostringstream os;
  os << "p,q,l_A,l_B,l*_C,l*_C',honda,witnesses\n";
  for (const auto& r : rows) {
    os << r.p << "," << r.q;
    for (const auto& [key, type] : table_columns()) os << "," << count_range(r.entries.at(key));
    os << "," << r.honda << ",\"" << join(r.witnesses, ";") << "\"\n";
  }
  return os.str();
}

std::string proof_report_text(const ProofReport& r) {
  std::ostringstream os;
  os << "proof: " << r.name << "\n";
  os << "scenario: " << r.scenario << "\n";
  os << "slopes: " << r.inner_slope.str() << " -> " << r.outer_slope.str() << "\n";
  os << "marked points: inner " << r.n_in << ", outer " << r.n_out << "\n";
  os << "window: " << r.window << "\n";
  os << "enumerated: " << r.enumerated << "\n";
  os << "symmetric: " << r.symmetric << "\n";
  os << "considered: " << r.considered << "\n";
  os << "overtwisted: " << r.overtwisted << "\n";
  os << "excess twisting: " << r.excess_twisting << "\n";
  os << "tight survivors: " << r.tight_survivors << "\n";
  os << "classes up to rotation: " << r.classes_up_to_rotation << "\n";
  os << "sign decorations per class: " << r.sign_decorations << "\n";
  for (const auto& c : r.cases) {
    if (c.outcome != "tight" && c.outcome != "symmetric") continue;
    json sys = c.system;
    os << "survivor: " << sys.dump() << "\n";
    auto curves = [&](const RoundResult& rr) {
      std::string s;
      for (const auto& k : rr.curves) s += "(" + std::to_string(k.meridian) + "," + std::to_string(k.longitude) + ")";
      if (rr.slope) s += " slope " + rr.slope->str();
      return s;
    };
    if (c.region) os << "  region: " << curves(*c.region) << "\n";
    if (c.region_mirror) os << "  mirror region: " << curves(*c.region_mirror) << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

}  // namespace rt
