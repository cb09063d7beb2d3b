#include "realtight/surgery.hpp"

namespace rt {

std::string to_string(Equivariance e) {
  switch (e) {
    case Equivariance::C1Invariant: return "c1-invariant";
    case Equivariance::C4Invariant: return "c4-invariant";
    case Equivariance::EquivariantPair: return "equivariant-pair";
    case Equivariance::None: return "none";
  }
  return "?";
}

Equivariance parse_equivariance(const std::string& text) {
  if (text == "c1-invariant" || text == "c1") return Equivariance::C1Invariant;
  if (text == "c4-invariant" || text == "c4") return Equivariance::C4Invariant;
  if (text == "equivariant-pair" || text == "pair") return Equivariance::EquivariantPair;
  if (text == "none") return Equivariance::None;
  throw DomainError("unknown equivariance '" + text + "'");
}

Int smooth_coefficient(const LegendrianUnknotDatum& d) {
  if (d.contact_coeff != 1 && d.contact_coeff != -1) throw DomainError("contact coefficient must be +1 or -1");
  return checked_add(d.tb, d.contact_coeff);
}

LensSpace lens_from_chain(const ChainDiagram& d) {
  if (d.coefficients.empty()) throw DomainError("empty chain");
  Slope s;
  try {
    s = neg_cf_eval(d.coefficients);
  } catch (const DomainError&) {
    throw DomainError("not a negative-definite chain");
  }
  if (s.is_infinite()) throw DomainError("not a negative-definite chain");
  Rational v = s.value();
  if (v == Rational(-1)) return LensSpace::make(1, 0);
  if (!(v < Rational(-1))) throw DomainError("not a negative-definite chain");
  return LensSpace::make(-v.num(), v.den());
}

ChainDiagram chain_from_unknots(const std::vector<LegendrianUnknotDatum>& unknots) {
  ChainDiagram d;
  for (const auto& u : unknots) {
    if (u.tb > -1) throw DomainError("an unknot has tb <= -1");
    d.coefficients.push_back(smooth_coefficient(u));
  }
  return d;
}

EquivarianceVerdict validate_equivariance(const LegendrianUnknotDatum& d) {
  if (d.contact_coeff != 1 && d.contact_coeff != -1) throw DomainError("contact coefficient must be +1 or -1");
  EquivarianceVerdict v;
  switch (d.equivariance) {
    case Equivariance::C1Invariant:
      v.valid = true;
      v.glue_back_slope = d.contact_coeff > 0 ? Slope(1, 1) : Slope::infinity();
      v.note = "glue back a c1-real tight solid torus of slope " + v.glue_back_slope->str() +
               "; two exist, related by the sign swap";
      break;
    case Equivariance::C4Invariant:
      v.valid = true;
      v.unique = true;
      v.note = "glue back the unique c2-real solid torus";
      break;
    case Equivariance::EquivariantPair:
      v.valid = true;
      v.note = "surgeries on an exchanged pair of knots";
      break;
    case Equivariance::None:
      v.equivariant = false;
      v.note = "non-equivariant: no real structure extends over the surgery";
      break;
  }
  return v;
}

}  // namespace rt
