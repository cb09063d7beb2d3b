#pragma once

#include "realtight/lens.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rt {

struct ChainDiagram {
  std::vector<Int> coefficients;
};

enum class Equivariance { C1Invariant, C4Invariant, EquivariantPair, None };
std::string to_string(Equivariance e);
Equivariance parse_equivariance(const std::string& text);

struct LegendrianUnknotDatum {
  Int tb = -1;
  int contact_coeff = -1;
  Equivariance equivariance = Equivariance::None;
};

Int smooth_coefficient(const LegendrianUnknotDatum& d);
LensSpace lens_from_chain(const ChainDiagram& d);
ChainDiagram chain_from_unknots(const std::vector<LegendrianUnknotDatum>& unknots);

struct EquivarianceVerdict {
  bool valid = false;
  bool unique = false;
  bool equivariant = true;
  std::optional<Slope> glue_back_slope;
  std::string note;
};
EquivarianceVerdict validate_equivariance(const LegendrianUnknotDatum& d);

}  // namespace rt
