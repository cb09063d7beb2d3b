#pragma once

#include "realtight/lens.hpp"

#include <string>
#include <vector>

namespace rt {

// Exact tb value; construction checks that the denominator divides p.
struct TbValue {
  Rational value;
  static TbValue make(const Rational& v, Int p);
  std::string str() const { return value.str(); }
  friend bool operator==(const TbValue&, const TbValue&) = default;
};

enum class ChainInvolution { Identity, Mirror };

struct ResolutionGraph {
  std::vector<Int> weights;
  ChainInvolution involution = ChainInvolution::Identity;

  static ResolutionGraph a_chain(Int p, ChainInvolution inv);
  bool is_automorphism() const;
  std::vector<Int> fixed_vertices() const;
};

struct RealSurfaceData {
  Int genus = 0;
  Int boundary_components = 0;  // real circles of the link
  Rational minus_euler_per_component;
};

// Fixed surfaces of the two real structures on the A_{p-1} resolution; sign -1 for c-, +1 for c+.
RealSurfaceData real_surface(Int p, int sign);

struct GH {
  Int g = 0, h = 0;
};
GH gh(Int p, Int q);

TbValue tb_type_B(Int p, Int q);
TbValue tb_type_Cprime(Int p, Int q);
TbValue tb_type_C(Int p, Int q);
TbValue tb_singularity_link(Int p, int sign);
// Correction from the extra blow-up for p odd: -1 - 2 [-3, -2 x (k-1)]^{-1}.
Rational blowup_correction(Int k);

struct CrossCheck {
  Int p = 0;
  TbValue plus_link, type_b;
  TbValue minus_link, type_cprime;
  bool pass = false;
};
CrossCheck cross_check_links(Int p);

struct ObstructionReport {
  Int p = 0, q = 0;
  LensType heegaard_type = LensType::C;
  TbValue tb_b, tb_heegaard;
  bool mismatch = false;
  std::string verdict;
};
ObstructionReport genus1_obstruction(Int p, Int q);

}  // namespace rt
