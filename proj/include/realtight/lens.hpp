#pragma once

#include "realtight/solid_torus.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rt {

enum class LensType { A, B, Bp, C, Cp };
std::string to_string(LensType t);
LensType parse_lens_type(const std::string& text);

// L(p, q) with 0 <= q < p; (1, 0) marks the 3-sphere.
struct LensSpace {
  Int p = 1;
  Int q = 0;
  static LensSpace make(Int p, Int q);
  std::string str() const;
  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

std::vector<std::vector<LensType>> type_equivalences(Int p, Int q);
LensType class_representative(Int p, Int q, LensType t);

MappingClass gluing_involution(Int p, Int q, LensType kind);

struct HeegaardData {
  Slope real_slope;
  Slope dividing_slope;
  NegCF cf;
  Int solid_torus_count = 0;
};
HeegaardData heegaard_data(Int p, Int q, LensType kind);

struct Witness {
  std::string tag;
  std::string kind;  // surgery | singularity | open-book
  std::optional<LensType> type;
  Int realizes = 0;  // distinct structures it exhibits
  std::string note;
};
std::vector<Witness> witness_registry(Int p, Int q);
// Largest number of structures exhibited by one registered witness of this type.
Int witnessed_lower_bound(Int p, Int q, LensType t);

CountResult l_B(Int p, Int q);
CountResult l_A(Int p, Int q);
CountResult l_star(Int p, Int q, LensType kind);
Int honda_count_lens(Int p, Int q);

enum class SpecialManifold { S3, RP3 };
CountResult classify_special(SpecialManifold which);

struct OpenBookVerdict {
  Int p = 0;
  Int monodromy_power = 0;
  bool supports_real_lens = false;
  bool overtwisted = false;
  std::string verdict;
};
OpenBookVerdict genus1_openbook_check(Int p, std::optional<Int> monodromy_power = std::nullopt);

struct BoundsRow {
  Int p = 0, q = 0;
  std::map<std::string, CountResult> entries;  // l_A, l_B, l*_C, l*_C'
  Int honda = 0;
  std::vector<std::string> witnesses;
};
std::vector<BoundsRow> bounds_table(Int p_min, Int p_max);

}  // namespace rt
