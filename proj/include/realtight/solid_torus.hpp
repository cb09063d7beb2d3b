#pragma once

#include "realtight/arith.hpp"
#include "realtight/slopes.hpp"

#include <optional>
#include <string>

namespace rt {

struct CountResult {
  Count lower = 0;
  std::optional<Count> upper;  // empty: unbounded or unknown
  bool exact = false;
  std::string note;

  static CountResult exactly(Count n, std::string note);
  static CountResult between(Count lo, std::optional<Count> hi, std::string note);
  bool valid() const;  // lower <= upper, exact implies lower == upper
  friend bool operator==(const CountResult&, const CountResult&) = default;
};

struct SolidTorusRealStructure {
  RealKind kind = RealKind::c1;
  BoundaryAction boundary_action;
  std::string model_label;  // eta_a or zeta

  static SolidTorusRealStructure of(RealKind kind);
};

struct SolidTorusSpec {
  SolidTorusRealStructure structure;
  Slope boundary_slope;
  int gamma_count = 2;
};

enum class SliceKind { Basic, GenuineDouble };
std::string to_string(SliceKind s);
SliceKind parse_slice_kind(const std::string& text);

bool allowed_slopes(RealKind kind, const Slope& s);
CountResult count_real_tight(const SolidTorusSpec& spec);
CountResult count_slices(RealKind kind, SliceKind slice);

Int honda_count_solid_torus(const Slope& s);
// Moves s into (-inf, -1] by a meridional twist; s = 0 has no such representative.
Slope normalize_solid_torus_slope(const Slope& s);

}  // namespace rt
