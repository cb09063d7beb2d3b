#include "realtight/solid_torus.hpp"

#include <cstdlib>

namespace rt {

CountResult CountResult::exactly(Count n, std::string note) { return {n, n, true, std::move(note)}; }

CountResult CountResult::between(Count lo, std::optional<Count> hi, std::string note) {
  bool ex = hi && *hi == lo;
  return {lo, std::move(hi), ex, std::move(note)};
}

bool CountResult::valid() const {
  if (upper && lower > *upper) return false;
  if (exact && (!upper || *upper != lower)) return false;
  return true;
}

SolidTorusRealStructure SolidTorusRealStructure::of(RealKind kind) {
  std::string label = kind == RealKind::c1 ? "zeta" : "eta_a";
  return {kind, rt::boundary_action(kind), label};
}

std::string to_string(SliceKind s) { return s == SliceKind::Basic ? "basic" : "genuine_double"; }

SliceKind parse_slice_kind(const std::string& text) {
  if (text == "basic") return SliceKind::Basic;
  if (text == "genuine_double" || text == "double" || text == "genuine-double") return SliceKind::GenuineDouble;
  throw DomainError("unknown slice kind '" + text + "'");
}

namespace {

// k with s = 1/k (k = 0 for infinity), if any
std::optional<Int> reciprocal_integer(const Slope& s) {
  if (s.is_infinite()) return 0;
  if (s.num() == 1) return s.den();
  if (s.num() == -1) return checked_neg(s.den());
  return std::nullopt;
}

}  // namespace

bool allowed_slopes(RealKind kind, const Slope& s) {
  auto k = reciprocal_integer(s);
  if (!k) return false;
  switch (kind) {
    case RealKind::c2: return true;
    case RealKind::c3: return std::llabs(*k) % 2 == 1;
    case RealKind::c4: return *k % 2 == 0;
    case RealKind::c1: throw DomainError("slope rule is stated for c2, c3, c4");
  }
  return false;
}

Slope normalize_solid_torus_slope(const Slope& s) {
  if (s.num() == 0) throw DomainError("meridian slope has no representative at or below -1");
  if (!s.is_infinite() && s.value() <= Rational(-1)) return s;
  // 1/s -> 1/s + n with n chosen so that 1/s + n lies in [-1, 0)
  Rational t = s.is_infinite() ? Rational(0) : s.value().inverse();
  Int n = (Rational(-1) - t).ceil();
  Rational u = t + Rational(n);
  return Slope(u.inverse());
}

Int honda_count_solid_torus(const Slope& s) {
  if (s.is_infinite() || s.value() > Rational(-1)) throw DomainError("out of expansion domain");
  NegCF cf = neg_cf_expand(s);
  Int prod = 1;
  for (size_t i = 0; i + 1 < cf.coeffs.size(); ++i) prod = checked_mul(prod, cf.coeffs[i] + 1);
  prod = checked_mul(prod, cf.coeffs.back());
  return prod < 0 ? checked_neg(prod) : prod;
}

CountResult count_real_tight(const SolidTorusSpec& spec) {
  const Slope& s = spec.boundary_slope;
  if (spec.gamma_count != 2)
    return CountResult::between(0, std::nullopt, "[unclassified] outside classified range (#Gamma = 2 only)");
  RealKind kind = spec.structure.kind;
  if (kind != RealKind::c1) {
    bool ok = allowed_slopes(kind, s);
    std::string why = ok ? "[neighborhood-uniqueness] only the standard equivariant neighborhood"
                         : "[slope-rule] slope is not of an allowed form 1/k";
    return CountResult::exactly(ok ? 1 : 0, why);
  }
  if (reciprocal_integer(s)) {
    std::string note = "[c1-reciprocal-slope] two structures distinguished by sign";
    if (s == Slope(-1, 1)) note += "; read as C_0 = 1 configuration times two signs";
    return CountResult::exactly(2, note);
  }
  if (!s.is_infinite() && s.den() == 1 && s.num() <= -2) {
    Int m = -s.num();
    return CountResult::between(0, catalan(static_cast<int>(m - 1)),
                                "[c1-integer-slope] at most C_{m-1} configurations; existence open");
  }
  if (s.num() == 0) return CountResult::exactly(0, "[meridian] the meridian slope bounds an overtwisted disk");
  Slope t = normalize_solid_torus_slope(s);
  return CountResult::between(0, Count(honda_count_solid_torus(t)),
                              "[honda-reference] non-equivariant count at " + t.str());
}

CountResult count_slices(RealKind kind, SliceKind slice) {
  if (kind == RealKind::c1) {
    if (slice == SliceKind::Basic) return CountResult::exactly(0, "[c1-no-basic-slice] every c1-symmetric annulus configuration is overtwisted");
    return CountResult::exactly(2, "[c1-double-slice] one annulus configuration, two sign decorations");
  }
  if (kind == RealKind::c2 || kind == RealKind::c3) {
    if (slice == SliceKind::GenuineDouble)
      return CountResult::exactly(0, "[c2-c3-no-double-slice] no c2- or c3-real tight double slice");
    return CountResult::exactly(0, "[c2-c3-no-basic-slice] no c2- or c3-real tight basic slice arises when "
                                   "peeling from slope -1");
  }
  return CountResult::between(0, std::nullopt, "[unclassified] no classification for this combination");
}

}  // namespace rt
