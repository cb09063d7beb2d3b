#pragma once

#include "realtight/arith.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace rt {

// x * meridian + y * longitude
struct CurveClass {
  Int x = 0;
  Int y = 0;
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// Normalized slope y/x: gcd(|num|, |den|) = 1, den >= 0, infinity = (1, 0).
class Slope {
 public:
  Slope() = default;
  Slope(Int num, Int den);
  Slope(const Rational& r) : num_(r.num()), den_(r.den()) {}  // NOLINT

  static Slope infinity() { return Slope(1, 0); }
  static Slope parse(std::string_view text);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_infinite() const { return den_ == 0; }
  Rational value() const;  // throws for infinity
  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend bool operator<(const Slope& a, const Slope& b);  // wrap-at-infinity linear order, infinity last

 private:
  Int num_ = 0;
  Int den_ = 1;
};

struct MappingClass {
  Int a = 1, b = 0, c = 0, d = 1;

  static MappingClass identity() { return {}; }
  Int det() const;
  CurveClass apply(const CurveClass& v) const;
  MappingClass inverse() const;  // requires |det| = 1
  friend MappingClass operator*(const MappingClass& l, const MappingClass& r);
  friend bool operator==(const MappingClass&, const MappingClass&) = default;
  std::string str() const;
};

enum class TwistKind { Meridian, Longitude };

Slope slope_of_class(const CurveClass& c);
CurveClass class_of_slope(const Slope& s);  // primitive lift with x > 0, or (0, 1) for infinity
Slope act(const MappingClass& m, const Slope& s);
MappingClass dehn_twist(TwistKind kind, Int power);

// Negative continued fraction a0 - 1/(a1 - 1/(... - 1/ak)).
struct NegCF {
  std::vector<Int> coeffs;
  bool degenerate() const { return coeffs.size() == 1 && coeffs[0] == -1; }
  std::string str() const;
  friend bool operator==(const NegCF&, const NegCF&) = default;
};

NegCF neg_cf_expand(const Slope& s);
Slope neg_cf_eval(const std::vector<Int>& coeffs);
Rational cf_bracket_inverse(const std::vector<Int>& coeffs);

Slope eigen_slope(const MappingClass& m, int eigenvalue);
CurveClass eigen_class(const MappingClass& m, int eigenvalue);

// Affine involution v -> L v + t on R^2 / Z^2.
struct BoundaryAction {
  MappingClass linear;
  Rational tx, ty;
  friend bool operator==(const BoundaryAction&, const BoundaryAction&) = default;
};

enum class RealKind { c1, c2, c3, c4 };

std::string to_string(RealKind k);
RealKind parse_real_kind(std::string_view text);
BoundaryAction boundary_action(RealKind k);
bool is_involution(const BoundaryAction& a);
// m * a * m^{-1}, translation reduced mod Z^2.
BoundaryAction conjugate(const MappingClass& m, const BoundaryAction& a);
// Equal after conjugating by some translation of the torus.
bool equivalent_actions(const BoundaryAction& a, const BoundaryAction& b);
bool is_equivariant(const MappingClass& m, RealKind k);

}  // namespace rt
