#include "realtight/slopes.hpp"

#include <algorithm>

namespace rt {

Slope::Slope(Int num, Int den) {
  if (num == 0 && den == 0) throw DomainError("degenerate class");
  Int g = gcd(num, den);
  num = num / g;
  den = den / g;
  if (den < 0 || (den == 0 && num < 0)) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  num_ = num;
  den_ = den;
}

Slope Slope::parse(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "oo" || text == "1/0" || text == "-1/0")
    return infinity();
  return Slope(Rational::parse(text));
}

Rational Slope::value() const {
  if (is_infinite()) throw DomainError("slope is infinite");
  return Rational(num_, den_);
}

std::string Slope::str() const {
  if (is_infinite()) return "inf";
  return Rational(num_, den_).str();
}

bool operator<(const Slope& a, const Slope& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

Int MappingClass::det() const { return checked_sub(checked_mul(a, d), checked_mul(b, c)); }

CurveClass MappingClass::apply(const CurveClass& v) const {
  return {checked_add(checked_mul(a, v.x), checked_mul(b, v.y)),
          checked_add(checked_mul(c, v.x), checked_mul(d, v.y))};
}

MappingClass MappingClass::inverse() const {
  Int dt = det();
  if (dt != 1 && dt != -1) throw DomainError("matrix is not invertible over the integers");
  return {d * dt, checked_neg(b) * dt, checked_neg(c) * dt, a * dt};
}

MappingClass operator*(const MappingClass& l, const MappingClass& r) {
  return {checked_add(checked_mul(l.a, r.a), checked_mul(l.b, r.c)),
          checked_add(checked_mul(l.a, r.b), checked_mul(l.b, r.d)),
          checked_add(checked_mul(l.c, r.a), checked_mul(l.d, r.c)),
          checked_add(checked_mul(l.c, r.b), checked_mul(l.d, r.d))};
}

std::string MappingClass::str() const {
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
         std::to_string(d) + "]]";
}

Slope slope_of_class(const CurveClass& c) { return Slope(c.y, c.x); }

CurveClass class_of_slope(const Slope& s) { return {s.den(), s.num()}; }

Slope act(const MappingClass& m, const Slope& s) {
  Int dt = m.det();
  if (dt != 1 && dt != -1) throw DomainError("mapping class must have determinant +1 or -1");
  return slope_of_class(m.apply(class_of_slope(s)));
}

MappingClass dehn_twist(TwistKind kind, Int power) {
  if (kind == TwistKind::Meridian) return {1, power, 0, 1};
  return {1, 0, power, 1};
}

std::string NegCF::str() const {
  std::string out = "[";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coeffs[i]);
  }
  return out + "]";
}

NegCF neg_cf_expand(const Slope& s) {
  if (s.is_infinite()) throw DomainError("out of expansion domain");
  Rational x = s.value();
  if (x > Rational(-1)) throw DomainError("out of expansion domain");
  NegCF cf;
  while (true) {
    if (x.is_integer()) {
      cf.coeffs.push_back(x.num());
      break;
    }
    Int a = x.floor();
    cf.coeffs.push_back(a);
    x = (Rational(a) - x).inverse();
  }
  return cf;
}

namespace {

Rational eval_tail(const std::vector<Int>& coeffs) {
  if (coeffs.empty()) throw DomainError("empty continued fraction");
  Rational x(coeffs.back());
  for (size_t i = coeffs.size() - 1; i-- > 0;) {
    if (x.num() == 0) throw DomainError("continued fraction evaluation divides by zero");
    x = Rational(coeffs[i]) - x.inverse();
  }
  return x;
}

}  // namespace

Slope neg_cf_eval(const std::vector<Int>& coeffs) { return Slope(eval_tail(coeffs)); }

Rational cf_bracket_inverse(const std::vector<Int>& coeffs) {
  Rational x = eval_tail(coeffs);
  if (x.num() == 0) throw DomainError("continued fraction evaluates to zero");
  return x.inverse();
}

CurveClass eigen_class(const MappingClass& m, int eigenvalue) {
  if (eigenvalue != 1 && eigenvalue != -1) throw DomainError("eigenvalue must be +1 or -1");
  if (!(m * m == MappingClass::identity())) throw DomainError("not an involution");
  if (m.det() != -1) throw DomainError("involution must have determinant -1");
  Int l = eigenvalue;
  // kernel of m - l*I
  CurveClass v{m.b, checked_sub(l, m.a)};
  if (v.x == 0 && v.y == 0) v = {checked_sub(l, m.d), m.c};
  Int g = gcd(v.x, v.y);
  v = {v.x / g, v.y / g};
  return v;
}

Slope eigen_slope(const MappingClass& m, int eigenvalue) {
  return slope_of_class(eigen_class(m, eigenvalue));
}

std::string to_string(RealKind k) {
  switch (k) {
    case RealKind::c1: return "c1";
    case RealKind::c2: return "c2";
    case RealKind::c3: return "c3";
    case RealKind::c4: return "c4";
  }
  return "?";
}

RealKind parse_real_kind(std::string_view text) {
  if (text == "c1") return RealKind::c1;
  if (text == "c2") return RealKind::c2;
  if (text == "c3") return RealKind::c3;
  if (text == "c4") return RealKind::c4;
  throw DomainError("unknown real structure '" + std::string(text) + "'");
}

BoundaryAction boundary_action(RealKind k) {
  const Rational half(1, 2);
  switch (k) {
    case RealKind::c1: return {{-1, 0, 0, -1}, half, 0};
    case RealKind::c2: return {{}, half, 0};
    case RealKind::c3: return {{}, 0, half};
    case RealKind::c4: return {{}, half, half};
  }
  throw DomainError("unknown real structure");
}

namespace {

std::pair<Rational, Rational> apply_linear(const MappingClass& m, const Rational& x, const Rational& y) {
  return {Rational(m.a) * x + Rational(m.b) * y, Rational(m.c) * x + Rational(m.d) * y};
}

}  // namespace

bool is_involution(const BoundaryAction& a) {
  if (!(a.linear * a.linear == MappingClass::identity())) return false;
  auto [x, y] = apply_linear(a.linear, a.tx, a.ty);
  return (x + a.tx).is_integer() && (y + a.ty).is_integer();
}

BoundaryAction conjugate(const MappingClass& m, const BoundaryAction& a) {
  MappingClass lin = m * a.linear * m.inverse();
  auto [x, y] = apply_linear(m, a.tx, a.ty);
  return {lin, frac(x), frac(y)};
}

bool equivalent_actions(const BoundaryAction& a, const BoundaryAction& b) {
  if (!(a.linear == b.linear)) return false;
  // conjugating by translation s changes t to t + (I - L) s; solve over R mod Z^2
  Rational dx = b.tx - a.tx, dy = b.ty - a.ty;
  MappingClass i_minus_l{1 - a.linear.a, -a.linear.b, -a.linear.c, 1 - a.linear.d};
  Int dt = i_minus_l.det();
  if (dt != 0) return true;
  if (i_minus_l == MappingClass{0, 0, 0, 0}) return dx.is_integer() && dy.is_integer();
  // rank one: the image is a line through the origin; test whether (dx, dy) lies on it mod Z^2
  CurveClass dir = i_minus_l.a != 0 || i_minus_l.c != 0 ? CurveClass{i_minus_l.a, i_minus_l.c}
                                                          : CurveClass{i_minus_l.b, i_minus_l.d};
  // (dx, dy) + integer vector must be parallel to dir: det(dir, (dx, dy)) must be an integer combination
  Rational cross = Rational(dir.x) * dy - Rational(dir.y) * dx;
  Int g = gcd(dir.x, dir.y);
  return (cross / Rational(g)).is_integer();
}

bool is_equivariant(const MappingClass& m, RealKind k) {
  BoundaryAction a = boundary_action(k);
  return equivalent_actions(conjugate(m, a), a);
}

}  // namespace rt
