#include "realtight/invariants.hpp"

namespace rt {

TbValue TbValue::make(const Rational& v, Int p) {
  if (p == 0 || p % v.den() != 0) throw std::logic_error("tb denominator does not divide p");
  return {v};
}

ResolutionGraph ResolutionGraph::a_chain(Int p, ChainInvolution inv) {
  if (p < 2) throw DomainError("p must be at least 2");
  return {std::vector<Int>(static_cast<size_t>(p - 1), -2), inv};
}

bool ResolutionGraph::is_automorphism() const {
  if (involution == ChainInvolution::Identity) return true;
  for (size_t i = 0; i < weights.size(); ++i)
    if (weights[i] != weights[weights.size() - 1 - i]) return false;
  return true;
}

std::vector<Int> ResolutionGraph::fixed_vertices() const {
  std::vector<Int> out;
  Int n = static_cast<Int>(weights.size());
  for (Int i = 0; i < n; ++i)
    if (involution == ChainInvolution::Identity || i == n - 1 - i) out.push_back(i);
  return out;
}

RealSurfaceData real_surface(Int p, int sign) {
  if (p < 2) throw DomainError("p must be at least 2");
  RealSurfaceData d;
  if (p % 2 == 1) {
    d.boundary_components = 1;
    d.genus = sign < 0 ? (p - 1) / 2 : 0;
    if (sign < 0) {
      d.minus_euler_per_component = Rational(2 * d.genus - 2 + d.boundary_components);
    } else {
      // punctured projective plane; removing the one-sided circle of the blow-up leaves an annulus
      d.minus_euler_per_component = Rational(0);
    }
  } else {
    Int k = p / 2;
    d.boundary_components = 2;
    d.genus = sign < 0 ? k - 1 : 0;
    // split evenly between the two real circles; the c+ surface is an annulus
    d.minus_euler_per_component = Rational(2 * d.genus - 2 + d.boundary_components, 2);
  }
  return d;
}

GH gh(Int p, Int q) {
  if (gcd(p, q) != 1) throw DomainError("p and q must be coprime");
  auto g0 = [&](Int a) { return a == 0 ? p : gcd(a, p); };
  return {g0(q - 1), g0(q + 1)};
}

namespace {

void require_involutive(Int p, Int q) {
  if (p < 1 || ((q * q - 1) % p) != 0) throw DomainError("precondition violated: q^2 must be 1 mod p");
}

}  // namespace

TbValue tb_type_B(Int p, Int q) {
  if (p < 2 || (q != 1 && q != p - 1)) throw DomainError("q must be 1 or p-1");
  return TbValue::make(Rational(-1, p), p);
}

TbValue tb_type_Cprime(Int p, Int q) {
  require_involutive(p, q);
  GH x = gh(p, q);
  return TbValue::make(Rational(p, x.g * x.g) - Rational(2 * p, x.g * x.h), p);
}

TbValue tb_type_C(Int p, Int q) {
  require_involutive(p, q);
  GH x = gh(p, q);
  return TbValue::make(Rational(p, x.h * x.h) - Rational(2 * p, x.g * x.h), p);
}

Rational blowup_correction(Int k) {
  std::vector<Int> chain{-3};
  for (Int i = 1; i < k; ++i) chain.push_back(-2);
  return Rational(-1) - Rational(2) * cf_bracket_inverse(chain);
}

TbValue tb_singularity_link(Int p, int sign) {
  if (p < 2) throw DomainError("p must be at least 2");
  if (sign != 1 && sign != -1) throw DomainError("sign must be + or -");
  RealSurfaceData s = real_surface(p, sign);
  Rational tb = s.minus_euler_per_component;
  if (p % 2 == 1) {
    Int k = (p - 1) / 2;
    if (sign > 0) tb += blowup_correction(k);
  } else {
    Int k = p / 2;
    if (sign < 0) tb -= Rational(k, 2);
    else tb += Rational(1, 4) * (Rational(-2) + Rational(2 * (k - 1), k));
  }
  return TbValue::make(tb, p);
}

CrossCheck cross_check_links(Int p) {
  if (p < 3) throw DomainError("p must be at least 3");
  CrossCheck c;
  c.p = p;
  c.plus_link = tb_singularity_link(p, 1);
  c.type_b = tb_type_B(p, p - 1);
  c.minus_link = tb_singularity_link(p, -1);
  c.type_cprime = tb_type_Cprime(p, p - 1);
  c.pass = c.plus_link == c.type_b && c.minus_link == c.type_cprime;
  return c;
}

ObstructionReport genus1_obstruction(Int p, Int q) {
  if (p <= 2 || (q != 1 && q != p - 1)) throw DomainError("need p > 2 and q in {1, p-1}");
  ObstructionReport r;
  r.p = p;
  r.q = q;
  // the Heegaard type lying in the B class
  r.heegaard_type = q == 1 ? LensType::Cp : LensType::C;
  r.tb_b = tb_type_B(p, q);
  r.tb_heegaard = q == 1 ? tb_type_Cprime(p, q) : tb_type_C(p, q);
  r.mismatch = !(r.tb_b == r.tb_heegaard);
  r.verdict = r.mismatch ? "genus-1 real contact Heegaard impossible" : "no obstruction";
  return r;
}

}  // namespace rt
