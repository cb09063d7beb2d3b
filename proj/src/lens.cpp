#include "realtight/lens.hpp"

namespace rt {

namespace {

void require_special_q(Int p, Int q) {
  if (p < 2 || (q != 1 && q != p - 1)) throw DomainError("not covered: q must be 1 or p-1");
}

void require_p_above_two(Int p) {
  if (p <= 2) throw DomainError("p must exceed 2");
}

}  // namespace

std::string to_string(LensType t) {
  switch (t) {
    case LensType::A: return "A";
    case LensType::B: return "B";
    case LensType::Bp: return "B'";
    case LensType::C: return "C";
    case LensType::Cp: return "C'";
  }
  return "?";
}

LensType parse_lens_type(const std::string& text) {
  if (text == "A") return LensType::A;
  if (text == "B") return LensType::B;
  if (text == "B'" || text == "Bp" || text == "B′") return LensType::Bp;
  if (text == "C") return LensType::C;
  if (text == "C'" || text == "Cp" || text == "C′") return LensType::Cp;
  throw DomainError("unknown real type '" + text + "'");
}

LensSpace LensSpace::make(Int p, Int q) {
  if (p < 1) throw DomainError("p must be positive");
  if (p == 1) return {1, 0};
  Int r = ((q % p) + p) % p;
  if (gcd(p, r) != 1) throw DomainError("p and q must be coprime");
  return {p, r};
}

std::string LensSpace::str() const {
  if (p == 1) return "S3";
  return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<std::vector<LensType>> type_equivalences(Int p, Int q) {
  require_special_q(p, q);
  using T = LensType;
  if (p == 2) return {{T::A, T::B, T::Bp, T::C, T::Cp}};
  if (q == 1) return {{T::A, T::C}, {T::B, T::Bp, T::Cp}};
  return {{T::A, T::Cp}, {T::B, T::Bp, T::C}};
}

LensType class_representative(Int p, Int q, LensType t) {
  for (const auto& cls : type_equivalences(p, q))
    for (LensType x : cls)
      if (x == t) return cls.front();
  return t;
}

MappingClass gluing_involution(Int p, Int q, LensType kind) {
  if (kind != LensType::C && kind != LensType::Cp) throw DomainError("gluing involutions exist for types C and C'");
  Int num = checked_sub(1, checked_mul(q, q));
  if (p == 0 || num % p != 0) throw DomainError("no linear involutive gluing");
  Int qp = num / p;
  MappingClass phi{-q, qp, p, q};
  if (kind == LensType::Cp) phi = {q, -qp, -p, -q};
  return phi;
}

HeegaardData heegaard_data(Int p, Int q, LensType kind) {
  MappingClass phi = gluing_involution(p, q, kind);
  HeegaardData h;
  h.real_slope = eigen_slope(phi, 1);
  h.dividing_slope = eigen_slope(phi, -1);
  Slope normal = normalize_solid_torus_slope(h.dividing_slope);
  h.cf = neg_cf_expand(normal);
  h.solid_torus_count = honda_count_solid_torus(normal);
  return h;
}

std::vector<Witness> witness_registry(Int p, Int q) {
  std::vector<Witness> w;
  if (p <= 2) return w;
  std::string pm1 = std::to_string(p - 1);
  if (q == p - 1) {
    w.push_back({"singularity:A-_" + pm1, "singularity", LensType::A, 1,
                 "link of -x^p - y^2 + z^2 = 0 with complex conjugation"});
    w.push_back({"singularity:A+_" + pm1, "singularity", LensType::B, 1,
                 "link of +x^p - y^2 + z^2 = 0 with complex conjugation"});
    if (p % 2 == 0)
      w.push_back({"surgery:A+_" + pm1 + "-modified-middle-handle", "surgery", LensType::A, 1,
                   "not distinguished from singularity:A-_" + pm1 + "; counted once"});
    w.push_back({"singularity:A+_" + pm1 + "-alternative-blowup", "singularity", std::nullopt, 0,
                 "another real structure from a non-canonical blow-up; type and tb unknown"});
  }
  if (q == 1) {
    w.push_back({"surgery:c1-legendrian-unknot-tb=-" + pm1, "surgery", LensType::A, p - 1,
                 "equivariant Legendrian surgery on each of the p-1 Legendrian unknots"});
    w.push_back({"open-book:disk-with-" + pm1 + "-holes", "open-book", LensType::A, p - 1,
                 "real open books supporting the same p-1 structures"});
    if (p % 2 == 0)
      w.push_back({"surgery:c4-invariant-unknot", "surgery", LensType::B, 1,
                   "equivariant surgery gluing back a c2-real solid torus"});
  }
  return w;
}

Int witnessed_lower_bound(Int p, Int q, LensType t) {
  LensType rep = class_representative(p, q, t);
  Int best = 0;
  for (const auto& w : witness_registry(p, q))
    if (w.type && class_representative(p, q, *w.type) == rep) best = std::max(best, w.realizes);
  return best;
}

CountResult l_B(Int p, Int q) {
  require_p_above_two(p);
  LensSpace l = LensSpace::make(p, q);
  q = l.q;
  if (q != 1 && q != p - 1)
    return CountResult::exactly(0, "[type-B-bound] no B-real tight structure unless q = 1 or q = p-1");
  Int lower = witnessed_lower_bound(p, q, LensType::B);
  if (q == p - 1 || p % 2 == 0) {
    if (lower != 1) throw std::logic_error("type-B witness missing");
    return CountResult::exactly(1, "[type-B-bound] unique B-real tight structure");
  }
  return CountResult::between(lower, Count(1), "[type-B-bound] at most one; existence open for p odd");
}

CountResult l_A(Int p, Int q) {
  require_p_above_two(p);
  require_special_q(p, q);
  Int lower = witnessed_lower_bound(p, q, LensType::A);
  if (q == p - 1)
    return CountResult::between(lower, std::nullopt, "[type-A-bound] witnessed by the A-_{p-1} link; upper bound unknown");
  Count upper = catalan(static_cast<int>(p - 2)) + 1;
  return CountResult::between(lower, upper, "[type-A-bound] between p-1 and C_{p-2}+1");
}

CountResult l_star(Int p, Int q, LensType kind) {
  require_p_above_two(p);
  require_special_q(p, q);
  if (kind != LensType::C && kind != LensType::Cp) throw DomainError("l* is defined for types C and C'");
  if ((kind == LensType::Cp && q == 1) || (kind == LensType::C && q == p - 1))
    return CountResult::exactly(0, "[genus-1-obstruction] an invariant Heegaard torus cannot be made convex "
                                   "equivariantly");
  HeegaardData h = heegaard_data(p, q, kind);
  return CountResult::between(0, Count(2 * h.solid_torus_count),
                              "[heegaard-bound] twice the tight solid tori with dividing slope " +
                                  h.dividing_slope.str());
}

Int honda_count_lens(Int p, Int q) {
  if (p < 2) throw DomainError("p must be at least 2");
  LensSpace l = LensSpace::make(p, q);
  NegCF cf = neg_cf_expand(Slope(-l.p, l.q));
  Int prod = 1;
  for (Int r : cf.coeffs) prod = checked_mul(prod, r + 1);
  return prod < 0 ? checked_neg(prod) : prod;
}

CountResult classify_special(SpecialManifold which) {
  if (which == SpecialManifold::S3)
    return CountResult::exactly(1, "[special] unique real tight 3-sphere with nonempty real part; witness: regular point");
  return CountResult::exactly(1, "[special] unique real tight RP3 with nonempty real part; witness: A_1 singularity X_1^+");
}

OpenBookVerdict genus1_openbook_check(Int p, std::optional<Int> monodromy_power) {
  if (p < 1) throw DomainError("p must be positive");
  OpenBookVerdict v;
  v.p = p;
  v.monodromy_power = monodromy_power.value_or(-p);
  if (v.monodromy_power == -p) {
    v.supports_real_lens = true;
    v.overtwisted = true;
    v.verdict = "overtwisted: an annular real page forces monodromy t_a^" + std::to_string(-p) +
                "; no genus-1 real contact Heegaard splitting from open books";
  } else {
    v.supports_real_lens = false;
    v.overtwisted = v.monodromy_power < 0;
    v.verdict = "not L(" + std::to_string(p) + ",1) real: monodromy t_a^" + std::to_string(v.monodromy_power);
  }
  return v;
}

std::vector<BoundsRow> bounds_table(Int p_min, Int p_max) {
  if (p_min <= 2 || p_min > p_max) throw DomainError("need 2 < p_min <= p_max");
  std::vector<BoundsRow> rows;
  for (Int p = p_min; p <= p_max; ++p) {
    for (Int q : {Int(1), p - 1}) {
      BoundsRow r;
      r.p = p;
      r.q = q;
      r.entries["l_A"] = l_A(p, q);
      r.entries["l_B"] = l_B(p, q);
      r.entries["l*_C"] = l_star(p, q, LensType::C);
      r.entries["l*_C'"] = l_star(p, q, LensType::Cp);
      r.honda = honda_count_lens(p, q);
      for (const auto& w : witness_registry(p, q)) r.witnesses.push_back(w.tag);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

}  // namespace rt
