#include "oracles.hpp"
#include "realtight/invariants.hpp"

#include <doctest.h>

using namespace rt;

namespace {

Rational from(const oracle::rat& r) {
  return Rational(static_cast<Int>(numerator(r)), static_cast<Int>(denominator(r)));
}

}  // namespace

TEST_CASE("g and h") {
  CHECK(gh(7, 6).g == 1);
  CHECK(gh(7, 6).h == 7);
  CHECK(gh(8, 7).g == 2);
  CHECK(gh(8, 7).h == 8);
  for (Int p = 2; p <= 20; ++p) {
    CHECK(gh(p, 1).g == p);
    CHECK(gh(p, 1).h == oracle::gcd0(2, p));
  }
}

TEST_CASE("Heegaard tb values") {
  CHECK(tb_type_B(5, 4).str() == "-1/5");
  CHECK(tb_type_B(2, 1).str() == "-1/2");
  CHECK(tb_type_B(8, 7).str() == "-1/8");
  CHECK(tb_type_Cprime(7, 6).str() == "5");
  CHECK(tb_type_Cprime(8, 7).str() == "1");
  CHECK(tb_type_C(7, 1).str() == "5");
  CHECK(tb_type_C(7, 6).str() == "-13/7");
  CHECK(tb_type_C(8, 7).str() == "-7/8");
  CHECK_THROWS_WITH_AS(tb_type_C(5, 2), "precondition violated: q^2 must be 1 mod p", DomainError);
  CHECK_THROWS_AS(tb_type_Cprime(7, 2), DomainError);
}

TEST_CASE("property: C and C' formulas are exchanged by g <-> h") {
  for (Int p = 2; p <= 100; ++p)
    for (Int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1 || (q * q - 1) % p != 0) continue;
      Int g = oracle::gcd0(q - 1, p), h = oracle::gcd0(q + 1, p);
      oracle::rat cp = oracle::rat(p, g * g) - oracle::rat(2 * p, g * h);
      oracle::rat c = oracle::rat(p, h * h) - oracle::rat(2 * p, g * h);
      CHECK(tb_type_Cprime(p, q).value == from(cp));
      CHECK(tb_type_C(p, q).value == from(c));
      CHECK(p % tb_type_C(p, q).value.den() == 0);
      CHECK(p % tb_type_Cprime(p, q).value.den() == 0);
    }
}

TEST_CASE("resolution graph") {
  auto g = ResolutionGraph::a_chain(7, ChainInvolution::Mirror);
  CHECK(g.weights == std::vector<Int>(6, -2));
  CHECK(g.is_automorphism());
  CHECK(g.fixed_vertices().empty());
  auto h = ResolutionGraph::a_chain(8, ChainInvolution::Mirror);
  CHECK(h.fixed_vertices() == std::vector<Int>{3});
  CHECK(ResolutionGraph::a_chain(5, ChainInvolution::Identity).fixed_vertices().size() == 4);
  ResolutionGraph lopsided{{-2, -3}, ChainInvolution::Mirror};
  CHECK_FALSE(lopsided.is_automorphism());
}

TEST_CASE("real surfaces") {
  CHECK(real_surface(7, -1).genus == 3);
  CHECK(real_surface(7, 1).genus == 0);
  CHECK(real_surface(8, -1).genus == 3);
  CHECK(real_surface(8, -1).boundary_components == 2);
}

TEST_CASE("singularity links") {
  CHECK(tb_singularity_link(7, -1).str() == "5");
  CHECK(tb_singularity_link(7, 1).str() == "-1/7");
  CHECK(tb_singularity_link(8, -1).str() == "1");
  CHECK(tb_singularity_link(8, 1).str() == "-1/8");
  CHECK(tb_singularity_link(3, 1).str() == "-1/3");
  CHECK(tb_singularity_link(3, -1).str() == "1");
}

TEST_CASE("property: link values against closed forms") {
  for (Int p = 3; p <= 100; ++p) {
    oracle::rat minus, plus;
    if (p % 2) {
      Int k = (p - 1) / 2;
      minus = oracle::rat(p - 1 - 2 + 1);
      plus = oracle::rat(-1, 2 * k + 1);
    } else {
      Int k = p / 2;
      minus = oracle::rat(k, 2) - 1;
      plus = oracle::rat(-1, 2 * k);
    }
    CHECK(tb_singularity_link(p, -1).value == from(minus));
    CHECK(tb_singularity_link(p, 1).value == from(plus));
  }
}

TEST_CASE("property: blow-up correction against a direct bracket evaluation") {
  for (Int k = 1; k <= 40; ++k) {
    // [-3, -2 x (k-1)] evaluated from the tail
    oracle::rat x = k == 1 ? oracle::rat(-3) : oracle::rat(-2);
    for (Int i = k - 2; i >= 1; --i) x = oracle::rat(-2) - 1 / x;
    if (k > 1) x = oracle::rat(-3) - 1 / x;
    CHECK(blowup_correction(k) == from(oracle::rat(-1) - 2 / x));
    CHECK(blowup_correction(k) == Rational(-1, 2 * k + 1));
  }
}

TEST_CASE("cross checks") {
  for (Int p = 3; p <= 100; ++p) {
    CrossCheck c = cross_check_links(p);
    CHECK(c.pass);
    CHECK(c.plus_link.value == Rational(-1, p));
    CHECK(c.minus_link.value == (p % 2 ? Rational(p - 2) : Rational(p, 4) - Rational(1)));
  }
}

TEST_CASE("genus-1 obstruction") {
  ObstructionReport r = genus1_obstruction(7, 6);
  CHECK(r.tb_b.str() == "-1/7");
  CHECK(r.tb_heegaard.str() == "-13/7");
  CHECK(r.mismatch);
  CHECK(r.verdict == "genus-1 real contact Heegaard impossible");
  CHECK(genus1_obstruction(8, 7).tb_heegaard.str() == "-7/8");
  CHECK_THROWS_AS(genus1_obstruction(2, 1), DomainError);
  CHECK_THROWS_AS(genus1_obstruction(7, 3), DomainError);
  for (Int p = 3; p <= 100; ++p) {
    CHECK(genus1_obstruction(p, 1).mismatch);
    CHECK(genus1_obstruction(p, 1).heegaard_type == LensType::Cp);
    CHECK(genus1_obstruction(p, p - 1).mismatch);
    CHECK(genus1_obstruction(p, p - 1).heegaard_type == LensType::C);
  }
}

TEST_CASE("tb denominators divide p") {
  CHECK_THROWS_AS(TbValue::make(Rational(1, 3), 7), std::logic_error);
  CHECK(TbValue::make(Rational(1, 7), 14).str() == "1/7");
}
