#include "betti/error.hpp"
#include "betti/rep_dimensions.hpp"

#include <doctest.h>

#include "oracles.hpp"

using namespace betti;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

constexpr ModuleKind kTabled[] = {ModuleKind::L3, ModuleKind::L2};

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(24, 2) == 276);
  CHECK(binomial(28, 4) == 20475);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(0, 0) == 1);
  CHECK(code_of([] { binomial(5, -1); }) == Errc::NegativeK);
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= 12; ++k) CHECK(binomial(n, k) == oracle::count_subsets(n, k));
}

TEST_CASE("symmetric powers count monomials") {
  for (unsigned m = 0; m <= 5; ++m)
    for (int b2 = 1; b2 <= 6; ++b2)
      CHECK(sym_dim_poly(m)(Rational(b2)) == oracle::count_monomials(b2, static_cast<int>(m)));
  CHECK(sym_dim_poly(2)(Rational(23)) == 276);
  CHECK(sym_dim_poly(0) == Polynomial::constant(1));
}

TEST_CASE("exterior powers count subsets") {
  for (unsigned k = 0; k <= 5; ++k)
    for (int b2 = 0; b2 <= 6; ++b2) CHECK(ext_dim_poly(k)(Rational(b2)) == oracle::count_subsets(b2 + 2, static_cast<int>(k)));
}

TEST_CASE("exterior power duality") {
  // Lambda^k and Lambda^(s-k) of an s-space agree for every fixed s = b2 + 2.
  for (int b2 = 0; b2 <= 10; ++b2)
    for (int k = 0; k <= b2 + 2; ++k)
      CHECK(ext_dim_poly(static_cast<unsigned>(k))(Rational(b2)) ==
            ext_dim_poly(static_cast<unsigned>(b2 + 2 - k))(Rational(b2)));
}

TEST_CASE("h_substitute") {
  Polynomial h = Polynomial::variable();
  CHECK(h_substitute(h) == Polynomial({-2, 1}));
  CHECK(h_substitute(h * h) == Polynomial({4, -4, 1}));
  CHECK(h_substitute(Polynomial::constant(7)) == Polynomial::constant(7));
}

TEST_CASE("table entries") {
  Polynomial h = Polynomial::variable();
  CHECK(table_entry(ModuleKind::L3, 1, 3) == Polynomial::constant(1));
  CHECK(table_entry(ModuleKind::L3, 2, 2) == h);
  CHECK(table_entry(ModuleKind::L3, 3, 3) == Polynomial({2, Rational(-1, 2), Rational(1, 2)}));
  CHECK(table_entry(ModuleKind::L3, 4, 4) == Polynomial({-10, Rational(-5, 3), Rational(-1, 2), Rational(1, 6)}));
  CHECK(table_entry(ModuleKind::L2, 4, 4) == Polynomial({-2, Rational(-1, 2), Rational(1, 2)}));
  CHECK(table_entry(ModuleKind::L2, 0, 0).is_zero());
  CHECK(table_entry(ModuleKind::L2, 2, 2) == Polynomial::constant(1));
  CHECK(code_of([] { table_entry(ModuleKind::L3, 9, 0); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { table_entry(ModuleKind::L3, -1, 0); }) == Errc::IndexOutOfRange);
  CHECK(code_of([] { diamond_table(ModuleKind::L1); }) == Errc::InvalidArgument);
}

TEST_CASE("tables are symmetric under both Hodge symmetries") {
  for (ModuleKind kind : kTabled) {
    const DiamondTable& t = diamond_table(kind);
    for (int p = 0; p < kDiamondSize; ++p)
      for (int q = 0; q < kDiamondSize; ++q) {
        CHECK(t.entry(p, q) == t.entry(q, p));
        CHECK(t.entry(p, q) == t.entry(8 - p, 8 - q));
      }
  }
}

TEST_CASE("tables vanish in odd degrees and in degrees 0, 2") {
  for (ModuleKind kind : kTabled)
    for (int degree = 0; degree <= 16; ++degree)
      if (degree % 2 == 1 || degree <= 2 || degree >= 14) CHECK(diamond_table(kind).row_sum(degree).is_zero());
}

TEST_CASE("table totals against module dimensions") {
  // L2 sums exactly to dim Lambda^2; L3 overshoots dim Lambda^3 by 2.
  CHECK(h_substitute(table_total(ModuleKind::L2)) == ext_dim_poly(2));
  CHECK(h_substitute(table_total(ModuleKind::L3)) - ext_dim_poly(3) == Polynomial::constant(2));
}

TEST_CASE("row sums against contribution polynomials") {
  for (int degree : {4, 6, 8, 10, 12}) {
    int mirror = degree <= 8 ? degree : 16 - degree;
    CHECK(h_substitute(diamond_table(ModuleKind::L2).row_sum(degree)) == contribution_poly(ModuleKind::L2, mirror));
  }
  CHECK(h_substitute(diamond_table(ModuleKind::L3).row_sum(4)) == contribution_poly(ModuleKind::L3, 4));
  CHECK(h_substitute(diamond_table(ModuleKind::L3).row_sum(8)) == contribution_poly(ModuleKind::L3, 8));
  // Degree 6 of L3: the table row exceeds the printed contribution by 2.
  CHECK(h_substitute(diamond_table(ModuleKind::L3).row_sum(6)) - contribution_poly(ModuleKind::L3, 6) ==
        Polynomial::constant(2));
}

TEST_CASE("contribution polynomials") {
  CHECK(contribution_poly(ModuleKind::L3, 4) == Polynomial::variable());
  CHECK(contribution_poly(ModuleKind::L0, 8) == Polynomial::constant(1));
  CHECK(contribution_poly(ModuleKind::L0, 6).is_zero());
  CHECK(contribution_poly(ModuleKind::L1, 8) == Polynomial::variable());
  CHECK(contribution_poly(ModuleKind::L2, 12) .is_zero());
  CHECK(code_of([] { contribution_poly(ModuleKind::L2, 5); }) == Errc::UnsupportedDegree);
  CHECK(code_of([] { contribution_poly(ModuleKind::L2, 18); }) == Errc::UnsupportedDegree);
  CHECK(code_of([] { contribution_poly(ModuleKind::L2, -2); }) == Errc::UnsupportedDegree);
}

TEST_CASE("betti_formula_n4") {
  CHECK(betti_formula_n4(2, 0, 0, 0, 0, 23) == 276);
  CHECK(betti_formula_n4(2, 1, 0, 0, 0, 23) == 299);
  CHECK(betti_formula_n4(2, 1, 1, 0, 0, 23) == 300);
  CHECK(betti_formula_n4(2, 0, 0, 0, 0, 24) == 300);
  CHECK(betti_formula_n4(3, 0, 0, 0, 0, 24) == 2600);
  CHECK(betti_formula_n4(4, 0, 0, 0, 0, 24) == 17550);
  CHECK(betti_formula_n4(4, 0, 0, 0, 1, 24) == 17551);
  CHECK(code_of([] { betti_formula_n4(5, 0, 0, 0, 0, 23); }) == Errc::BadDegree);
  CHECK(code_of([] { betti_formula_n4(1, 0, 0, 0, 0, 23); }) == Errc::BadDegree);
  CHECK(code_of([] { betti_formula_n4(3, 0, -1, 0, 0, 23); }) == Errc::NegativeCount);
  CHECK(code_of([] { betti_formula_n4(3, 0, 0, 0, 0, 2); }) == Errc::InvalidArgument);
}

TEST_CASE("betti_formula_n4 against direct enumeration") {
  for (int b2 = 3; b2 <= 6; ++b2)
    for (int k = 2; k <= 4; ++k)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d) {
          Integer expect = oracle::count_monomials(b2, k);
          expect += c * contribution_poly(ModuleKind::L3, 2 * k)(Rational(b2)).get_num();
          expect += d * contribution_poly(ModuleKind::L2, 2 * k)(Rational(b2)).get_num();
          expect += 3 * contribution_poly(ModuleKind::L1, 2 * k)(Rational(b2)).get_num();
          expect += 4 * contribution_poly(ModuleKind::L0, 2 * k)(Rational(b2)).get_num();
          CHECK(betti_formula_n4(k, c, d, 3, 4, b2) == expect);
        }
}

TEST_CASE("table entries are integers, nonnegative from h = 7") {
  for (ModuleKind kind : kTabled)
    for (int p = 0; p < kDiamondSize; ++p)
      for (int q = 0; q < kDiamondSize; ++q) {
        const Polynomial& e = diamond_table(kind).entry(p, q);
        for (int h = 1; h <= 60; ++h) {
          Rational v = e(Rational(h));
          CHECK(v.get_den() == 1);
          if (h >= 7) CHECK(v >= 0);
        }
      }
  // The L3 centre is negative below h = 7; the L2 centre below h = 3.
  CHECK(table_entry(ModuleKind::L3, 4, 4)(Rational(6)) < 0);
  CHECK(table_entry(ModuleKind::L2, 4, 4)(Rational(2)) < 0);
  CHECK(table_entry(ModuleKind::L2, 4, 4)(Rational(3)) >= 0);
}
