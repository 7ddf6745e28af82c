#include "betti/error.hpp"
#include "betti/exact.hpp"
#include "betti/polynomial.hpp"

#include <doctest.h>

#include "oracles.hpp"

#include <random>

using namespace betti;

namespace {

const Polynomial x = Polynomial::variable();

Polynomial lin(long offset) { return Polynomial({Rational(offset), Rational(1)}); }

}  // namespace

TEST_CASE("addition") {
  CHECK((lin(1) + (-x)) == Polynomial::constant(1));
  CHECK((lin(1) + (-x)).coeffs().size() == 1);

  Polynomial p({3, -2, Rational(1, 2)});
  CHECK(Polynomial() + p == p);

  // (x^2) + (3x + 2), coefficient by coefficient.
  Polynomial sum = Polynomial::monomial(1, 2) + Polynomial({2, 3});
  CHECK(sum.coeffs() == std::vector<Rational>{2, 3, 1});

  // Full cancellation gives the empty sequence.
  CHECK((p - p).is_zero());
  CHECK((p - p).coeffs().empty());
}

TEST_CASE("multiplication") {
  CHECK(lin(-23) * lin(4) == Polynomial({-92, -19, 1}));
  Polynomial p({Rational(-1, 3), 0, 5, 7});
  CHECK(p * Polynomial::constant(1) == p);
  CHECK((p * Polynomial()).is_zero());
  CHECK((Polynomial() * p).is_zero());
  CHECK((p * Rational(0)).is_zero());
}

TEST_CASE("product_linear") {
  const std::vector<Integer> offsets{0, 1, 2, 3};
  Polynomial p = product_linear(offsets);
  CHECK(p == oracle::from_integers(oracle::expand_linear_factors(offsets)));
  CHECK(p == Polynomial({0, 6, 11, 6, 1}));

  CHECK(product_linear(std::vector<Integer>{}) == Polynomial::constant(1));
  CHECK(product_linear(std::vector<Integer>{4}) == lin(4));

  CHECK(rising_product(3, 2) == Polynomial::constant(1));
  CHECK(rising_product(0, 1) == Polynomial({0, 1, 1}));
}

TEST_CASE("evaluation") {
  Polynomial p({-92, -19, 1});
  CHECK(p(Rational(23)) == 0);
  CHECK(Polynomial()(Rational(17, 3)) == 0);
  CHECK(lin(4)(Rational(-4)) == 0);
  CHECK(Polynomial({1, 1, 1})(Rational(1, 2)) == Rational(7, 4));
}

TEST_CASE("equality is coefficient identity") {
  CHECK(lin(1) * lin(1) == Polynomial({1, 2, 1}));
  CHECK(Polynomial({0, 3, 1}) != Polynomial({1, 3, 1}));
  CHECK(product_linear(std::vector<Integer>{0, 1}) == Polynomial({0, 1, 1}));
  // Non-canonical input is canonicalized.
  CHECK(Polynomial({1, 2, 0, 0}) == Polynomial({1, 2}));
  CHECK(Polynomial({Rational(2, 4)}) == Polynomial({Rational(1, 2)}));
}

TEST_CASE("degree and leading coefficient reject the zero polynomial") {
  CHECK_THROWS_AS(Polynomial().degree(), Error);
  CHECK_THROWS_AS(Polynomial().leading(), Error);
  CHECK(Polynomial({5}).degree() == 0);
  CHECK(Polynomial({1, 0, -3}).leading() == -3);
}

TEST_CASE("derivative, composition, division") {
  Polynomial p({1, 2, 3, 4});
  CHECK(p.derivative() == Polynomial({2, 6, 12}));
  CHECK(Polynomial({7}).derivative().is_zero());

  // p(x - 2) agrees pointwise with p at shifted arguments.
  Polynomial shifted = p.compose(lin(-2));
  for (int t = -5; t <= 5; ++t) CHECK(shifted(Rational(t)) == p(Rational(t - 2)));

  auto [q, r] = divmod(p, lin(1));
  CHECK(q * lin(1) + r == p);
  CHECK(r.is_constant());
  CHECK_THROWS_AS(divmod(p, Polynomial()), Error);

  CHECK(gcd(lin(-1) * lin(2), lin(2) * lin(5)) == lin(2));
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
}

TEST_CASE("string form") {
  CHECK(Polynomial({92, 19, -1}).to_string() == "-b2^2 + 19*b2 + 92");
  CHECK(Polynomial({0, Rational(1, 2)}).to_string("h") == "1/2*h");
  CHECK(Polynomial().to_string() == "0");
  CHECK(to_fraction_string(Rational(23)) == "23/1");
  CHECK(to_fraction_string(make_rational(-3, 6)) == "-1/2");
}

TEST_CASE("primitive integer coefficients") {
  auto v = primitive_integer_coefficients(Polynomial({Rational(1, 2), Rational(-3, 4), Rational(1, 6)}));
  CHECK(v == std::vector<Integer>{6, -9, 2});
}

TEST_CASE("integer_sqrt") {
  CHECK(integer_sqrt(625) == 25);
  CHECK(integer_sqrt(0) == 0);
  CHECK(integer_sqrt(913) == 30);
  CHECK(integer_sqrt(1) == 1);
  CHECK(integer_sqrt(3) == 1);
  CHECK(integer_sqrt(4) == 2);
  CHECK_THROWS_AS(integer_sqrt(-1), Error);
  try {
    integer_sqrt(-5);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NegativeInput);
  }
}

TEST_CASE("integer_sqrt brackets n for random n up to 1e18") {
  std::mt19937_64 rng(20240607);
  std::uniform_int_distribution<unsigned long long> dist(0, 1000000000000000000ULL);
  for (int i = 0; i < 1000; ++i) {
    Integer n = Integer(std::to_string(dist(rng)));
    Integer s = integer_sqrt(n);
    CHECK(s * s <= n);
    CHECK(n < (s + 1) * (s + 1));
  }
  // Far beyond 64 bits, against GMP's own square root.
  Integer big = Integer("123456789012345678901234567890123456789012345678901234567890");
  Integer ref;
  mpz_sqrt(ref.get_mpz_t(), big.get_mpz_t());
  CHECK(integer_sqrt(big) == ref);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    Polynomial a = oracle::random_polynomial(rng, 8);
    Polynomial b = oracle::random_polynomial(rng, 8);
    Polynomial c = oracle::random_polynomial(rng, 8);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("product_linear evaluates to the scalar product") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(0, 6);
  std::uniform_int_distribution<int> off(-10, 10);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Integer> offsets(static_cast<std::size_t>(len(rng)));
    for (auto& o : offsets) o = off(rng);
    Polynomial p = product_linear(offsets);
    CHECK(p == oracle::from_integers(oracle::expand_linear_factors(offsets)));
    for (int k = 0; k < 20; ++k) {
      Rational t = oracle::random_rational(rng);
      Rational expect = 1;
      for (const auto& o : offsets) expect *= t + o;
      CHECK(p(t) == expect);
    }
  }
}

TEST_CASE("make_rational canonicalizes and rejects zero denominators") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(make_rational(0, 7).get_den() == 1);
  CHECK_THROWS_AS(make_rational(1, 0), Error);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(parse_integer("-42") == -42);
  CHECK_THROWS_AS(parse_integer("4x"), Error);
  CHECK_THROWS_AS(parse_integer(""), Error);
}
