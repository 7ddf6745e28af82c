#pragma once

#include "betti/exact.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace betti {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The representation is canonical: no trailing zero coefficients, and the
/// zero polynomial is the empty sequence. Equal polynomials therefore have
/// identical coefficient vectors.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);
  /// The indeterminate x.
  static Polynomial variable();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }

  /// Throws Errc::ZeroOrConstant for the zero polynomial.
  std::size_t degree() const;
  /// Throws Errc::ZeroOrConstant for the zero polynomial.
  const Rational& leading() const;

  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero past the degree.
  Rational coeff(std::size_t i) const;

  /// Exact Horner evaluation.
  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;
  /// this(inner(x)).
  Polynomial compose(const Polynomial& inner) const;
  /// Divides every coefficient by the leading one.
  Polynomial monic() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  /// Human-readable form in descending degree, e.g. "-1/2*b2^2 + 3*b2 - 1".
  std::string to_string(std::string_view var = "b2") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division. Throws Errc::DivisionByZero for a zero divisor.
DivMod divmod(const Polynomial& num, const Polynomial& den);

/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

/// prod_i (x + offsets[i]), fully expanded. The empty product is 1.
Polynomial product_linear(std::span<const Integer> offsets);

/// prod_{i=first}^{last} (x + i); empty (= 1) when last < first.
Polynomial rising_product(long first, long last);

/// Coefficients scaled by a positive rational to coprime integers.
std::vector<Integer> primitive_integer_coefficients(const Polynomial& p);

}  // namespace betti
