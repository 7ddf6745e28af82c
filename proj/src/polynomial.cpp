#include "betti/polynomial.hpp"

#include "betti/error.hpp"

#include <algorithm>
#include <utility>

namespace betti {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs)
    : Polynomial(std::vector<Rational>(coeffs)) {}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::size_t Polynomial::degree() const {
  if (is_zero()) throw Error(Errc::ZeroOrConstant, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw Error(Errc::ZeroOrConstant, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    bool unit = mag == 1 && k > 0;
    if (!unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

DivMod divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw Error(Errc::DivisionByZero, "polynomial division by zero");
  std::vector<Rational> rem = num.coeffs();
  const std::size_t dd = den.degree();
  if (rem.size() <= dd) return {Polynomial(), num};
  std::vector<Rational> quot(rem.size() - dd);
  const Rational inv_lead = 1 / den.leading();
  const auto& dc = den.coeffs();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] * inv_lead;
    quot[k - dd] = f;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= f * dc[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial product_linear(std::span<const Integer> offsets) {
  Polynomial acc = Polynomial::constant(1);
  for (const auto& o : offsets) acc *= Polynomial({Rational(o), Rational(1)});
  return acc;
}

Polynomial rising_product(long first, long last) {
  std::vector<Integer> offsets;
  for (long i = first; i <= last; ++i) offsets.emplace_back(i);
  return product_linear(offsets);
}

std::vector<Integer> primitive_integer_coefficients(const Polynomial& p) {
  if (p.is_zero()) return {};
  Integer den_lcm = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  for (auto& v : out) v /= content;
  return out;
}

}  // namespace betti
