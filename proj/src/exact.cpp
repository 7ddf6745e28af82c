#include "betti/exact.hpp"

#include "betti/error.hpp"

#include <cctype>

namespace betti {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroOrConstant: return "ZeroOrConstant";
    case Errc::NoRealRoot: return "NoRealRoot";
    case Errc::UnboundedAbove: return "UnboundedAbove";
    case Errc::NegativeInput: return "NegativeInput";
    case Errc::NegativeK: return "NegativeK";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::UnsupportedDegree: return "UnsupportedDegree";
    case Errc::BadDegree: return "BadDegree";
    case Errc::NegativeCount: return "NegativeCount";
    case Errc::UnsupportedRange: return "UnsupportedRange";
    case Errc::RangeInvalid: return "RangeInvalid";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::DivisionByZero: return "DivisionByZero";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational power_of_two_inverse(unsigned bits) {
  Integer den = 1;
  den <<= bits;
  return make_rational(1, den);
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int sign(const Integer& z) { return sgn(z); }
int sign(const Rational& q) { return sgn(q); }

Integer integer_sqrt(const Integer& n) {
  if (n < 0) throw Error(Errc::NegativeInput, "integer_sqrt of " + to_string(n));
  if (n < 2) return n;
  // Start above the root; the Newton sequence then decreases monotonically
  // to floor(sqrt(n)).
  Integer x = 1;
  x <<= (mpz_sizeinbase(n.get_mpz_t(), 2) + 1) / 2 + 1;
  while (true) {
    Integer y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer parse_integer(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw Error(Errc::InvalidArgument, "not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(Errc::InvalidArgument, "not an integer: '" + text + "'");
  }
  return Integer(text[0] == '+' ? text.substr(1) : text, 10);
}

}  // namespace betti
