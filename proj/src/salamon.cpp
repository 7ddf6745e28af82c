#include "betti/salamon.hpp"

#include "betti/error.hpp"
#include "betti/rep_dimensions.hpp"

#include <string>

namespace betti {

namespace {

void check_n(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1, got " + std::to_string(n));
}

}  // namespace

BettiSequence::BettiSequence(int n, std::vector<Integer> values) : n_(n), values_(std::move(values)) {
  check_n(n);
  if (values_.size() != static_cast<std::size_t>(2 * n + 1))
    throw Error(Errc::InvalidArgument, "expected " + std::to_string(2 * n + 1) + " Betti numbers, got " +
                                           std::to_string(values_.size()));
  for (const auto& v : values_)
    if (v < 0) throw Error(Errc::InvalidArgument, "negative Betti number " + to_string(v));
}

std::string_view convention_name(Convention conv) {
  return conv == Convention::canonical ? "canonical" : "paper_literal";
}

Convention parse_convention(std::string_view text) {
  if (text == "canonical") return Convention::canonical;
  if (text == "paper_literal" || text == "paper-literal") return Convention::paper_literal;
  throw Error(Errc::InvalidArgument, "unknown convention '" + std::string(text) + "'");
}

Integer salamon_coefficient(int n, int i) {
  check_n(n);
  if (i < 1 || i > 2 * n)
    throw Error(Errc::IndexOutOfRange, "Salamon index " + std::to_string(i) + " outside [1, " +
                                           std::to_string(2 * n) + "]");
  Integer c = 2 * (3 * Integer(i) * i - n);
  return i % 2 == 0 ? c : Integer(-c);
}

Integer salamon_residual(const BettiSequence& b) {
  const int n = b.n();
  Integer sum = 0;
  for (int i = 1; i <= 2 * n; ++i) sum += salamon_coefficient(n, i) * b[static_cast<std::size_t>(2 * n - i)];
  return n * b[static_cast<std::size_t>(2 * n)] - sum;
}

BettiSequence sym_model(int n, const Integer& b2) {
  check_n(n);
  if (b2 < 0) throw Error(Errc::InvalidArgument, "b2 must be >= 0");
  std::vector<Integer> values(static_cast<std::size_t>(2 * n + 1), Integer(0));
  for (int k = 0; k <= n; ++k) values[static_cast<std::size_t>(2 * k)] = sym_dim_poly(static_cast<unsigned>(k))(Rational(b2)).get_num();
  return BettiSequence(n, std::move(values));
}

Polynomial bound_polynomial_term(int n, int j, Convention conv) {
  check_n(n);
  if (j < 2 || j > 2 * n || j % 2 != 0)
    throw Error(Errc::IndexOutOfRange, "term index j must be even in [2, 2n], got " + std::to_string(j));
  const int weight = conv == Convention::canonical ? 2 : 1;
  return sym_dim_poly(static_cast<unsigned>(n - j / 2)) * Rational(weight * (3 * j * j - n));
}

Polynomial bound_polynomial_lead_term(int n) {
  check_n(n);
  return sym_dim_poly(static_cast<unsigned>(n)) * Rational(-n);
}

Polynomial bound_polynomial(int n, Convention conv) {
  Polynomial p = bound_polynomial_lead_term(n);
  for (int j = 2; j <= 2 * n; j += 2) p += bound_polynomial_term(n, j, conv);
  return p;
}

}  // namespace betti
