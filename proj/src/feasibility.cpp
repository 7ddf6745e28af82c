#include "betti/feasibility.hpp"

#include "betti/error.hpp"
#include "betti/rep_dimensions.hpp"
#include "betti/salamon.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

namespace betti {

namespace {

Integer residual_at(const Integer& b2, const Integer& c, const Integer& d, const Integer& e, const Integer& f) {
  std::vector<Integer> values(9, Integer(0));
  values[0] = 1;
  values[2] = b2;
  values[4] = betti_formula_n4(2, c, d, e, f, b2);
  values[6] = betti_formula_n4(3, c, d, e, f, b2);
  values[8] = betti_formula_n4(4, c, d, e, f, b2);
  return salamon_residual(BettiSequence(4, std::move(values)));
}

Integer halve_exact(const Integer& v) {
  if (!mpz_even_p(v.get_mpz_t())) throw Error(Errc::InvalidArgument, "odd Salamon residual " + to_string(v));
  return v / 2;
}

void check_range(long b2_min, long b2_max) {
  if (b2_min < 3 || b2_min > b2_max || b2_max > kScanMax)
    throw Error(Errc::RangeInvalid, "scan range [" + std::to_string(b2_min) + ", " + std::to_string(b2_max) +
                                        "] must satisfy 3 <= min <= max <= " + std::to_string(kScanMax));
}

ScanRow scan_one(long b2) {
  ScanRow row;
  row.b2 = b2;
  row.witness = find_witness(Integer(b2));
  row.feasible = row.witness.has_value();
  return row;
}

}  // namespace

Integer Dim8Equation::evaluate(const Witness& w) const {
  return coeff_c * w.c + coeff_d * w.d + coeff_e * w.e + coeff_f * w.f;
}

Dim8Equation dim8_equation(const Integer& b2) {
  if (b2 < 3) throw Error(Errc::InvalidArgument, "b2 must be >= 3, got " + to_string(b2));
  // The residual is affine in (c, d, e, f); read off its slopes. It is
  // always even (n = 4 and the sum carries a factor 2), so halving is exact.
  const Integer r0 = residual_at(b2, 0, 0, 0, 0);
  Dim8Equation eq;
  eq.coeff_c = halve_exact(residual_at(b2, 1, 0, 0, 0) - r0);
  eq.coeff_d = halve_exact(residual_at(b2, 0, 1, 0, 0) - r0);
  eq.coeff_e = halve_exact(residual_at(b2, 0, 0, 1, 0) - r0);
  eq.coeff_f = halve_exact(residual_at(b2, 0, 0, 0, 1) - r0);
  eq.constant = halve_exact(-r0);
  return eq;
}

bool has_nonnegative_solution(std::span<const Integer> coeffs, const Integer& rhs) {
  std::vector<Integer> live;
  for (const auto& a : coeffs)
    if (a != 0) live.push_back(a);
  if (live.empty()) return rhs == 0;

  Integer g = 0;
  for (const auto& a : live) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  if (!mpz_divisible_p(rhs.get_mpz_t(), g.get_mpz_t())) return false;

  const bool any_pos = std::any_of(live.begin(), live.end(), [](const Integer& a) { return a > 0; });
  const bool any_neg = std::any_of(live.begin(), live.end(), [](const Integer& a) { return a < 0; });
  // With both signs present, any integer solution can be pushed into the
  // nonnegative orthant along a_j e_i - a_i e_j (a_i < 0 < a_j), so the gcd
  // condition is sufficient.
  if (any_pos && any_neg) return true;

  Integer target = rhs;
  if (any_neg) {
    for (auto& a : live) a = -a;
    target = -target;
  }
  if (target < 0) return false;
  if (target == 0) return true;
  if (live.size() == 1) return mpz_divisible_p(target.get_mpz_t(), live[0].get_mpz_t()) != 0;

  // All positive: x_0 ranges over [0, target / a_0].
  const Integer a0 = live[0];
  std::span<const Integer> rest(live.data() + 1, live.size() - 1);
  for (Integer x = 0; a0 * x <= target; ++x)
    if (has_nonnegative_solution(rest, target - a0 * x)) return true;
  return false;
}

std::optional<std::vector<Integer>> lex_min_nonnegative_solution(std::span<const Integer> coeffs,
                                                                 const Integer& rhs) {
  if (!has_nonnegative_solution(coeffs, rhs)) return std::nullopt;
  std::vector<Integer> x;
  x.reserve(coeffs.size());
  Integer remaining = rhs;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::span<const Integer> rest = coeffs.subspan(i + 1);
    // Terminates: a solution with the already-fixed prefix exists, and its
    // i-th entry bounds the search.
    Integer v = 0;
    while (!has_nonnegative_solution(rest, remaining - coeffs[i] * v)) ++v;
    remaining -= coeffs[i] * v;
    x.push_back(v);
  }
  return x;
}

std::optional<Witness> find_witness(const Dim8Equation& eq) {
  // Fast path: all coefficients positive and nothing to distribute.
  if (eq.constant < 0 && eq.coeff_c > 0 && eq.coeff_d > 0 && eq.coeff_e > 0 && eq.coeff_f > 0) return std::nullopt;
  const Integer coeffs[] = {eq.coeff_c, eq.coeff_d, eq.coeff_e, eq.coeff_f};
  auto x = lex_min_nonnegative_solution(coeffs, eq.constant);
  if (!x) return std::nullopt;
  return Witness{(*x)[0], (*x)[1], (*x)[2], (*x)[3]};
}

std::optional<Witness> find_witness(const Integer& b2) { return find_witness(dim8_equation(b2)); }

std::vector<ScanRow> scan_serial(long b2_min, long b2_max) {
  check_range(b2_min, b2_max);
  std::vector<ScanRow> rows;
  rows.reserve(static_cast<std::size_t>(b2_max - b2_min + 1));
  for (long b2 = b2_min; b2 <= b2_max; ++b2) rows.push_back(scan_one(b2));
  return rows;
}

std::vector<ScanRow> scan(long b2_min, long b2_max, int threads) {
  check_range(b2_min, b2_max);
  const long count = b2_max - b2_min + 1;
  std::vector<ScanRow> rows(static_cast<std::size_t>(count));
  const int team = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(team)
  for (long i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = scan_one(b2_min + i);
  return rows;
}

}  // namespace betti
