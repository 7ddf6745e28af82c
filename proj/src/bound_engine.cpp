#include "betti/bound_engine.hpp"

#include "betti/error.hpp"

#include <string>

namespace betti {

namespace {

const Polynomial& b2_var() {
  static const Polynomial x = Polynomial::variable();
  return x;
}

Rational factorial(long m) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
  return Rational(f);
}

// Integers b in [from, to] where p(b) >= 0.
long count_nonnegative(const Polynomial& p, long from, long to) {
  long bad = 0;
  for (long b = from; b <= to; ++b)
    if (p(Rational(b)) >= 0) ++bad;
  return bad;
}

std::string join_reports(const Polynomial& canonical_diff, const Polynomial& literal_diff) {
  return "computed - expected: canonical " + canonical_diff.to_string() + "; paper_literal " +
         literal_diff.to_string();
}

// Reports verified when `claimed` equals the target built under either
// convention; the discrepancy is taken against the matching one, or the
// canonical one when neither matches.
ClaimReport compare_both_conventions(std::string id, const Polynomial& claimed, const Polynomial& canonical,
                                     const Polynomial& literal, std::string note) {
  const Polynomial dc = canonical - claimed;
  const Polynomial dl = literal - claimed;
  ClaimReport r;
  r.id = std::move(id);
  r.expected = claimed.to_string();
  r.computed = "canonical: " + canonical.to_string() + "; paper_literal: " + literal.to_string();
  if (dl.is_zero() && !dc.is_zero()) {
    r.discrepancy = dl;
    note += (note.empty() ? "" : " ") + std::string("Matches under paper_literal only.");
  } else {
    r.discrepancy = dc;
  }
  r.status = is_zero(*r.discrepancy) ? ClaimStatus::verified : ClaimStatus::refuted;
  r.note = note.empty() ? join_reports(dc, dl) : note + " " + join_reports(dc, dl);
  return r;
}

Polynomial partial_sum(int n, int k, PartialSumReading reading, Convention conv) {
  Polynomial acc;
  for (int t = 0; t < k; ++t) {
    int j = reading == PartialSumReading::lowest_powers ? 2 * n - 2 * t : 2 + 2 * t;
    acc += bound_polynomial_term(n, j, conv);
  }
  return acc;
}

}  // namespace

BoundResult b2_bound(int n, Convention conv, const Rational& width) {
  if (n < 1 || n > kMaxBoundN)
    throw Error(Errc::UnsupportedRange, "n must be in [1, " + std::to_string(kMaxBoundN) + "], got " + std::to_string(n));
  BoundResult r;
  r.n = n;
  r.convention = conv;
  r.polynomial = bound_polynomial(n, conv);
  r.max_root = max_real_root(r.polynomial, width);
  r.integer_bound = last_nonnegative(r.polynomial);
  return r;
}

Integer closed_form_bound(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "n must be >= 1");
  return (21 + integer_sqrt(433 + 96 * Integer(n))) / 2;
}

bool closed_form_root_in(int n, const Rational& lo, const Rational& hi) {
  const Rational disc(433 + 96 * Integer(n));
  const Rational a = 2 * lo - 21;
  const Rational b = 2 * hi - 21;
  bool above_lo = a < 0 || a * a <= disc;
  bool below_hi = b >= 0 && b * b >= disc;
  return above_lo && below_hi;
}

Polynomial dim8_lhs() {
  const Polynomial x = b2_var();
  return sym_dim_poly(4) * Rational(-2) + sym_dim_poly(3) * Rational(8) + sym_dim_poly(2) * Rational(44) +
         x * Rational(104) + Polynomial::constant(188);
}

Polynomial dim8_lhs_printed() {
  return Polynomial({2256, 530, 301, 10, -1}) * Rational(1, 12);
}

Polynomial remark_f_printed() {
  return Polynomial({4512, 1060, 602, 20, -2}) * Rational(1, 24);
}

Polynomial dim8_rhs_printed(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::L3: return Polynomial({-48, -124, -15, 1}) * Rational(1, 3);
    case ModuleKind::L2: return Polynomial({-46, -9, 1});
    case ModuleKind::L1: return Polynomial({-4, 1}) * Rational(2);
    case ModuleKind::L0: break;
  }
  throw Error(Errc::InvalidArgument, "no printed coefficient polynomial for L0");
}

Polynomial dim8_rhs_derived(ModuleKind kind) {
  return contribution_poly(kind, 8) * Rational(2) - contribution_poly(kind, 6) * Rational(8) -
         contribution_poly(kind, 4) * Rational(44);
}

Dim8Pipeline dim8_pipeline() {
  Dim8Pipeline p;
  p.lhs = dim8_lhs();
  p.rhs_c = dim8_rhs_printed(ModuleKind::L3);
  p.rhs_d = dim8_rhs_printed(ModuleKind::L2);
  p.rhs_e = dim8_rhs_printed(ModuleKind::L1);
  p.bound = last_nonnegative(p.lhs);
  p.rhs_nonnegative_past_bound = true;
  for (Integer b = p.bound + 1; b <= p.bound + 200; ++b) {
    Rational x(b);
    if (p.rhs_c(x) < 0 || p.rhs_d(x) < 0 || p.rhs_e(x) < 0) {
      p.rhs_nonnegative_past_bound = false;
      break;
    }
  }
  return p;
}

Polynomial dim10_lhs() {
  const Integer offsets[] = {3, 4, 10};
  return product_linear(offsets) * Polynomial({118, -21, -1}) * Rational(1, 60);
}

ClaimReport proposition_factorization_check(int n) {
  if (n < 2 || n > 10) throw Error(Errc::UnsupportedRange, "factorization check needs 2 <= n <= 10");
  const Polynomial quadratic({2 - 96 * n, -21, 1});
  const Polynomial claimed =
      rising_product(3, n - 1) * Polynomial({2 * n, 1}) * quadratic * Rational(-1 / factorial(n));
  return compare_both_conventions("prop-factorization-n" + std::to_string(n), claimed,
                                  bound_polynomial(n, Convention::canonical),
                                  bound_polynomial(n, Convention::paper_literal), {});
}

ClaimReport partial_sum_check(int n, int k, PartialSumReading reading) {
  if (k < 4 || k > n || n > kMaxBoundN)
    throw Error(Errc::UnsupportedRange, "partial sum check needs 4 <= k <= n <= 20");
  const Integer nn = n;
  const Integer kk = k;
  const Integer tri = (kk - 4) * (kk - 3) / 2;
  const Integer a_k = 12 * nn * nn - (73 + 24 * (kk - 4)) * nn + 108 + 60 * kk + 24 * tri;
  const Integer b_k = 12 * nn * nn - (49 + 16 * kk) * nn + 48 + 24 * kk + 8 * tri;
  const Polynomial quadratic({Rational(12 * nn * (nn - 1)), Rational(3 * b_k), Rational(a_k)});
  const Polynomial claimed = rising_product(3, k - 1) * quadratic * Rational(2 / factorial(k - 1));

  std::string id = "prop-partial-sum-n" + std::to_string(n) + "-k" + std::to_string(k);
  std::string note = "A_k = " + to_string(a_k) + ", B_k = " + to_string(b_k) + ".";
  if (reading == PartialSumReading::highest_powers) {
    id += "-rev";
    note += " Terms taken from the highest symmetric powers (j = 2, 4, ...).";
  } else {
    note += " Terms taken from the lowest symmetric powers (j = 2n, 2n-2, ...).";
  }
  return compare_both_conventions(std::move(id), claimed, partial_sum(n, k, reading, Convention::canonical),
                                  partial_sum(n, k, reading, Convention::paper_literal), std::move(note));
}

ClaimReport partial_sum_divisibility_check(int n) {
  if (n < 4 || n > kMaxBoundN) throw Error(Errc::UnsupportedRange, "divisibility check needs 4 <= n <= 20");
  const Polynomial divisor({3, 1});
  const Polynomial sum = partial_sum(n, 4, PartialSumReading::lowest_powers, Convention::paper_literal);
  ClaimReport r = compare_polynomials("prop-partial-divisible-n" + std::to_string(n), Polynomial(),
                                      divmod(sum, divisor).remainder,
                                      "Remainder of the last four summands modulo (b2 + 3); the factor 2 of the "
                                      "canonical convention does not change it.");
  r.expected = "remainder 0";
  return r;
}

ClaimReport partial_sum_base_check(int n) {
  if (n < 4 || n > kMaxBoundN) throw Error(Errc::UnsupportedRange, "base check needs 4 <= n <= 20");
  const Integer nn = n;
  const Polynomial claimed = Polynomial({Rational(12 * nn * (nn - 1)), Rational(3 * (12 * nn * nn - 49 * nn + 48)),
                                         Rational(12 * nn * nn - 73 * nn + 108)}) *
                             Rational(1, 3);
  const Polynomial divisor({3, 1});
  return compare_both_conventions(
      "prop-partial-base-n" + std::to_string(n), claimed,
      divmod(partial_sum(n, 4, PartialSumReading::lowest_powers, Convention::canonical), divisor).quotient,
      divmod(partial_sum(n, 4, PartialSumReading::lowest_powers, Convention::paper_literal), divisor).quotient,
      "Quotient of the last four summands by (b2 + 3).");
}

ClaimReport remark_b7_threshold() {
  const Rational at25 = dim8_lhs()(Rational(25));
  // Largest integer t with lhs(25) + t < 0.
  const Integer threshold = ceil(Rational(-at25)) - 1;
  const Rational printed_f = remark_f_printed()(Rational(25));
  ClaimReport r;
  r.id = "remark-b7";
  r.expected = "1281";
  r.computed = "largest b7 keeping lhs(25) + b7 < 0: " + to_string(threshold) +
               "; printed F(25) = " + to_fraction_string(printed_f);
  r.discrepancy = Rational(threshold) - 1281;
  r.status = is_zero(*r.discrepancy) ? ClaimStatus::verified : ClaimStatus::refuted;
  r.note = "Recomputed lhs(25) = " + to_fraction_string(at25) + ". Discrepancy is threshold - 1281.";
  return r;
}

ClaimReport dim10_bound() {
  const Polynomial lhs = dim10_lhs();
  const long violations = count_nonnegative(lhs, 26, 200);
  const Integer canonical = b2_bound(5, Convention::canonical).integer_bound;
  ClaimReport r;
  r.id = "dim10-bound";
  r.expected = "lhs < 0 on [26, 200]; b2 <= 25";
  r.computed = "nonnegative values on [26, 200]: " + std::to_string(violations) +
               "; canonical bound at n = 5: " + to_string(canonical);
  r.discrepancy = Rational(violations) + Rational(abs(canonical - 25));
  r.status = is_zero(*r.discrepancy) ? ClaimStatus::verified : ClaimStatus::refuted;
  r.note = "Assumes, as printed, that the right-hand side Q(b2, c, d, e, f, g) is positive for b2 >= 26; "
           "no dimension-ten contribution tables exist to verify it.";
  return r;
}

}  // namespace betti
