#pragma once

#include "betti/claims.hpp"
#include "betti/exact.hpp"
#include "betti/polynomial.hpp"
#include "betti/rep_dimensions.hpp"
#include "betti/roots.hpp"
#include "betti/salamon.hpp"

namespace betti {

inline constexpr int kMaxBoundN = 20;

struct BoundResult {
  int n = 0;
  Convention convention = Convention::canonical;
  Polynomial polynomial;
  RootWindow max_root;
  /// last_nonnegative(polynomial)
  Integer integer_bound;
};

/// Bound polynomial, its largest root, and the integer bound for
/// 1 <= n <= kMaxBoundN. Throws Errc::UnsupportedRange outside that range.
BoundResult b2_bound(int n, Convention conv, const Rational& width = default_root_width());

/// floor((21 + sqrt(433 + 96 n)) / 2), exactly. Since 21 is odd and the
/// floor of a half only depends on the integer part of the numerator,
/// sqrt may be replaced by integer_sqrt.
Integer closed_form_bound(int n);

/// The closed-form root (21 + sqrt(433 + 96 n)) / 2 lies in [lo, hi].
/// Decided by comparing squares, no floating point.
bool closed_form_root_in(int n, const Rational& lo, const Rational& hi);

/// Complex dimension eight. lhs is the symmetric side of the rearranged
/// Salamon relation, rhs_* the coefficient polynomials of c, d, e on the
/// other side.
struct Dim8Pipeline {
  Polynomial lhs;
  Polynomial rhs_c;
  Polynomial rhs_d;
  Polynomial rhs_e;
  Integer bound;
  /// rhs_c, rhs_d, rhs_e all >= 0 at every integer in (bound, bound + 200].
  bool rhs_nonnegative_past_bound = false;
};

/// lhs = -2 S_4 + 8 S_3 + 44 S_2 + 104 b2 + 188, expanded exactly.
Polynomial dim8_lhs();
/// The quartic as printed: (-b2^4 + 10 b2^3 + 301 b2^2 + 530 b2 + 2256)/12.
Polynomial dim8_lhs_printed();
/// The Remark's F: (-2 b2^4 + 20 b2^3 + 602 b2^2 + 1060 b2 + 4512)/24.
Polynomial remark_f_printed();
/// Printed coefficient polynomials of c, d, e.
Polynomial dim8_rhs_printed(ModuleKind kind);
/// Coefficient of one module copy re-derived from the b4/b6/b8 formulas:
/// 2 [b8] - 8 [b6] - 44 [b4].
Polynomial dim8_rhs_derived(ModuleKind kind);

Dim8Pipeline dim8_pipeline();

/// (1/60)(b2 + 3)(b2 + 4)(b2 + 10)(-b2^2 - 21 b2 + 118), expanded.
Polynomial dim10_lhs();

ClaimReport proposition_factorization_check(int n);

/// Which end of the sum over j the "last k terms" are taken from.
enum class PartialSumReading {
  lowest_powers,   // j = 2n, 2n-2, ...: S_0, S_1, ..., S_{k-1}
  highest_powers,  // j = 2, 4, ...: S_{n-1}, ..., S_{n-k}
};

/// Sum of k summands of P(b2, n) (without the leading -n S_n) against
/// 2/(k-1)! prod_{i=3}^{k-1} (b2 + i) (A_k b2^2 + 3 B_k b2 + 12 n (n - 1)).
/// Checked under both conventions. Throws Errc::UnsupportedRange unless
/// 4 <= k <= n <= kMaxBoundN.
ClaimReport partial_sum_check(int n, int k, PartialSumReading reading = PartialSumReading::lowest_powers);

/// Sum of the last four summands is divisible by (b2 + 3).
ClaimReport partial_sum_divisibility_check(int n);
/// ... and the quotient is (1/3)((12n^2-73n+108) b2^2 + 3(12n^2-49n+48) b2 + 12n(n-1)).
ClaimReport partial_sum_base_check(int n);

ClaimReport remark_b7_threshold();
ClaimReport dim10_bound();

}  // namespace betti
