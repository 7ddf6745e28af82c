#pragma once

// Salamon's linear relation among the Betti numbers of a compact
// hyperkähler manifold of complex dimension 2n,
//
//   n * b_{2n} = 2 * sum_{i=1}^{2n} (-1)^i (3 i^2 - n) b_{2n-i},
//
// and the bound polynomial P(b2, n) obtained by feeding it the purely
// symmetric Betti numbers S_m = C(b2 + m - 1, m).

#include "betti/exact.hpp"
#include "betti/polynomial.hpp"

#include <string_view>
#include <vector>

namespace betti {

/// b_0 .. b_{2n}, all nonnegative.
class BettiSequence {
 public:
  /// Throws Errc::InvalidArgument unless n >= 1, values.size() == 2n + 1 and
  /// every entry is >= 0.
  BettiSequence(int n, std::vector<Integer> values);

  int n() const noexcept { return n_; }
  const std::vector<Integer>& values() const noexcept { return values_; }
  const Integer& operator[](std::size_t i) const { return values_.at(i); }

 private:
  int n_;
  std::vector<Integer> values_;
};

/// canonical: -n S_n + 2 sum_j (3j^2 - n) S_{n-j/2}, the Salamon relation
/// evaluated on the symmetric model. paper_literal: the same without the
/// factor 2 on the sum, as the general formula was printed.
enum class Convention { canonical, paper_literal };

std::string_view convention_name(Convention conv);
/// Accepts "canonical" and "paper_literal" (or "paper-literal").
Convention parse_convention(std::string_view text);

/// 2 (-1)^i (3 i^2 - n). Throws Errc::IndexOutOfRange unless 1 <= i <= 2n.
Integer salamon_coefficient(int n, int i);

/// n b_{2n} - 2 sum_i (-1)^i (3 i^2 - n) b_{2n-i}; zero iff the relation holds.
Integer salamon_residual(const BettiSequence& b);

/// Even entries b_{2k} = S_k(b2), odd entries zero.
BettiSequence sym_model(int n, const Integer& b2);

/// The summand of P(b2, n) for even j in [2, 2n]: w (3j^2 - n) S_{n-j/2}
/// with w = 2 (canonical) or 1 (paper_literal).
Polynomial bound_polynomial_term(int n, int j, Convention conv);

/// -n S_n, i.e. -(1/(n-1)!) prod_{i=0}^{n-1} (b2 + i). Same in both conventions.
Polynomial bound_polynomial_lead_term(int n);

/// P(b2, n). Throws Errc::InvalidArgument for n < 1.
Polynomial bound_polynomial(int n, Convention conv);

}  // namespace betti
