#pragma once

#include "betti/exact.hpp"
#include "betti/polynomial.hpp"

#include <cstddef>
#include <vector>

namespace betti {

/// Isolating interval for one real root. exact implies lo == hi and the
/// value is a root.
struct RootWindow {
  Rational lo;
  Rational hi;
  bool exact = false;

  Rational width() const { return hi - lo; }
};

/// Default isolation width, 2^-32.
Rational default_root_width();

/// p / gcd(p, p'), monic. Same distinct roots as p, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// 1 + max_i |a_i / a_n|. Every complex root z has |z| < bound.
Rational cauchy_bound(const Polynomial& p);

/// Integer U with |z| < U for every complex root z, from the Fujiwara-type
/// bound 2 * max_i |a_{n-i}/a_n|^(1/i). Usually far tighter than Cauchy's.
Integer root_magnitude_bound(const Polynomial& p);

class SturmSequence {
 public:
  /// p must be squarefree and non-constant.
  explicit SturmSequence(const Polynomial& p);

  int sign_changes(const Rational& x) const;
  int sign_changes_at_infinity(bool positive) const;

  /// Number of distinct real roots in the half-open interval (lo, hi].
  std::size_t count_roots(const Rational& lo, const Rational& hi) const;
  std::size_t count_real_roots() const;

  const std::vector<Polynomial>& chain() const noexcept { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

/// Simplest (smallest denominator) rational in the closed interval [lo, hi].
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// Largest real root of p, isolated to a window of width <= width. Rational
/// roots are returned exactly. Throws Errc::ZeroOrConstant or
/// Errc::NoRealRoot.
RootWindow max_real_root(const Polynomial& p, const Rational& width = default_root_width());

/// Largest integer b >= 0 with p(b) >= 0, or -1 if there is none. Decided by
/// exact evaluation at integers, with Sturm counts used only to skip
/// root-free stretches. Throws Errc::UnboundedAbove unless the leading
/// coefficient is negative.
Integer last_nonnegative(const Polynomial& p);

}  // namespace betti
