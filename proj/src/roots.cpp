#include "betti/roots.hpp"

#include "betti/error.hpp"

#include <algorithm>

namespace betti {

Rational default_root_width() { return power_of_two_inverse(32); }

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_constant()) return p.monic();
  Polynomial g = gcd(p, p.derivative());
  return divmod(p, g).quotient.monic();
}

Rational cauchy_bound(const Polynomial& p) {
  if (p.is_constant()) throw Error(Errc::ZeroOrConstant, "root bound of a constant");
  const Rational lead = abs(p.leading());
  Rational best = 0;
  for (std::size_t i = 0; i < p.degree(); ++i) best = std::max(best, Rational(abs(p.coeff(i)) / lead));
  return best + 1;
}

Integer root_magnitude_bound(const Polynomial& p) {
  if (p.is_constant()) throw Error(Errc::ZeroOrConstant, "root bound of a constant");
  const std::size_t n = p.degree();
  const Rational lead = abs(p.leading());
  Integer best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    Rational ratio = abs(p.coeff(n - i)) / lead;
    if (ratio == 0) continue;
    Integer t = ceil(ratio);
    Integer r;
    mpz_root(r.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(i));
    Integer ri;
    mpz_pow_ui(ri.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    if (ri < t) ++r;
    best = std::max(best, r);
  }
  return 2 * best + 1;
}

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_constant()) throw Error(Errc::ZeroOrConstant, "Sturm sequence of a constant");
  // Positive rescaling keeps every sign intact and the numbers small.
  auto normalize = [](Polynomial q) { return q * Rational(1 / abs(q.leading())); };
  chain_.push_back(normalize(p));
  chain_.push_back(normalize(p.derivative()));
  while (!chain_.back().is_constant()) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).remainder;
    if (r.is_zero()) break;
    chain_.push_back(normalize(-r));
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0;
  int prev = 0;
  for (const auto& q : chain_) {
    int s = sign(q(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::sign_changes_at_infinity(bool positive) const {
  int changes = 0;
  int prev = 0;
  for (const auto& q : chain_) {
    int s = sign(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

std::size_t SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  return static_cast<std::size_t>(sign_changes(lo) - sign_changes(hi));
}

std::size_t SturmSequence::count_real_roots() const {
  return static_cast<std::size_t>(sign_changes_at_infinity(false) - sign_changes_at_infinity(true));
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo > hi) return simplest_rational_between(hi, lo);
  if (lo <= 0 && hi >= 0) return 0;
  if (hi < 0) return -simplest_rational_between(-hi, -lo);
  Integer f = floor(lo);
  if (f == lo) return Rational(f);
  if (Rational(f + 1) <= hi) return Rational(f + 1);
  // lo and hi both lie strictly inside (f, f + 1).
  Rational tail = simplest_rational_between(1 / (hi - f), 1 / (lo - f));
  return Rational(f) + 1 / tail;
}

RootWindow max_real_root(const Polynomial& p, const Rational& width) {
  if (p.is_constant()) throw Error(Errc::ZeroOrConstant, "max_real_root needs a non-constant polynomial");
  if (width <= 0) throw Error(Errc::InvalidArgument, "root window width must be positive");
  const Polynomial sf = squarefree_part(p);
  const SturmSequence sturm(sf);
  if (sturm.count_real_roots() == 0) throw Error(Errc::NoRealRoot, p.to_string("x") + " has no real root");

  const Integer bound = root_magnitude_bound(sf);
  Rational lo(-bound);
  Rational hi(bound);

  // Invariant: the largest root lies in (lo, hi].
  while (sturm.count_roots(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (sturm.count_roots(mid, hi) >= 1) lo = mid;
    else hi = mid;
  }
  if (sf(hi) == 0) return {hi, hi, true};

  // Any rational root of sf has a denominator dividing the leading
  // coefficient L of its primitive integer form. Below width 1/(2L^2) the
  // window holds at most one such fraction, the simplest one in it.
  const auto ints = primitive_integer_coefficients(sf);
  const Integer lead = abs(ints.back());
  const Rational separation = make_rational(1, 2 * lead * lead);
  const Rational target = std::min(width, separation);

  // lo may still sit on a smaller root; keep going until it does not.
  while (hi - lo > target || sf(lo) == 0) {
    Rational mid = (lo + hi) / 2;
    if (sf(mid) == 0) return {mid, mid, true};
    if (sturm.count_roots(mid, hi) == 1) lo = mid;
    else hi = mid;
  }
  Rational candidate = simplest_rational_between(lo, hi);
  if (sf(candidate) == 0) return {candidate, candidate, true};
  return {lo, hi, false};
}

Integer last_nonnegative(const Polynomial& p) {
  if (p.is_zero() || p.leading() >= 0)
    throw Error(Errc::UnboundedAbove, "leading coefficient must be negative: " + p.to_string("x"));
  if (p.is_constant()) return -1;

  const SturmSequence sturm(squarefree_part(p));
  // p < 0 on [U, oo) because every real root is below U.
  Integer m = root_magnitude_bound(p);
  while (m >= 0) {
    if (p(Rational(m)) >= 0) return m;
    // p(m) < 0; a nonnegative value further down needs a root in (-1, m).
    if (sturm.count_roots(Rational(-1), Rational(m)) == 0) return -1;
    // Largest integer k with a root in (k, m): all such roots lie in (k, k + 1].
    Integer lo = -1;
    Integer hi = m;
    while (hi - lo > 1) {
      Integer mid = lo + (hi - lo) / 2;
      if (sturm.count_roots(Rational(mid), Rational(m)) >= 1) lo = mid;
      else hi = mid;
    }
    m = (lo + 1 < m) ? Integer(lo + 1) : Integer(m - 1);
  }
  return -1;
}

}  // namespace betti
