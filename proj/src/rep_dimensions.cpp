#include "betti/rep_dimensions.hpp"

#include "betti/error.hpp"

#include <string>
#include <vector>

namespace betti {

namespace {

Rational factorial(unsigned m) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), m);
  return Rational(f);
}

void check_index(int p, int q) {
  if (p < 0 || q < 0 || p >= kDiamondSize || q >= kDiamondSize)
    throw Error(Errc::IndexOutOfRange, "Hodge position (" + std::to_string(p) + "," + std::to_string(q) + ")");
}

// Symbols used in the printed diamonds, all polynomials in h.
Polynomial symbol(char s) {
  const Rational half(1, 2);
  const Rational sixth(1, 6);
  switch (s) {
    case '0': return {};
    case '1': return Polynomial::constant(1);
    case 'h': return Polynomial::variable();
    case 'A': return Polynomial({4 * half, -half, half});                    // (h^2 - h + 4)/2
    case 'B': return Polynomial({-60 * sixth, -10 * sixth, -3 * sixth, sixth});  // (h^3 - 3h^2 - 10h - 60)/6
    case 'C': return Polynomial({-4 * half, -half, half});                   // (h^2 - h - 4)/2
  }
  throw Error(Errc::InvalidArgument, std::string("unknown table symbol ") + s);
}

// Rows of the diamond from degree 0 (top) to 16 (bottom), read left to
// right exactly as printed.
using Rows = std::array<std::string_view, 17>;

constexpr Rows kL3Rows = {
    "0",         "00",      "000",       "0000",      "01h10",     "000000",  "01hAh10",   "00000000",
    "00hABAh00", "00000000", "01hAh10", "000000",    "01h10",     "0000",    "000",       "00",
    "0",
};

constexpr Rows kL2Rows = {
    "0",         "00",      "000",       "0000",      "00100",     "000000",  "001h100",   "00000000",
    "001hCh100", "00000000", "001h100", "000000",    "00100",     "0000",    "000",       "00",
    "0",
};

DiamondTable build_table(ModuleKind kind, const Rows& rows) {
  std::array<std::array<Polynomial, kDiamondSize>, kDiamondSize> entries;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    for (int t = 0; t < static_cast<int>(row.size()); ++t) {
      int p = r <= 8 ? r - t : 8 - t;
      int q = r - p;
      entries[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = symbol(row[static_cast<std::size_t>(t)]);
    }
  }
  return DiamondTable(kind, std::move(entries));
}

}  // namespace

std::string_view module_name(ModuleKind kind) {
  switch (kind) {
    case ModuleKind::L3: return "L3";
    case ModuleKind::L2: return "L2";
    case ModuleKind::L1: return "L1";
    case ModuleKind::L0: return "L0";
  }
  return "?";
}

Integer binomial(const Integer& n, const Integer& k) {
  if (k < 0) throw Error(Errc::NegativeK, "binomial with k = " + to_string(k));
  if (n >= 0 && n < k) return 0;
  // Multiplicative formula; each partial quotient is itself a binomial, so
  // the division is exact.
  Integer acc = 1;
  for (Integer i = 0; i < k; ++i) {
    acc *= n - i;
    acc /= i + 1;
  }
  return acc;
}

Polynomial sym_dim_poly(unsigned m) {
  return rising_product(0, static_cast<long>(m) - 1) * (1 / factorial(m));
}

Polynomial ext_dim_poly(unsigned k) {
  // (b2 + 2)(b2 + 1) ... (b2 + 3 - k) / k!
  return rising_product(3 - static_cast<long>(k), 2) * (1 / factorial(k));
}

Polynomial h_substitute(const Polynomial& p) { return p.compose(Polynomial({-2, 1})); }

DiamondTable::DiamondTable(ModuleKind kind,
                           std::array<std::array<Polynomial, kDiamondSize>, kDiamondSize> entries)
    : kind_(kind), entries_(std::move(entries)) {}

const Polynomial& DiamondTable::entry(int p, int q) const {
  check_index(p, q);
  return entries_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
}

Polynomial DiamondTable::row_sum(int degree) const {
  Polynomial acc;
  for (int p = 0; p < kDiamondSize; ++p) {
    int q = degree - p;
    if (q >= 0 && q < kDiamondSize) acc += entry(p, q);
  }
  return acc;
}

Polynomial DiamondTable::total() const {
  Polynomial acc;
  for (const auto& row : entries_)
    for (const auto& e : row) acc += e;
  return acc;
}

const DiamondTable& diamond_table(ModuleKind kind) {
  static const DiamondTable l3 = build_table(ModuleKind::L3, kL3Rows);
  static const DiamondTable l2 = build_table(ModuleKind::L2, kL2Rows);
  switch (kind) {
    case ModuleKind::L3: return l3;
    case ModuleKind::L2: return l2;
    default: break;
  }
  throw Error(Errc::InvalidArgument, std::string("no diamond table for ") + std::string(module_name(kind)));
}

Polynomial table_entry(ModuleKind kind, int p, int q) { return diamond_table(kind).entry(p, q); }

Polynomial table_total(ModuleKind kind) { return diamond_table(kind).total(); }

Polynomial contribution_poly(ModuleKind kind, int degree) {
  if (degree < 0 || degree > 16 || degree % 2 != 0)
    throw Error(Errc::UnsupportedDegree, "contribution to b_" + std::to_string(degree));
  const Polynomial b2 = Polynomial::variable();
  const Polynomial one = Polynomial::constant(1);
  switch (kind) {
    case ModuleKind::L3:
      if (degree == 4) return b2;
      if (degree == 6) return Polynomial({1, Rational(-1, 2), Rational(1, 2)});  // (b2^2 - b2 + 2)/2
      if (degree == 8) return Polynomial({-4, Rational(-2, 3), Rational(-1, 2), Rational(1, 6)});  // (b2^3 - 3b2^2 - 4b2 - 24)/6
      break;
    case ModuleKind::L2:
      if (degree == 4) return one;
      if (degree == 6) return b2;
      if (degree == 8) return Polynomial({-1, Rational(-1, 2), Rational(1, 2)});  // (b2^2 - b2 - 2)/2
      break;
    case ModuleKind::L1:
      if (degree == 6) return one;
      if (degree == 8) return b2;
      break;
    case ModuleKind::L0:
      if (degree == 8) return one;
      break;
  }
  return {};
}

Integer betti_formula_n4(int k, const Integer& c, const Integer& d, const Integer& e, const Integer& f,
                         const Integer& b2) {
  if (k < 2 || k > 4) throw Error(Errc::BadDegree, "betti_formula_n4 needs k in {2,3,4}, got " + std::to_string(k));
  if (c < 0 || d < 0 || e < 0 || f < 0) throw Error(Errc::NegativeCount, "module multiplicities must be >= 0");
  if (b2 < 3) throw Error(Errc::InvalidArgument, "b2 must be >= 3, got " + to_string(b2));
  const int degree = 2 * k;
  const Rational x(b2);
  Rational total = sym_dim_poly(static_cast<unsigned>(k))(x);
  total += Rational(c) * contribution_poly(ModuleKind::L3, degree)(x);
  total += Rational(d) * contribution_poly(ModuleKind::L2, degree)(x);
  total += Rational(e) * contribution_poly(ModuleKind::L1, degree)(x);
  total += Rational(f) * contribution_poly(ModuleKind::L0, degree)(x);
  if (total.get_den() != 1) throw Error(Errc::InvalidArgument, "non-integral Betti number at b2 = " + to_string(b2));
  return total.get_num();
}

}  // namespace betti
