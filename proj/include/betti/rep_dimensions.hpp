#pragma once

// Dimension polynomials for Sym^m H^2 and for the exterior-power modules of
// so(b2 + 2), plus the two Hodge-diamond contribution tables for complex
// dimension eight. Every polynomial here is in the variable b2, except the
// raw table entries, which are in h. The two are related by h = b2 - 2; see
// h_substitute.

#include "betti/exact.hpp"
#include "betti/polynomial.hpp"

#include <array>
#include <string_view>

namespace betti {

/// Irreducible so(b2 + 2)-module generated by one primitive class:
/// Lambda^3, Lambda^2, Lambda^1 of C^(b2+2), and the trivial module. Their
/// multiplicities are written c, d, e, f.
enum class ModuleKind { L3, L2, L1, L0 };

std::string_view module_name(ModuleKind kind);

/// C(n, k) with C(n, k) = 0 for 0 <= n < k. Throws Errc::NegativeK.
Integer binomial(const Integer& n, const Integer& k);

/// dim Sym^m of a b2-dimensional space, C(b2 + m - 1, m).
Polynomial sym_dim_poly(unsigned m);

/// dim Lambda^k C^(b2+2), C(b2 + 2, k).
Polynomial ext_dim_poly(unsigned k);

/// p(b2 - 2): rewrites a polynomial in h as one in b2.
Polynomial h_substitute(const Polynomial& p);

inline constexpr int kDiamondSize = 9;  // Hodge indices 0..8

/// Hodge-diamond footprint of one copy of a module, entries in h.
class DiamondTable {
 public:
  DiamondTable(ModuleKind kind, std::array<std::array<Polynomial, kDiamondSize>, kDiamondSize> entries);

  ModuleKind kind() const noexcept { return kind_; }
  /// Throws Errc::IndexOutOfRange.
  const Polynomial& entry(int p, int q) const;
  /// Sum over p + q == degree.
  Polynomial row_sum(int degree) const;
  Polynomial total() const;

 private:
  ModuleKind kind_;
  std::array<std::array<Polynomial, kDiamondSize>, kDiamondSize> entries_;
};

/// The printed table for L3 or L2. Throws Errc::InvalidArgument otherwise.
const DiamondTable& diamond_table(ModuleKind kind);

Polynomial table_entry(ModuleKind kind, int p, int q);
Polynomial table_total(ModuleKind kind);

/// Contribution of one copy of `kind` to b_degree in complex dimension 8,
/// as the polynomial in b2 used in the b4/b6/b8 formulas. Other even
/// degrees in [0, 16] contribute 0; anything else throws
/// Errc::UnsupportedDegree.
Polynomial contribution_poly(ModuleKind kind, int degree);

/// b_{2k} for k in {2, 3, 4}: symmetric part plus c, d, e, f copies of
/// L3, L2, L1, L0. Throws Errc::BadDegree, Errc::NegativeCount, or
/// Errc::InvalidArgument for b2 < 3.
Integer betti_formula_n4(int k, const Integer& c, const Integer& d, const Integer& e, const Integer& f,
                         const Integer& b2);

}  // namespace betti
