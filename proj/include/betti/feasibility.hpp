#pragma once

// Complex dimension eight: does some choice of module multiplicities
// (c, d, e, f) >= 0 make Salamon's relation hold at a given b2? With odd
// Betti numbers zero the relation is one linear equation
//
//   coeff_c c + coeff_d d + coeff_e e + coeff_f f = constant,
//
// whose coefficients and constant are exact integers for each b2.

#include "betti/exact.hpp"

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace betti {

struct Witness {
  Integer c;
  Integer d;
  Integer e;
  Integer f;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Dim8Equation {
  Integer coeff_c;
  Integer coeff_d;
  Integer coeff_e;
  Integer coeff_f;
  Integer constant;

  /// Left-hand side at w.
  Integer evaluate(const Witness& w) const;
  bool satisfied_by(const Witness& w) const { return evaluate(w) == constant; }
};

/// Throws Errc::InvalidArgument for b2 < 3.
Dim8Equation dim8_equation(const Integer& b2);

/// Whether sum_i coeffs[i] x_i = rhs has a solution with every x_i >= 0.
bool has_nonnegative_solution(std::span<const Integer> coeffs, const Integer& rhs);

/// Lexicographically smallest nonnegative solution, if any.
std::optional<std::vector<Integer>> lex_min_nonnegative_solution(std::span<const Integer> coeffs,
                                                                 const Integer& rhs);

std::optional<Witness> find_witness(const Dim8Equation& eq);
std::optional<Witness> find_witness(const Integer& b2);

struct ScanRow {
  long b2 = 0;
  bool feasible = false;
  std::optional<Witness> witness;

  friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

inline constexpr long kScanMax = 10000;

/// Single-threaded reference. Throws Errc::RangeInvalid unless
/// 3 <= b2_min <= b2_max <= kScanMax.
std::vector<ScanRow> scan_serial(long b2_min, long b2_max);

/// OpenMP version of scan_serial with identical output. threads <= 0 uses
/// the OpenMP default.
std::vector<ScanRow> scan(long b2_min, long b2_max, int threads = 0);

}  // namespace betti
