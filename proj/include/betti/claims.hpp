#pragma once

#include "betti/exact.hpp"
#include "betti/polynomial.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace betti {

enum class ClaimStatus { verified, refuted, info };

std::string_view status_name(ClaimStatus status);

/// Exact difference between computed and expected values.
using Discrepancy = std::variant<Polynomial, Rational>;

bool is_zero(const Discrepancy& d);
std::string to_string(const Discrepancy& d, std::string_view var = "b2");

/// Outcome of checking one printed identity. status is verified exactly when
/// the discrepancy is present and zero; info reports carry no discrepancy.
struct ClaimReport {
  std::string id;
  ClaimStatus status = ClaimStatus::info;
  std::string expected;
  std::string computed;
  std::optional<Discrepancy> discrepancy;
  std::string note;
};

/// computed - expected as polynomials in `var`.
ClaimReport compare_polynomials(std::string id, const Polynomial& expected, const Polynomial& computed,
                                std::string note = {}, std::string_view var = "b2");
ClaimReport compare_values(std::string id, const Rational& expected, const Rational& computed,
                           std::string note = {});
ClaimReport info_report(std::string id, std::string expected, std::string computed, std::string note = {});

/// Every registered check, sorted by id. threads <= 0 uses the OpenMP
/// default; the result does not depend on the thread count.
std::vector<ClaimReport> run_all_claims(int threads = 0);

}  // namespace betti
