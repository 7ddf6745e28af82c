#include "betti/claims.hpp"

#include "betti/bound_engine.hpp"
#include "betti/feasibility.hpp"

#include <omp.h>

#include <algorithm>
#include <functional>
#include <string>

namespace betti {

std::string_view status_name(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::verified: return "verified";
    case ClaimStatus::refuted: return "refuted";
    case ClaimStatus::info: return "info";
  }
  return "?";
}

bool is_zero(const Discrepancy& d) {
  if (const auto* p = std::get_if<Polynomial>(&d)) return p->is_zero();
  return std::get<Rational>(d) == 0;
}

std::string to_string(const Discrepancy& d, std::string_view var) {
  if (const auto* p = std::get_if<Polynomial>(&d)) return p->to_string(var);
  return to_fraction_string(std::get<Rational>(d));
}

ClaimReport compare_polynomials(std::string id, const Polynomial& expected, const Polynomial& computed,
                                std::string note, std::string_view var) {
  ClaimReport r;
  r.id = std::move(id);
  r.expected = expected.to_string(var);
  r.computed = computed.to_string(var);
  r.discrepancy = computed - expected;
  r.status = is_zero(*r.discrepancy) ? ClaimStatus::verified : ClaimStatus::refuted;
  r.note = std::move(note);
  return r;
}

ClaimReport compare_values(std::string id, const Rational& expected, const Rational& computed, std::string note) {
  ClaimReport r;
  r.id = std::move(id);
  r.expected = to_fraction_string(expected);
  r.computed = to_fraction_string(computed);
  r.discrepancy = Rational(computed - expected);
  r.status = is_zero(*r.discrepancy) ? ClaimStatus::verified : ClaimStatus::refuted;
  r.note = std::move(note);
  return r;
}

ClaimReport info_report(std::string id, std::string expected, std::string computed, std::string note) {
  return ClaimReport{std::move(id), ClaimStatus::info, std::move(expected), std::move(computed), std::nullopt,
                     std::move(note)};
}

namespace {

using Check = std::function<ClaimReport()>;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ",") + p;
  return out;
}

ClaimReport closed_form_matches_canonical() {
  std::vector<std::string> closed;
  std::vector<std::string> canonical;
  long mismatches = 0;
  for (int n = 1; n <= 8; ++n) {
    Integer cf = closed_form_bound(n);
    Integer cb = b2_bound(n, Convention::canonical).integer_bound;
    closed.push_back(to_string(cf));
    canonical.push_back(to_string(cb));
    if (cf != cb) ++mismatches;
  }
  ClaimReport r;
  r.id = "closed-form-matches-canonical";
  r.expected = "closed form n=1..8: " + join(closed);
  r.computed = "canonical bound n=1..8: " + join(canonical);
  r.discrepancy = Rational(mismatches);
  r.status = mismatches == 0 ? ClaimStatus::verified : ClaimStatus::refuted;
  r.note = "Discrepancy counts the n where floor((21 + sqrt(433 + 96n))/2) differs from the canonical bound.";
  return r;
}

ClaimReport closed_form_root_in_window() {
  long misses = 0;
  std::vector<std::string> hits;
  for (int n = 1; n <= 8; ++n) {
    RootWindow w = b2_bound(n, Convention::canonical).max_root;
    bool in = closed_form_root_in(n, w.lo, w.hi);
    hits.push_back(in ? "yes" : "no");
    if (!in) ++misses;
  }
  ClaimReport r;
  r.id = "closed-form-root-in-canonical-window";
  r.expected = "(21 + sqrt(433 + 96n))/2 is the largest root of the canonical P, n=1..8";
  r.computed = "inside isolating window: " + join(hits);
  r.discrepancy = Rational(misses);
  r.status = misses == 0 ? ClaimStatus::verified : ClaimStatus::refuted;
  return r;
}

ClaimReport closed_form_discriminant() {
  // Discriminant of b2^2 - 21 b2 + (2 - 96n) as a polynomial in n.
  const Polynomial disc = Polynomial::constant(441) - Polynomial({2, -96}) * Rational(4);
  return compare_polynomials("prop-quadratic-discriminant", Polynomial({433, 96}), disc,
                             "Discriminant of the printed quadratic factor against the radicand of the printed "
                             "closed form, both as polynomials in n.",
                             "n");
}

ClaimReport dim8_lhs_printed_check() {
  ClaimReport r = compare_polynomials("dim8-lhs-printed", dim8_lhs_printed(), dim8_lhs(),
                                      "Printed quartic against the exact expansion of "
                                      "-2 S_4 + 8 S_3 + 44 S_2 + 104 b2 + 188.");
  return r;
}

ClaimReport dim8_lhs_matches_canonical() {
  return compare_polynomials("dim8-lhs-matches-canonical", bound_polynomial(4, Convention::canonical) * Rational(1, 2),
                             dim8_lhs(), "The dimension-eight left side is half the canonical P(b2, 4).");
}

ClaimReport dim8_bound_check() {
  Dim8Pipeline p = dim8_pipeline();
  return compare_values("dim8-bound", 24, Rational(p.bound),
                        "Largest integer b2 with lhs(b2) >= 0, by exact evaluation.");
}

ClaimReport dim8_lhs_negative_from_24() {
  const Polynomial lhs = dim8_lhs();
  const Integer first_negative = last_nonnegative(lhs) + 1;
  ClaimReport r;
  r.id = "dim8-lhs-negative-from-24";
  r.expected = "lhs < 0 for all b2 >= 24";
  r.computed = "lhs(24) = " + to_fraction_string(lhs(Rational(24))) + "; lhs < 0 exactly for b2 >= " +
               to_string(first_negative);
  r.discrepancy = Rational(first_negative - 24);
  r.status = is_zero(*r.discrepancy) ? ClaimStatus::verified : ClaimStatus::refuted;
  r.note = "The stated bound b2 <= 24 still follows, since lhs < 0 from 25 on.";
  return r;
}

ClaimReport dim8_rhs_check(ModuleKind kind, const char* id, const char* symbol) {
  return compare_polynomials(id, dim8_rhs_printed(kind), dim8_rhs_derived(kind),
                             std::string("Coefficient of ") + symbol +
                                 " re-derived as 2 [b8] - 8 [b6] - 44 [b4] from the b4, b6, b8 formulas.");
}

ClaimReport dim8_rhs_positive() {
  Dim8Pipeline p = dim8_pipeline();
  long violations = 0;
  for (long b = 25; b <= 500; ++b) {
    Rational x(b);
    if (p.rhs_c(x) <= 0) ++violations;
    if (p.rhs_d(x) <= 0) ++violations;
    if (p.rhs_e(x) <= 0) ++violations;
  }
  ClaimReport r;
  r.id = "dim8-rhs-positive";
  r.expected = "coefficients of c, d, e > 0 for every integer b2 in [25, 500]";
  r.computed = "nonpositive values: " + std::to_string(violations);
  r.discrepancy = Rational(violations);
  r.status = violations == 0 ? ClaimStatus::verified : ClaimStatus::refuted;
  return r;
}

ClaimReport dim10_negativity_threshold() {
  const Integer threshold = last_nonnegative(dim10_lhs()) + 1;
  return info_report("dim10-negativity-threshold", "lhs < 0 for b2 >= 26",
                     "lhs < 0 exactly for integers b2 >= " + to_string(threshold),
                     "Strictly stronger than the printed range: the quadratic factor is already negative from 5 on.");
}

ClaimReport dim10_lhs_vs_canonical() {
  const Polynomial printed = dim10_lhs();
  const Polynomial canonical = bound_polynomial(5, Convention::canonical);
  const Polynomial scaled = canonical * Rational(printed.leading() / canonical.leading());
  ClaimReport r = compare_polynomials("dim10-lhs-vs-canonical", printed, scaled,
                                      "Canonical P(b2, 5) rescaled to the printed leading coefficient; equality "
                                      "would mean the printed quintic is a positive multiple of it.");
  r.expected = printed.to_string();
  r.computed = scaled.to_string();
  return r;
}

ClaimReport remark_f_matches_printed_lhs() {
  return compare_polynomials("remark-f-matches-printed-lhs", dim8_lhs_printed(), remark_f_printed(),
                             "F is the printed quartic over denominator 24.");
}

ClaimReport table_total_check(ModuleKind kind, const char* id, unsigned k) {
  return compare_polynomials(id, ext_dim_poly(k), h_substitute(table_total(kind)),
                             "Sum of all diamond entries (h = b2 - 2) against dim Lambda^" + std::to_string(k) +
                                 " C^(b2+2).");
}

ClaimReport table_row_check(ModuleKind kind, int degree) {
  std::string id = std::string("table-") + (kind == ModuleKind::L3 ? "l3" : "l2") + "-b" + std::to_string(degree) + "-row";
  return compare_polynomials(std::move(id), contribution_poly(kind, degree),
                             h_substitute(diamond_table(kind).row_sum(degree)),
                             "Diamond row sum (h = b2 - 2) against the contribution used in the b" +
                                 std::to_string(degree) + " formula.");
}

ClaimReport table_l3_b8_h_form() {
  // (h^3 + 3h^2 - 4h - 36)/6, as printed next to the b8 contribution.
  const Polynomial printed = Polynomial({-36, -4, 3, 1}) * Rational(1, 6);
  ClaimReport r = compare_polynomials("table-l3-b8-h-form", printed, diamond_table(ModuleKind::L3).row_sum(8),
                                      "Printed h-form of the L3 b8 contribution against the diamond row sum; "
                                      "its substitution h = b2 - 2 is checked by table-l3-b8-substitution.",
                                      "h");
  return r;
}

ClaimReport table_l3_b8_substitution() {
  const Polynomial printed_h = Polynomial({-36, -4, 3, 1}) * Rational(1, 6);
  return compare_polynomials("table-l3-b8-substitution", contribution_poly(ModuleKind::L3, 8),
                             h_substitute(printed_h), "(h^3 + 3h^2 - 4h - 36)/6 at h = b2 - 2.");
}

ClaimReport table_l2_b8_h_form() {
  // (h^2 - h - 4)/2 + 2h + 2 = (h^2 + 3h)/2, as printed.
  const Polynomial printed = Polynomial({0, 3, 1}) * Rational(1, 2);
  return compare_polynomials("table-l2-b8-h-form", printed, diamond_table(ModuleKind::L2).row_sum(8),
                             "Printed (h^2 + 3h)/2 against the diamond row sum.", "h");
}

ClaimReport table_symmetry(ModuleKind kind) {
  const DiamondTable& t = diamond_table(kind);
  long asymmetric = 0;
  for (int p = 0; p < kDiamondSize; ++p)
    for (int q = 0; q < kDiamondSize; ++q)
      if (t.entry(p, q) != t.entry(q, p) || t.entry(p, q) != t.entry(8 - p, 8 - q)) ++asymmetric;
  ClaimReport r;
  r.id = std::string("table-") + (kind == ModuleKind::L3 ? "l3" : "l2") + "-symmetry";
  r.expected = "entries invariant under (p,q) -> (q,p) and (p,q) -> (8-p,8-q)";
  r.computed = "asymmetric positions: " + std::to_string(asymmetric);
  r.discrepancy = Rational(asymmetric);
  r.status = asymmetric == 0 ? ClaimStatus::verified : ClaimStatus::refuted;
  return r;
}

ClaimReport feasibility_bridge() {
  const Polynomial lhs = dim8_lhs();
  long mismatches = 0;
  for (long b = 3; b <= 100; ++b) {
    Dim8Equation eq = dim8_equation(b);
    Rational x(b);
    if (Rational(eq.constant) != lhs(x)) ++mismatches;
    if (Rational(eq.coeff_c) != dim8_rhs_printed(ModuleKind::L3)(x)) ++mismatches;
    if (Rational(eq.coeff_d) != dim8_rhs_printed(ModuleKind::L2)(x)) ++mismatches;
    if (Rational(eq.coeff_e) != dim8_rhs_printed(ModuleKind::L1)(x)) ++mismatches;
    if (eq.coeff_f != 2) ++mismatches;
  }
  ClaimReport r;
  r.id = "feasibility-bridge-dim8";
  r.expected = "Salamon equation from the b4/b6/b8 formulas agrees with lhs and the printed c, d, e coefficients";
  r.computed = "mismatched values on b2 in [3, 100]: " + std::to_string(mismatches);
  r.discrepancy = Rational(mismatches);
  r.status = mismatches == 0 ? ClaimStatus::verified : ClaimStatus::refuted;
  return r;
}

ClaimReport feasibility_dim8_scan() {
  auto rows = scan_serial(3, 1000);
  long wrong = 0;
  for (const auto& row : rows) {
    bool expect_feasible = row.b2 <= 24;
    if (row.feasible != expect_feasible) ++wrong;
    if (row.witness && !dim8_equation(row.b2).satisfied_by(*row.witness)) ++wrong;
  }
  ClaimReport r;
  r.id = "feasibility-dim8-scan";
  r.expected = "nonnegative (c, d, e, f) exist exactly for b2 <= 24 (b2 in [3, 1000])";
  r.computed = "rows disagreeing: " + std::to_string(wrong);
  r.discrepancy = Rational(wrong);
  r.status = wrong == 0 ? ClaimStatus::verified : ClaimStatus::refuted;
  return r;
}

std::vector<Check> registry() {
  std::vector<Check> checks;
  checks.emplace_back(closed_form_matches_canonical);
  checks.emplace_back(closed_form_root_in_window);
  checks.emplace_back(closed_form_discriminant);
  for (int n = 2; n <= 8; ++n) checks.emplace_back([n] { return proposition_factorization_check(n); });
  for (int n = 4; n <= 8; ++n) {
    checks.emplace_back([n] { return partial_sum_divisibility_check(n); });
    checks.emplace_back([n] { return partial_sum_base_check(n); });
  }
  for (int n = 4; n <= 6; ++n) {
    for (int k = 4; k <= n; ++k) {
      checks.emplace_back([n, k] { return partial_sum_check(n, k, PartialSumReading::lowest_powers); });
      checks.emplace_back([n, k] { return partial_sum_check(n, k, PartialSumReading::highest_powers); });
    }
  }
  checks.emplace_back(dim8_lhs_printed_check);
  checks.emplace_back(dim8_lhs_matches_canonical);
  checks.emplace_back(dim8_bound_check);
  checks.emplace_back(dim8_lhs_negative_from_24);
  checks.emplace_back([] { return dim8_rhs_check(ModuleKind::L3, "dim8-rhs-c-coefficient", "c"); });
  checks.emplace_back([] { return dim8_rhs_check(ModuleKind::L2, "dim8-rhs-d-coefficient", "d"); });
  checks.emplace_back([] { return dim8_rhs_check(ModuleKind::L1, "dim8-rhs-e-coefficient", "e"); });
  checks.emplace_back(dim8_rhs_positive);
  checks.emplace_back(remark_b7_threshold);
  checks.emplace_back(remark_f_matches_printed_lhs);
  checks.emplace_back(dim10_bound);
  checks.emplace_back(dim10_negativity_threshold);
  checks.emplace_back(dim10_lhs_vs_canonical);
  checks.emplace_back([] { return table_total_check(ModuleKind::L2, "table-l2-total", 2); });
  checks.emplace_back([] { return table_total_check(ModuleKind::L3, "table-l3-total", 3); });
  for (ModuleKind kind : {ModuleKind::L2, ModuleKind::L3}) {
    for (int degree : {4, 6, 8}) checks.emplace_back([kind, degree] { return table_row_check(kind, degree); });
    checks.emplace_back([kind] { return table_symmetry(kind); });
  }
  checks.emplace_back(table_l3_b8_h_form);
  checks.emplace_back(table_l3_b8_substitution);
  checks.emplace_back(table_l2_b8_h_form);
  checks.emplace_back(feasibility_bridge);
  checks.emplace_back(feasibility_dim8_scan);
  return checks;
}

}  // namespace

std::vector<ClaimReport> run_all_claims(int threads) {
  const std::vector<Check> checks = registry();
  std::vector<ClaimReport> reports(checks.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
  const long count = static_cast<long>(checks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (long i = 0; i < count; ++i) reports[static_cast<std::size_t>(i)] = checks[static_cast<std::size_t>(i)]();
  std::sort(reports.begin(), reports.end(), [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; });
  return reports;
}

}  // namespace betti
