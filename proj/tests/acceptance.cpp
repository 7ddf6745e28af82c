// One line per acceptance criterion, with its wall time against the budget.

#include "betti/bound_engine.hpp"
#include "betti/claims.hpp"
#include "betti/cli.hpp"
#include "betti/feasibility.hpp"
#include "betti/rep_dimensions.hpp"
#include "betti/salamon.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace betti;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int number, const char* title, double budget_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs >= budget_s) {
    o.ok = false;
    o.detail = "over time budget";
  }
  if (!o.ok) ++failures;
  std::printf("[%s] AC%-2d %-58s %8.3fs (budget %gs)%s%s\n", o.ok ? "PASS" : "FAIL", number, title, secs, budget_s,
              o.detail.empty() ? "" : "  ", o.detail.c_str());
}

const ClaimReport* find(const std::vector<ClaimReport>& reports, const std::string& id) {
  for (const auto& r : reports)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace

int main() {
  criterion(1, "canonical integer bounds for n = 1..6", 1.0, [](Outcome& o) {
    const long expected[] = {22, 23, 23, 24, 25, 26};
    for (int n = 1; n <= 6; ++n)
      o.require(b2_bound(n, Convention::canonical).integer_bound == expected[n - 1], "n = " + std::to_string(n));
  });

  criterion(2, "closed form agrees for n = 1..6", 1.0, [](Outcome& o) {
    for (int n = 1; n <= 6; ++n) {
      const BoundResult r = b2_bound(n, Convention::canonical);
      o.require(closed_form_bound(n) == r.integer_bound, "n = " + std::to_string(n));
      o.require(closed_form_root_in(n, r.max_root.lo, r.max_root.hi), "root window, n = " + std::to_string(n));
    }
  });

  criterion(3, "Salamon residual on reference sequences", 1.0, [](Outcome& o) {
    o.require(salamon_residual(BettiSequence(1, {1, 0, 22})) == 0, "(1,0,22)");
    o.require(salamon_residual(BettiSequence(1, {1, 4, 6})) == 0, "(1,4,6)");
    o.require(salamon_residual(BettiSequence(2, {1, 0, 23, 0, 276})) == 0, "(1,0,23,0,276)");
    o.require(salamon_residual(BettiSequence(1, {1, 0, 23})) == 1, "(1,0,23)");
  });

  criterion(4, "residual of symmetric model = -P(b2, n), 168 checks", 5.0, [](Outcome& o) {
    int checks = 0;
    for (int n = 1; n <= 6; ++n) {
      const Polynomial p = bound_polynomial(n, Convention::canonical);
      for (int b2 = 3; b2 <= 30; ++b2, ++checks)
        o.require(Rational(salamon_residual(sym_model(n, b2))) == -p(Rational(b2)),
                  "n = " + std::to_string(n) + ", b2 = " + std::to_string(b2));
    }
    o.require(checks == 168, "check count");
  });

  criterion(5, "dimension-eight lhs, bound 24, printed quartic refuted", 1.0, [](Outcome& o) {
    // Independent expansion: monomial counts at five or more points fix a
    // quartic.
    const Polynomial expected = Polynomial({2256, 1538, 301, 10, -1}) * Rational(1, 12);
    for (int b2 = 3; b2 <= 8; ++b2) {
      Integer direct = -2 * Integer(oracle::count_monomials(b2, 4)) + 8 * Integer(oracle::count_monomials(b2, 3)) +
                       44 * Integer(oracle::count_monomials(b2, 2)) + 104 * Integer(b2) + 188;
      o.require(Rational(direct) == expected(Rational(b2)), "oracle at b2 = " + std::to_string(b2));
    }
    const Dim8Pipeline p = dim8_pipeline();
    o.require(p.lhs == expected, "lhs");
    o.require(p.bound == 24, "bound");
    const auto reports = run_all_claims();
    const ClaimReport* printed = find(reports, "dim8-lhs-printed");
    o.require(printed && printed->status == ClaimStatus::refuted, "dim8-lhs-printed not refuted");
    o.require(printed && printed->discrepancy && to_string(*printed->discrepancy) == "84*b2",
              "discrepancy is not 84*b2");
  });

  criterion(6, "dimension-eight coefficients of c, d, e", 1.0, [](Outcome& o) {
    o.require(dim8_rhs_printed(ModuleKind::L3) == dim8_rhs_derived(ModuleKind::L3), "c");
    o.require(dim8_rhs_printed(ModuleKind::L2) == dim8_rhs_derived(ModuleKind::L2), "d");
    o.require(dim8_rhs_printed(ModuleKind::L1) == dim8_rhs_derived(ModuleKind::L1), "e");
    o.require(dim8_rhs_printed(ModuleKind::L3) == Polynomial({-48, -124, -15, 1}) * Rational(1, 3), "c literal");
    o.require(dim8_rhs_printed(ModuleKind::L2) == Polynomial({-46, -9, 1}), "d literal");
    o.require(dim8_rhs_printed(ModuleKind::L1) == Polynomial({-8, 2}), "e literal");
  });

  criterion(7, "feasibility scan and box oracle", 30.0, [](Outcome& o) {
    for (const auto& row : scan(3, 24)) {
      o.require(row.feasible && row.witness, "infeasible at " + std::to_string(row.b2));
      if (row.witness)
        o.require(dim8_equation(row.b2).satisfied_by(*row.witness), "bad witness at " + std::to_string(row.b2));
    }
    for (const auto& row : scan(25, 1000)) o.require(!row.feasible, "feasible at " + std::to_string(row.b2));
    for (int b2 = 3; b2 <= 30; ++b2) {
      const Dim8Equation eq = dim8_equation(b2);
      const auto w = find_witness(eq);
      if (eq.coeff_c > 0 && eq.coeff_d > 0 && eq.coeff_e > 0 && eq.coeff_f > 0) {
        const long box = eq.constant < 0 ? -1 : eq.constant.get_si() / 2;
        const auto brute =
            oracle::box_search({eq.coeff_c, eq.coeff_d, eq.coeff_e, eq.coeff_f}, eq.constant, box);
        o.require(brute.has_value() == w.has_value(), "box oracle at " + std::to_string(b2));
        if (brute && w)
          o.require(*w == Witness{(*brute)[0], (*brute)[1], (*brute)[2], (*brute)[3]},
                    "box witness at " + std::to_string(b2));
      } else {
        o.require(w && eq.satisfied_by(*w), "mixed-sign witness at " + std::to_string(b2));
      }
    }
  });

  criterion(8, "b7 threshold 461 and printed F(25) = -2562", 1.0, [](Outcome& o) {
    const Rational at25 = dim8_lhs()(Rational(25));
    Integer t = 0;
    while (at25 + (t + 1) < 0) ++t;  // largest t with lhs(25) + t < 0
    o.require(t == 461, "threshold");
    o.require(remark_f_printed()(Rational(25)) == -2562, "printed F(25)");
    const ClaimReport r = remark_b7_threshold();
    o.require(r.status == ClaimStatus::refuted, "remark-b7 status");
    o.require(r.discrepancy && std::get<Rational>(*r.discrepancy) == 461 - 1281, "remark-b7 discrepancy");
  });

  criterion(9, "dimension-ten quintic negative on [26, 200], from 5", 1.0, [](Outcome& o) {
    const Polynomial q = dim10_lhs();
    for (int b2 = 26; b2 <= 200; ++b2) o.require(q(Rational(b2)) < 0, "b2 = " + std::to_string(b2));
    int threshold = 0;
    for (int b2 = 200; b2 >= 0 && q(Rational(b2)) < 0; --b2) threshold = b2;
    o.require(threshold == 5, "threshold " + std::to_string(threshold));
    o.require(dim10_bound().status == ClaimStatus::verified, "dim10-bound");
  });

  criterion(10, "diamond totals: L2 exact, L3 off by 2", 1.0, [](Outcome& o) {
    // Summation oracle: add all 81 entries directly.
    for (ModuleKind kind : {ModuleKind::L2, ModuleKind::L3}) {
      Polynomial sum;
      for (int p = 0; p < kDiamondSize; ++p)
        for (int q = 0; q < kDiamondSize; ++q) sum += table_entry(kind, p, q);
      const Polynomial diff = h_substitute(sum) - ext_dim_poly(kind == ModuleKind::L2 ? 2 : 3);
      if (kind == ModuleKind::L2)
        o.require(diff.is_zero(), "L2 total");
      else
        o.require(diff == Polynomial::constant(2), "L3 total discrepancy " + diff.to_string());
    }
  });

  criterion(11, "dimension polynomials against enumeration", 5.0, [](Outcome& o) {
    for (int b2 = 0; b2 <= 6; ++b2)
      for (unsigned m = 0; m <= 5; ++m) {
        if (b2 >= 1)
          o.require(sym_dim_poly(m)(Rational(b2)) == oracle::count_monomials(b2, static_cast<int>(m)), "sym");
        o.require(ext_dim_poly(m)(Rational(b2)) == oracle::count_subsets(b2 + 2, static_cast<int>(m)), "ext");
      }
  });

  criterion(12, "verify output deterministic, exit codes conform", 5.0, [](Outcome& o) {
    auto invoke = [](const std::vector<std::string>& args, std::string* text = nullptr) {
      std::ostringstream out, err;
      const int code = run_cli(args, out, err);
      if (text) *text = out.str();
      return code;
    };
    std::string first, second;
    o.require(invoke({"verify", "--format", "json"}, &first) == kExitOk, "verify exit");
    o.require(invoke({"verify", "--format", "json"}, &second) == kExitOk, "verify exit");
    o.require(first == second && !first.empty(), "outputs differ");
    o.require(invoke({"verify", "--strict"}) == kExitRefuted, "--strict");
    o.require(invoke({"bound", "--n", "0"}) == kExitUsage, "bad n");
    o.require(invoke({"salamon", "--n", "1", "--betti", "1,0"}) == kExitUsage, "short betti");
    o.require(invoke({"scan", "--b2-min", "5", "--b2-max", "4"}) == kExitUsage, "bad range");
    o.require(invoke({"frobnicate"}) == kExitUsage, "unknown subcommand");
  });

  std::printf("%s: %d failure(s)\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
