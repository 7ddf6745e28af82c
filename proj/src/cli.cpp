#include "betti/cli.hpp"

#include "betti/bound_engine.hpp"
#include "betti/claims.hpp"
#include "betti/error.hpp"
#include "betti/feasibility.hpp"
#include "betti/render.hpp"
#include "betti/salamon.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>

namespace betti {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (!s.empty() && s.back() == ',') parts.emplace_back();
  return parts;
}

// Usage problems detected after CLI11 has accepted the flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_threads(const std::optional<std::string>& env) {
  if (!env || env->empty()) return 0;
  Integer v;
  try {
    v = parse_integer(*env);
  } catch (const Error&) {
    throw UsageError("BETTI_GATE_THREADS must be a positive integer, got '" + *env + "'");
  }
  if (v < 1 || v > 4096) throw UsageError("BETTI_GATE_THREADS must be a positive integer, got '" + *env + "'");
  return static_cast<int>(v.get_si());
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::optional<std::string>& threads_env) {
  CLI::App app{"Exact verification of second-Betti-number bounds for hyperkahler manifolds", "betti-gate"};
  app.require_subcommand(1);

  std::string format_text = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  int n = 0;
  std::string convention_text = "canonical";
  unsigned width_bits = 32;
  bool approx = false;
  CLI::App* bound = app.add_subcommand("bound", "Bound polynomial, largest root and integer bound for b2");
  bound->add_option("--n", n, "Half the complex dimension")->required();
  bound->add_option("--convention", convention_text, "canonical or paper_literal")
      ->check(CLI::IsMember({"canonical", "paper_literal", "paper-literal"}));
  bound->add_option("--width-bits", width_bits, "Root window width 2^-bits")->check(CLI::Range(1u, 4096u));
  bound->add_flag("--approx", approx, "Also print a decimal (display-only) rendering of the root");
  add_format(bound);

  std::string betti_text;
  CLI::App* salamon = app.add_subcommand("salamon", "Salamon residual of a Betti sequence b0..b2n");
  salamon->add_option("--n", n, "Half the complex dimension")->required();
  salamon->add_option("--betti", betti_text, "Comma-separated b0,...,b2n")->required();
  add_format(salamon);

  std::string claims_text;
  bool strict = false;
  CLI::App* verify = app.add_subcommand("verify", "Check every printed identity exactly");
  verify->add_option("--claims", claims_text, "Comma-separated claim ids (default: all)");
  verify->add_flag("--strict", strict, "Exit 2 if any selected claim is refuted");
  add_format(verify);

  long b2_min = 0;
  long b2_max = 0;
  CLI::App* scan_cmd = app.add_subcommand("scan", "Dimension-eight feasibility of (c, d, e, f) per b2");
  scan_cmd->add_option("--b2-min", b2_min, "Smallest b2 (>= 3)")->required();
  scan_cmd->add_option("--b2-max", b2_max, "Largest b2 (<= 10000)")->required();
  add_format(scan_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const int threads = parse_threads(threads_env);
    const OutputFormat format = parse_format(format_text);

    if (*bound) {
      if (n < 1 || n > kMaxBoundN) throw UsageError("--n must be in [1, 20]");
      BoundView view;
      view.result = b2_bound(n, parse_convention(convention_text), power_of_two_inverse(width_bits));
      view.closed_form = closed_form_bound(n);
      view.approx = approx;
      out << render_bound(view, format);
      return kExitOk;
    }

    if (*salamon) {
      if (n < 1) throw UsageError("--n must be >= 1");
      std::vector<Integer> values;
      for (const auto& part : split_commas(betti_text)) {
        try {
          values.push_back(parse_integer(part));
        } catch (const Error&) {
          throw UsageError("malformed Betti list '" + betti_text + "'");
        }
      }
      if (values.size() != static_cast<std::size_t>(2 * n + 1))
        throw UsageError("--betti needs " + std::to_string(2 * n + 1) + " entries, got " + std::to_string(values.size()));
      if (std::any_of(values.begin(), values.end(), [](const Integer& v) { return v < 0; }))
        throw UsageError("Betti numbers must be nonnegative");
      BettiSequence seq(n, std::move(values));
      out << render_residual(seq, salamon_residual(seq), format);
      return kExitOk;
    }

    if (*verify) {
      std::vector<ClaimReport> reports = run_all_claims(threads);
      if (!claims_text.empty()) {
        std::set<std::string> wanted;
        for (const auto& id : split_commas(claims_text)) wanted.insert(id);
        for (const auto& id : wanted) {
          bool known = std::any_of(reports.begin(), reports.end(), [&](const ClaimReport& r) { return r.id == id; });
          if (!known) throw UsageError("unknown claim id '" + id + "'");
        }
        std::erase_if(reports, [&](const ClaimReport& r) { return !wanted.count(r.id); });
      }
      out << render_claims(reports, format);
      bool any_refuted = std::any_of(reports.begin(), reports.end(),
                                     [](const ClaimReport& r) { return r.status == ClaimStatus::refuted; });
      return strict && any_refuted ? kExitRefuted : kExitOk;
    }

    if (*scan_cmd) {
      if (b2_min < 3 || b2_min > b2_max || b2_max > kScanMax)
        throw UsageError("scan range must satisfy 3 <= b2-min <= b2-max <= 10000");
      out << render_scan(scan(b2_min, b2_max, threads), format);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace betti
