#include "betti/render.hpp"

#include "betti/error.hpp"

#include <cstdio>
#include <sstream>

namespace betti {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string approx_decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

std::string coefficient_list(const Polynomial& p, char sep) {
  std::string out;
  for (const auto& c : p.coeffs()) out += (out.empty() ? "" : std::string(1, sep)) + to_fraction_string(c);
  return out.empty() ? "0/1" : out;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  throw Error(Errc::InvalidArgument, "unknown format '" + std::string(text) + "'");
}

json to_json(const Polynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_fraction_string(c));
  return coeffs;
}

json to_json(const RootWindow& w) {
  return json{{"lo", to_fraction_string(w.lo)}, {"hi", to_fraction_string(w.hi)}, {"exact", w.exact}};
}

json to_json(const ClaimReport& r) {
  json d = nullptr;
  if (r.discrepancy) {
    if (const auto* p = std::get_if<Polynomial>(&*r.discrepancy))
      d = json{{"kind", "polynomial"}, {"coefficients", to_json(*p)}, {"text", p->to_string()}};
    else
      d = json{{"kind", "rational"}, {"value", to_fraction_string(std::get<Rational>(*r.discrepancy))}};
  }
  return json{{"id", r.id},           {"status", std::string(status_name(r.status))},
              {"expected", r.expected}, {"computed", r.computed},
              {"discrepancy", d},     {"note", r.note}};
}

json to_json(const ScanRow& row) {
  json w = nullptr;
  if (row.witness)
    w = json{{"c", to_string(row.witness->c)},
             {"d", to_string(row.witness->d)},
             {"e", to_string(row.witness->e)},
             {"f", to_string(row.witness->f)}};
  return json{{"b2", std::to_string(row.b2)}, {"feasible", row.feasible}, {"witness", w}};
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string render_bound(const BoundView& view, OutputFormat format) {
  const BoundResult& r = view.result;
  switch (format) {
    case OutputFormat::json: {
      json j{{"command", "bound"},
             {"n", std::to_string(r.n)},
             {"convention", std::string(convention_name(r.convention))},
             {"polynomial", to_json(r.polynomial)},
             {"polynomial_text", r.polynomial.to_string()},
             {"max_root", to_json(r.max_root)},
             {"integer_bound", to_string(r.integer_bound)},
             {"closed_form_bound", to_string(view.closed_form)}};
      if (view.approx)
        j["max_root_approx_display_only"] =
            json{{"lo", approx_decimal(r.max_root.lo)}, {"hi", approx_decimal(r.max_root.hi)}};
      return dump(j);
    }
    case OutputFormat::csv: {
      std::string out = "n,convention,integer_bound,closed_form_bound,root_lo,root_hi,root_exact,coefficients";
      if (view.approx) out += ",root_approx_display_only";
      out += "\n" + std::to_string(r.n) + "," + std::string(convention_name(r.convention)) + "," +
             to_string(r.integer_bound) + "," + to_string(view.closed_form) + "," +
             to_fraction_string(r.max_root.lo) + "," + to_fraction_string(r.max_root.hi) + "," +
             (r.max_root.exact ? "true" : "false") + "," + coefficient_list(r.polynomial, ';');
      if (view.approx) out += "," + approx_decimal(r.max_root.lo);
      return out + "\n";
    }
    case OutputFormat::text: break;
  }
  std::ostringstream os;
  os << "n = " << r.n << ", convention = " << convention_name(r.convention) << "\n"
     << "P(b2) = " << r.polynomial.to_string() << "\n"
     << "coefficients (ascending): " << coefficient_list(r.polynomial, ' ') << "\n"
     << "largest root in [" << to_fraction_string(r.max_root.lo) << ", " << to_fraction_string(r.max_root.hi) << "]"
     << (r.max_root.exact ? " (exact)" : "") << "\n";
  if (view.approx) os << "largest root ~ " << approx_decimal(r.max_root.lo) << " (display only)\n";
  os << "integer bound: " << to_string(r.integer_bound) << "\n"
     << "closed-form bound: " << to_string(view.closed_form) << "\n";
  return os.str();
}

std::string render_residual(const BettiSequence& b, const Integer& residual, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      json betti = json::array();
      for (const auto& v : b.values()) betti.push_back(to_string(v));
      return dump(json{{"command", "salamon"}, {"n", std::to_string(b.n())}, {"betti", betti},
                       {"residual", to_string(residual)}});
    }
    case OutputFormat::csv:
      return "n,residual\n" + std::to_string(b.n()) + "," + to_string(residual) + "\n";
    case OutputFormat::text: break;
  }
  return "residual: " + to_string(residual) + (residual == 0 ? " (relation holds)" : "") + "\n";
}

std::string render_claims(const std::vector<ClaimReport>& reports, OutputFormat format) {
  long verified = 0, refuted = 0, info = 0;
  for (const auto& r : reports) {
    if (r.status == ClaimStatus::verified) ++verified;
    else if (r.status == ClaimStatus::refuted) ++refuted;
    else ++info;
  }
  switch (format) {
    case OutputFormat::json: {
      json list = json::array();
      for (const auto& r : reports) list.push_back(to_json(r));
      return dump(json{{"command", "verify"},
                       {"claims", list},
                       {"summary", json{{"verified", verified}, {"refuted", refuted}, {"info", info}}}});
    }
    case OutputFormat::csv: {
      std::string out = "id,status,expected,computed,discrepancy,note\n";
      for (const auto& r : reports) {
        out += csv_field(r.id) + "," + std::string(status_name(r.status)) + "," + csv_field(r.expected) + "," +
               csv_field(r.computed) + "," + csv_field(r.discrepancy ? to_string(*r.discrepancy) : "") + "," +
               csv_field(r.note) + "\n";
      }
      return out;
    }
    case OutputFormat::text: break;
  }
  std::ostringstream os;
  for (const auto& r : reports) {
    os << "[" << status_name(r.status) << "] " << r.id << "\n"
       << "    expected:    " << r.expected << "\n"
       << "    computed:    " << r.computed << "\n";
    if (r.discrepancy) os << "    discrepancy: " << to_string(*r.discrepancy) << "\n";
    if (!r.note.empty()) os << "    note:        " << r.note << "\n";
  }
  os << verified << " verified, " << refuted << " refuted, " << info << " info\n";
  return os.str();
}

std::string render_scan(const std::vector<ScanRow>& rows, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      json list = json::array();
      for (const auto& r : rows) list.push_back(to_json(r));
      return dump(json{{"command", "scan"}, {"rows", list}});
    }
    case OutputFormat::csv: {
      std::string out = "b2,feasible,c,d,e,f\n";
      for (const auto& r : rows) {
        out += std::to_string(r.b2) + "," + (r.feasible ? "true" : "false");
        if (r.witness)
          out += "," + to_string(r.witness->c) + "," + to_string(r.witness->d) + "," + to_string(r.witness->e) + "," +
                 to_string(r.witness->f);
        else
          out += ",,,,";
        out += "\n";
      }
      return out;
    }
    case OutputFormat::text: break;
  }
  std::ostringstream os;
  for (const auto& r : rows) {
    os << "b2 = " << r.b2 << ": ";
    if (r.witness)
      os << "feasible, (c, d, e, f) = (" << r.witness->c << ", " << r.witness->d << ", " << r.witness->e << ", "
         << r.witness->f << ")\n";
    else
      os << "infeasible\n";
  }
  return os.str();
}

}  // namespace betti
