#pragma once

#include "betti/bound_engine.hpp"
#include "betti/claims.hpp"
#include "betti/feasibility.hpp"
#include "betti/salamon.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace betti {

enum class OutputFormat { text, json, csv };

/// Throws Errc::InvalidArgument for anything but "text", "json", "csv".
OutputFormat parse_format(std::string_view text);

// Exact values are serialized as strings: integers in decimal, rationals as
// "p/q". No floating point appears in any of these documents.
nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const RootWindow& w);
nlohmann::json to_json(const ClaimReport& r);
nlohmann::json to_json(const ScanRow& row);

struct BoundView {
  BoundResult result;
  Integer closed_form;
  /// Adds a decimal rendering of the window, labeled display-only.
  bool approx = false;
};

std::string render_bound(const BoundView& view, OutputFormat format);
std::string render_residual(const BettiSequence& b, const Integer& residual, OutputFormat format);
std::string render_claims(const std::vector<ClaimReport>& reports, OutputFormat format);
std::string render_scan(const std::vector<ScanRow>& rows, OutputFormat format);

/// RFC 4180 quoting when needed.
std::string csv_field(std::string_view s);

}  // namespace betti
