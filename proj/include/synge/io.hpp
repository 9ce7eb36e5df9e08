#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "synge/riemann.hpp"
#include "synge/verify.hpp"

namespace synge::io {

using Json = nlohmann::ordered_json;

/// Serializes with every floating value printed to 17 significant digits.
/// Non-finite values become null.
std::string dump(const Json& j, int indent = 2);

/// Parses a JSON document; throws InputError on malformed text.
Json parse(const std::string& text);
Json read(std::istream& in);

/// Number formatted for CSV: 17 significant digits, "inf"/"nan" when not finite.
std::string csv_number(double x);

Json state_json(const FluidState& s);
Json solution_json(const RiemannSolution& sol);
Json report_json(const CheckReport& report);

/// Primitive {"rho", "v", "p"}; throws InputError if a field is missing or not a number.
Primitive parse_primitive(const Json& j, const char* where);

/// Problem document {"gas", "left": {...}, "right": {...}}. Also accepts a
/// solution document, whose echoed input is used.
RiemannInput parse_problem(const Json& j, const GammaWindow& window);

/// Window from SYNGE_GAMMA_WINDOW="lo,hi", or the default window when unset.
GammaWindow window_from_env();

/// Parses "lo,hi"; throws InputError when malformed.
GammaWindow parse_window(const std::string& text);

void write_curve_csv(std::ostream& out, const CurveTable& table);

}  // namespace synge::io
