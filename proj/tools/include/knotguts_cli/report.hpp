#pragma once

#include "knotguts/bounds.hpp"
#include "knotguts/error.hpp"
#include "knotguts/jones.hpp"
#include "knotguts/montesinos.hpp"
#include "knotguts/polyhedra.hpp"
#include "knotguts_cli/input.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace knotguts::cli {

using json = nlohmann::json;

// Doubles are rounded to 12 significant digits so output is byte-stable.
double round12(double v);
json big_json(const BigInt& v);
json rational_json(const Rational& v);

json error_json(const Error& e);

json diagram_json(const LinkDiagram& d);
// All-A block of d; the B block of d is the A block of its mirror.
json state_block_json(const LinkDiagram& d);
json guts_json(const GutsInterval& g);
json jones_json(const JonesReport& r);
json bounds_json(const VolumeBounds& b);
json normal_form_json(const MontesinosNormalForm& n);
json montesinos_report_json(const MontesinosReport& r);
json taxonomy_json(const LoopTaxonomy& t);

std::optional<MontesinosHint> hint_a(const LoadedInput& in);
std::optional<MontesinosHint> hint_b(const LoadedInput& in);

// Guts intervals for both sides, or the reason they are unavailable.
json guts_pair_json(const LoadedInput& in);

// Every volume method that applies to the input kind.
json volume_json(const LoadedInput& in, const BracketOptions& opts);

json fiber_pair_json(const LinkDiagram& d);

// Full report, including cross-field consistency checks.
json analysis_json(const LoadedInput& in, const BracketOptions& opts);

// Indented "key: value" rendering for --text.
std::string to_text(const json& j);

}  // namespace knotguts::cli
