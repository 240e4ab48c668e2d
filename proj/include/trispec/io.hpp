#pragma once

#include "trispec/asymptotics.hpp"
#include "trispec/riemann.hpp"
#include "trispec/taylor.hpp"
#include "trispec/trace.hpp"

#include <json.hpp>

namespace trispec {

using Json = nlohmann::ordered_json;

/// {kind, alpha | t | tables, M, parity}. Kinds: power, mathieu (alpha 0),
/// jaynes-cummings (alpha 1/2), whittaker-hill, custom. Custom families need
/// tables {q, b, c}; entries may be numbers, "p/q" strings or [re, im] pairs,
/// and an all-rational table enables the exact backend.
OperatorFamily family_from_json(const Json& spec);
/// Throws UnsupportedFamily for custom families built from generators.
Json family_to_json(const OperatorFamily& family);

/// Accepts a number, a "p/q" or decimal string.
Rational rational_from_json(const Json& value);
/// Accepts a number, "re+imi" or [re, im].
Complex complex_from_json(const Json& value);

Json to_json(Complex value);
/// "p/q" for rationals, a 36-digit decimal string for float128.
Json to_json(const Coefficient& value);

Json to_json(const TaylorSeries& series);
Json to_json(const TraceReport& report);
Json to_json(const CharPolyAtZ& poly);
Json to_json(const BranchPointSet& set);
Json to_json(const MonodromyResult& result);
Json to_json(const IrreducibilityReport& report);
Json to_json(const ResidualFit& fit);
Json to_json(const PkFit& fit);
Json to_json(const RadiusProbe& probe);

} // namespace trispec
