#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "mbqc/pattern.hpp"

namespace mbqc {

/// Pattern file grammar (one directive per line, '#' starts a comment):
///
///   param <name> <angle-expr>        optional, binds a default value
///   node <id> <input|middle|output>  ids must be 0..n-1
///   edge <id> <id>
///   basis <id> <theta-expr> <phi-expr>
///   order <id> <id> ...              optional
///
/// Angle expressions may use numbers, pi, + - * / and declared parameter
/// names. `overrides` replaces parameter defaults (e.g. epsilon from the
/// command line). Parse errors cite the line number.
MeasurementPattern parse_pattern(std::istream& in,
                                 const std::map<std::string, double>& overrides = {});

MeasurementPattern load_pattern_file(const std::string& path,
                                     const std::map<std::string, double>& overrides = {});

/// Writes the resolved pattern (parameters substituted, angles as full
/// precision decimals). parse(write(p)) reproduces p exactly.
std::string pattern_to_text(const MeasurementPattern& pattern);

}  // namespace mbqc
