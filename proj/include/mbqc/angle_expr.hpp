#pragma once

#include <map>
#include <string>

namespace mbqc {

/// Parses angle expressions in radians: numbers, `pi`, named parameters,
/// parentheses and + - * / with the usual precedence (e.g. "pi/2-epsilon").
/// Throws std::runtime_error with a readable message on bad input.
double parse_angle(const std::string& text,
                   const std::map<std::string, double>& params = {});

}  // namespace mbqc
