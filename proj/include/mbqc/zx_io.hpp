#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "mbqc/zx.hpp"

namespace mbqc {

/// Diagram file grammar (one directive per line, '#' starts a comment):
///
///   inputs <count>
///   outputs <count>
///   param <name> <angle-expr>
///   spider <id> <g|r> <phase-expr>     ids must be 0..n-1
///   wire <end> <end> [h]               end := s<id> | in<k> | out<k>
///   scalar <re> <im>                   optional global scalar
///
/// Parse errors cite the line number.
mbqc::zx::ZxDiagram parse_zx(std::istream& in,
                             const std::map<std::string, double>& overrides = {});

mbqc::zx::ZxDiagram load_zx_file(const std::string& path,
                                 const std::map<std::string, double>& overrides = {});

std::string zx_to_text(const mbqc::zx::ZxDiagram& d);

}  // namespace mbqc
