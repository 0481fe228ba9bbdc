#pragma once

#include "polyproj/polytope.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace polyproj {

/// Parse error with a 1-based line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

using Model = std::variant<HPolytope, VPolytope>;

/// PDP/1 text model: header "PDP <H|V> <rows> <cols>", one matrix row per
/// line, and for H a final "b:" line followed by the right-hand side.
Model parse_model(std::istream& in);
Model parse_model_file(const std::string& path);

std::string emit_model(const HPolytope& h);
std::string emit_model(const VPolytope& v);

void write_model_file(const std::string& path, const Model& model);

} // namespace polyproj
