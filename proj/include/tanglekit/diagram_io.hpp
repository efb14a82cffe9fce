#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tanglekit/diagram.hpp"

namespace tanglekit {

/// Line-based diagram format (UTF-8, bit-exact):
///   V <id> <h1> <h2> <h3>        vertex, half-edges counterclockwise
///   X <id> <h1> <h2> <h3> <h4>   crossing, ccw from incoming understrand
///   E <id> <h1>                  endpoint
///   L <count>                    crossing-free circle components
///   P <hA> <hB>                  half-edge pairing
///   M <mark> <endpoint-id>       mark in {NW, NE, SW, SE}
///   # comment
/// Ids are nonnegative integers; files are order-insensitive except that
/// P lines must follow all node lines.
std::string serialize_diagram(const Diagram& d);
void write_diagram(const std::string& path, const Diagram& d);

struct DiagramParseError : std::runtime_error {
  DiagramParseError(int line, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg),
        line(line) {}
  int line;
};

Diagram parse_diagram(const std::string& text);
Diagram read_diagram(const std::string& path);

}  // namespace tanglekit
