#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "psts/incidence.hpp"

namespace psts {

// Raised on malformed input; message carries line/column context.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"name": str, "points": [str], "lines": [[int,int,int]]}. Lines ascending;
// product labels keep their "base|weight" form.
std::string to_json(const IncidenceStructure& s);
IncidenceStructure from_json(const std::string& text);

// One block per line, whitespace-separated labels, '#' comments. Labels are
// registered in first-appearance order.
std::string to_text(const IncidenceStructure& s);
IncidenceStructure from_text(const std::string& text, const std::string& name = "input");

enum class DotStyle { Cliques, LineNodes };
std::string to_dot(const IncidenceStructure& s, DotStyle style);

std::string read_stream(std::istream& in);
// Reads "-" as stdin; sniffs JSON vs text by the first non-space byte.
IncidenceStructure load_structure(const std::string& path);
void save_text(const std::string& path, const std::string& content);  // "-" = stdout

}  // namespace psts
