#include "psts/io.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace psts {

namespace {

using nlohmann::json;

// nlohmann reports byte offsets; recover line/column for the diagnostic.
std::string at_offset(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

[[noreturn]] void reject(const IncidenceStructure& s) {
  auto violations = validate(s);
  std::string msg = "input is not a partial Steiner triple system:";
  for (const auto& v : violations) msg += "\n  " + v;
  throw ParseError(msg);
}

}  // namespace

std::string to_json(const IncidenceStructure& s) {
  json out;
  out["name"] = s.name();
  out["points"] = s.labels();
  auto& lines = out["lines"] = json::array();
  for (const Line& l : s.lines()) lines.push_back({l[0], l[1], l[2]});
  return out.dump(2) + "\n";
}

IncidenceStructure from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error (") + at_offset(text, e.byte) +
                     "): " + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc.contains("points") ||
      !doc.contains("lines"))
    throw ParseError("expected an object with \"name\", \"points\", \"lines\"");
  std::string name;
  std::vector<std::string> labels;
  std::vector<Line> lines;
  try {
    name = doc["name"].get<std::string>();
    labels = doc["points"].get<std::vector<std::string>>();
    for (const auto& jl : doc["lines"]) {
      auto triple = jl.get<std::vector<int>>();
      if (triple.size() != 3) throw ParseError("each line must have exactly 3 point indices");
      lines.push_back({triple[0], triple[1], triple[2]});
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON type error: ") + e.what());
  }
  bool product = !labels.empty();
  for (const auto& l : labels)
    if (!parse_product_label(l)) product = false;
  IncidenceStructure s(std::move(name), std::move(labels), std::move(lines),
                       product ? LabelKind::Product : LabelKind::Plain);
  if (!is_valid(s)) reject(s);
  return s;
}

std::string to_text(const IncidenceStructure& s) {
  std::ostringstream out;
  out << "# " << s.name() << "\n";
  for (const Line& l : s.lines())
    out << s.label(l[0]) << " " << s.label(l[1]) << " " << s.label(l[2]) << "\n";
  return out.str();
}

IncidenceStructure from_text(const std::string& text, const std::string& name) {
  std::vector<std::string> labels;
  std::map<std::string, int> index;
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string row;
  int lineno = 0;
  while (std::getline(in, row)) {
    ++lineno;
    auto hash = row.find('#');
    if (hash != std::string::npos) row.resize(hash);
    std::istringstream fields(row);
    std::vector<std::string> toks;
    std::string tok;
    while (fields >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != 3)
      throw ParseError("line " + std::to_string(lineno) + ": expected 3 labels, got " +
                       std::to_string(toks.size()));
    Line l{};
    for (int k = 0; k < 3; ++k) {
      auto [it, fresh] = index.emplace(toks[k], static_cast<int>(labels.size()));
      if (fresh) labels.push_back(toks[k]);
      l[k] = it->second;
    }
    lines.push_back(l);
  }
  bool product = !labels.empty();
  for (const auto& l : labels)
    if (!parse_product_label(l)) product = false;
  IncidenceStructure s(name, std::move(labels), std::move(lines),
                       product ? LabelKind::Product : LabelKind::Plain);
  if (!is_valid(s)) reject(s);
  return s;
}

std::string to_dot(const IncidenceStructure& s, DotStyle style) {
  std::ostringstream out;
  out << "graph \"" << s.name() << "\" {\n";
  for (Point p = 0; p < s.v(); ++p)
    out << "  p" << p << " [label=\"" << s.label(p) << "\"];\n";
  if (style == DotStyle::Cliques) {
    for (const Line& l : s.lines())
      out << "  p" << l[0] << " -- p" << l[1] << ";\n"
          << "  p" << l[1] << " -- p" << l[2] << ";\n"
          << "  p" << l[0] << " -- p" << l[2] << ";\n";
  } else {
    for (int li = 0; li < s.b(); ++li) {
      out << "  l" << li << " [shape=point];\n";
      for (Point p : s.line(li)) out << "  l" << li << " -- p" << p << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

IncidenceStructure load_structure(const std::string& path) {
  std::string text;
  if (path == "-") {
    text = read_stream(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    text = read_stream(in);
  }
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return from_json(text);
  return from_text(text, path == "-" ? "stdin" : path);
}

void save_text(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << content;
}

}  // namespace psts
