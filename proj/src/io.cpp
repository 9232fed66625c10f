#include "polarcsm/io.hpp"

#include <fstream>
#include <sstream>

#include "polarcsm/parse.hpp"

namespace polarcsm {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

PolyFile parse_poly_file(std::string_view content) {
  PolyFile file;
  bool have_header = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(content)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!have_header) {
      if (line.rfind("vars:", 0) != 0) throw ParseError(line_no, "expected header 'vars: x0 x1 ...'");
      std::istringstream names(line.substr(5));
      std::string name;
      while (names >> name) {
        if (name != "x" + std::to_string(file.n_vars)) {
          throw ParseError(line_no, "variables must be listed as x0 x1 ... in order, got '" + name + "'");
        }
        ++file.n_vars;
      }
      if (file.n_vars < 1 || file.n_vars > kMaxVars) {
        throw ParseError(line_no, "between 1 and " + std::to_string(kMaxVars) + " variables are supported");
      }
      have_header = true;
      continue;
    }
    file.polys.push_back(line);
  }
  if (!have_header) throw ParseError(0, "missing 'vars:' header");
  if (file.polys.empty()) throw ParseError(line_no, "no polynomials after the header");
  return file;
}

PolyFile read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poly_file(buf.str());
}

std::vector<MPoly> parse_generators(const PolyFile& file, const RingPtr& ring) {
  std::vector<MPoly> out;
  for (const auto& text : file.polys) out.push_back(parse_poly(text, ring));
  return out;
}

}  // namespace polarcsm
