#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polarcsm/mpoly.hpp"

namespace polarcsm {

/// Contents of an ideal or arrangement file: a `vars: x0 x1 ... xn` header
/// followed by one polynomial per line. Blank lines and lines starting with
/// '#' are skipped.
struct PolyFile {
  int n_vars = 0;
  std::vector<std::string> polys;
};

/// Throws ParseError (position = line number) on a malformed file.
PolyFile parse_poly_file(std::string_view content);
PolyFile read_poly_file(const std::string& path);

std::vector<MPoly> parse_generators(const PolyFile& file, const RingPtr& ring);

}  // namespace polarcsm
