#pragma once

// Rank-2 alcove pictures: every alcove wA0 with ℓ(w) <= max_len in the
// Kottwitz component of b, colored by dim X_w(b), shrunken alcoves hatched.

#include <string>

#include "alcove/workspace.hpp"

namespace alcove {

struct SvgOptions {
  std::size_t max_len = 8;
  double scale = 60.0;
  bool labels = true;
};

std::string render_alcoves_svg(const Workspace& ws, const SigmaClass& b, const SvgOptions& options = {});

}  // namespace alcove
