#pragma once

#include <string>

#include "crossgen/clue.hpp"
#include "crossgen/grid.hpp"

namespace crossgen {

// '#' for black squares; letters when solved, '.' when unsolved.
std::string render_text(const Grid& g, bool solved = true);

// Numbered SVG; letters only when solved.
std::string render_svg(const Grid& g, bool solved = false);

// Unsolved grid plus ACROSS/DOWN clue lists.
std::string render_clue_sheet(const CluedPuzzle& puzzle);

}  // namespace crossgen
