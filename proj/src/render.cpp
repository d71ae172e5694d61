#include "crossgen/render.hpp"

#include <sstream>

namespace crossgen {

std::string render_text(const Grid& g, bool solved) {
  std::string out;
  out.reserve(static_cast<std::size_t>(g.rows()) * (g.cols() + 1));
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      const char ch = g.at(r, c);
      if (ch == 0) {
        out.push_back('#');
      } else {
        out.push_back(solved ? ch : '.');
      }
    }
    out.push_back('\n');
  }
  return out;
}

std::string render_svg(const Grid& g, bool solved) {
  const int cell = 32;
  const int width = g.cols() * cell;
  const int height = g.rows() * cell;
  const std::vector<CellNumber> numbers = compute_numbering(g);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"black\"/>\n";
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      const char ch = g.at(r, c);
      if (ch == 0) continue;
      const int x = c * cell;
      const int y = r * cell;
      svg << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
          << cell << "\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
      if (solved) {
        svg << "  <text x=\"" << x + cell / 2 << "\" y=\"" << y + cell - 8
            << "\" font-family=\"sans-serif\" font-size=\"18\" text-anchor=\"middle\">" << ch
            << "</text>\n";
      }
    }
  }
  for (const CellNumber& n : numbers) {
    svg << "  <text x=\"" << n.col * cell + 3 << "\" y=\"" << n.row * cell + 11
        << "\" font-family=\"sans-serif\" font-size=\"9\">" << n.number << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_clue_sheet(const CluedPuzzle& puzzle) {
  std::ostringstream out;
  out << render_text(puzzle.grid, false) << "\n";
  out << "ACROSS\n";
  for (const Clue& clue : puzzle.clues) {
    if (clue.direction != Orientation::Across) continue;
    out << "  " << clue.number << ". " << clue.text << " (" << clue.word.size() << ")\n";
  }
  out << "\nDOWN\n";
  for (const Clue& clue : puzzle.clues) {
    if (clue.direction != Orientation::Down) continue;
    out << "  " << clue.number << ". " << clue.text << " (" << clue.word.size() << ")\n";
  }
  return out.str();
}

}  // namespace crossgen
