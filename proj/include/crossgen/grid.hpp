#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossgen {

enum class Orientation : std::uint8_t { Across, Down };

const char* to_string(Orientation o);
std::optional<Orientation> orientation_from_string(const std::string& s);

struct Anchor {
  int row = 0;
  int col = 0;
  Orientation orientation = Orientation::Across;

  friend bool operator==(const Anchor&, const Anchor&) = default;
};

// Canonical order: row-major, across before down at the same cell.
bool operator<(const Anchor& a, const Anchor& b);

struct Placement {
  std::string word;
  int row = 0;
  int col = 0;
  Orientation orientation = Orientation::Across;
  int seq = 0;

  int length() const { return static_cast<int>(word.size()); }
  Anchor anchor() const { return Anchor{row, col, orientation}; }

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct GridError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void validate_word(const std::string& word);  // A-Z, length >= 2; throws GridError

// Rectangular criss-cross grid. A cell not covered by any placement is a
// black square. Instances are immutable: every operation returns a new grid.
//
// Placement legality:
//   - crossings only at equal letters, and only between perpendicular words
//   - a fresh letter cell may not touch a perpendicular neighbor
//   - the cells before the first and after the last letter are black/boundary
//   - a word placed into a non-empty grid must cross at least one word
class Grid {
 public:
  Grid() = default;  // 0x0 shell, used only as a placeholder
  Grid(int rows, int cols);

  // Rasterizes placements directly (JSON load, remove); throws GridError on
  // letter conflicts, out-of-bounds words, duplicate words or broken runs.
  static Grid from_placements(int rows, int cols, std::vector<Placement> placements);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Placement>& placements() const { return placements_; }
  bool empty() const { return placements_.empty(); }

  char at(int row, int col) const;  // '\0' for black cells
  bool has_word(const std::string& word) const;
  int letter_cell_count() const { return static_cast<int>(letter_cells_.size()); }
  const std::vector<int>& letter_cells() const { return letter_cells_; }
  double utilization() const;
  // Connectivity of the placement intersection graph. May be false after a
  // victim removal; the engine treats that as a transient state.
  bool connected() const { return connected_; }

  bool fits(const std::string& word, const Anchor& a, int* crossings = nullptr) const;
  // Every anchor where the word can be written. Empty grid: every in-bounds
  // anchor. Non-empty grid: anchors crossing at least one existing word.
  std::vector<Anchor> legal_positions(const std::string& word) const;
  bool any_legal_position(const std::string& word) const;
  // Indices into placements() of the words a placement at `a` would cross.
  std::vector<int> crossed_placements(const std::string& word, const Anchor& a) const;

  Grid write(const std::string& word, const Anchor& a) const;
  Grid remove(const std::string& word) const;
  // True when removing the word leaves no remnant run: a word crossed at two
  // adjacent cells leaves an accidental two-letter word behind once its own
  // placement is gone.
  bool remove_is_clean(const std::string& word) const;
  Grid resized(int new_rows, int new_cols) const;  // grow only; shrink throws
  // Moves one all-black boundary line from the sparse side to the opposite
  // side, shifting placements by one. No eligible line: returns *this.
  Grid repacked() const;

  // Component id per placement (intersection graph).
  std::vector<int> component_ids() const;

  // Empty when all invariants hold; each entry describes one violation.
  std::vector<std::string> check_invariants(bool require_connected = true) const;

 private:
  void rebuild();
  char letter_at(int row, int col) const;
  int cell_index(int row, int col) const { return row * cols_ + col; }
  std::vector<Anchor> candidate_anchors(const std::string& word) const;

  int rows_ = 0;
  int cols_ = 0;
  int next_seq_ = 0;
  bool connected_ = true;
  std::vector<Placement> placements_;
  std::vector<char> cells_;
  std::vector<std::uint8_t> cover_;        // bit 0 = across, bit 1 = down
  std::vector<std::int16_t> across_at_;    // placement index covering the cell, -1 none
  std::vector<std::int16_t> down_at_;
  std::vector<int> letter_cells_;          // ascending cell indices
};

}  // namespace crossgen
