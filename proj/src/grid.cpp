#include "crossgen/grid.hpp"

#include <algorithm>
#include <numeric>

namespace crossgen {

const char* to_string(Orientation o) {
  return o == Orientation::Across ? "across" : "down";
}

std::optional<Orientation> orientation_from_string(const std::string& s) {
  if (s == "across") return Orientation::Across;
  if (s == "down") return Orientation::Down;
  return std::nullopt;
}

bool operator<(const Anchor& a, const Anchor& b) {
  if (a.row != b.row) return a.row < b.row;
  if (a.col != b.col) return a.col < b.col;
  return static_cast<int>(a.orientation) < static_cast<int>(b.orientation);
}

void validate_word(const std::string& word) {
  if (word.size() < 2) throw GridError("word too short: '" + word + "'");
  for (char c : word) {
    if (c < 'A' || c > 'Z') throw GridError("word must be uppercase A-Z: '" + word + "'");
  }
}

namespace {

int step_row(Orientation o) { return o == Orientation::Down ? 1 : 0; }
int step_col(Orientation o) { return o == Orientation::Across ? 1 : 0; }

std::uint8_t orient_bit(Orientation o) { return o == Orientation::Across ? 1 : 2; }

// Union-find over placement indices.
struct Components {
  std::vector<int> parent;

  explicit Components(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Grid::Grid(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw GridError("grid dimensions must be positive");
  rebuild();
}

Grid Grid::from_placements(int rows, int cols, std::vector<Placement> placements) {
  Grid g(rows, cols);
  for (std::size_t i = 0; i < placements.size(); ++i) {
    validate_word(placements[i].word);
    placements[i].seq = static_cast<int>(i);
  }
  g.placements_ = std::move(placements);
  g.next_seq_ = static_cast<int>(g.placements_.size());
  g.rebuild();
  auto issues = g.check_invariants(false);
  if (!issues.empty()) throw GridError("invalid grid: " + issues.front());
  return g;
}

char Grid::at(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw GridError("cell out of bounds");
  return cells_[cell_index(row, col)];
}

char Grid::letter_at(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) return 0;
  return cells_[cell_index(row, col)];
}

bool Grid::has_word(const std::string& word) const {
  for (const Placement& p : placements_) {
    if (p.word == word) return true;
  }
  return false;
}

double Grid::utilization() const {
  if (rows_ == 0 || cols_ == 0) return 0.0;
  return static_cast<double>(letter_cells_.size()) / (static_cast<double>(rows_) * cols_);
}

void Grid::rebuild() {
  const std::size_t n = static_cast<std::size_t>(rows_) * cols_;
  cells_.assign(n, 0);
  cover_.assign(n, 0);
  across_at_.assign(n, -1);
  down_at_.assign(n, -1);
  letter_cells_.clear();

  for (std::size_t pi = 0; pi < placements_.size(); ++pi) {
    const Placement& p = placements_[pi];
    const int dr = step_row(p.orientation);
    const int dc = step_col(p.orientation);
    if (p.row < 0 || p.col < 0 || p.row + dr * (p.length() - 1) >= rows_ ||
        p.col + dc * (p.length() - 1) >= cols_) {
      throw GridError("placement out of bounds: " + p.word);
    }
    for (int i = 0; i < p.length(); ++i) {
      const int idx = cell_index(p.row + dr * i, p.col + dc * i);
      if (cells_[idx] != 0 && cells_[idx] != p.word[static_cast<std::size_t>(i)]) {
        throw GridError("letter conflict at shared cell in " + p.word);
      }
      cells_[idx] = p.word[static_cast<std::size_t>(i)];
      cover_[idx] |= orient_bit(p.orientation);
      auto& slot = p.orientation == Orientation::Across ? across_at_[idx] : down_at_[idx];
      if (slot >= 0) throw GridError("overlapping parallel words at " + p.word);
      slot = static_cast<std::int16_t>(pi);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (cells_[i] != 0) letter_cells_.push_back(static_cast<int>(i));
  }

  if (placements_.size() <= 1) {
    connected_ = true;
    return;
  }
  Components comps(placements_.size());
  for (int idx : letter_cells_) {
    if (across_at_[idx] >= 0 && down_at_[idx] >= 0) comps.unite(across_at_[idx], down_at_[idx]);
  }
  const int root = comps.find(0);
  connected_ = true;
  for (std::size_t i = 1; i < placements_.size(); ++i) {
    if (comps.find(static_cast<int>(i)) != root) {
      connected_ = false;
      break;
    }
  }
}

std::vector<int> Grid::component_ids() const {
  Components comps(placements_.size());
  for (int idx : letter_cells_) {
    if (across_at_[idx] >= 0 && down_at_[idx] >= 0) comps.unite(across_at_[idx], down_at_[idx]);
  }
  std::vector<int> ids(placements_.size());
  std::vector<int> label(placements_.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < placements_.size(); ++i) {
    const int root = comps.find(static_cast<int>(i));
    if (label[root] < 0) label[root] = next++;
    ids[i] = label[root];
  }
  return ids;
}

bool Grid::fits(const std::string& word, const Anchor& a, int* crossings) const {
  const int len = static_cast<int>(word.size());
  if (len < 2) return false;
  const int dr = step_row(a.orientation);
  const int dc = step_col(a.orientation);
  if (a.row < 0 || a.col < 0) return false;
  if (a.row + dr * (len - 1) >= rows_ || a.col + dc * (len - 1) >= cols_) return false;
  // flanking cells must be black or outside
  if (letter_at(a.row - dr, a.col - dc) != 0) return false;
  if (letter_at(a.row + dr * len, a.col + dc * len) != 0) return false;

  int crossed = 0;
  for (int i = 0; i < len; ++i) {
    const int r = a.row + dr * i;
    const int c = a.col + dc * i;
    const char existing = cells_[cell_index(r, c)];
    if (existing != 0) {
      if (existing != word[static_cast<std::size_t>(i)]) return false;
      // a parallel word through this cell would merge two runs
      if (cover_[cell_index(r, c)] & orient_bit(a.orientation)) return false;
      ++crossed;
    } else {
      // fresh letters may not touch perpendicular neighbors
      if (letter_at(r - dc, c - dr) != 0 || letter_at(r + dc, c + dr) != 0) return false;
    }
  }
  if (!placements_.empty() && crossed == 0) return false;
  if (crossings) *crossings = crossed;
  return true;
}

std::vector<Anchor> Grid::candidate_anchors(const std::string& word) const {
  const int len = static_cast<int>(word.size());
  std::vector<Anchor> cand;
  if (placements_.empty()) {
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c + len <= cols_; ++c) cand.push_back({r, c, Orientation::Across});
    }
    for (int r = 0; r + len <= rows_; ++r) {
      for (int c = 0; c < cols_; ++c) cand.push_back({r, c, Orientation::Down});
    }
    return cand;
  }
  for (int idx : letter_cells_) {
    const char ch = cells_[idx];
    const int r = idx / cols_;
    const int c = idx % cols_;
    for (int j = 0; j < len; ++j) {
      if (word[static_cast<std::size_t>(j)] != ch) continue;
      cand.push_back({r, c - j, Orientation::Across});
      cand.push_back({r - j, c, Orientation::Down});
    }
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  return cand;
}

std::vector<Anchor> Grid::legal_positions(const std::string& word) const {
  std::vector<Anchor> out;
  for (const Anchor& a : candidate_anchors(word)) {
    if (fits(word, a)) out.push_back(a);
  }
  return out;
}

bool Grid::any_legal_position(const std::string& word) const {
  if (placements_.empty()) return !legal_positions(word).empty();
  const int len = static_cast<int>(word.size());
  for (int idx : letter_cells_) {
    const char ch = cells_[idx];
    const int r = idx / cols_;
    const int c = idx % cols_;
    for (int j = 0; j < len; ++j) {
      if (word[static_cast<std::size_t>(j)] != ch) continue;
      if (fits(word, {r, c - j, Orientation::Across})) return true;
      if (fits(word, {r - j, c, Orientation::Down})) return true;
    }
  }
  return false;
}

std::vector<int> Grid::crossed_placements(const std::string& word, const Anchor& a) const {
  std::vector<int> out;
  if (!fits(word, a)) return out;
  const int dr = step_row(a.orientation);
  const int dc = step_col(a.orientation);
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    const int idx = cell_index(a.row + dr * i, a.col + dc * i);
    if (cells_[idx] == 0) continue;
    const std::int16_t other =
        a.orientation == Orientation::Across ? down_at_[idx] : across_at_[idx];
    if (other >= 0) out.push_back(other);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Grid Grid::write(const std::string& word, const Anchor& a) const {
  validate_word(word);
  if (has_word(word)) throw GridError("word already placed: " + word);
  if (!fits(word, a)) {
    throw GridError("illegal placement: " + word + " at " + std::to_string(a.row) + "," +
                    std::to_string(a.col) + " " + to_string(a.orientation));
  }
  Grid g = *this;
  g.placements_.push_back(Placement{word, a.row, a.col, a.orientation, g.next_seq_++});
  g.rebuild();
  return g;
}

Grid Grid::remove(const std::string& word) const {
  auto it = std::find_if(placements_.begin(), placements_.end(),
                         [&](const Placement& p) { return p.word == word; });
  if (it == placements_.end()) throw GridError("word not in grid: " + word);
  Grid g = *this;
  g.placements_.erase(g.placements_.begin() + (it - placements_.begin()));
  g.rebuild();
  return g;
}

bool Grid::remove_is_clean(const std::string& word) const {
  auto it = std::find_if(placements_.begin(), placements_.end(),
                         [&](const Placement& p) { return p.word == word; });
  if (it == placements_.end()) throw GridError("word not in grid: " + word);
  const int dr = step_row(it->orientation);
  const int dc = step_col(it->orientation);
  for (int i = 0; i + 1 < it->length(); ++i) {
    const int a = cell_index(it->row + dr * i, it->col + dc * i);
    const int b = cell_index(it->row + dr * (i + 1), it->col + dc * (i + 1));
    if (cover_[a] == 3 && cover_[b] == 3) return false;  // adjacent crossings survive
  }
  return true;
}

Grid Grid::resized(int new_rows, int new_cols) const {
  if (new_rows < rows_ || new_cols < cols_)
    throw GridError("resize cannot shrink a grid; use repack to rebalance");
  Grid g = *this;
  g.rows_ = new_rows;
  g.cols_ = new_cols;
  g.rebuild();
  return g;
}

Grid Grid::repacked() const {
  if (placements_.empty()) return *this;

  auto col_letters = [&](int c) {
    int n = 0;
    for (int r = 0; r < rows_; ++r) n += cells_[cell_index(r, c)] != 0;
    return n;
  };
  auto row_letters = [&](int r) {
    int n = 0;
    for (int c = 0; c < cols_; ++c) n += cells_[cell_index(r, c)] != 0;
    return n;
  };

  // A line may move only from an empty boundary toward a non-empty opposite
  // boundary; otherwise repeated calls would shuttle margins back and forth.
  struct Move {
    int dr, dc;  // applied to every placement
    int score;   // letters in the outermost two lines of the source side
    bool eligible;
  };
  const bool two_cols = cols_ >= 2;
  const bool two_rows = rows_ >= 2;
  Move moves[4] = {
      {0, -1, two_cols ? col_letters(1) : 0,
       two_cols && col_letters(0) == 0 && col_letters(cols_ - 1) > 0},  // left -> right
      {-1, 0, two_rows ? row_letters(1) : 0,
       two_rows && row_letters(0) == 0 && row_letters(rows_ - 1) > 0},  // top -> bottom
      {0, 1, two_cols ? col_letters(cols_ - 2) : 0,
       two_cols && col_letters(cols_ - 1) == 0 && col_letters(0) > 0},  // right -> left
      {1, 0, two_rows ? row_letters(rows_ - 2) : 0,
       two_rows && row_letters(rows_ - 1) == 0 && row_letters(0) > 0},  // bottom -> top
  };

  int pick = -1;
  for (int m = 0; m < 4; ++m) {
    if (!moves[m].eligible) continue;
    if (pick < 0 || moves[m].score < moves[pick].score) pick = m;
  }
  if (pick < 0) return *this;

  Grid g = *this;
  for (Placement& p : g.placements_) {
    p.row += moves[pick].dr;
    p.col += moves[pick].dc;
  }
  g.rebuild();
  return g;
}

std::vector<std::string> Grid::check_invariants(bool require_connected) const {
  std::vector<std::string> issues;

  // independent rasterization: bounds, duplicates, letter compatibility
  std::vector<char> raster(static_cast<std::size_t>(rows_) * cols_, 0);
  for (std::size_t i = 0; i < placements_.size(); ++i) {
    const Placement& p = placements_[i];
    if (p.length() < 2) issues.push_back("word shorter than 2: " + p.word);
    const int dr = step_row(p.orientation);
    const int dc = step_col(p.orientation);
    if (p.row < 0 || p.col < 0 || p.row + dr * (p.length() - 1) >= rows_ ||
        p.col + dc * (p.length() - 1) >= cols_) {
      issues.push_back("placement out of bounds: " + p.word);
      continue;
    }
    for (std::size_t j = i + 1; j < placements_.size(); ++j) {
      if (placements_[j].word == p.word) {
        issues.push_back("duplicate word: " + p.word);
      }
      if (placements_[j].seq == p.seq) {
        issues.push_back("duplicate seq for " + p.word + " and " + placements_[j].word);
      }
    }
    for (int k = 0; k < p.length(); ++k) {
      const int idx = cell_index(p.row + dr * k, p.col + dc * k);
      const char ch = p.word[static_cast<std::size_t>(k)];
      if (raster[idx] != 0 && raster[idx] != ch) {
        issues.push_back("letter conflict at cell " + std::to_string(idx) + " in " + p.word);
      }
      raster[idx] = ch;
    }
  }
  if (!issues.empty()) return issues;

  // adjacency legality: maximal runs of length >= 2 must equal placements
  auto check_runs = [&](Orientation orient) {
    const int outer = orient == Orientation::Across ? rows_ : cols_;
    const int inner = orient == Orientation::Across ? cols_ : rows_;
    for (int o = 0; o < outer; ++o) {
      int start = -1;
      for (int i = 0; i <= inner; ++i) {
        const int r = orient == Orientation::Across ? o : i;
        const int c = orient == Orientation::Across ? i : o;
        const bool letter = i < inner && raster[cell_index(r, c)] != 0;
        if (letter && start < 0) start = i;
        if (!letter && start >= 0) {
          const int len = i - start;
          if (len >= 2) {
            const int rr = orient == Orientation::Across ? o : start;
            const int cc = orient == Orientation::Across ? start : o;
            int matches = 0;
            for (const Placement& p : placements_) {
              if (p.orientation == orient && p.row == rr && p.col == cc && p.length() == len) {
                ++matches;
              }
            }
            if (matches != 1) {
              issues.push_back(std::string("run of ") + std::to_string(len) + " at " +
                               std::to_string(rr) + "," + std::to_string(cc) + " " +
                               to_string(orient) + " matches " + std::to_string(matches) +
                               " placements");
            }
          }
          start = -1;
        }
      }
    }
  };
  check_runs(Orientation::Across);
  check_runs(Orientation::Down);

  // every placement must be a maximal run (not extended by neighbors)
  for (const Placement& p : placements_) {
    const int dr = step_row(p.orientation);
    const int dc = step_col(p.orientation);
    if (letter_at(p.row - dr, p.col - dc) != 0 ||
        letter_at(p.row + dr * p.length(), p.col + dc * p.length()) != 0) {
      issues.push_back("placement extended by adjacent letters: " + p.word);
    }
  }

  if (require_connected && !connected_) issues.push_back("grid is disconnected");
  return issues;
}

}  // namespace crossgen
