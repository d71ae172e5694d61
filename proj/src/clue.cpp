#include "crossgen/clue.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace crossgen {

MissingEntriesError::MissingEntriesError(std::vector<std::string> words)
    : ClueError("dictionary is missing entries for: " + [&words] {
        std::string joined;
        for (std::size_t i = 0; i < words.size(); ++i) {
          if (i) joined += ", ";
          joined += words[i];
        }
        return joined;
      }()),
      missing(std::move(words)) {}

const char* to_string(ClueKind k) {
  return k == ClueKind::Definition ? "definition" : "usage-blank";
}

namespace {

char lower(char c) { return static_cast<char>(std::tolower(static_cast<unsigned char>(c))); }
bool is_word_char(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// Positions of case-insensitive occurrences; token_only restricts matches to
// standalone words (non-letter or boundary on both sides).
std::vector<std::size_t> find_occurrences(const std::string& text, const std::string& needle,
                                          bool token_only) {
  std::vector<std::size_t> hits;
  if (needle.empty() || text.size() < needle.size()) return hits;
  for (std::size_t i = 0; i + needle.size() <= text.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < needle.size(); ++j) {
      if (lower(text[i + j]) != lower(needle[j])) {
        match = false;
        break;
      }
    }
    if (!match) continue;
    if (token_only) {
      const bool left_ok = i == 0 || !is_word_char(text[i - 1]);
      const std::size_t end = i + needle.size();
      const bool right_ok = end == text.size() || !is_word_char(text[end]);
      if (!left_ok || !right_ok) continue;
    }
    hits.push_back(i);
  }
  return hits;
}

}  // namespace

bool contains_substring_ci(const std::string& text, const std::string& needle) {
  return !find_occurrences(text, needle, false).empty();
}

bool contains_token_ci(const std::string& text, const std::string& needle) {
  return !find_occurrences(text, needle, true).empty();
}

std::string blank_word_ci(const std::string& text, const std::string& word) {
  std::string out = text;
  for (std::size_t pos : find_occurrences(text, word, true)) {
    for (std::size_t j = 0; j < word.size(); ++j) out[pos + j] = '_';
  }
  return out;
}

ClueDictionary ClueDictionary::load_tsv(const std::string& path,
                                        std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw ClueError("cannot read dictionary file: " + path);
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };

  ClueDictionary dict;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 2) {
      warn("line " + std::to_string(line_no) + ": expected WORD<TAB>definition[<TAB>usage]");
      continue;
    }
    std::string word = fields[0];
    std::transform(word.begin(), word.end(), word.begin(),
                   [](char c) { return static_cast<char>(std::toupper(static_cast<unsigned char>(c))); });
    if (word.size() < 2 ||
        !std::all_of(word.begin(), word.end(), [](char c) { return c >= 'A' && c <= 'Z'; })) {
      warn("line " + std::to_string(line_no) + ": bad headword '" + fields[0] + "'");
      continue;
    }
    DictionaryEntry& entry = dict.entries_[word];
    entry.word = word;
    const std::string& definition = fields[1];
    if (!definition.empty()) {
      if (contains_token_ci(definition, word)) {
        warn("line " + std::to_string(line_no) + ": definition of " + word +
             " contains the headword; dropped");
      } else {
        entry.definitions.push_back(definition);
      }
    }
    if (fields.size() >= 3 && !fields[2].empty()) {
      const std::string& usage = fields[2];
      if (!contains_token_ci(usage, word)) {
        warn("line " + std::to_string(line_no) + ": usage of " + word +
             " never mentions the headword; dropped");
      } else {
        entry.usages.push_back(usage);
      }
    }
  }
  // drop words that lost every source
  for (auto it = dict.entries_.begin(); it != dict.entries_.end();) {
    if (it->second.definitions.empty() && it->second.usages.empty()) {
      warn("entry " + it->first + " has no usable definition or usage; dropped");
      it = dict.entries_.erase(it);
    } else {
      ++it;
    }
  }
  if (dict.entries_.empty()) throw ClueError("dictionary has no usable entries: " + path);
  return dict;
}

const DictionaryEntry* ClueDictionary::find(const std::string& word) const {
  auto it = entries_.find(word);
  return it == entries_.end() ? nullptr : &it->second;
}

namespace {

// First source text that cannot leak the answer, after processing.
std::optional<std::string> safe_definition(const std::string& word,
                                           const DictionaryEntry& entry) {
  for (const std::string& d : entry.definitions) {
    if (!contains_substring_ci(d, word)) return d;
  }
  return std::nullopt;
}

std::optional<std::string> safe_usage_blank(const std::string& word,
                                            const DictionaryEntry& entry) {
  for (const std::string& u : entry.usages) {
    std::string blanked = blank_word_ci(u, word);
    if (!contains_substring_ci(blanked, word)) return blanked;
  }
  return std::nullopt;
}

}  // namespace

Clue make_clue(const std::string& word, const DictionaryEntry& entry, ClueKind preferred) {
  std::optional<std::string> text;
  ClueKind kind = preferred;
  if (preferred == ClueKind::Definition) {
    text = safe_definition(word, entry);
    if (!text) {
      text = safe_usage_blank(word, entry);
      kind = ClueKind::UsageBlank;
    }
  } else {
    text = safe_usage_blank(word, entry);
    if (!text) {
      text = safe_definition(word, entry);
      kind = ClueKind::Definition;
    }
  }
  if (!text) throw ClueError("no usable clue source for " + word);
  Clue clue;
  clue.word = word;
  clue.text = *text;
  clue.kind = kind;
  return clue;
}

std::vector<CellNumber> compute_numbering(const Grid& g) {
  std::vector<CellNumber> numbers;
  int next = 1;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      bool starts = false;
      for (const Placement& p : g.placements()) {
        if (p.row == r && p.col == c) {
          starts = true;
          break;
        }
      }
      if (starts) numbers.push_back(CellNumber{r, c, next++});
    }
  }
  return numbers;
}

CluedPuzzle clue_puzzle(const Grid& g, const ClueDictionary& dict, ClueKind preferred) {
  std::vector<std::string> missing;
  for (const Placement& p : g.placements()) {
    if (dict.find(p.word) == nullptr) missing.push_back(p.word);
  }
  if (!missing.empty()) {
    std::sort(missing.begin(), missing.end());
    throw MissingEntriesError(std::move(missing));
  }

  CluedPuzzle puzzle{g, compute_numbering(g), {}};
  auto number_at = [&](int row, int col) {
    for (const CellNumber& n : puzzle.numbers) {
      if (n.row == row && n.col == col) return n.number;
    }
    throw ClueError("no number at placement anchor");  // numbering covers every anchor
  };

  for (const Placement& p : g.placements()) {
    Clue clue = make_clue(p.word, *dict.find(p.word), preferred);
    clue.number = number_at(p.row, p.col);
    clue.direction = p.orientation;
    puzzle.clues.push_back(std::move(clue));
  }
  std::sort(puzzle.clues.begin(), puzzle.clues.end(), [](const Clue& a, const Clue& b) {
    if (a.direction != b.direction) return a.direction == Orientation::Across;
    return a.number < b.number;
  });
  return puzzle;
}

}  // namespace crossgen
