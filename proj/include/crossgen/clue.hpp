#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossgen/grid.hpp"

namespace crossgen {

struct ClueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MissingEntriesError : ClueError {
  std::vector<std::string> missing;
  explicit MissingEntriesError(std::vector<std::string> words);
};

struct DictionaryEntry {
  std::string word;
  std::vector<std::string> definitions;
  std::vector<std::string> usages;
};

// TSV source: WORD<TAB>definition<TAB>usage, repeated lines per word merged
// in file order. Definitions containing the headword as a standalone token
// are dropped at load, as are usages that never mention it.
class ClueDictionary {
 public:
  static ClueDictionary load_tsv(const std::string& path,
                                 std::vector<std::string>* warnings = nullptr);

  const DictionaryEntry* find(const std::string& word) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, DictionaryEntry>& entries() const { return entries_; }

 private:
  std::map<std::string, DictionaryEntry> entries_;
};

enum class ClueKind { Definition, UsageBlank };
const char* to_string(ClueKind k);

struct Clue {
  std::string word;
  std::string text;
  ClueKind kind = ClueKind::Definition;
  int number = 0;
  Orientation direction = Orientation::Across;
};

bool contains_substring_ci(const std::string& text, const std::string& needle);
bool contains_token_ci(const std::string& text, const std::string& needle);
// Every standalone occurrence of `word` becomes a run of '_' of equal length.
std::string blank_word_ci(const std::string& text, const std::string& word);

// Builds the clue text from the preferred source, falling back to the other
// kind when the preferred one is empty or would leak the answer.
Clue make_clue(const std::string& word, const DictionaryEntry& entry, ClueKind preferred);

struct CellNumber {
  int row = 0;
  int col = 0;
  int number = 0;
};

// Standard numbering: row-major scan, a cell gets the next number when a
// word starts there.
std::vector<CellNumber> compute_numbering(const Grid& g);

struct CluedPuzzle {
  Grid grid;
  std::vector<CellNumber> numbers;
  std::vector<Clue> clues;  // across block first, then down, by number
};

CluedPuzzle clue_puzzle(const Grid& g, const ClueDictionary& dict,
                        ClueKind preferred = ClueKind::Definition);

}  // namespace crossgen
