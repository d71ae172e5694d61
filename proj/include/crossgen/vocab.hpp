#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "crossgen/rng.hpp"

namespace crossgen {

// Uppercases and validates: letters A-Z only, length >= 2.
// Throws std::invalid_argument naming the offending word.
std::string normalize_word(const std::string& raw);

// Ordered list of unique words. Input order is preserved; it is the
// tie-breaker for every ranking sort.
struct Vocabulary {
  std::vector<std::string> words;

  static Vocabulary from_words(const std::vector<std::string>& raw);
  // One word per line; blank lines ignored; duplicates are an error.
  static Vocabulary load_file(const std::string& path);

  std::size_t size() const { return words.size(); }
  bool contains(const std::string& word) const;
  std::size_t longest() const;
};

// Word pool for seeded experiment vocabularies: normalized, first
// occurrence kept, invalid lines dropped.
std::vector<std::string> load_word_pool(const std::string& path);

Vocabulary sample_vocabulary(const std::vector<std::string>& pool, std::size_t count,
                             std::size_t max_length, Rng& rng);

}  // namespace crossgen
