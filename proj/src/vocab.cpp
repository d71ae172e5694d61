#include "crossgen/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace crossgen {

std::string normalize_word(const std::string& raw) {
  std::string word;
  word.reserve(raw.size());
  for (char c : raw) {
    if (c == '\r' || c == ' ' || c == '\t') continue;
    word.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (word.size() < 2) throw std::invalid_argument("word too short: '" + raw + "'");
  for (char c : word) {
    if (c < 'A' || c > 'Z')
      throw std::invalid_argument("word must contain only letters A-Z: '" + raw + "'");
  }
  return word;
}

Vocabulary Vocabulary::from_words(const std::vector<std::string>& raw) {
  Vocabulary v;
  std::unordered_set<std::string> seen;
  for (const std::string& r : raw) {
    std::string word = normalize_word(r);
    if (!seen.insert(word).second) {
      throw std::invalid_argument("duplicate word: " + word);
    }
    v.words.push_back(std::move(word));
  }
  return v;
}

Vocabulary Vocabulary::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read vocabulary file: " + path);
  std::vector<std::string> raw;
  std::string line;
  while (std::getline(in, line)) {
    std::string trimmed;
    for (char c : line) {
      if (c != '\r' && c != ' ' && c != '\t') trimmed.push_back(c);
    }
    if (trimmed.empty()) continue;
    raw.push_back(trimmed);
  }
  if (raw.empty()) throw std::invalid_argument("vocabulary file is empty: " + path);
  return from_words(raw);
}

bool Vocabulary::contains(const std::string& word) const {
  return std::find(words.begin(), words.end(), word) != words.end();
}

std::size_t Vocabulary::longest() const {
  std::size_t best = 0;
  for (const std::string& w : words) best = std::max(best, w.size());
  return best;
}

std::vector<std::string> load_word_pool(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read word pool: " + path);
  std::vector<std::string> pool;
  std::unordered_set<std::string> seen;
  std::string line;
  while (std::getline(in, line)) {
    std::string word;
    try {
      word = normalize_word(line);
    } catch (const std::invalid_argument&) {
      continue;
    }
    if (seen.insert(word).second) pool.push_back(std::move(word));
  }
  if (pool.empty()) throw std::invalid_argument("word pool is empty: " + path);
  return pool;
}

Vocabulary sample_vocabulary(const std::vector<std::string>& pool, std::size_t count,
                             std::size_t max_length, Rng& rng) {
  std::vector<std::string> fit;
  for (const std::string& w : pool) {
    if (w.size() <= max_length) fit.push_back(w);
  }
  if (fit.size() < count) {
    throw std::invalid_argument("word pool too small: need " + std::to_string(count) +
                                " words of length <= " + std::to_string(max_length) + ", have " +
                                std::to_string(fit.size()));
  }
  // partial Fisher-Yates: the first `count` slots are the sample
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.below(fit.size() - i);
    std::swap(fit[i], fit[j]);
  }
  fit.resize(count);
  Vocabulary v;
  v.words = std::move(fit);
  return v;
}

}  // namespace crossgen
