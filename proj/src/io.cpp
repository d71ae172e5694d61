#include "crossgen/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace crossgen {

namespace {

std::string format_fraction(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

}  // namespace

Json grid_to_json(const Grid& g) {
  Json j;
  j["rows"] = g.rows();
  j["cols"] = g.cols();
  j["placements"] = Json::array();
  for (const Placement& p : g.placements()) {
    Json pj;
    pj["word"] = p.word;
    pj["row"] = p.row;
    pj["col"] = p.col;
    pj["orientation"] = to_string(p.orientation);
    j["placements"].push_back(std::move(pj));
  }
  return j;
}

Grid grid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("placements")) {
    throw std::invalid_argument("puzzle JSON must have rows, cols and placements");
  }
  const int rows = j.at("rows").get<int>();
  const int cols = j.at("cols").get<int>();
  std::vector<Placement> placements;
  for (const Json& pj : j.at("placements")) {
    Placement p;
    p.word = pj.at("word").get<std::string>();
    p.row = pj.at("row").get<int>();
    p.col = pj.at("col").get<int>();
    const auto orient = orientation_from_string(pj.at("orientation").get<std::string>());
    if (!orient) throw std::invalid_argument("orientation must be 'across' or 'down'");
    p.orientation = *orient;
    placements.push_back(std::move(p));
  }
  return Grid::from_placements(rows, cols, std::move(placements));
}

Json clued_puzzle_to_json(const CluedPuzzle& puzzle) {
  Json j;
  Json grid;
  grid["rows"] = puzzle.grid.rows();
  grid["cols"] = puzzle.grid.cols();
  Json cells = Json::array();
  for (int r = 0; r < puzzle.grid.rows(); ++r) {
    std::string row;
    for (int c = 0; c < puzzle.grid.cols(); ++c) {
      row.push_back(puzzle.grid.at(r, c) == 0 ? '#' : '.');
    }
    cells.push_back(std::move(row));
  }
  grid["cells"] = std::move(cells);
  Json numbers = Json::array();
  for (const CellNumber& n : puzzle.numbers) {
    Json nj;
    nj["row"] = n.row;
    nj["col"] = n.col;
    nj["number"] = n.number;
    numbers.push_back(std::move(nj));
  }
  grid["numbers"] = std::move(numbers);
  j["grid"] = std::move(grid);

  Json clues = Json::array();
  for (const Clue& clue : puzzle.clues) {
    Json cj;
    cj["number"] = clue.number;
    cj["direction"] = to_string(clue.direction);
    cj["text"] = clue.text;
    cj["kind"] = to_string(clue.kind);
    cj["length"] = clue.word.size();
    clues.push_back(std::move(cj));
  }
  j["clues"] = std::move(clues);
  j["solution"] = grid_to_json(puzzle.grid);
  return j;
}

std::string run_log_to_csv(const RunLog& log) {
  std::string out = "iteration,action,word,n_words,grid_size\n";
  for (const RunLogEntry& e : log) {
    out += std::to_string(e.iteration);
    out += ',';
    out += to_string(e.action);
    out += ',';
    out += e.word;
    out += ',';
    out += std::to_string(e.n_words);
    out += ',';
    out += std::to_string(e.grid_size);
    out += '\n';
  }
  return out;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::string out = "perm_id,words_fitted,distance,iterations,grid_size,utilization\n";
  for (const ExperimentRecord& r : records) {
    out += std::to_string(r.perm_id);
    out += ',';
    out += std::to_string(r.words_fitted);
    out += ',';
    out += format_fraction(r.distance);
    out += ',';
    out += std::to_string(r.iterations);
    out += ',';
    out += std::to_string(r.grid_size);
    out += ',';
    out += format_fraction(r.utilization);
    out += '\n';
  }
  return out;
}

std::vector<ExperimentRecord> records_from_csv(const std::string& text) {
  std::vector<ExperimentRecord> records;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    ExperimentRecord r;
    char* end = nullptr;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string::npos ? comma : comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 6) throw std::invalid_argument("bad records CSV line: " + line);
    r.perm_id = std::strtoull(fields[0].c_str(), &end, 10);
    r.words_fitted = static_cast<int>(std::strtol(fields[1].c_str(), &end, 10));
    r.distance = std::strtod(fields[2].c_str(), &end);
    r.iterations = std::strtoull(fields[3].c_str(), &end, 10);
    r.grid_size = static_cast<int>(std::strtol(fields[4].c_str(), &end, 10));
    r.utilization = std::strtod(fields[5].c_str(), &end);
    records.push_back(r);
  }
  return records;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing file: " + path);
}

}  // namespace crossgen
