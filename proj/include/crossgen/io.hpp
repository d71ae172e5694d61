#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "crossgen/clue.hpp"
#include "crossgen/engine.hpp"
#include "crossgen/experiments.hpp"
#include "crossgen/grid.hpp"

namespace crossgen {

using Json = nlohmann::ordered_json;

// Grid schema: { rows, cols, placements: [{word, row, col, orientation}] }
Json grid_to_json(const Grid& g);
Grid grid_from_json(const Json& j);  // validates; throws GridError / std::invalid_argument

// { grid: {rows, cols, cells, numbers}, clues: [...], solution: <grid schema> }
Json clued_puzzle_to_json(const CluedPuzzle& puzzle);

std::string run_log_to_csv(const RunLog& log);
std::string records_to_csv(const std::vector<ExperimentRecord>& records);
std::vector<ExperimentRecord> records_from_csv(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace crossgen
