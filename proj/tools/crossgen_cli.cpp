// Command line front end: generate, rank, clue, render, experiment.
//
// Exit codes: 0 success, 2 bad input, 3 missing dictionary entries,
// 4 internal invariant violation.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "crossgen/clue.hpp"
#include "crossgen/engine.hpp"
#include "crossgen/experiments.hpp"
#include "crossgen/io.hpp"
#include "crossgen/render.hpp"

namespace fs = std::filesystem;
using namespace crossgen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitDictionaryMiss = 3;
constexpr int kExitInternal = 4;

struct EngineFlags {
  std::string strategy = "pebble";
  std::string order = "asc";
  std::string policy = "reset";
  std::uint64_t max_iter = 20000;
  int ge_max = 500;
  int tabu = -1;
  std::uint64_t seed = 1;
  int target_words = 0;
  int max_grid = 0;
  double time_limit = 0.0;
  double target_utilization = 0.0;
  bool repack = false;
};

void add_engine_flags(CLI::App* cmd, EngineFlags& flags) {
  cmd->add_option("--strategy", flags.strategy, "Ranking strategy: pebble or letter")
      ->check(CLI::IsMember({"pebble", "letter"}));
  cmd->add_option("--order", flags.order, "Ranking order: asc or desc")
      ->check(CLI::IsMember({"asc", "desc"}));
  cmd->add_option("--grid-policy", flags.policy, "On expansion: reset or continue")
      ->check(CLI::IsMember({"reset", "continue"}));
  cmd->add_option("--max-iter", flags.max_iter, "Iteration bound T");
  cmd->add_option("--ge-max", flags.ge_max, "Iterations per grid epoch");
  cmd->add_option("--tt", flags.tabu, "Tabu tenure (-1 = auto, 0 = off)");
  cmd->add_option("--seed", flags.seed, "Random seed (provenance)");
  cmd->add_option("--target-words", flags.target_words, "Stop once this many words fit");
  cmd->add_option("--max-grid", flags.max_grid, "Largest allowed grid size");
  cmd->add_option("--time-limit", flags.time_limit, "Wall clock limit in seconds");
  cmd->add_option("--target-utilization", flags.target_utilization,
                  "Stop once the best grid is this full (0..1)");
  cmd->add_flag("--repack", flags.repack, "Repack the grid after continue-expansions");
}

GeneratorConfig to_config(const EngineFlags& flags) {
  GeneratorConfig cfg;
  cfg.strategy = *strategy_from_string(flags.strategy);
  cfg.order = *order_from_string(flags.order);
  cfg.reset_policy = *reset_policy_from_string(flags.policy);
  cfg.max_iterations = flags.max_iter;
  cfg.ge_max = flags.ge_max;
  cfg.tabu_tenure = flags.tabu;
  cfg.seed = flags.seed;
  cfg.target_words = flags.target_words;
  cfg.max_grid = flags.max_grid;
  cfg.time_limit_seconds = flags.time_limit;
  cfg.target_utilization = flags.target_utilization;
  cfg.repack_on_expand = flags.repack;
  return cfg;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::invalid_argument("cannot create output directory: " + dir);
}

Grid load_puzzle(const std::string& path) {
  Json j;
  try {
    j = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed puzzle JSON (" + path + "): " + e.what());
  }
  try {
    return grid_from_json(j);
  } catch (const GridError& e) {
    throw std::invalid_argument("invalid puzzle (" + path + "): " + e.what());
  }
}

int cmd_generate(const std::string& vocab_path, const std::string& out_dir,
                 const EngineFlags& flags) {
  const Vocabulary vocab = Vocabulary::load_file(vocab_path);
  const GeneratorConfig cfg = to_config(flags);
  const GenerationResult result = run_generator(vocab, cfg);

  const auto issues = result.best.check_invariants(true);
  if (!issues.empty()) {
    std::cerr << "internal error: generated grid violates invariants:\n";
    for (const auto& issue : issues) std::cerr << "  " << issue << "\n";
    return kExitInternal;
  }

  ensure_dir(out_dir);
  write_text_file(out_dir + "/puzzle.json", grid_to_json(result.best).dump(2) + "\n");
  write_text_file(out_dir + "/runlog.csv", run_log_to_csv(result.log));
  write_text_file(out_dir + "/grid.txt", render_text(result.best, true));

  std::cout << "placed " << result.n_best << " of " << vocab.size() << " words in a "
            << result.best.rows() << "x" << result.best.cols() << " grid ("
            << static_cast<int>(result.best.utilization() * 100 + 0.5) << "% filled) after "
            << result.iterations << " iterations [" << to_string(result.reason) << "]\n"
            << "wrote " << out_dir << "/puzzle.json, runlog.csv, grid.txt\n";
  return kExitOk;
}

int cmd_rank(const std::string& vocab_path, const std::string& out_dir,
             const std::string& strategy_name, const std::string& order_name) {
  const Vocabulary vocab = Vocabulary::load_file(vocab_path);
  const Strategy strategy = *strategy_from_string(strategy_name);
  const SortOrder order = *order_from_string(order_name);

  const IntersectionMatrix matrix = IntersectionMatrix::build(vocab);
  std::string matrix_csv = "word";
  for (const auto& w : vocab.words) matrix_csv += "," + w;
  matrix_csv += ",total\n";
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    matrix_csv += vocab.words[i];
    for (std::size_t j = 0; j < vocab.size(); ++j) {
      matrix_csv += i == j ? ",-" : "," + std::to_string(matrix.at(i, j));
    }
    matrix_csv += "," + std::to_string(matrix.row_total(i)) + "\n";
  }

  const RankVector ranks = rank_words(vocab, strategy);
  const Permutation sorted = sorted_list(vocab, ranks, order);
  std::string ranks_csv = "position,word,score\n";
  for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
    double score = 0.0;
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      if (vocab.words[i] == sorted[pos]) {
        score = ranks.scores[i];
        break;
      }
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", score);
    ranks_csv += std::to_string(pos) + "," + sorted[pos] + "," + buf + "\n";
  }

  ensure_dir(out_dir);
  write_text_file(out_dir + "/matrix.csv", matrix_csv);
  write_text_file(out_dir + "/ranks.csv", ranks_csv);
  std::cout << "wrote " << out_dir << "/matrix.csv and ranks.csv (" << strategy_name << ", "
            << order_name << ")\n";
  return kExitOk;
}

int cmd_clue(const std::string& puzzle_path, const std::string& dict_path,
             const std::string& prefer, const std::string& out_dir) {
  const Grid grid = load_puzzle(puzzle_path);
  std::vector<std::string> warnings;
  ClueDictionary dict;
  try {
    dict = ClueDictionary::load_tsv(dict_path, &warnings);
  } catch (const ClueError& e) {
    throw std::invalid_argument(e.what());
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

  const ClueKind kind = prefer == "usage" ? ClueKind::UsageBlank : ClueKind::Definition;
  const CluedPuzzle puzzle = clue_puzzle(grid, dict, kind);

  ensure_dir(out_dir);
  write_text_file(out_dir + "/clued.json", clued_puzzle_to_json(puzzle).dump(2) + "\n");
  write_text_file(out_dir + "/sheet.txt", render_clue_sheet(puzzle));
  std::cout << "wrote " << out_dir << "/clued.json and sheet.txt (" << puzzle.clues.size()
            << " clues)\n";
  return kExitOk;
}

int cmd_render(const std::string& puzzle_path, const std::string& format, bool solved,
               const std::string& out_path) {
  const Grid grid = load_puzzle(puzzle_path);
  const std::string rendered =
      format == "svg" ? render_svg(grid, solved) : render_text(grid, solved);
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    write_text_file(out_path, rendered);
  }
  return kExitOk;
}

struct ExperimentFlags {
  std::string study;
  std::string pool_path;
  std::string vocab_path;
  std::string records_path;
  std::string out_dir = "experiment-out";
  std::string policy = "reset";
  std::uint64_t samples = 1000;
  int grid_size = 13;
  std::uint64_t budget = 50;
  std::uint64_t seed = 1;
  int vocab_size = 26;
  int datasets = 10;
  int sizes = 100;
  int bins = 20;
  std::string targets = "5:50:5";
  bool serial = false;
  bool exhaustive = false;
};

Vocabulary study_vocabulary(const ExperimentFlags& f, std::size_t max_len) {
  if (!f.vocab_path.empty()) return Vocabulary::load_file(f.vocab_path);
  if (f.pool_path.empty())
    throw std::invalid_argument("experiment needs --vocab or --pool");
  const auto pool = load_word_pool(f.pool_path);
  Rng rng(f.seed, 0);
  return sample_vocabulary(pool, static_cast<std::size_t>(f.vocab_size), max_len, rng);
}

void parse_targets(const std::string& spec, ScalabilityOptions& opt) {
  int lo = 0, hi = 0, step = 0;
  if (std::sscanf(spec.c_str(), "%d:%d:%d", &lo, &hi, &step) != 3 || step <= 0 || lo > hi) {
    throw std::invalid_argument("targets must be MIN:MAX:STEP, e.g. 5:50:5");
  }
  opt.target_min = lo;
  opt.target_max = hi;
  opt.target_step = step;
}

int cmd_experiment(const ExperimentFlags& f) {
  ensure_dir(f.out_dir);
  const bool parallel = !f.serial;
  Json manifest;
  manifest["study"] = f.study;
  manifest["seed"] = f.seed;
  manifest["parallel"] = parallel;
  Json results;

  auto write_records = [&](const std::vector<ExperimentRecord>& records,
                           const std::string& name) {
    write_text_file(f.out_dir + "/" + name, records_to_csv(records));
  };

  if (f.study == "perm-brute" || f.study == "perm-backtrack") {
    const Vocabulary vocab = study_vocabulary(f, static_cast<std::size_t>(f.grid_size));
    PermStudyOptions opt;
    opt.grid_size = f.grid_size;
    opt.samples = f.samples;
    opt.seed = f.seed;
    opt.iteration_budget = f.budget;
    opt.exhaustive = f.exhaustive;
    const auto records = f.study == "perm-brute" ? perm_brute(vocab, opt, parallel)
                                                 : perm_backtrack(vocab, opt, parallel);
    write_records(records, "records.csv");
    manifest["samples"] = opt.exhaustive ? records.size() : opt.samples;
    manifest["grid_size"] = opt.grid_size;
    manifest["budget"] = opt.iteration_budget;
    manifest["vocab"] = vocab.words;
  } else if (f.study == "rank-saturation") {
    const Vocabulary vocab = study_vocabulary(f, static_cast<std::size_t>(f.grid_size));
    std::string csv = "strategy,order,iteration,words_in_grid\n";
    for (const auto& [strategy, order] :
         std::vector<std::pair<Strategy, SortOrder>>{{Strategy::PebbleSand, SortOrder::Ascending},
                                                     {Strategy::PebbleSand, SortOrder::Descending},
                                                     {Strategy::LetterIntersections, SortOrder::Ascending},
                                                     {Strategy::LetterIntersections, SortOrder::Descending}}) {
      const SaturationResult sat =
          rank_saturation(vocab, strategy, order, f.grid_size, f.budget);
      for (std::size_t i = 0; i < sat.words_per_iteration.size(); ++i) {
        csv += std::string(to_string(strategy)) + "," + to_string(order) + "," +
               std::to_string(i + 1) + "," + std::to_string(sat.words_per_iteration[i]) + "\n";
      }
      Json r;
      r["strategy"] = to_string(strategy);
      r["order"] = to_string(order);
      r["saturation_iteration"] = sat.saturation_iteration;
      r["max_words"] = sat.max_words;
      results.push_back(std::move(r));
    }
    write_text_file(f.out_dir + "/saturation.csv", csv);
    manifest["grid_size"] = f.grid_size;
    manifest["budget"] = f.budget;
    manifest["vocab"] = vocab.words;
  } else if (f.study == "size-effect") {
    if (f.pool_path.empty()) throw std::invalid_argument("size-effect needs --pool");
    SizeEffectOptions opt;
    opt.max_size = f.sizes;
    opt.grid_size = f.grid_size;
    opt.budget = f.budget;
    opt.seed = f.seed;
    const auto rows = size_effect(load_word_pool(f.pool_path), opt, parallel);
    std::string csv = "size,asc_words,desc_words,winner\n";
    int asc = 0, desc = 0, tie = 0;
    for (const auto& row : rows) {
      csv += std::to_string(row.size) + "," + std::to_string(row.asc_words) + "," +
             std::to_string(row.desc_words) + "," + to_string(row.winner) + "\n";
      (row.winner == OrderWinner::Ascending    ? asc
       : row.winner == OrderWinner::Descending ? desc
                                               : tie)++;
    }
    write_text_file(f.out_dir + "/size_effect.csv", csv);
    results["asc_wins"] = asc;
    results["desc_wins"] = desc;
    results["ties"] = tie;
    manifest["grid_size"] = f.grid_size;
    manifest["budget"] = f.budget;
    manifest["sizes"] = f.sizes;
  } else if (f.study == "distance-dist") {
    const Vocabulary vocab = study_vocabulary(f, 24);
    const auto bins = distance_distribution(vocab, f.samples, f.seed, f.bins, parallel);
    std::string csv = "low,high,count\n";
    for (const auto& b : bins) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.6f,%.6f,", b.low, b.high);
      csv += std::string(buf) + std::to_string(b.count) + "\n";
    }
    write_text_file(f.out_dir + "/distance_dist.csv", csv);
    manifest["samples"] = f.samples;
    manifest["bins"] = f.bins;
    manifest["vocab"] = vocab.words;
  } else if (f.study == "contour") {
    if (f.records_path.empty()) throw std::invalid_argument("contour needs --records");
    const auto records = records_from_csv(read_text_file(f.records_path));
    const ContourSurface surface = contour(records, f.bins);
    std::string csv = "d_low,d_high,words_fitted,count\n";
    for (int b = 0; b < surface.distance_bins; ++b) {
      for (int w = 0; w <= surface.max_words; ++w) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f,", static_cast<double>(b) / surface.distance_bins,
                      static_cast<double>(b + 1) / surface.distance_bins);
        csv += std::string(buf) + std::to_string(w) + "," + std::to_string(surface.at(b, w)) + "\n";
      }
    }
    write_text_file(f.out_dir + "/contour.csv", csv);
    manifest["records"] = f.records_path;
    manifest["bins"] = f.bins;
  } else if (f.study == "scalability" || f.study == "utilization") {
    if (f.pool_path.empty()) throw std::invalid_argument(f.study + " needs --pool");
    ScalabilityOptions opt;
    opt.vocab_count = f.datasets;
    opt.vocab_size = f.vocab_size;
    opt.policy = *reset_policy_from_string(f.policy);
    opt.budget = f.budget;
    opt.seed = f.seed;
    parse_targets(f.targets, opt);
    const auto pool = load_word_pool(f.pool_path);
    if (f.study == "scalability") {
      const auto aggregates = scalability(pool, opt, parallel);
      std::string csv = "target,min_iterations,mean_iterations,max_iterations,reached\n";
      for (const auto& a : aggregates) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.1f", a.mean_iterations);
        csv += std::to_string(a.target) + "," + std::to_string(a.min_iterations) + "," + buf +
               "," + std::to_string(a.max_iterations) + "," + std::to_string(a.reached) + "\n";
      }
      write_text_file(f.out_dir + "/scalability.csv", csv);
    } else {
      const UtilizationResult util = utilization_study(pool, opt, parallel);
      std::string by_target = "target,mean_utilization,mean_grid_size,reached\n";
      for (const auto& a : util.by_target) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6f,%.2f", a.mean_utilization, a.mean_grid_size);
        by_target += std::to_string(a.target) + "," + buf + "," + std::to_string(a.reached) + "\n";
      }
      write_text_file(f.out_dir + "/utilization_by_target.csv", by_target);
      std::string by_size = "grid_size,mean_utilization,count\n";
      for (const auto& s : util.by_size) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", s.mean_utilization);
        by_size += std::to_string(s.grid_size) + "," + buf + "," + std::to_string(s.count) + "\n";
      }
      write_text_file(f.out_dir + "/utilization_by_size.csv", by_size);
    }
    manifest["datasets"] = f.datasets;
    manifest["vocab_size"] = f.vocab_size;
    manifest["policy"] = f.policy;
    manifest["budget"] = f.budget;
    manifest["targets"] = f.targets;
  } else {
    throw std::invalid_argument("unknown study: " + f.study);
  }

  if (!results.is_null()) manifest["results"] = std::move(results);
  write_text_file(f.out_dir + "/manifest.json", manifest.dump(2) + "\n");
  std::cout << "study " << f.study << " written to " << f.out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossgen: unconstrained crossword generation from a raw vocabulary"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Generate a puzzle from a vocabulary file");
  std::string vocab_path, out_dir = "puzzle-out";
  EngineFlags engine_flags;
  generate->add_option("--vocab", vocab_path, "Vocabulary file, one word per line")->required();
  generate->add_option("--out", out_dir, "Output directory");
  add_engine_flags(generate, engine_flags);

  // rank
  auto* rank = app.add_subcommand("rank", "Emit the intersection matrix and rank vector");
  std::string rank_vocab, rank_out = "rank-out", rank_strategy = "pebble", rank_order = "asc";
  rank->add_option("--vocab", rank_vocab, "Vocabulary file")->required();
  rank->add_option("--out", rank_out, "Output directory");
  rank->add_option("--strategy", rank_strategy)->check(CLI::IsMember({"pebble", "letter"}));
  rank->add_option("--order", rank_order)->check(CLI::IsMember({"asc", "desc"}));

  // clue
  auto* clue = app.add_subcommand("clue", "Attach clues to a generated puzzle");
  std::string clue_puzzle_path, clue_dict, clue_prefer = "definition", clue_out = "clue-out";
  clue->add_option("--puzzle", clue_puzzle_path, "puzzle.json from generate")->required();
  clue->add_option("--dict", clue_dict, "TSV dictionary: WORD<TAB>definition<TAB>usage")
      ->required();
  clue->add_option("--prefer", clue_prefer, "Preferred clue kind")
      ->check(CLI::IsMember({"definition", "usage"}));
  clue->add_option("--out", clue_out, "Output directory");

  // render
  auto* render = app.add_subcommand("render", "Render a puzzle as text or SVG");
  std::string render_puzzle, render_format = "text", render_out;
  bool render_solved = false;
  render->add_option("--puzzle", render_puzzle, "puzzle.json")->required();
  render->add_option("--format", render_format)->check(CLI::IsMember({"text", "svg"}));
  render->add_flag("--solved", render_solved, "Show the letters");
  render->add_option("--out", render_out, "Output file (default stdout)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run one of the batch studies");
  ExperimentFlags ef;
  experiment->add_option("--study", ef.study,
                         "perm-brute | perm-backtrack | rank-saturation | size-effect | "
                         "distance-dist | contour | scalability | utilization")
      ->required();
  experiment->add_option("--pool", ef.pool_path, "Word pool for sampled vocabularies");
  experiment->add_option("--vocab", ef.vocab_path, "Explicit vocabulary file");
  experiment->add_option("--records", ef.records_path, "records.csv for the contour study");
  experiment->add_option("--out", ef.out_dir, "Output directory");
  experiment->add_option("--samples", ef.samples, "Permutation samples");
  experiment->add_option("--grid-size", ef.grid_size, "Fixed grid size");
  experiment->add_option("--budget", ef.budget, "Iteration budget");
  experiment->add_option("--seed", ef.seed, "Seed");
  experiment->add_option("--vocab-size", ef.vocab_size, "Sampled vocabulary size");
  experiment->add_option("--datasets", ef.datasets, "Dataset count (scalability/utilization)");
  experiment->add_option("--sizes", ef.sizes, "Max vocabulary size (size-effect)");
  experiment->add_option("--bins", ef.bins, "Histogram bins");
  experiment->add_option("--targets", ef.targets, "MIN:MAX:STEP target words");
  experiment->add_option("--policy", ef.policy)->check(CLI::IsMember({"reset", "continue"}));
  experiment->add_flag("--serial", ef.serial, "Disable the parallel fan-out");
  experiment->add_flag("--exhaustive", ef.exhaustive, "Enumerate all permutations (n <= 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (generate->parsed()) return cmd_generate(vocab_path, out_dir, engine_flags);
    if (rank->parsed()) return cmd_rank(rank_vocab, rank_out, rank_strategy, rank_order);
    if (clue->parsed()) return cmd_clue(clue_puzzle_path, clue_dict, clue_prefer, clue_out);
    if (render->parsed())
      return cmd_render(render_puzzle, render_format, render_solved, render_out);
    if (experiment->parsed()) return cmd_experiment(ef);
  } catch (const MissingEntriesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDictionaryMiss;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitBadInput;
}
