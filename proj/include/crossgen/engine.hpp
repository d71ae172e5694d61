#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossgen/grid.hpp"
#include "crossgen/ranking.hpp"
#include "crossgen/vocab.hpp"

namespace crossgen {

// Words not yet in the grid, in placement-priority order. Together with the
// grid's words this is always a partition of the vocabulary.
struct WorkingList {
  std::vector<std::string> words;

  bool empty() const { return words.empty(); }
  const std::string& head() const { return words.front(); }
  void erase(const std::string& word);
  void push_tail(std::string word) { words.push_back(std::move(word)); }
};

// FIFO of recently removed words. A word stays ineligible until `tenure`
// further placements have completed. Victim removals and LIFO wraparounds
// are tracked separately so a burst of wraparounds cannot push a victim
// entry out before its tenure is served.
class TabuList {
 public:
  TabuList() = default;
  explicit TabuList(int tenure) : tenure_(tenure) {}

  int tenure() const { return tenure_; }
  std::size_t size() const { return victims_.size() + wraps_.size(); }
  bool contains(const std::string& word) const;
  void on_removed(const std::string& word, std::uint64_t placements_done);
  void on_wrapped(const std::string& word, std::uint64_t placements_done);
  void expire(std::uint64_t placements_done);
  void clear();

 private:
  using Entries = std::deque<std::pair<std::string, std::uint64_t>>;  // word, frees-up-at

  int tenure_ = 0;  // 0 disables the list
  Entries victims_;
  Entries wraps_;
};

int default_tabu_tenure(std::size_t vocab_size);

// Position preference. MostCrossings densifies: most crossings first, then
// midpoint closest to the grid center, then canonical order. FirstFit takes
// the first legal anchor in canonical order, which keeps grids loose.
enum class PlacementRule { MostCrossings, FirstFit };

// The strategic functions.
bool placeable(const std::string& word, const Grid& g);
std::optional<std::string> pick_word(const Grid& g, const WorkingList& list,
                                     const TabuList& tabu = {});
// Deterministic; an empty grid always gets the word centered across.
std::optional<Anchor> choose_position(const std::string& word, const Grid& g,
                                      PlacementRule rule = PlacementRule::MostCrossings);
Grid place(const std::string& word, const Grid& g,
           PlacementRule rule = PlacementRule::MostCrossings);
std::optional<std::string> victim(const Grid& g, const WorkingList& list,
                                  const TabuList& tabu = {});
std::pair<Grid, WorkingList> wraparound(Grid g, WorkingList list);
// Bridges disconnected components with unplaced words whose letters match
// the crossing pattern; places bridges until connected or no word fits.
Grid reconnect(const Grid& g, const std::vector<std::string>& candidates);

enum class ResetPolicy { Reset, Continue };
enum class Action { Place, Victim, Wrap, Reset, Resize };
enum class StopReason {
  AllWordsPlaced,
  IterationLimit,
  TargetReached,
  UtilizationReached,
  SizeLimit,
  TimeLimit,
  Stuck,
  Saturated
};

const char* to_string(ResetPolicy p);
const char* to_string(Action a);
const char* to_string(StopReason r);
std::optional<ResetPolicy> reset_policy_from_string(const std::string& s);

struct RunLogEntry {
  std::uint64_t iteration = 0;
  Action action = Action::Place;
  std::string word;  // empty for RESET/RESIZE
  int n_words = 0;
  int grid_size = 0;
};
using RunLog = std::vector<RunLogEntry>;

struct GeneratorConfig {
  Strategy strategy = Strategy::PebbleSand;
  SortOrder order = SortOrder::Ascending;
  std::uint64_t max_iterations = 20000;  // T
  int ge_max = 500;                      // iterations per grid epoch; 0 = fixed grid
  // Advance the epoch early once the list head cycles back to the word it
  // started on (the loop is treading water).
  bool epoch_on_cycle = true;
  ResetPolicy reset_policy = ResetPolicy::Reset;
  int tabu_tenure = -1;                  // -1 = default for vocabulary size, 0 = off
  std::uint64_t seed = 1;                // provenance; the loop itself is deterministic
  int target_words = 0;                  // 0 = place everything
  int max_grid = 0;                      // 0 = unbounded
  double time_limit_seconds = 0.0;       // 0 = none
  double target_utilization = 0.0;       // 0 = none
  int initial_grid = 0;                  // 0 = longest word length
  PlacementRule placement = PlacementRule::MostCrossings;
  // Explore placements stochastically (seeded): pick uniformly among the
  // anchors tied on the primary key instead of the deterministic tie-break.
  // The distribution studies use this; the generator default stays fully
  // deterministic.
  bool stochastic_placement = false;
  bool enable_victim = true;
  bool enable_wrap = true;
  bool repack_on_expand = false;         // repack after a Continue expansion
  bool validate_steps = false;           // check grid invariants every iteration
  std::uint64_t stall_window = 0;        // stop after this many iterations without a new best
};

struct Milestone {
  int words = 0;
  std::uint64_t iteration = 0;
  double utilization = 0.0;
  int grid_size = 0;
};

struct GenerationResult {
  Grid best;
  int n_best = 0;
  std::uint64_t iterations = 0;
  StopReason reason = StopReason::IterationLimit;
  RunLog log;
  std::vector<Milestone> milestones;           // first time each new best was reached
  std::vector<std::string> validation_issues;  // populated in validate_steps mode
};

GenerationResult run_generator(const Vocabulary& vocab, const GeneratorConfig& config);

}  // namespace crossgen
