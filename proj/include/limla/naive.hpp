// Reference engine: executes the d-LA / d(n)-LA semantics cell by cell.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "limla/model.hpp"
#include "limla/outcome.hpp"

namespace limla {

/// Plain tape of cells 0..n+1 with the two end-markers and per-cell visit
/// counters. Single-steppable so it can shadow the linear engine.
class NaiveMachine {
 public:
  NaiveMachine(const Automaton& aut, std::span<const SymbolId> word);

  /// Applies δ once at the head, writes (unless frozen), counts the visit
  /// and moves. Returns the record of the step just taken.
  TraceRecord step();

  std::int64_t pos() const { return pos_; }
  StateId state() const { return state_; }
  std::size_t n() const { return n_; }
  std::uint64_t steps() const { return steps_; }
  bool accepted() const { return accepted_; }

  bool is_marker_cell(std::int64_t i) const { return i == 0 || i == static_cast<std::int64_t>(n_) + 1; }
  bool frozen(std::int64_t i) const;
  SymbolId letter(std::int64_t i) const { return letters_[static_cast<std::size_t>(i)]; }
  std::uint32_t visits(std::int64_t i) const { return visits_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint32_t>& visit_counts() const { return visits_; }
  const std::vector<std::uint32_t>& write_counts() const { return writes_; }
  const FreezeRule& rule() const { return rule_; }

 private:
  const Automaton* aut_;
  FreezeRule rule_;
  std::size_t n_;
  std::vector<SymbolId> letters_;
  std::vector<std::uint32_t> visits_;
  std::vector<std::uint32_t> writes_;
  std::int64_t pos_;
  StateId state_;
  std::uint64_t steps_ = 0;
  bool accepted_ = false;
};

/// Exact loop detector: the set of configurations seen since the last write.
/// Keys are dense; clear() bumps a generation stamp.
class StretchDetector {
 public:
  explicit StretchDetector(std::size_t key_space) : stamp_(key_space, 0) {}

  /// Returns false if `key` was already seen in the current stretch.
  bool insert(std::size_t key) {
    if (stamp_[key] == generation_) return false;
    stamp_[key] = generation_;
    ++size_;
    return true;
  }
  void clear() {
    ++generation_;
    size_ = 0;
  }
  std::size_t size() const { return size_; }

 private:
  std::vector<std::uint64_t> stamp_;
  std::uint64_t generation_ = 1;
  std::size_t size_ = 0;
};

struct RunOptions {
  bool trace = false;
  std::optional<std::uint64_t> max_steps;
};

/// Runs to acceptance or a detected loop; throws BudgetExceeded when
/// max_steps is given and reached first. Requires a validated automaton
/// and a word over its input alphabet.
RunOutcome run_naive(const Automaton& aut, std::span<const SymbolId> word, const RunOptions& opts = {});

}  // namespace limla
