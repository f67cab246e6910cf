// Run results shared by both engines, trace records and their JSON-lines form.

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "limla/model.hpp"

namespace limla {

enum class RejectReason : std::uint8_t { None, LoopDetected, MapLoop };

struct Verdict {
  bool accepted = false;
  RejectReason reason = RejectReason::None;

  static Verdict accept() { return {true, RejectReason::None}; }
  static Verdict reject(RejectReason r) { return {false, r}; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

const char* to_string(const Verdict& v);

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t steps)
      : std::runtime_error("step budget of " + std::to_string(steps) + " exceeded"), steps_(steps) {}
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t steps_;
};

enum class Engine : std::uint8_t { Naive, Linear };

// Linear-engine iteration kinds; naive records use Plain.
enum class StepCase : std::uint8_t { Plain, AMove, Scan, MapJump };

// Placeholder symbol for Map cells in linear traces.
inline constexpr SymbolId kMapSymbol = -3;

struct TraceRecord {
  std::uint64_t step = 0;
  std::int64_t pos = 0;
  StateId state = 0;
  SymbolId read = 0;
  SymbolId write = 0;
  Move move = Move::Right;  // δ's move; for map jumps the exit direction
  bool frozen = false;      // the visited cell was frozen before this step
  StepCase kind = StepCase::Plain;
  // Scan records only.
  bool merged_left = false;
  bool merged_right = false;
  std::int64_t seg_left = 0;
  std::int64_t seg_right = 0;
  Move exit = Move::Right;
};

struct MoveCounts {
  std::uint64_t letter_moves = 0;  // unfrozen interior letters (linear: case a)
  std::uint64_t frozen_moves = 0;  // naive only
  std::uint64_t marker_moves = 0;
  std::uint64_t scans = 0;         // linear only
  std::uint64_t map_jumps = 0;     // linear only

  std::uint64_t total() const { return letter_moves + frozen_moves + marker_moves + scans + map_jumps; }
};

struct RunOutcome {
  Engine engine = Engine::Naive;
  Verdict verdict;
  std::uint64_t steps = 0;            // == moves.total()
  std::uint64_t loop_iterations = 0;  // linear: main-loop iterations; naive: == steps
  MoveCounts moves;
  std::int64_t d = 0;                 // d(n) used for this run
  std::vector<std::uint32_t> visits;  // per cell 0..n+1
  std::vector<std::uint32_t> writes;  // per cell, visits while unfrozen
  std::uint64_t total_writes = 0;
  std::uint64_t last_write_step = 0;  // 1-based step of the last write, 0 if none
  std::uint64_t compose_calls = 0;
  std::uint64_t max_compose_edges = 0;
  std::uint64_t max_stretch = 0;      // longest write-free stretch seen by the detector
  bool traced = false;
  std::vector<TraceRecord> trace;
};

struct RegularMove {
  StateId state;
  std::int64_t pos;
  SymbolId read;
  SymbolId write;
  Move move;

  friend bool operator==(const RegularMove&, const RegularMove&) = default;
};

/// Moves whose visited cell was unfrozen or a marker, in order. Works on
/// traces from either engine.
std::vector<RegularMove> regular_trace(const RunOutcome& outcome);

/// JSON-lines: one record per step plus a final verdict record.
void write_trace_jsonl(std::ostream& out, const Automaton& aut, const RunOutcome& outcome);

std::ostream& operator<<(std::ostream& out, const RegularMove& m);

}  // namespace limla
