// Linear-time engine: a deleting automaton over a doubly-linked tape.
//
// Cells that can no longer change are replaced by the SegmentMap describing
// them, and adjacent maps are merged immediately (the deletion scan), so the
// head crosses any maximal frozen block in a single table lookup.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "limla/mapping.hpp"
#include "limla/model.hpp"
#include "limla/naive.hpp"
#include "limla/outcome.hpp"

namespace limla {

enum class CellKind : std::uint8_t { Marker, Letter, Map };

/// Cell arena 0..n+1 with prev/next links. Indices never change; deleted
/// cells are unlinked and never reused. The markers are never deleted.
class ListTape {
 public:
  explicit ListTape(std::span<const SymbolId> word);

  std::size_t n() const { return n_; }
  std::int64_t right_marker() const { return static_cast<std::int64_t>(n_) + 1; }

  CellKind kind(std::int64_t i) const { return cells_[idx(i)].kind; }
  SymbolId letter(std::int64_t i) const { return cells_[idx(i)].letter; }
  std::uint32_t visits(std::int64_t i) const { return cells_[idx(i)].visits; }
  std::int64_t prev(std::int64_t i) const { return cells_[idx(i)].prev; }
  std::int64_t next(std::int64_t i) const { return cells_[idx(i)].next; }
  bool live(std::int64_t i) const { return cells_[idx(i)].live; }
  const SegmentMap& map(std::int64_t i) const { return maps_[idx(i)]; }

  void set_letter(std::int64_t i, SymbolId s) { cells_[idx(i)].letter = s; }
  std::uint32_t add_visit(std::int64_t i) { return ++cells_[idx(i)].visits; }
  void set_map(std::int64_t i, SegmentMap f);
  /// Removes an interior cell from the list.
  void unlink(std::int64_t i);

  /// Live cells from the left marker to the right marker.
  std::vector<std::int64_t> live_cells() const;

 private:
  struct Cell {
    CellKind kind = CellKind::Letter;
    bool live = true;
    SymbolId letter = 0;
    std::uint32_t visits = 0;
    std::int64_t prev = -1;
    std::int64_t next = -1;
  };

  static std::size_t idx(std::int64_t i) { return static_cast<std::size_t>(i); }

  std::size_t n_;
  std::vector<Cell> cells_;
  std::vector<SegmentMap> maps_;
};

inline ListTape init_tape(std::span<const SymbolId> word) { return ListTape(word); }

/// Deliberate engine defects for mutation smoke tests.
enum class Fault : std::uint8_t {
  None,
  SkipRightMerge,  // drop the right neighbour map instead of composing it
};

struct ScanResult {
  Exit exit;  // nullopt: the head never leaves the merged block
  bool merged_left = false;
  bool merged_right = false;
  std::uint64_t compose_calls = 0;
  std::uint64_t max_edges = 0;
};

/// Cell i has just frozen with map g, and δ sent the head out of it as p.
/// Merges g with a Map neighbour on the left, then on the right, redirecting
/// p through the merged block whenever it points into that neighbour.
ScanResult deletion_scan(ListTape& tape, std::int64_t i, DirectedState p, SegmentMap g,
                         Fault fault = Fault::None);

class ShadowMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LinearOptions {
  bool trace = false;
  /// Advance a NaiveMachine in lockstep and check every new map against
  /// describe_segment over the naive frozen block. Throws ShadowMismatch.
  bool shadow = false;
  std::optional<std::uint64_t> max_steps;
  Fault fault = Fault::None;
};

RunOutcome run_linear(const Automaton& aut, std::span<const SymbolId> word, const LinearOptions& opts = {});

/// Generous form of the O(d(n)·|Q|·n) iteration bound checked by the tests.
inline std::uint64_t linear_iteration_bound(std::int64_t d, std::size_t q, std::size_t n) {
  return 16 * static_cast<std::uint64_t>(d + 1) * (q + 1) * (n + 2);
}

}  // namespace limla
