// Machine descriptions for deterministic d-limited and d(n)-limited automata.
//
// An Automaton owns its state names, tape alphabet and a dense transition
// table indexed by (state, column). Columns 0..T-1 are tape symbols in
// declaration order; column T is the left end-marker and T+1 the right one.
// The end-markers are never members of the tape alphabet.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace limla {

using StateId = std::int32_t;
using SymbolId = std::int32_t;

inline constexpr SymbolId kLeftMarker = -1;
inline constexpr SymbolId kRightMarker = -2;

inline constexpr std::string_view kLeftMarkerToken = "|>";
inline constexpr std::string_view kRightMarkerToken = "<|";

constexpr bool is_marker(SymbolId s) { return s == kLeftMarker || s == kRightMarker; }

// Canonical directed-state index is 2*state + dir.
enum class Move : std::uint8_t { Right = 0, Left = 1 };

constexpr char move_char(Move m) { return m == Move::Left ? 'L' : 'R'; }

enum class Mode : std::uint8_t { Ranked, Counted };

struct DLimitSpec {
  enum class Kind : std::uint8_t { Const, Log2, Sqrt, Id };

  Kind kind = Kind::Const;
  std::int64_t k = 0;  // only meaningful for Const

  static DLimitSpec constant(std::int64_t k) { return {Kind::Const, k}; }
  static DLimitSpec log2() { return {Kind::Log2, 0}; }
  static DLimitSpec sqrt() { return {Kind::Sqrt, 0}; }
  static DLimitSpec id() { return {Kind::Id, 0}; }

  bool is_const() const { return kind == Kind::Const; }
  friend bool operator==(const DLimitSpec&, const DLimitSpec&) = default;
};

/// Per-cell rewrite budget for an input of length n.
std::int64_t d_of(const DLimitSpec& spec, std::int64_t n);

/// `2`, `log2`, `sqrt` or `id`.
std::string to_string(const DLimitSpec& spec);
std::optional<DLimitSpec> parse_dlimit(std::string_view text);

struct TapeSymbol {
  std::string name;
  int rank = 0;  // always 0 in counted mode

  friend bool operator==(const TapeSymbol&, const TapeSymbol&) = default;
};

struct Transition {
  StateId to = 0;
  SymbolId write = 0;
  Move move = Move::Right;

  friend bool operator==(const Transition&, const Transition&) = default;
};

struct Automaton {
  Mode mode = Mode::Ranked;
  DLimitSpec dlimit;
  std::vector<std::string> states;
  std::vector<SymbolId> input;  // indices into tape
  std::vector<TapeSymbol> tape;
  StateId start = 0;
  std::vector<StateId> accepting;
  // |states| * (|tape| + 2) entries; empty slots are totality violations.
  std::vector<std::optional<Transition>> delta;

  std::size_t state_count() const { return states.size(); }
  std::size_t column_count() const { return tape.size() + 2; }

  std::size_t column(SymbolId s) const {
    if (s == kLeftMarker) return tape.size();
    if (s == kRightMarker) return tape.size() + 1;
    return static_cast<std::size_t>(s);
  }
  SymbolId symbol_at_column(std::size_t c) const {
    if (c == tape.size()) return kLeftMarker;
    if (c == tape.size() + 1) return kRightMarker;
    return static_cast<SymbolId>(c);
  }

  /// Resizes delta to |states| x (|tape|+2), dropping existing entries.
  void reset_delta() { delta.assign(state_count() * column_count(), std::nullopt); }

  std::optional<Transition>& slot(StateId q, SymbolId s) {
    return delta[static_cast<std::size_t>(q) * column_count() + column(s)];
  }
  const std::optional<Transition>& slot(StateId q, SymbolId s) const {
    return delta[static_cast<std::size_t>(q) * column_count() + column(s)];
  }

  /// Requires a validated (total) table.
  const Transition& transition(StateId q, SymbolId s) const { return *slot(q, s); }

  bool is_accepting(StateId q) const;
  int rank(SymbolId s) const { return tape[static_cast<std::size_t>(s)].rank; }

  std::string symbol_name(SymbolId s) const;
  std::optional<SymbolId> find_symbol(std::string_view name) const;
  std::optional<StateId> find_state(std::string_view name) const;

  /// Token count of the canonical serialized form (the machine size m).
  std::size_t description_len() const;

  friend bool operator==(const Automaton&, const Automaton&) = default;
};

/// Precomputed per-run view of the cell freezing rule.
///
/// Ranked, d > 0: a cell is frozen once its letter has rank d.
/// Ranked, d == 0: every cell freezes on its first visit and is never
/// rewritten (input letters act as rank -1).
/// Counted: a cell is frozen once it has been visited d(n) times.
struct FreezeRule {
  Mode mode = Mode::Ranked;
  std::int64_t d = 0;

  static FreezeRule for_run(const Automaton& aut, std::size_t n) {
    return {aut.mode, d_of(aut.dlimit, static_cast<std::int64_t>(n))};
  }

  bool frozen(const Automaton& aut, SymbolId letter, std::uint64_t visits) const {
    if (mode == Mode::Counted) return static_cast<std::int64_t>(visits) >= d;
    if (d == 0) return visits >= 1;
    return aut.rank(letter) == d;
  }

  /// Whether a visit to an unfrozen cell that writes `written` leaves the
  /// cell frozen (`visits_after` counts this visit).
  bool freezes_after(const Automaton& aut, SymbolId written, std::uint64_t visits_after) const {
    return frozen(aut, written, visits_after);
  }
};

}  // namespace limla
