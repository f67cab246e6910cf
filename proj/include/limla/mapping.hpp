// Segment description mappings.
//
// A SegmentMap tells, for every directed entry into a frozen tape segment,
// where the head leaves it. Entry →q means the head arrives at the left end
// moving right in state q; entry ←q arrives at the right end moving left.
// An output →p leaves past the right end, ←p past the left end, and LOOP
// means the head never leaves.
//
// Two maps of adjacent segments compose (f ⋄ g) into the map of the joined
// segment. compose_full also yields the departure table: where the joined
// segment is left when the head crosses the internal boundary.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "limla/model.hpp"

namespace limla {

struct DirectedState {
  StateId state = 0;
  Move dir = Move::Right;

  constexpr std::size_t index() const {
    return 2 * static_cast<std::size_t>(state) + static_cast<std::size_t>(dir);
  }
  static constexpr DirectedState from_index(std::size_t i) {
    return {static_cast<StateId>(i / 2), (i & 1U) ? Move::Left : Move::Right};
  }
  friend bool operator==(const DirectedState&, const DirectedState&) = default;
};

/// LOOP is std::nullopt.
using Exit = std::optional<DirectedState>;

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SegmentMap {
 public:
  static constexpr std::int32_t kLoop = -1;

  SegmentMap() = default;
  /// Every entry maps to LOOP.
  explicit SegmentMap(std::size_t q_count);

  /// t(→q) = →q, t(←q) = ←q: the two-sided identity of ⋄.
  static SegmentMap transparent(std::size_t q_count);

  std::size_t q_count() const { return q_count_; }
  std::size_t size() const { return table_.size(); }

  Exit operator()(DirectedState in) const {
    auto v = table_[in.index()];
    if (v == kLoop) return std::nullopt;
    return DirectedState::from_index(static_cast<std::size_t>(v));
  }
  void set(DirectedState in, Exit out) {
    table_[in.index()] = out ? static_cast<std::int32_t>(out->index()) : kLoop;
  }

  std::span<const std::int32_t> table() const { return table_; }

  friend bool operator==(const SegmentMap&, const SegmentMap&) = default;

 private:
  std::size_t q_count_ = 0;
  std::vector<std::int32_t> table_;
};

inline Exit apply(const SegmentMap& f, DirectedState s) { return f(s); }

/// Map of a single frozen cell holding `letter`: every entry in state q
/// leaves as δ(q, letter) dictates. Never LOOP.
SegmentMap cf(const Automaton& aut, SymbolId letter);

struct Composition {
  SegmentMap map;        // f ⋄ g
  SegmentMap departure;  // indexed by the boundary crossing →p / ←p
  std::size_t edge_traversals = 0;
};

/// Marking walk over the intermediate graph. Each vertex is left at most
/// once, so edge_traversals <= 4|Q|. Throws SizeMismatch.
Composition compose_full(const SegmentMap& f, const SegmentMap& g);

inline SegmentMap compose(const SegmentMap& f, const SegmentMap& g) { return compose_full(f, g).map; }

/// →p: head crosses from the left part into the right part in state p.
/// ←p: head crosses from the right part into the left part in state p.
inline Exit departure(const Composition& c, DirectedState s) { return c.departure(s); }

class EmptySegment : public std::invalid_argument {
 public:
  EmptySegment() : std::invalid_argument("describe_segment: empty segment") {}
};

/// Direct head-walk over a frozen letter sequence from each of the 2|Q|
/// entries; a repeated (offset, state) pair is a LOOP. Test oracle.
SegmentMap describe_segment(const Automaton& aut, std::span<const SymbolId> letters);

/// `q,R -> p,L` lines ordered by canonical input index.
std::string dump(const SegmentMap& f);
std::string dump(const SegmentMap& f, const Automaton& aut);

}  // namespace limla
