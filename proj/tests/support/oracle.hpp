// Brute-force references for the segment-map algebra. These follow paths
// one step at a time with a fresh visited set per entry and share no code
// with the library's marking walk.

#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "limla/mapping.hpp"
#include "limla/model.hpp"
#include "limla/zoo.hpp"

namespace oracle {

using limla::DirectedState;
using limla::Exit;
using limla::Move;
using limla::SegmentMap;

struct Composed {
  SegmentMap h;
  SegmentMap dep;
};

// Head inside the glued segment: part 0 is f (left), part 1 is g (right).
inline Exit follow(const SegmentMap& f, const SegmentMap& g, int part, DirectedState s) {
  std::set<std::pair<int, std::size_t>> seen;
  for (;;) {
    if (!seen.insert({part, s.index()}).second) return std::nullopt;
    Exit out = part == 0 ? f(s) : g(s);
    if (!out) return std::nullopt;
    if (part == 0) {
      if (out->dir == Move::Left) return out;
      part = 1;
    } else {
      if (out->dir == Move::Right) return out;
      part = 0;
    }
    s = *out;
  }
}

inline Composed compose(const SegmentMap& f, const SegmentMap& g) {
  const std::size_t q = f.q_count();
  Composed c{SegmentMap(q), SegmentMap(q)};
  for (std::size_t i = 0; i < 2 * q; ++i) {
    auto s = DirectedState::from_index(i);
    // Right-moving entries come in at f's left end, left-moving ones at g's right end.
    c.h.set(s, follow(f, g, s.dir == Move::Right ? 0 : 1, s));
    // Boundary crossings: rightward lands in g, leftward lands in f.
    c.dep.set(s, follow(f, g, s.dir == Move::Right ? 1 : 0, s));
  }
  return c;
}

// Direct walk over frozen letters; entry →q starts at the leftmost cell,
// ←q at the rightmost.
inline SegmentMap describe(const limla::Automaton& aut, std::span<const limla::SymbolId> letters) {
  const std::size_t q = aut.state_count();
  const auto len = static_cast<std::int64_t>(letters.size());
  SegmentMap out(q);
  for (std::size_t i = 0; i < 2 * q; ++i) {
    auto s = DirectedState::from_index(i);
    std::int64_t pos = s.dir == Move::Right ? 0 : len - 1;
    limla::StateId state = s.state;
    std::set<std::pair<std::int64_t, limla::StateId>> seen;
    Exit result;
    for (;;) {
      if (!seen.insert({pos, state}).second) {
        result = std::nullopt;
        break;
      }
      const auto& t = aut.transition(state, letters[static_cast<std::size_t>(pos)]);
      state = t.to;
      pos += t.move == Move::Right ? 1 : -1;
      if (pos < 0 || pos >= len) {
        result = DirectedState{state, t.move};
        break;
      }
    }
    out.set(s, result);
  }
  return out;
}

inline SegmentMap random_map(limla::SplitMix64& rng, std::size_t q, unsigned loop_percent = 15) {
  SegmentMap m(q);
  for (std::size_t i = 0; i < 2 * q; ++i) {
    if (rng.below(100) < loop_percent)
      m.set(DirectedState::from_index(i), std::nullopt);
    else
      m.set(DirectedState::from_index(i), DirectedState::from_index(rng.below(2 * q)));
  }
  return m;
}

}  // namespace oracle
