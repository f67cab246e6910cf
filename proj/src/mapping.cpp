#include "limla/mapping.hpp"

#include <sstream>

namespace limla {

SegmentMap::SegmentMap(std::size_t q_count) : q_count_(q_count), table_(2 * q_count, kLoop) {}

SegmentMap SegmentMap::transparent(std::size_t q_count) {
  SegmentMap t(q_count);
  for (std::size_t i = 0; i < t.size(); ++i) t.table_[i] = static_cast<std::int32_t>(i);
  return t;
}

SegmentMap cf(const Automaton& aut, SymbolId letter) {
  SegmentMap f(aut.state_count());
  for (StateId q = 0; q < static_cast<StateId>(aut.state_count()); ++q) {
    const auto& t = aut.transition(q, letter);
    DirectedState out{t.to, t.move};
    f.set({q, Move::Right}, out);
    f.set({q, Move::Left}, out);
  }
  return f;
}

namespace {

// Intermediate graph: six blocks of |Q| vertices.
//   LinR   enters f from the outside, moving right      (origin of h(→q))
//   RinL   enters g from the outside, moving left       (origin of h(←q))
//   Bright crosses the f|g boundary rightward, i.e. g's →in
//   Bleft  crosses the f|g boundary leftward, i.e. f's ←in
//   LoutL  leaves f to the left  (terminal)
//   RoutR  leaves g to the right (terminal)
// f supplies the edges out of LinR and Bleft, g those out of Bright and RinL.
class CompositionGraph {
 public:
  enum Block : std::size_t { LinR = 0, RinL, Bright, Bleft, LoutL, RoutR, kBlocks };
  static constexpr std::int32_t kNone = -1;

  CompositionGraph(const SegmentMap& f, const SegmentMap& g)
      : q_(f.q_count()), next_(kBlocks * q_, kNone), mark_(kBlocks * q_, kNone), result_(4 * q_, kUnset) {
    for (std::size_t q = 0; q < q_; ++q) {
      auto s = static_cast<StateId>(q);
      link(vertex(LinR, q), f({s, Move::Right}), /*left_part=*/true);
      link(vertex(Bleft, q), f({s, Move::Left}), true);
      link(vertex(Bright, q), g({s, Move::Right}), false);
      link(vertex(RinL, q), g({s, Move::Left}), false);
    }
  }

  std::size_t vertex(Block b, std::size_t q) const { return static_cast<std::size_t>(b) * q_ + q; }

  // Walks from `origin` (a vertex of LinR, RinL, Bright or Bleft). Boundary
  // origins are labelled themselves so a path returning to them is a loop.
  Exit resolve(std::size_t origin) {
    if (block_of(origin) == Bright || block_of(origin) == Bleft) {
      if (mark_[origin] != kNone) return result(static_cast<std::size_t>(mark_[origin]));
      mark_[origin] = static_cast<std::int32_t>(origin);
    }
    const auto label = static_cast<std::int32_t>(origin);
    std::int32_t res = kUnset;
    std::int32_t u = advance(origin);
    while (u != kNone && !terminal(static_cast<std::size_t>(u)) && res == kUnset) {
      auto uu = static_cast<std::size_t>(u);
      if (mark_[uu] == kNone) {
        mark_[uu] = label;
        u = advance(uu);
      } else if (mark_[uu] == label) {
        res = kLoopResult;
      } else {
        res = result_[slot(static_cast<std::size_t>(mark_[uu]))];
      }
    }
    if (res == kUnset) res = u == kNone ? kLoopResult : exit_of(static_cast<std::size_t>(u));
    result_[slot(origin)] = res;
    return decode(res);
  }

  std::size_t edges() const { return edges_; }

 private:
  static constexpr std::int32_t kUnset = -2;
  static constexpr std::int32_t kLoopResult = -1;

  Block block_of(std::size_t v) const { return static_cast<Block>(v / q_); }
  bool terminal(std::size_t v) const { return block_of(v) == LoutL || block_of(v) == RoutR; }

  // Origin blocks occupy the first four block slots.
  std::size_t slot(std::size_t origin) const { return origin; }

  Exit result(std::size_t origin) const { return decode(result_[slot(origin)]); }

  static Exit decode(std::int32_t r) {
    if (r == kLoopResult) return std::nullopt;
    return DirectedState::from_index(static_cast<std::size_t>(r));
  }

  std::int32_t exit_of(std::size_t v) const {
    auto q = static_cast<StateId>(v % q_);
    DirectedState out{q, block_of(v) == LoutL ? Move::Left : Move::Right};
    return static_cast<std::int32_t>(out.index());
  }

  std::int32_t advance(std::size_t v) {
    auto n = next_[v];
    if (n != kNone) ++edges_;
    return n;
  }

  void link(std::size_t from, Exit out, bool left_part) {
    if (!out) return;
    auto p = static_cast<std::size_t>(out->state);
    Block target;
    if (left_part)
      target = out->dir == Move::Left ? LoutL : Bright;
    else
      target = out->dir == Move::Right ? RoutR : Bleft;
    next_[from] = static_cast<std::int32_t>(vertex(target, p));
  }

  std::size_t q_;
  std::vector<std::int32_t> next_;
  std::vector<std::int32_t> mark_;
  std::vector<std::int32_t> result_;
  std::size_t edges_ = 0;
};

}  // namespace

Composition compose_full(const SegmentMap& f, const SegmentMap& g) {
  if (f.q_count() != g.q_count())
    throw SizeMismatch("compose_full: q_count " + std::to_string(f.q_count()) + " vs " +
                       std::to_string(g.q_count()));
  const std::size_t q = f.q_count();
  CompositionGraph graph(f, g);
  Composition c{SegmentMap(q), SegmentMap(q), 0};
  for (std::size_t s = 0; s < q; ++s)
    c.map.set({static_cast<StateId>(s), Move::Right}, graph.resolve(graph.vertex(CompositionGraph::LinR, s)));
  for (std::size_t s = 0; s < q; ++s)
    c.map.set({static_cast<StateId>(s), Move::Left}, graph.resolve(graph.vertex(CompositionGraph::RinL, s)));
  for (std::size_t s = 0; s < q; ++s)
    c.departure.set({static_cast<StateId>(s), Move::Right},
                    graph.resolve(graph.vertex(CompositionGraph::Bright, s)));
  for (std::size_t s = 0; s < q; ++s)
    c.departure.set({static_cast<StateId>(s), Move::Left},
                    graph.resolve(graph.vertex(CompositionGraph::Bleft, s)));
  c.edge_traversals = graph.edges();
  return c;
}

SegmentMap describe_segment(const Automaton& aut, std::span<const SymbolId> letters) {
  if (letters.empty()) throw EmptySegment();
  const std::size_t q = aut.state_count();
  const auto len = static_cast<std::int64_t>(letters.size());
  SegmentMap f(q);
  std::vector<std::uint32_t> seen(letters.size() * q, 0);
  std::uint32_t stamp = 0;
  for (std::size_t i = 0; i < 2 * q; ++i) {
    auto entry = DirectedState::from_index(i);
    ++stamp;
    std::int64_t off = entry.dir == Move::Right ? 0 : len - 1;
    StateId state = entry.state;
    Exit out;
    for (;;) {
      auto key = static_cast<std::size_t>(off) * q + static_cast<std::size_t>(state);
      if (seen[key] == stamp) {
        out = std::nullopt;
        break;
      }
      seen[key] = stamp;
      const auto& t = aut.transition(state, letters[static_cast<std::size_t>(off)]);
      state = t.to;
      off += t.move == Move::Right ? 1 : -1;
      if (off < 0) {
        out = DirectedState{state, Move::Left};
        break;
      }
      if (off >= len) {
        out = DirectedState{state, Move::Right};
        break;
      }
    }
    f.set(entry, out);
  }
  return f;
}

namespace {

std::string dump_with(const SegmentMap& f, const auto& name) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto in = DirectedState::from_index(i);
    out << name(in.state) << ',' << move_char(in.dir) << " -> ";
    if (auto o = f(in))
      out << name(o->state) << ',' << move_char(o->dir);
    else
      out << "LOOP";
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string dump(const SegmentMap& f) {
  return dump_with(f, [](StateId q) { return std::to_string(q); });
}

std::string dump(const SegmentMap& f, const Automaton& aut) {
  return dump_with(f, [&](StateId q) { return aut.states[static_cast<std::size_t>(q)]; });
}

}  // namespace limla
