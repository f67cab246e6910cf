#include "limla/linear.hpp"

#include <algorithm>
#include <string>

namespace limla {

ListTape::ListTape(std::span<const SymbolId> word)
    : n_(word.size()), cells_(word.size() + 2), maps_(word.size() + 2) {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    auto& c = cells_[i];
    c.prev = static_cast<std::int64_t>(i) - 1;
    c.next = static_cast<std::int64_t>(i) + 1;
    if (i == 0) {
      c.kind = CellKind::Marker;
      c.letter = kLeftMarker;
    } else if (i == n_ + 1) {
      c.kind = CellKind::Marker;
      c.letter = kRightMarker;
    } else {
      c.letter = word[i - 1];
    }
  }
}

void ListTape::set_map(std::int64_t i, SegmentMap f) {
  cells_[idx(i)].kind = CellKind::Map;
  maps_[idx(i)] = std::move(f);
}

void ListTape::unlink(std::int64_t i) {
  auto& c = cells_[idx(i)];
  if (c.kind == CellKind::Marker) throw std::logic_error("ListTape: end-markers cannot be deleted");
  cells_[idx(c.prev)].next = c.next;
  cells_[idx(c.next)].prev = c.prev;
  c.live = false;
  maps_[idx(i)] = SegmentMap();
}

std::vector<std::int64_t> ListTape::live_cells() const {
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i != -1 && i <= right_marker(); i = i == right_marker() ? -1 : next(i))
    out.push_back(i);
  return out;
}

ScanResult deletion_scan(ListTape& tape, std::int64_t i, DirectedState p, SegmentMap g, Fault fault) {
  ScanResult res;
  Exit cur = p;

  if (auto l = tape.prev(i); tape.kind(l) == CellKind::Map) {
    auto c = compose_full(tape.map(l), g);
    ++res.compose_calls;
    res.max_edges = std::max<std::uint64_t>(res.max_edges, c.edge_traversals);
    if (cur->dir == Move::Left) cur = departure(c, *cur);
    g = std::move(c.map);
    tape.unlink(l);
    res.merged_left = true;
  }

  if (auto r = tape.next(i); tape.kind(r) == CellKind::Map) {
    if (fault == Fault::SkipRightMerge) {
      tape.unlink(r);
    } else {
      auto c = compose_full(g, tape.map(r));
      ++res.compose_calls;
      res.max_edges = std::max<std::uint64_t>(res.max_edges, c.edge_traversals);
      if (cur && cur->dir == Move::Right) cur = departure(c, *cur);
      g = std::move(c.map);
      tape.unlink(r);
    }
    res.merged_right = true;
  }

  tape.set_map(i, std::move(g));
  res.exit = cur;
  return res;
}

namespace {

class LinearRun {
 public:
  LinearRun(const Automaton& aut, std::span<const SymbolId> word, const LinearOptions& opts)
      : aut_(aut),
        word_(word),
        opts_(opts),
        rule_(FreezeRule::for_run(aut, word.size())),
        tape_(word),
        nq_(aut.state_count()),
        detector_((word.size() + 2) * 2 * aut.state_count()),
        accepting_(aut.state_count(), 0) {
    for (auto q : aut.accepting) accepting_[static_cast<std::size_t>(q)] = 1;
    out_.engine = Engine::Linear;
    out_.d = rule_.d;
    out_.traced = opts.trace;
    out_.visits.assign(word.size() + 2, 0);
    out_.writes.assign(word.size() + 2, 0);
    if (opts.shadow) shadow_.emplace(aut, word);
  }

  RunOutcome run() {
    const std::int64_t rm = tape_.right_marker();
    if (word_.empty() && accepting_[static_cast<std::size_t>(aut_.start)]) return finish(Verdict::accept());
    if (!word_.empty() && rule_.frozen(aut_, word_[0], 0)) collapse_frozen_input();

    std::int64_t pos = 1;
    DirectedState cur{aut_.start, Move::Right};

    for (;;) {
      if (opts_.max_steps && out_.loop_iterations >= *opts_.max_steps) throw BudgetExceeded(*opts_.max_steps);

      Exit next;
      StepCase kind = StepCase::AMove;
      bool scanned = false;
      const CellKind cell = tape_.kind(pos);

      if (cell == CellKind::Letter) {
        detector_.clear();
      } else if (!detector_.insert(static_cast<std::size_t>(pos) * 2 * nq_ + cur.index())) {
        return finish(Verdict::reject(RejectReason::LoopDetected));
      }
      out_.max_stretch = std::max<std::uint64_t>(out_.max_stretch, detector_.size());
      ++out_.loop_iterations;

      TraceRecord rec;
      rec.step = out_.loop_iterations;
      rec.pos = pos;
      rec.state = cur.state;

      if (cell == CellKind::Marker) {
        const SymbolId sym = tape_.letter(pos);
        const auto& t = aut_.transition(cur.state, sym);
        ++out_.moves.marker_moves;
        ++out_.visits[static_cast<std::size_t>(pos)];
        rec.read = rec.write = sym;
        rec.move = t.move;
        next = DirectedState{t.to, t.move};
      } else if (cell == CellKind::Letter) {
        const SymbolId sym = tape_.letter(pos);
        const auto& t = aut_.transition(cur.state, sym);
        const auto visits = tape_.add_visit(pos);
        ++out_.visits[static_cast<std::size_t>(pos)];
        ++out_.writes[static_cast<std::size_t>(pos)];
        ++out_.total_writes;
        out_.last_write_step = out_.loop_iterations;
        rec.read = sym;
        rec.write = t.write;
        rec.move = t.move;
        next = DirectedState{t.to, t.move};
        if (!rule_.freezes_after(aut_, t.write, visits)) {
          tape_.set_letter(pos, t.write);
          ++out_.moves.letter_moves;
        } else {
          kind = StepCase::Scan;
          scanned = true;
          ++out_.moves.scans;
          auto scan = deletion_scan(tape_, pos, *next, cf(aut_, t.write), opts_.fault);
          out_.compose_calls += scan.compose_calls;
          out_.max_compose_edges = std::max(out_.max_compose_edges, scan.max_edges);
          next = scan.exit;
          rec.merged_left = scan.merged_left;
          rec.merged_right = scan.merged_right;
          rec.seg_left = tape_.prev(pos) + 1;
          rec.seg_right = tape_.next(pos) - 1;
          if (next) rec.exit = next->dir;
        }
      } else {
        kind = StepCase::MapJump;
        ++out_.moves.map_jumps;
        next = tape_.map(pos)(cur);
        rec.read = rec.write = kMapSymbol;
        rec.frozen = true;
        rec.move = next ? next->dir : cur.dir;
      }
      rec.kind = kind;
      if (opts_.trace) out_.trace.push_back(rec);

      if (!next) return finish(Verdict::reject(RejectReason::MapLoop));

      const std::int64_t from = pos;
      pos = next->dir == Move::Left ? tape_.prev(pos) : tape_.next(pos);
      cur = *next;

      if (shadow_) sync_shadow(rec, from, pos, cur, scanned);

      if (pos == rm && accepting_[static_cast<std::size_t>(cur.state)]) {
        if (shadow_ && !shadow_->accepted()) mismatch("linear engine accepted, shadow did not");
        return finish(Verdict::accept());
      }
    }
  }

 private:
  RunOutcome finish(Verdict v) {
    out_.verdict = v;
    out_.steps = out_.loop_iterations;
    return std::move(out_);
  }

  // Every cell frozen from the start (counted mode, d(n) = 0): the whole
  // interior is one frozen block before the first move.
  void collapse_frozen_input() {
    SegmentMap g = cf(aut_, word_[0]);
    for (std::size_t i = 1; i < word_.size(); ++i) {
      auto c = compose_full(g, cf(aut_, word_[i]));
      ++out_.compose_calls;
      out_.max_compose_edges = std::max<std::uint64_t>(out_.max_compose_edges, c.edge_traversals);
      g = std::move(c.map);
      tape_.unlink(static_cast<std::int64_t>(i) + 1);
    }
    tape_.set_map(1, std::move(g));
    if (shadow_) check_map(1);
  }

  [[noreturn]] void mismatch(const std::string& what) const {
    throw ShadowMismatch("shadow mismatch after iteration " + std::to_string(out_.loop_iterations) + ": " + what);
  }

  void walk_frozen() {
    const std::uint64_t limit = (word_.size() + 2) * nq_ + 2;
    std::uint64_t taken = 0;
    while (!shadow_->is_marker_cell(shadow_->pos()) && shadow_->frozen(shadow_->pos())) {
      if (++taken > limit) mismatch("shadow never leaves the frozen block at " + std::to_string(shadow_->pos()));
      shadow_->step();
      if (shadow_->accepted()) return;
    }
  }

  void sync_shadow(const TraceRecord& rec, std::int64_t from, std::int64_t pos, DirectedState cur, bool scanned) {
    auto& naive = *shadow_;
    if (rec.kind != StepCase::MapJump) {
      auto n = naive.step();
      if (n.frozen || n.pos != rec.pos || n.state != rec.state || n.read != rec.read || n.write != rec.write ||
          n.move != rec.move)
        mismatch("regular move differs at cell " + std::to_string(rec.pos));
    }
    if (tape_.kind(pos) == CellKind::Map) {
      if (naive.accepted()) return;
      std::int64_t entry = cur.dir == Move::Right ? tape_.prev(pos) + 1 : tape_.next(pos) - 1;
      if (naive.pos() != entry || naive.state() != cur.state || !naive.frozen(entry))
        mismatch("head did not enter the frozen block at " + std::to_string(entry));
    } else {
      walk_frozen();
      if (naive.pos() != pos || naive.state() != cur.state)
        mismatch("head at " + std::to_string(pos) + " but shadow at " + std::to_string(naive.pos()));
      if (tape_.kind(pos) == CellKind::Letter && tape_.letter(pos) != naive.letter(pos))
        mismatch("letter differs at cell " + std::to_string(pos));
    }
    if (scanned) check_map(from);
  }

  void check_map(std::int64_t i) const {
    const auto& naive = *shadow_;
    const std::int64_t l = tape_.prev(i) + 1;
    const std::int64_t r = tape_.next(i) - 1;
    if (tape_.kind(tape_.prev(i)) == CellKind::Map || tape_.kind(tape_.next(i)) == CellKind::Map)
      mismatch("adjacent map cells around " + std::to_string(i));
    std::vector<SymbolId> block;
    for (std::int64_t k = l; k <= r; ++k) {
      if (!naive.frozen(k)) mismatch("cell " + std::to_string(k) + " is inside a map but not frozen");
      block.push_back(naive.letter(k));
    }
    if (describe_segment(aut_, block) != tape_.map(i))
      mismatch("map at cell " + std::to_string(i) + " does not describe [" + std::to_string(l) + ", " +
               std::to_string(r) + "]");
  }

  const Automaton& aut_;
  std::span<const SymbolId> word_;
  const LinearOptions& opts_;
  FreezeRule rule_;
  ListTape tape_;
  std::size_t nq_;
  StretchDetector detector_;
  std::vector<char> accepting_;
  std::optional<NaiveMachine> shadow_;
  RunOutcome out_;
};

}  // namespace

RunOutcome run_linear(const Automaton& aut, std::span<const SymbolId> word, const LinearOptions& opts) {
  return LinearRun(aut, word, opts).run();
}

}  // namespace limla
