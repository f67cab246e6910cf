#include "limla/naive.hpp"

#include <algorithm>

namespace limla {

NaiveMachine::NaiveMachine(const Automaton& aut, std::span<const SymbolId> word)
    : aut_(&aut),
      rule_(FreezeRule::for_run(aut, word.size())),
      n_(word.size()),
      letters_(word.size() + 2),
      visits_(word.size() + 2, 0),
      writes_(word.size() + 2, 0),
      pos_(1),  // first input cell, or the right marker when the word is empty
      state_(aut.start) {
  letters_.front() = kLeftMarker;
  letters_.back() = kRightMarker;
  std::copy(word.begin(), word.end(), letters_.begin() + 1);
}

bool NaiveMachine::frozen(std::int64_t i) const {
  if (is_marker_cell(i)) return false;
  auto idx = static_cast<std::size_t>(i);
  return rule_.frozen(*aut_, letters_[idx], visits_[idx]);
}

TraceRecord NaiveMachine::step() {
  auto idx = static_cast<std::size_t>(pos_);
  const SymbolId read = letters_[idx];
  const bool was_frozen = frozen(pos_);
  const auto& t = aut_->transition(state_, read);

  TraceRecord rec;
  rec.step = ++steps_;
  rec.pos = pos_;
  rec.state = state_;
  rec.read = read;
  rec.write = was_frozen ? read : t.write;
  rec.move = t.move;
  rec.frozen = was_frozen;

  if (!is_marker_cell(pos_)) {
    if (!was_frozen) {
      letters_[idx] = t.write;
      ++writes_[idx];
    }
  }
  ++visits_[idx];
  state_ = t.to;
  pos_ += t.move == Move::Right ? 1 : -1;
  accepted_ = pos_ == static_cast<std::int64_t>(n_) + 1 && aut_->is_accepting(state_);
  return rec;
}

RunOutcome run_naive(const Automaton& aut, std::span<const SymbolId> word, const RunOptions& opts) {
  NaiveMachine m(aut, word);
  RunOutcome out;
  out.engine = Engine::Naive;
  out.d = m.rule().d;
  out.traced = opts.trace;

  const std::size_t nq = aut.state_count();
  StretchDetector detector((word.size() + 2) * nq);

  std::vector<char> accepting(nq, 0);
  for (auto q : aut.accepting) accepting[static_cast<std::size_t>(q)] = 1;

  auto finish = [&](Verdict v) {
    out.verdict = v;
    out.steps = m.steps();
    out.loop_iterations = out.steps;
    out.visits = m.visit_counts();
    out.writes = m.write_counts();
    return out;
  };

  if (word.empty() && accepting[static_cast<std::size_t>(aut.start)]) return finish(Verdict::accept());

  for (;;) {
    const auto pos = m.pos();
    const bool marker = m.is_marker_cell(pos);
    const bool writes = !marker && !m.frozen(pos);
    if (writes) {
      detector.clear();
    } else if (!detector.insert(static_cast<std::size_t>(pos) * nq + static_cast<std::size_t>(m.state()))) {
      return finish(Verdict::reject(RejectReason::LoopDetected));
    }
    out.max_stretch = std::max<std::uint64_t>(out.max_stretch, detector.size());
    if (opts.max_steps && m.steps() >= *opts.max_steps) throw BudgetExceeded(*opts.max_steps);

    auto rec = m.step();
    if (marker)
      ++out.moves.marker_moves;
    else if (writes)
      ++out.moves.letter_moves;
    else
      ++out.moves.frozen_moves;
    if (writes) {
      ++out.total_writes;
      out.last_write_step = rec.step;
    }
    if (opts.trace) out.trace.push_back(rec);
    if (m.accepted()) return finish(Verdict::accept());
  }
}

}  // namespace limla
