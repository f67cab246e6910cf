#include <doctest.h>

#include <string>

#include "limla/fuzz.hpp"
#include "limla/linear.hpp"
#include "limla/naive.hpp"
#include "limla/zoo.hpp"
#include "support/oracle.hpp"

using namespace limla;

namespace {

constexpr DirectedState R(StateId q) { return {q, Move::Right}; }
constexpr DirectedState L(StateId q) { return {q, Move::Left}; }

RunOutcome linear(const Automaton& aut, const std::string& word, bool shadow = true, bool trace = false) {
  auto w = parse_word(aut, word);
  LinearOptions o;
  o.shadow = shadow;
  o.trace = trace;
  return run_linear(aut, w, o);
}

SegmentMap constant_map(std::size_t q, Exit out) {
  SegmentMap m(q);
  for (std::size_t i = 0; i < 2 * q; ++i) m.set(DirectedState::from_index(i), out);
  return m;
}

}  // namespace

TEST_CASE("init_tape on the empty word links the markers") {
  std::vector<SymbolId> w;
  auto tape = init_tape(w);
  CHECK(tape.n() == 0);
  CHECK(tape.kind(0) == CellKind::Marker);
  CHECK(tape.kind(1) == CellKind::Marker);
  CHECK(tape.next(0) == 1);
  CHECK(tape.prev(1) == 0);
  CHECK(tape.letter(0) == kLeftMarker);
  CHECK(tape.letter(1) == kRightMarker);
}

TEST_CASE("init_tape lays the word out in order") {
  std::vector<SymbolId> w{0, 1, 1, 0, 2};
  auto tape = init_tape(w);
  CHECK(tape.live_cells() == std::vector<std::int64_t>{0, 1, 2, 3, 4, 5, 6});
  for (std::int64_t i = 1; i <= 5; ++i) {
    CHECK(tape.kind(i) == CellKind::Letter);
    CHECK(tape.letter(i) == w[static_cast<std::size_t>(i - 1)]);
    CHECK(tape.visits(i) == 0);
    CHECK(tape.prev(i) == i - 1);
    CHECK(tape.next(i) == i + 1);
  }
  CHECK_THROWS(tape.unlink(0));
  CHECK_THROWS(tape.unlink(6));
}

TEST_CASE("deletion scan between letters only installs the map") {
  std::vector<SymbolId> w{0, 0, 0};
  auto tape = init_tape(w);
  auto g = constant_map(2, R(1));
  auto res = deletion_scan(tape, 2, L(0), g);
  CHECK(res.exit == L(0));
  CHECK_FALSE(res.merged_left);
  CHECK_FALSE(res.merged_right);
  CHECK(res.compose_calls == 0);
  CHECK(tape.kind(2) == CellKind::Map);
  CHECK(tape.map(2) == g);
  CHECK(tape.live_cells() == std::vector<std::int64_t>{0, 1, 2, 3, 4});
}

TEST_CASE("left merge without departure when p points right") {
  std::vector<SymbolId> w{0, 0, 0};
  auto tape = init_tape(w);
  SplitMix64 rng(1);
  auto f = oracle::random_map(rng, 3);
  auto g = oracle::random_map(rng, 3);
  tape.set_map(1, f);
  auto res = deletion_scan(tape, 2, R(2), g);
  CHECK(res.merged_left);
  CHECK_FALSE(res.merged_right);
  CHECK(res.exit == R(2));
  CHECK(tape.map(2) == oracle::compose(f, g).h);
  CHECK(tape.prev(2) == 0);
  CHECK_FALSE(tape.live(1));
}

TEST_CASE("left departure flips p, right departure then applies to the merged map") {
  // |Q| = 2. Leaving cell i leftward in state 0 re-enters f, which bounces
  // back rightward in state 1; the right neighbour h sends →1 out as →0.
  std::vector<SymbolId> w{0, 0, 0};
  auto tape = init_tape(w);
  SegmentMap f(2), g(2), h(2);
  f.set(L(0), R(1));
  f.set(L(1), L(1));
  f.set(R(0), R(0));
  f.set(R(1), R(1));
  g = SegmentMap::transparent(2);
  h.set(R(1), R(0));
  h.set(R(0), R(0));
  h.set(L(0), L(0));
  h.set(L(1), L(1));
  tape.set_map(1, f);
  tape.set_map(3, h);
  auto res = deletion_scan(tape, 2, L(0), g);
  CHECK(res.merged_left);
  CHECK(res.merged_right);
  CHECK(res.compose_calls == 2);
  CHECK(res.exit == R(0));
  auto fg = oracle::compose(f, g).h;
  CHECK(tape.map(2) == oracle::compose(fg, h).h);
  CHECK(tape.live_cells() == std::vector<std::int64_t>{0, 2, 4});
  CHECK(oracle::compose(fg, h).dep(R(1)) == R(0));
}

TEST_CASE("deletion scan reports a LOOP departure") {
  std::vector<SymbolId> w{0, 0};
  auto tape = init_tape(w);
  SegmentMap f(1), g(1);
  f.set(L(0), R(0));
  f.set(R(0), R(0));
  g.set(R(0), L(0));
  g.set(L(0), L(0));
  tape.set_map(1, f);
  auto res = deletion_scan(tape, 2, L(0), g);
  CHECK_FALSE(res.exit.has_value());
  CHECK(tape.kind(2) == CellKind::Map);
}

TEST_CASE("skip-right-merge fault drops the neighbour") {
  std::vector<SymbolId> w{0, 0};
  auto tape = init_tape(w);
  auto h = constant_map(1, L(0));
  tape.set_map(2, h);
  auto g = SegmentMap::transparent(1);
  auto res = deletion_scan(tape, 1, R(0), g, Fault::SkipRightMerge);
  CHECK(res.merged_right);
  CHECK(tape.map(1) == g);
  CHECK(res.exit == R(0));
}

TEST_CASE("anbn verdicts under the linear engine") {
  auto aut = build_anbn();
  CHECK(linear(aut, "").verdict.accepted);
  CHECK(linear(aut, "ab").verdict.accepted);
  CHECK(linear(aut, "aabb").verdict.accepted);
  CHECK(linear(aut, "aaabbb").verdict.accepted);
  CHECK_FALSE(linear(aut, "aab").verdict.accepted);
  CHECK_FALSE(linear(aut, "abab").verdict.accepted);
  CHECK_FALSE(linear(aut, "abb").verdict.accepted);
}

TEST_CASE("bouncer rejects under the linear engine") {
  auto aut = build_bouncer();
  for (const char* w : {"", "a", "ab", "bbbbbb", "abababab"}) {
    CAPTURE(w);
    auto r = linear(aut, w);
    CHECK_FALSE(r.verdict.accepted);
    CHECK(r.loop_iterations <= linear_iteration_bound(r.d, aut.state_count(), std::string(w).size()));
  }
}

TEST_CASE("even_a collapses the interior into one map before the second marker arrival") {
  auto aut = build_even_a_2dfa();
  for (const char* w : {"a", "ab", "bab", "aaab", "abbbbba"}) {
    CAPTURE(w);
    auto r = linear(aut, w, true, true);
    const auto n = static_cast<std::int64_t>(std::string(w).size());
    std::size_t marker_arrivals = 0;
    std::int64_t widest = 0;
    for (const auto& t : r.trace) {
      if (t.kind == StepCase::Scan) widest = std::max(widest, t.seg_right - t.seg_left + 1);
      if (t.pos == 0 || t.pos == n + 1) {
        if (++marker_arrivals == 2) break;
      }
    }
    CHECK(widest == n);
  }
}

TEST_CASE("even_a matches a parity count on random words") {
  auto aut = build_even_a_2dfa();
  SplitMix64 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<SymbolId> w(rng.below(40));
    std::size_t as = 0;
    for (auto& s : w) {
      s = static_cast<SymbolId>(rng.below(2));
      if (s == 0) ++as;
    }
    const bool even = as % 2 == 0;
    CHECK(run_linear(aut, w).verdict.accepted == even);
    CHECK(run_naive(aut, w).verdict.accepted == even);
  }
}

TEST_CASE("shadow runs agree with the reference on zoo machines") {
  for (const auto& entry : zoo()) {
    auto aut = entry.build();
    for (std::size_t len = 0; len <= 8; ++len) {
      for (const auto& w : all_words(2, len)) {
        LinearOptions o;
        o.shadow = true;
        auto cmp = compare_engines(aut, w, o);
        CAPTURE(entry.id);
        CAPTURE(format_word(aut, w));
        CHECK_MESSAGE(cmp.agree, cmp.difference);
      }
    }
  }
}

TEST_CASE("counted machines with small limits agree across engines") {
  for (auto d : {DLimitSpec::constant(0), DLimitSpec::constant(1), DLimitSpec::log2(), DLimitSpec::sqrt()}) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      GenParams p;
      p.seed = seed;
      p.mode = Mode::Counted;
      p.dlimit = d;
      auto aut = random_automaton(p);
      for (std::size_t len = 0; len <= 6; ++len)
        for (const auto& w : all_words(2, len)) {
          LinearOptions o;
          o.shadow = true;
          auto cmp = compare_engines(aut, w, o);
          CHECK_MESSAGE(cmp.agree, cmp.difference);
        }
    }
  }
}

TEST_CASE("iteration and scan bounds") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    GenParams p;
    p.seed = rng.next();
    p.state_count = 1 + rng.below(5);
    p.dlimit = DLimitSpec::constant(static_cast<std::int64_t>(rng.below(4)));
    auto aut = random_automaton(p);
    std::vector<SymbolId> w(rng.below(60));
    for (auto& s : w) s = static_cast<SymbolId>(rng.below(2));
    auto r = run_linear(aut, w);
    CHECK(r.loop_iterations <= linear_iteration_bound(r.d, aut.state_count(), w.size()));
    CHECK(r.moves.scans <= w.size());
    CHECK(r.max_compose_edges <= 8 * aut.state_count());
    CHECK(r.steps == r.moves.total());
  }
}

TEST_CASE("linear budget") {
  auto aut = build_anbn();
  auto w = parse_word(aut, "aaaabbbb");
  LinearOptions o;
  o.max_steps = 3;
  CHECK_THROWS_AS(run_linear(aut, w, o), BudgetExceeded);
}
