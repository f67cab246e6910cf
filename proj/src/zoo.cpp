#include "limla/zoo.hpp"

#include <stdexcept>

namespace limla {

namespace {

class Builder {
 public:
  Builder(Mode mode, DLimitSpec d, std::vector<std::string> states, std::vector<TapeSymbol> tape,
          std::size_t input_count, std::string_view start, std::vector<std::string_view> accept) {
    aut_.mode = mode;
    aut_.dlimit = d;
    aut_.states = std::move(states);
    aut_.tape = std::move(tape);
    for (std::size_t i = 0; i < input_count; ++i) aut_.input.push_back(static_cast<SymbolId>(i));
    aut_.start = state(start);
    for (auto q : accept) aut_.accepting.push_back(state(q));
    aut_.reset_delta();
  }

  Builder& on(std::string_view q, std::string_view read, std::string_view to, std::string_view write, char move) {
    aut_.slot(state(q), symbol(read)) = Transition{state(to), symbol(write), move == 'L' ? Move::Left : Move::Right};
    return *this;
  }

  Automaton done() { return std::move(aut_); }

 private:
  StateId state(std::string_view name) const {
    auto q = aut_.find_state(name);
    if (!q) throw std::logic_error("zoo: unknown state " + std::string(name));
    return *q;
  }
  SymbolId symbol(std::string_view name) const {
    auto s = aut_.find_symbol(name);
    if (!s) throw std::logic_error("zoo: unknown symbol " + std::string(name));
    return *s;
  }

  Automaton aut_;
};

}  // namespace

// States:
//   scan   first pass over the a's (a -> a1), stops at the first b
//   seek   moves left over matched cells to the nearest a1
//   next   moves right over matched cells to the next unmatched b
//   check  at <|: moves left, any a1 left over means too many a's
//   done   sweeps right to <| after a clean check
//   trap   freezes everything and bounces forever
// A matched b jumps straight from rank 0 to rank 2; a's go 0 -> 1 -> 2.
Automaton build_anbn() {
  Builder b(Mode::Ranked, DLimitSpec::constant(2), {"scan", "seek", "next", "check", "done", "trap"},
            {{"a", 0}, {"b", 0}, {"a1", 1}, {"a2", 2}, {"b2", 2}}, 2, "scan", {"done"});
  // Anything unexpected freezes the cell and falls into the trap.
  for (std::string_view q : {"scan", "seek", "next", "check", "done", "trap"}) {
    b.on(q, "a", "trap", "a2", 'R')
        .on(q, "b", "trap", "b2", 'R')
        .on(q, "a1", "trap", "a2", 'R')
        .on(q, "a2", "trap", "a2", 'R')
        .on(q, "b2", "trap", "b2", 'R')
        .on(q, "|>", "trap", "|>", 'R')
        .on(q, "<|", "trap", "<|", 'L');
  }
  b.on("scan", "a", "scan", "a1", 'R').on("scan", "b", "seek", "b2", 'L').on("scan", "<|", "check", "<|", 'L');
  b.on("seek", "a2", "seek", "a2", 'L').on("seek", "b2", "seek", "b2", 'L').on("seek", "a1", "next", "a2", 'R');
  b.on("next", "a2", "next", "a2", 'R')
      .on("next", "b2", "next", "b2", 'R')
      .on("next", "b", "seek", "b2", 'L')
      .on("next", "<|", "check", "<|", 'L');
  b.on("check", "a2", "check", "a2", 'L').on("check", "b2", "check", "b2", 'L').on("check", "|>", "done", "|>", 'R');
  b.on("done", "a2", "done", "a2", 'R').on("done", "b2", "done", "b2", 'R');
  return b.done();
}

Automaton build_even_a_2dfa() {
  Builder b(Mode::Ranked, DLimitSpec::constant(0), {"even", "odd", "back", "forth"}, {{"a", 0}, {"b", 0}}, 2,
            "even", {"even"});
  b.on("even", "a", "odd", "a", 'R').on("even", "b", "even", "b", 'R');
  b.on("odd", "a", "even", "a", 'R').on("odd", "b", "odd", "b", 'R');
  // Odd parity at <| (and, unreachably, even) falls into a marker-to-marker bounce.
  for (std::string_view q : {"even", "odd"}) b.on(q, "|>", q, "|>", 'R').on(q, "<|", "back", "<|", 'L');
  b.on("back", "a", "back", "a", 'L').on("back", "b", "back", "b", 'L');
  b.on("back", "|>", "forth", "|>", 'R').on("back", "<|", "back", "<|", 'L');
  b.on("forth", "a", "forth", "a", 'R').on("forth", "b", "forth", "b", 'R');
  b.on("forth", "|>", "forth", "|>", 'R').on("forth", "<|", "back", "<|", 'L');
  return b.done();
}

Automaton build_bouncer() {
  Builder b(Mode::Ranked, DLimitSpec::constant(0), {"right", "left"}, {{"a", 0}, {"b", 0}}, 2, "right", {});
  b.on("right", "a", "right", "a", 'R').on("right", "b", "right", "b", 'R');
  b.on("right", "|>", "right", "|>", 'R').on("right", "<|", "left", "<|", 'L');
  b.on("left", "a", "left", "a", 'L').on("left", "b", "left", "b", 'L');
  b.on("left", "|>", "right", "|>", 'R').on("left", "<|", "left", "<|", 'L');
  return b.done();
}

Automaton build_sweeper() {
  Builder b(Mode::Counted, DLimitSpec::id(), {"right", "left"}, {{"a", 0}, {"b", 0}}, 2, "right", {});
  b.on("right", "a", "right", "b", 'R').on("right", "b", "right", "a", 'R');
  b.on("right", "|>", "right", "|>", 'R').on("right", "<|", "left", "<|", 'L');
  b.on("left", "a", "left", "b", 'L').on("left", "b", "left", "a", 'L');
  b.on("left", "|>", "right", "|>", 'R').on("left", "<|", "left", "<|", 'L');
  return b.done();
}

const std::vector<ZooEntry>& zoo() {
  static const std::vector<ZooEntry> entries = {
      {"anbn", &build_anbn},
      {"even_a", &build_even_a_2dfa},
      {"bouncer", &build_bouncer},
      {"sweeper", &build_sweeper},
  };
  return entries;
}

std::string input_symbol_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "i" + std::to_string(i);
}

Automaton random_automaton(const GenParams& p) {
  if (p.state_count == 0 || p.input_alphabet_size == 0)
    throw std::invalid_argument("random_automaton: counts must be positive");
  if (p.unreachable_accept && p.state_count < 2)
    throw std::invalid_argument("random_automaton: unreachable_accept needs at least two states");
  if (p.mode == Mode::Ranked && (!p.dlimit.is_const() || p.dlimit.k < 0))
    throw std::invalid_argument("random_automaton: ranked mode needs a constant d >= 0");

  SplitMix64 rng(p.seed);
  Automaton aut;
  aut.mode = p.mode;
  aut.dlimit = p.dlimit;
  for (std::size_t q = 0; q < p.state_count; ++q) aut.states.push_back("q" + std::to_string(q));
  for (std::size_t i = 0; i < p.input_alphabet_size; ++i) {
    aut.tape.push_back({input_symbol_name(i), 0});
    aut.input.push_back(static_cast<SymbolId>(i));
  }
  const std::int64_t d = p.mode == Mode::Ranked ? p.dlimit.k : 0;
  if (p.mode == Mode::Ranked) {
    for (std::int64_t r = 1; r <= d; ++r)
      for (std::size_t j = 0; j < p.symbols_per_rank; ++j)
        aut.tape.push_back({"x" + std::to_string(r) + "." + std::to_string(j), static_cast<int>(r)});
  } else {
    for (std::size_t j = 0; j < p.symbols_per_rank; ++j) aut.tape.push_back({"w" + std::to_string(j), 0});
  }

  const std::size_t targets = p.unreachable_accept ? p.state_count - 1 : p.state_count;
  aut.start = 0;
  if (p.unreachable_accept) {
    aut.accepting.push_back(static_cast<StateId>(p.state_count - 1));
  } else {
    for (std::size_t q = 0; q < p.state_count; ++q)
      if (rng.next() & 1U) aut.accepting.push_back(static_cast<StateId>(q));
  }

  aut.reset_delta();
  std::vector<SymbolId> writable;
  for (std::size_t q = 0; q < p.state_count; ++q) {
    for (std::size_t c = 0; c < aut.column_count(); ++c) {
      const SymbolId read = aut.symbol_at_column(c);
      auto& slot = aut.slot(static_cast<StateId>(q), read);
      if (is_marker(read)) {
        auto to = static_cast<StateId>(rng.below(targets));
        slot = Transition{to, read, read == kLeftMarker ? Move::Right : Move::Left};
        continue;
      }
      writable.clear();
      if (p.mode == Mode::Counted) {
        for (std::size_t s = 0; s < aut.tape.size(); ++s) writable.push_back(static_cast<SymbolId>(s));
      } else if (aut.rank(read) >= d) {
        writable.push_back(read);
      } else {
        for (std::size_t s = 0; s < aut.tape.size(); ++s) {
          int rw = aut.tape[s].rank;
          if (rw > aut.rank(read) && rw <= d) writable.push_back(static_cast<SymbolId>(s));
        }
      }
      // Index layout: ((target * |writable|) + write) * 2 + move.
      const std::uint64_t choices = targets * writable.size() * 2;
      std::uint64_t k = rng.below(choices);
      const Move move = (k & 1U) ? Move::Left : Move::Right;
      k >>= 1;
      const SymbolId write = writable[k % writable.size()];
      const auto to = static_cast<StateId>(k / writable.size());
      slot = Transition{to, write, move};
    }
  }
  return aut;
}

std::vector<SymbolId> parse_word(const Automaton& aut, std::string_view text, bool tokens_only) {
  std::vector<std::string> tokens;
  bool single_chars = true;
  for (auto s : aut.input)
    if (aut.symbol_name(s).size() != 1) single_chars = false;
  if (!tokens_only && text.find(',') == std::string_view::npos && single_chars) {
    for (char c : text) tokens.emplace_back(1, c);
  } else if (!text.empty()) {
    std::size_t pos = 0;
    for (;;) {
      auto comma = text.find(',', pos);
      tokens.emplace_back(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  std::vector<SymbolId> word;
  for (const auto& tok : tokens) {
    SymbolId id = -1;
    for (auto s : aut.input)
      if (aut.symbol_name(s) == tok) id = s;
    if (id < 0) throw std::invalid_argument("symbol '" + tok + "' is not in the input alphabet");
    word.push_back(id);
  }
  return word;
}

std::string format_word(const Automaton& aut, const std::vector<SymbolId>& word) {
  bool single_chars = true;
  for (auto s : aut.input)
    if (aut.symbol_name(s).size() != 1) single_chars = false;
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (!single_chars && i > 0) out += ',';
    out += aut.symbol_name(word[i]);
  }
  return out;
}

}  // namespace limla
