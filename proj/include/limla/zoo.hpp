// Fixture machines and a seeded random generator.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "limla/model.hpp"

namespace limla {

/// splitmix64, reference constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// next() % bound; bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // UniformRandomBitGenerator, for <algorithm> helpers.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }
  result_type operator()() { return next(); }

 private:
  std::uint64_t state_;
};

/// 2-LA for { a^n b^n : n >= 0 }: match the leftmost unmatched b with the
/// nearest unmatched a to its left, shuttling across the matched middle.
Automaton build_anbn();

/// Ranked d = 0 machine over {a, b} accepting words with an even number of a's.
Automaton build_even_a_2dfa();

/// Sweeps between the end-markers forever without writing anything new.
Automaton build_bouncer();

/// Counted machine with d(n) = n toggling a <-> b on every visit while
/// sweeping end to end; never accepts.
Automaton build_sweeper();

struct ZooEntry {
  std::string id;
  Automaton (*build)();
};
const std::vector<ZooEntry>& zoo();

struct GenParams {
  std::size_t state_count = 4;
  Mode mode = Mode::Ranked;
  DLimitSpec dlimit = DLimitSpec::constant(2);
  std::size_t input_alphabet_size = 2;
  std::size_t symbols_per_rank = 2;  // ranked: per rank 1..d; counted: extra work symbols
  std::uint64_t seed = 0;
  /// Adds a dedicated accepting state that no transition enters.
  bool unreachable_accept = false;
};

/// Every δ entry is drawn uniformly among the transitions legal for its
/// read symbol. Deterministic in the seed.
Automaton random_automaton(const GenParams& p);

/// Input symbol names `a`, `b`, ... (then `i26`, `i27`, ...).
std::string input_symbol_name(std::size_t i);

/// Parses a word: comma-separated tokens, or one character per symbol when
/// there are no commas and every input token is a single character.
/// `tokens_only` always splits on commas. Throws std::invalid_argument on
/// symbols outside the input alphabet.
std::vector<SymbolId> parse_word(const Automaton& aut, std::string_view text, bool tokens_only = false);
std::string format_word(const Automaton& aut, const std::vector<SymbolId>& word);

}  // namespace limla
