#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limla/model.hpp"

namespace limla {

enum class Rule {
  NotTotal,            // (state, symbol) has no transition
  FrozenRewrite,       // rank-d letter (or any letter when d = 0) rewritten to something else
  RankNotIncreasing,   // rank r < d rewritten to a rank outside (r, d]
  MarkerRewrite,       // marker read but something other than itself written
  MarkerWritten,       // letter read but a marker written
  MarkerDirection,     // |> must move right, <| must move left
  BadWriteSymbol,      // write symbol id out of range
  BadTargetState,      // target state id out of range
  RankOutOfRange,      // tape symbol rank outside 0..d
  InputRankNonzero,    // input symbol with rank > 0
  BadInputSymbol,      // input symbol id out of range
  RankedNeedsConst,    // ranked mode with a non-constant d(n)
  NegativeLimit,       // Const(k) with k < 0
  CountedHasRanks,     // counted mode symbol carrying a nonzero rank
  BadStartState,
  BadAcceptState,
  EmptyStates,
};

const char* rule_name(Rule r);

struct Violation {
  Rule rule;
  std::optional<StateId> state;
  std::optional<SymbolId> symbol;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(Rule r) const;
  /// One line per violation, `Rule (state, symbol): detail`.
  std::string to_string(const Automaton& aut) const;
};

ValidationReport validate_automaton(const Automaton& aut);

}  // namespace limla
