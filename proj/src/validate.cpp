#include "limla/validate.hpp"

#include <algorithm>
#include <sstream>

namespace limla {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::NotTotal: return "NotTotal";
    case Rule::FrozenRewrite: return "FrozenRewrite";
    case Rule::RankNotIncreasing: return "RankNotIncreasing";
    case Rule::MarkerRewrite: return "MarkerRewrite";
    case Rule::MarkerWritten: return "MarkerWritten";
    case Rule::MarkerDirection: return "MarkerDirection";
    case Rule::BadWriteSymbol: return "BadWriteSymbol";
    case Rule::BadTargetState: return "BadTargetState";
    case Rule::RankOutOfRange: return "RankOutOfRange";
    case Rule::InputRankNonzero: return "InputRankNonzero";
    case Rule::BadInputSymbol: return "BadInputSymbol";
    case Rule::RankedNeedsConst: return "RankedNeedsConst";
    case Rule::NegativeLimit: return "NegativeLimit";
    case Rule::CountedHasRanks: return "CountedHasRanks";
    case Rule::BadStartState: return "BadStartState";
    case Rule::BadAcceptState: return "BadAcceptState";
    case Rule::EmptyStates: return "EmptyStates";
  }
  return "?";
}

bool ValidationReport::has(Rule r) const {
  return std::any_of(violations.begin(), violations.end(), [r](const Violation& v) { return v.rule == r; });
}

std::string ValidationReport::to_string(const Automaton& aut) const {
  if (ok()) return "ok\n";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << rule_name(v.rule);
    if (v.state || v.symbol) {
      out << " (";
      if (v.state) {
        auto q = static_cast<std::size_t>(*v.state);
        out << (q < aut.states.size() ? aut.states[q] : "?");
      }
      if (v.state && v.symbol) out << ", ";
      if (v.symbol) out << aut.symbol_name(*v.symbol);
      out << ')';
    }
    if (!v.detail.empty()) out << ": " << v.detail;
    out << '\n';
  }
  return out.str();
}

ValidationReport validate_automaton(const Automaton& aut) {
  ValidationReport report;
  auto add = [&](Rule r, std::optional<StateId> q, std::optional<SymbolId> s, std::string detail = {}) {
    report.violations.push_back({r, q, s, std::move(detail)});
  };

  const auto nstates = static_cast<StateId>(aut.state_count());
  const auto nsyms = static_cast<SymbolId>(aut.tape.size());
  if (nstates == 0) add(Rule::EmptyStates, std::nullopt, std::nullopt);
  if (aut.start < 0 || aut.start >= nstates) add(Rule::BadStartState, std::nullopt, std::nullopt);
  for (auto q : aut.accepting)
    if (q < 0 || q >= nstates) add(Rule::BadAcceptState, std::nullopt, std::nullopt, "index " + std::to_string(q));

  const bool ranked = aut.mode == Mode::Ranked;
  std::int64_t d = 0;
  if (ranked) {
    if (!aut.dlimit.is_const()) add(Rule::RankedNeedsConst, std::nullopt, std::nullopt);
    d = aut.dlimit.k;
  }
  if (aut.dlimit.is_const() && aut.dlimit.k < 0) add(Rule::NegativeLimit, std::nullopt, std::nullopt);

  for (SymbolId s = 0; s < nsyms; ++s) {
    int r = aut.rank(s);
    if (ranked && (r < 0 || r > d)) add(Rule::RankOutOfRange, std::nullopt, s, "rank " + std::to_string(r));
    if (!ranked && r != 0) add(Rule::CountedHasRanks, std::nullopt, s);
  }
  for (auto s : aut.input) {
    if (s < 0 || s >= nsyms) {
      add(Rule::BadInputSymbol, std::nullopt, std::nullopt, "index " + std::to_string(s));
      continue;
    }
    if (aut.rank(s) != 0) add(Rule::InputRankNonzero, std::nullopt, s);
  }

  if (aut.delta.size() != aut.state_count() * aut.column_count()) {
    add(Rule::NotTotal, std::nullopt, std::nullopt, "transition table has the wrong shape");
    return report;
  }

  for (StateId q = 0; q < nstates; ++q) {
    for (std::size_t c = 0; c < aut.column_count(); ++c) {
      SymbolId read = aut.symbol_at_column(c);
      const auto& t = aut.slot(q, read);
      if (!t) {
        add(Rule::NotTotal, q, read);
        continue;
      }
      if (t->to < 0 || t->to >= nstates) add(Rule::BadTargetState, q, read);
      if (!is_marker(t->write) && (t->write < 0 || t->write >= nsyms)) {
        add(Rule::BadWriteSymbol, q, read);
        continue;
      }
      if (is_marker(read)) {
        if (t->write != read) add(Rule::MarkerRewrite, q, read);
        Move required = read == kLeftMarker ? Move::Right : Move::Left;
        if (t->move != required) add(Rule::MarkerDirection, q, read);
        continue;
      }
      if (is_marker(t->write)) {
        add(Rule::MarkerWritten, q, read);
        continue;
      }
      if (!ranked) continue;
      int r = aut.rank(read);
      if (r >= d) {
        // d == 0 lands here too: every letter has rank 0 == d.
        if (t->write != read)
          add(Rule::FrozenRewrite, q, read, "writes " + aut.symbol_name(t->write));
      } else {
        int rw = aut.rank(t->write);
        if (rw <= r || rw > d)
          add(Rule::RankNotIncreasing, q, read,
              "rank " + std::to_string(r) + " -> " + std::to_string(rw));
      }
    }
  }
  return report;
}

}  // namespace limla
