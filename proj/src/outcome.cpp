#include "limla/outcome.hpp"

#include <json.hpp>

namespace limla {

const char* to_string(const Verdict& v) {
  if (v.accepted) return "accept";
  return "reject";
}

std::vector<RegularMove> regular_trace(const RunOutcome& outcome) {
  std::vector<RegularMove> out;
  for (const auto& r : outcome.trace)
    if (!r.frozen) out.push_back({r.state, r.pos, r.read, r.write, r.move});
  return out;
}

namespace {

std::string token(const Automaton& aut, SymbolId s) {
  if (s == kMapSymbol) return "@map";
  return aut.symbol_name(s);
}

const char* case_name(StepCase c) {
  switch (c) {
    case StepCase::AMove: return "amove";
    case StepCase::Scan: return "scan";
    case StepCase::MapJump: return "mapjump";
    case StepCase::Plain: break;
  }
  return "";
}

}  // namespace

void write_trace_jsonl(std::ostream& out, const Automaton& aut, const RunOutcome& outcome) {
  using nlohmann::ordered_json;
  for (const auto& r : outcome.trace) {
    ordered_json j;
    j["step"] = r.step;
    j["pos"] = r.pos;
    j["state"] = aut.states[static_cast<std::size_t>(r.state)];
    j["read"] = token(aut, r.read);
    j["write"] = token(aut, r.write);
    j["move"] = std::string(1, move_char(r.move));
    j["frozen"] = r.frozen;
    if (outcome.engine == Engine::Linear) {
      j["case"] = case_name(r.kind);
      if (r.kind == StepCase::Scan) {
        j["merged_left"] = r.merged_left;
        j["merged_right"] = r.merged_right;
        j["segment"] = {r.seg_left, r.seg_right};
        j["exit"] = std::string(1, move_char(r.exit));
      }
    }
    out << j.dump() << '\n';
  }
  ordered_json fin;
  fin["verdict"] = to_string(outcome.verdict);
  fin["reason"] = outcome.verdict.accepted ? ordered_json(nullptr) : ordered_json("loop");
  fin["steps"] = outcome.steps;
  out << fin.dump() << '\n';
}

std::ostream& operator<<(std::ostream& out, const RegularMove& m) {
  return out << "(q" << m.state << ", pos " << m.pos << ", read " << m.read << ", write " << m.write << ", "
             << move_char(m.move) << ')';
}

}  // namespace limla
