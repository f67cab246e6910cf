#include "limla/format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

namespace limla {

namespace {

constexpr std::string_view kReserved[] = {"|>", "<|", "->", "L", "R"};

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::istringstream in{std::string(raw)};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) out.push_back(std::move(line));
    pos = eol + 1;
  }
  return out;
}

std::optional<int> parse_rank(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0) return std::nullopt;
  return v;
}

void require_token(const Line& line, const std::string& tok, const char* what) {
  if (!is_valid_token(tok)) throw FormatError(line.number, std::string("invalid ") + what + " '" + tok + "'");
}

}  // namespace

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  for (auto r : kReserved)
    if (token == r) return false;
  for (char c : token) {
    if (c == ':' || c == ',' || c == '#') return false;
    if (static_cast<unsigned char>(c) <= ' ') return false;
  }
  return true;
}

Automaton parse_machine(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t last_line = lines.empty() ? 1 : lines.back().number;
  if (lines.empty()) throw FormatError(1, "empty document");
  if (lines[0].tokens != std::vector<std::string>{"limla", "1"})
    throw FormatError(lines[0].number, "expected header 'limla 1'");

  std::map<std::string, const Line*> directives;
  std::vector<const Line*> deltas;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& key = line.tokens[0];
    if (key == "delta") {
      deltas.push_back(&line);
      continue;
    }
    static const std::unordered_set<std::string> known = {"mode", "d", "states", "input", "tape", "start", "accept"};
    if (!known.contains(key)) throw FormatError(line.number, "unknown directive '" + key + "'");
    if (!directives.emplace(key, &line).second) throw FormatError(line.number, "duplicate directive '" + key + "'");
  }
  for (const char* key : {"mode", "d", "states", "input", "tape", "start"})
    if (!directives.contains(key)) throw FormatError(last_line, std::string("missing directive '") + key + "'");

  Automaton aut;

  const Line& mode = *directives["mode"];
  if (mode.tokens.size() != 2) throw FormatError(mode.number, "mode takes one argument");
  if (mode.tokens[1] == "ranked")
    aut.mode = Mode::Ranked;
  else if (mode.tokens[1] == "counted")
    aut.mode = Mode::Counted;
  else
    throw FormatError(mode.number, "mode must be 'ranked' or 'counted'");

  const Line& dline = *directives["d"];
  if (dline.tokens.size() != 2) throw FormatError(dline.number, "d takes one argument");
  auto spec = parse_dlimit(dline.tokens[1]);
  if (!spec) throw FormatError(dline.number, "bad d value '" + dline.tokens[1] + "'");
  if (aut.mode == Mode::Ranked && !spec->is_const())
    throw FormatError(dline.number, "ranked mode requires an integer d");
  aut.dlimit = *spec;

  const Line& sline = *directives["states"];
  if (sline.tokens.size() < 2) throw FormatError(sline.number, "states needs at least one state");
  for (std::size_t i = 1; i < sline.tokens.size(); ++i) {
    require_token(sline, sline.tokens[i], "state");
    if (aut.find_state(sline.tokens[i])) throw FormatError(sline.number, "duplicate state '" + sline.tokens[i] + "'");
    aut.states.push_back(sline.tokens[i]);
  }

  const Line& iline = *directives["input"];
  std::vector<std::string> input_names(iline.tokens.begin() + 1, iline.tokens.end());
  for (std::size_t i = 0; i < input_names.size(); ++i) {
    require_token(iline, input_names[i], "input symbol");
    if (std::find(input_names.begin(), input_names.begin() + static_cast<std::ptrdiff_t>(i), input_names[i]) !=
        input_names.begin() + static_cast<std::ptrdiff_t>(i))
      throw FormatError(iline.number, "duplicate input symbol '" + input_names[i] + "'");
  }

  const Line& tline = *directives["tape"];
  for (std::size_t i = 1; i < tline.tokens.size(); ++i) {
    const auto& tok = tline.tokens[i];
    auto colon = tok.find(':');
    std::string name = tok.substr(0, colon);
    require_token(tline, name, "tape symbol");
    if (aut.find_symbol(name)) throw FormatError(tline.number, "duplicate tape symbol '" + name + "'");
    bool is_input = std::find(input_names.begin(), input_names.end(), name) != input_names.end();
    int rank = 0;
    if (colon != std::string::npos) {
      if (aut.mode == Mode::Counted) throw FormatError(tline.number, "ranks are not allowed in counted mode");
      auto r = parse_rank(std::string_view(tok).substr(colon + 1));
      if (!r) throw FormatError(tline.number, "bad rank in '" + tok + "'");
      rank = *r;
    } else if (aut.mode == Mode::Ranked && !is_input) {
      throw FormatError(tline.number, "tape symbol '" + name + "' needs a rank");
    }
    aut.tape.push_back({name, rank});
  }
  for (const auto& name : input_names) {
    auto id = aut.find_symbol(name);
    if (!id) throw FormatError(iline.number, "input symbol '" + name + "' missing from tape line");
    aut.input.push_back(*id);
  }

  const Line& start = *directives["start"];
  if (start.tokens.size() != 2) throw FormatError(start.number, "start takes one state");
  auto q0 = aut.find_state(start.tokens[1]);
  if (!q0) throw FormatError(start.number, "unknown start state '" + start.tokens[1] + "'");
  aut.start = *q0;

  if (auto it = directives.find("accept"); it != directives.end()) {
    const Line& acc = *it->second;
    for (std::size_t i = 1; i < acc.tokens.size(); ++i) {
      auto q = aut.find_state(acc.tokens[i]);
      if (!q) throw FormatError(acc.number, "unknown accepting state '" + acc.tokens[i] + "'");
      if (aut.is_accepting(*q)) throw FormatError(acc.number, "duplicate accepting state '" + acc.tokens[i] + "'");
      aut.accepting.push_back(*q);
    }
  }

  aut.reset_delta();
  for (const Line* line : deltas) {
    const auto& t = line->tokens;
    if (t.size() != 7 || t[3] != "->") throw FormatError(line->number, "expected 'delta <state> <sym> -> <state> <sym> <L|R>'");
    auto from = aut.find_state(t[1]);
    auto read = aut.find_symbol(t[2]);
    auto to = aut.find_state(t[4]);
    auto write = aut.find_symbol(t[5]);
    if (!from) throw FormatError(line->number, "unknown state '" + t[1] + "'");
    if (!read) throw FormatError(line->number, "unknown symbol '" + t[2] + "'");
    if (!to) throw FormatError(line->number, "unknown state '" + t[4] + "'");
    if (!write) throw FormatError(line->number, "unknown symbol '" + t[5] + "'");
    Move move;
    if (t[6] == "L")
      move = Move::Left;
    else if (t[6] == "R")
      move = Move::Right;
    else
      throw FormatError(line->number, "move must be L or R");
    auto& slot = aut.slot(*from, *read);
    if (slot) throw FormatError(line->number, "duplicate transition for (" + t[1] + ", " + t[2] + ")");
    slot = Transition{*to, *write, move};
  }
  return aut;
}

std::string serialize_machine(const Automaton& aut) {
  std::ostringstream out;
  out << "limla 1\n";
  out << "mode " << (aut.mode == Mode::Ranked ? "ranked" : "counted") << '\n';
  out << "d " << to_string(aut.dlimit) << '\n';
  out << "states";
  for (const auto& s : aut.states) out << ' ' << s;
  out << "\ninput";
  for (auto s : aut.input) out << ' ' << aut.symbol_name(s);
  out << "\ntape";
  for (const auto& sym : aut.tape) {
    out << ' ' << sym.name;
    if (aut.mode == Mode::Ranked) out << ':' << sym.rank;
  }
  out << "\nstart " << aut.states[static_cast<std::size_t>(aut.start)] << '\n';
  out << "accept";
  for (auto q : aut.accepting) out << ' ' << aut.states[static_cast<std::size_t>(q)];
  out << '\n';
  for (std::size_t q = 0; q < aut.state_count(); ++q) {
    for (std::size_t c = 0; c < aut.column_count(); ++c) {
      const auto& t = aut.delta[q * aut.column_count() + c];
      if (!t) continue;
      out << "delta " << aut.states[q] << ' ' << aut.symbol_name(aut.symbol_at_column(c)) << " -> "
          << aut.states[static_cast<std::size_t>(t->to)] << ' ' << aut.symbol_name(t->write) << ' '
          << move_char(t->move) << '\n';
    }
  }
  return out.str();
}

std::size_t Automaton::description_len() const {
  std::istringstream in(serialize_machine(*this));
  std::size_t count = 0;
  for (std::string tok; in >> tok;) ++count;
  return count;
}

Automaton load_machine_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_machine(buf.str());
}

}  // namespace limla
