#include "limla/model.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>

namespace limla {

std::int64_t d_of(const DLimitSpec& spec, std::int64_t n) {
  if (n < 0) throw std::invalid_argument("d_of: negative input length");
  switch (spec.kind) {
    case DLimitSpec::Kind::Const:
      return spec.k;
    case DLimitSpec::Kind::Log2:
      return n == 0 ? 0 : std::bit_width(static_cast<std::uint64_t>(n)) - 1;
    case DLimitSpec::Kind::Sqrt: {
      auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
      while (r * r > n) --r;
      while ((r + 1) * (r + 1) <= n) ++r;
      return r;
    }
    case DLimitSpec::Kind::Id:
      return n;
  }
  return 0;
}

std::string to_string(const DLimitSpec& spec) {
  switch (spec.kind) {
    case DLimitSpec::Kind::Const:
      return std::to_string(spec.k);
    case DLimitSpec::Kind::Log2:
      return "log2";
    case DLimitSpec::Kind::Sqrt:
      return "sqrt";
    case DLimitSpec::Kind::Id:
      return "id";
  }
  return {};
}

std::optional<DLimitSpec> parse_dlimit(std::string_view text) {
  if (text == "log2") return DLimitSpec::log2();
  if (text == "sqrt") return DLimitSpec::sqrt();
  if (text == "id") return DLimitSpec::id();
  std::int64_t k = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || k < 0) return std::nullopt;
  return DLimitSpec::constant(k);
}

bool Automaton::is_accepting(StateId q) const {
  return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
}

std::string Automaton::symbol_name(SymbolId s) const {
  if (s == kLeftMarker) return std::string(kLeftMarkerToken);
  if (s == kRightMarker) return std::string(kRightMarkerToken);
  if (s < 0 || static_cast<std::size_t>(s) >= tape.size()) return "?" + std::to_string(s);
  return tape[static_cast<std::size_t>(s)].name;
}

std::optional<SymbolId> Automaton::find_symbol(std::string_view name) const {
  if (name == kLeftMarkerToken) return kLeftMarker;
  if (name == kRightMarkerToken) return kRightMarker;
  for (std::size_t i = 0; i < tape.size(); ++i)
    if (tape[i].name == name) return static_cast<SymbolId>(i);
  return std::nullopt;
}

std::optional<StateId> Automaton::find_state(std::string_view name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return static_cast<StateId>(i);
  return std::nullopt;
}

}  // namespace limla
