// Line-oriented `.limla` machine documents.
//
//   limla 1
//   mode ranked|counted
//   d <int>|log2|sqrt|id
//   states <id> ...
//   input <sym> ...
//   tape <sym>[:<rank>] ...
//   start <id>
//   accept <id> ...
//   delta <state> <sym> -> <state> <sym> <L|R>
//
// `#` starts a comment; blank lines are ignored.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "limla/model.hpp"

namespace limla {

class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses a document into a structurally well-formed Automaton. Semantic
/// rules are checked separately by validate_automaton. Throws FormatError.
Automaton parse_machine(std::string_view text);

/// Canonical form: directives in fixed order, delta lines sorted by
/// (state index, column index). Missing delta entries are omitted.
std::string serialize_machine(const Automaton& aut);

Automaton load_machine_file(const std::string& path);

/// True for tokens usable as state or symbol names.
bool is_valid_token(std::string_view token);

}  // namespace limla
