// Differential harness: the linear engine against the reference engine.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "limla/linear.hpp"
#include "limla/model.hpp"
#include "limla/outcome.hpp"
#include "limla/zoo.hpp"

namespace limla {

struct EngineComparison {
  bool agree = true;
  bool shadow_mismatch = false;
  std::string difference;  // empty when agree
  RunOutcome naive;
  RunOutcome linear;
};

/// Runs both engines with tracing and compares verdicts and regular-move
/// projections. A ShadowMismatch from the linear engine is a disagreement.
EngineComparison compare_engines(const Automaton& aut, std::span<const SymbolId> word, const LinearOptions& linear_opts);

/// Writes machine.limla, word.txt, naive.trace.jsonl, linear.trace.jsonl and
/// diff.txt into `dir` (created if needed).
void write_reproducer(const std::filesystem::path& dir, const Automaton& aut, std::span<const SymbolId> word,
                      const EngineComparison& cmp);

/// All words of exactly `length` over `alphabet_size` symbols, in
/// lexicographic order of symbol ids 0..alphabet_size-1.
std::vector<std::vector<SymbolId>> all_words(std::size_t alphabet_size, std::size_t length);

struct FuzzParams {
  std::size_t states = 4;
  DLimitSpec dlimit = DLimitSpec::constant(2);
  Mode mode = Mode::Ranked;
  std::uint64_t seed = 1;
  std::size_t machines = 200;
  std::size_t maxlen = 10;
  std::size_t alphabet_size = 2;
  std::size_t symbols_per_rank = 2;
  std::size_t exhaustive_cap = 10;
  std::size_t random_words = 8;  // per machine, longer than the exhaustive range
  bool shadow = true;
  Fault fault = Fault::None;
  std::optional<std::filesystem::path> repro_dir;
  std::size_t max_repros = 10;
};

struct Divergence {
  std::size_t machine_index = 0;
  std::uint64_t machine_seed = 0;
  std::string word;
  std::string difference;
};

struct FuzzReport {
  std::size_t machines = 0;
  std::size_t runs = 0;
  std::size_t accepts = 0;
  std::vector<Divergence> divergences;
};

/// Seed of the k-th generated machine.
std::uint64_t fuzz_machine_seed(std::uint64_t seed, std::size_t k);

FuzzReport run_fuzz(const FuzzParams& p);

}  // namespace limla
