// Scaling benchmarks and log-log fits.

#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "limla/model.hpp"
#include "limla/outcome.hpp"

namespace limla {

struct BenchRow {
  std::string machine;
  Engine engine = Engine::Naive;
  std::size_t n = 0;
  std::uint64_t steps = 0;
  std::uint64_t loop_iterations = 0;
  std::uint64_t wall_ns = 0;
  Verdict verdict;
};

struct ScalingFit {
  double slope = 0;
  double intercept = 0;
  double residual = 0;  // sum of squared residuals in log space
  std::size_t points = 0;
};

class Degenerate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Least squares through (log n, log steps). Needs at least 3 homogeneous
/// rows with positive n and steps over two or more distinct n. Throws
/// Degenerate.
ScalingFit fit_scaling(std::span<const BenchRow> rows);

/// Word generators for benchmarks:
///   anbn       a^(n/2) b^(n - n/2) over the first two input symbols
///   unary      the first input symbol repeated
///   random:S   uniform over the input alphabet, seeded by S
std::vector<SymbolId> generate_word(const Automaton& aut, const std::string& generator, std::size_t n);

enum class EngineChoice { Naive, Linear, Both };

/// One row per (engine, n), sorted by engine then n.
std::vector<BenchRow> run_bench(const Automaton& aut, const std::string& machine_id, const std::string& generator,
                                std::span<const std::size_t> lengths, EngineChoice engines);

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

const char* engine_name(Engine e);

}  // namespace limla
