#include "limla/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "limla/linear.hpp"
#include "limla/naive.hpp"
#include "limla/zoo.hpp"

namespace limla {

const char* engine_name(Engine e) { return e == Engine::Naive ? "naive" : "linear"; }

ScalingFit fit_scaling(std::span<const BenchRow> rows) {
  if (rows.size() < 3) throw Degenerate("fit_scaling: need at least 3 rows");
  for (const auto& r : rows) {
    if (r.n == 0 || r.steps == 0) throw Degenerate("fit_scaling: n and steps must be positive");
    if (r.machine != rows[0].machine || r.engine != rows[0].engine || r.verdict.accepted != rows[0].verdict.accepted)
      throw Degenerate("fit_scaling: rows must share machine, engine and verdict");
  }
  const auto m = static_cast<double>(rows.size());
  double sx = 0, sy = 0;
  for (const auto& r : rows) {
    sx += std::log(static_cast<double>(r.n));
    sy += std::log(static_cast<double>(r.steps));
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    double dx = std::log(static_cast<double>(r.n)) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(static_cast<double>(r.steps)) - my);
  }
  if (sxx == 0) throw Degenerate("fit_scaling: all n are equal");
  ScalingFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = rows.size();
  for (const auto& r : rows) {
    double e = std::log(static_cast<double>(r.steps)) - (fit.intercept + fit.slope * std::log(static_cast<double>(r.n)));
    fit.residual += e * e;
  }
  return fit;
}

std::vector<SymbolId> generate_word(const Automaton& aut, const std::string& generator, std::size_t n) {
  if (aut.input.empty()) throw std::invalid_argument("machine has an empty input alphabet");
  std::vector<SymbolId> word;
  word.reserve(n);
  if (generator == "anbn") {
    if (aut.input.size() < 2) throw std::invalid_argument("anbn generator needs two input symbols");
    word.assign(n / 2, aut.input[0]);
    word.insert(word.end(), n - n / 2, aut.input[1]);
  } else if (generator == "unary") {
    word.assign(n, aut.input[0]);
  } else if (generator.rfind("random:", 0) == 0) {
    std::uint64_t seed = std::stoull(generator.substr(7));
    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
    for (std::size_t i = 0; i < n; ++i) word.push_back(aut.input[rng.below(aut.input.size())]);
  } else {
    throw std::invalid_argument("unknown generator '" + generator + "'");
  }
  return word;
}

std::vector<BenchRow> run_bench(const Automaton& aut, const std::string& machine_id, const std::string& generator,
                                std::span<const std::size_t> lengths, EngineChoice engines) {
  std::vector<BenchRow> rows;
  std::vector<Engine> list;
  if (engines != EngineChoice::Linear) list.push_back(Engine::Naive);
  if (engines != EngineChoice::Naive) list.push_back(Engine::Linear);
  for (auto engine : list) {
    for (auto n : lengths) {
      auto word = generate_word(aut, generator, n);
      auto t0 = std::chrono::steady_clock::now();
      RunOutcome out = engine == Engine::Naive ? run_naive(aut, word) : run_linear(aut, word);
      auto t1 = std::chrono::steady_clock::now();
      rows.push_back({machine_id, engine, n, out.steps, out.loop_iterations,
                      static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()),
                      out.verdict});
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.engine != b.engine) return a.engine < b.engine;
    return a.n < b.n;
  });
  return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "machine,engine,n,steps,loop_iterations,wall_ns,verdict\n";
  for (const auto& r : rows)
    out << r.machine << ',' << engine_name(r.engine) << ',' << r.n << ',' << r.steps << ',' << r.loop_iterations
        << ',' << r.wall_ns << ',' << to_string(r.verdict) << '\n';
}

}  // namespace limla
