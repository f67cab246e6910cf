#include "limla/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>

#include "limla/bench.hpp"
#include "limla/format.hpp"
#include "limla/linear.hpp"
#include "limla/naive.hpp"
#include "limla/validate.hpp"
#include "limla/zoo.hpp"

namespace limla {

Automaton load_machine(const std::string& file) {
  if (file.rfind("zoo:", 0) == 0) {
    auto id = file.substr(4);
    for (const auto& e : zoo())
      if (e.id == id) return e.build();
    throw std::invalid_argument("unknown zoo machine '" + id + "'");
  }
  return load_machine_file(file);
}

namespace {

// Loads and validates; prints the problem and returns nullopt on failure.
std::optional<Automaton> load_valid(const std::string& file, std::ostream& err) {
  try {
    Automaton aut = load_machine(file);
    auto report = validate_automaton(aut);
    if (!report.ok()) {
      err << file << ": invalid machine\n" << report.to_string(aut);
      return std::nullopt;
    }
    return aut;
  } catch (const std::exception& e) {
    err << file << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

std::string stem_of(const std::string& file) {
  if (file.rfind("zoo:", 0) == 0) return file.substr(4);
  return std::filesystem::path(file).stem().string();
}

}  // namespace

int cmd_check(const std::string& file, std::ostream& out, std::ostream& err) {
  Automaton aut;
  try {
    aut = load_machine(file);
  } catch (const std::exception& e) {
    err << file << ": " << e.what() << '\n';
    return kExitUsage;
  }
  auto report = validate_automaton(aut);
  out << report.to_string(aut);
  return report.ok() ? kExitOk : kExitUsage;
}

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  auto aut = load_valid(args.file, err);
  if (!aut) return kExitUsage;
  if (args.engine != "naive" && args.engine != "linear") {
    err << "unknown engine '" << args.engine << "'\n";
    return kExitUsage;
  }
  if (args.input && args.input_tokens) {
    err << "--input and --input-tokens are exclusive\n";
    return kExitUsage;
  }
  std::vector<SymbolId> word;
  try {
    if (args.input_tokens)
      word = parse_word(*aut, *args.input_tokens, /*tokens_only=*/true);
    else if (args.input)
      word = parse_word(*aut, *args.input);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  RunOutcome outcome;
  try {
    if (args.engine == "naive") {
      outcome = run_naive(*aut, word, RunOptions{args.trace_path.has_value(), args.max_steps});
    } else {
      LinearOptions lo;
      lo.trace = args.trace_path.has_value();
      lo.shadow = args.shadow;
      lo.max_steps = args.max_steps;
      outcome = run_linear(*aut, word, lo);
    }
  } catch (const BudgetExceeded& e) {
    err << e.what() << '\n';
    return kExitBudget;
  } catch (const ShadowMismatch& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  if (args.trace_path) {
    std::ofstream tf(*args.trace_path, std::ios::binary);
    if (!tf) {
      err << "cannot write " << *args.trace_path << '\n';
      return kExitUsage;
    }
    write_trace_jsonl(tf, *aut, outcome);
  }
  out << to_string(outcome.verdict) << '\n';
  out << "steps " << outcome.steps << '\n';
  return outcome.verdict.accepted ? kExitOk : kExitReject;
}

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    std::size_t lo = std::stoull(text.substr(0, dots));
    std::size_t hi = std::stoull(text.substr(dots + 2));
    if (lo == 0 || lo > hi) throw std::invalid_argument("bad length range '" + text + "'");
    for (std::size_t n = lo; n <= hi; n *= 2) out.push_back(n);
    return out;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t used = 0;
    out.push_back(std::stoull(item, &used));
    if (used != item.size()) throw std::invalid_argument("bad length '" + item + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  auto aut = load_valid(args.file, err);
  if (!aut) return kExitUsage;
  EngineChoice engines;
  if (args.engine == "both")
    engines = EngineChoice::Both;
  else if (args.engine == "naive")
    engines = EngineChoice::Naive;
  else if (args.engine == "linear")
    engines = EngineChoice::Linear;
  else {
    err << "unknown engine '" << args.engine << "'\n";
    return kExitUsage;
  }
  std::vector<BenchRow> rows;
  try {
    auto lengths = parse_lengths(args.lengths);
    rows = run_bench(*aut, stem_of(args.file), args.gen, lengths, engines);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  if (args.out_path) {
    std::ofstream f(*args.out_path, std::ios::binary);
    if (!f) {
      err << "cannot write " << *args.out_path << '\n';
      return kExitUsage;
    }
    write_bench_csv(f, rows);
  } else {
    write_bench_csv(out, rows);
  }

  for (auto engine : {Engine::Naive, Engine::Linear}) {
    std::vector<BenchRow> sel;
    for (const auto& r : rows)
      if (r.engine == engine) sel.push_back(r);
    if (sel.empty()) continue;
    try {
      auto fit = fit_scaling(sel);
      err << engine_name(engine) << " slope " << std::fixed << std::setprecision(3) << fit.slope << " over "
          << fit.points << " points\n";
    } catch (const Degenerate& e) {
      err << engine_name(engine) << " no fit: " << e.what() << '\n';
    }
  }
  return kExitOk;
}

int cmd_fuzz(const FuzzParams& params, std::ostream& out, std::ostream& err) {
  FuzzReport report;
  try {
    report = run_fuzz(params);
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  out << "machines " << report.machines << '\n';
  out << "runs " << report.runs << '\n';
  out << "accepts " << report.accepts << '\n';
  out << "divergences " << report.divergences.size() << '\n';
  for (const auto& d : report.divergences)
    out << "  machine " << d.machine_index << " seed " << d.machine_seed << " word '" << d.word << "': "
        << d.difference << '\n';
  return report.divergences.empty() ? kExitOk : kExitReject;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic d-limited automata: validate, run, benchmark and fuzz", "limla"};
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "Validate a machine file");
  check->add_option("file", check_file, "machine file (or zoo:<id>)")->required();

  RunArgs run_args;
  std::string max_steps_text;
  auto* run = app.add_subcommand("run", "Run a machine on one word");
  run->add_option("file", run_args.file, "machine file (or zoo:<id>)")->required();
  auto* in_opt = run->add_option("--input", "word, one character per symbol or comma-separated");
  auto* tok_opt = run->add_option("--input-tokens", "comma-separated input tokens");
  run->add_option("--engine", run_args.engine, "naive or linear")->check(CLI::IsMember({"naive", "linear"}));
  auto* trace_opt = run->add_option("--trace", "write a JSON-lines trace to PATH");
  run->add_flag("--shadow", run_args.shadow, "check the linear engine against a lockstep reference run");
  auto* max_opt = run->add_option("--max-steps", max_steps_text, "step budget");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Step-count scaling benchmark");
  bench->add_option("file", bench_args.file, "machine file (or zoo:<id>)")->required();
  bench->add_option("--gen", bench_args.gen, "anbn, unary or random:SEED");
  bench->add_option("--lengths", bench_args.lengths, "comma list or LO..HI (doubling)");
  bench->add_option("--engine", bench_args.engine, "both, naive or linear")
      ->check(CLI::IsMember({"both", "naive", "linear"}));
  auto* out_opt = bench->add_option("--out", "CSV output path");

  FuzzParams fp;
  std::string fuzz_d = "2", fuzz_mode = "ranked", fault = "none", repro = "fuzz-repro";
  bool no_shadow = false;
  auto* fuzz = app.add_subcommand("fuzz", "Differential test of the two engines on random machines");
  fuzz->add_option("--states", fp.states, "states per machine")->check(CLI::PositiveNumber);
  fuzz->add_option("--d", fuzz_d, "d: integer, or log2|sqrt|id in counted mode");
  fuzz->add_option("--mode", fuzz_mode, "ranked or counted")->check(CLI::IsMember({"ranked", "counted"}));
  fuzz->add_option("--seed", fp.seed, "master seed");
  fuzz->add_option("--machines", fp.machines, "machine count")->check(CLI::PositiveNumber);
  fuzz->add_option("--maxlen", fp.maxlen, "maximum word length");
  fuzz->add_option("--alphabet-size", fp.alphabet_size, "input alphabet size")->check(CLI::PositiveNumber);
  fuzz->add_option("--exhaustive-cap", fp.exhaustive_cap, "longest length tested exhaustively");
  fuzz->add_option("--random-words", fp.random_words, "random longer words per machine");
  fuzz->add_option("--out-dir", repro, "reproducer directory");
  fuzz->add_flag("--no-shadow", no_shadow, "skip the lockstep shadow check");
  fuzz->add_option("--inject-fault", fault, "engine mutation for harness self-tests")
      ->check(CLI::IsMember({"none", "skip-right-merge"}))
      ->group("");

  std::vector<const char*> argv{"limla"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*check) return cmd_check(check_file, out, err);
  if (*run) {
    if (*in_opt) run_args.input = in_opt->as<std::string>();
    if (*tok_opt) run_args.input_tokens = tok_opt->as<std::string>();
    if (*trace_opt) run_args.trace_path = trace_opt->as<std::string>();
    if (*max_opt) {
      try {
        run_args.max_steps = std::stoull(max_steps_text);
      } catch (const std::exception&) {
        err << "bad --max-steps\n";
        return kExitUsage;
      }
    }
    return cmd_run(run_args, out, err);
  }
  if (*bench) {
    if (*out_opt) bench_args.out_path = out_opt->as<std::string>();
    return cmd_bench(bench_args, out, err);
  }
  if (*fuzz) {
    fp.mode = fuzz_mode == "counted" ? Mode::Counted : Mode::Ranked;
    auto d = parse_dlimit(fuzz_d);
    if (!d || (fp.mode == Mode::Ranked && !d->is_const()) || (d->is_const() && d->k < 0)) {
      err << "bad --d '" << fuzz_d << "'\n";
      return kExitUsage;
    }
    fp.dlimit = *d;
    fp.shadow = !no_shadow;
    fp.fault = fault == "skip-right-merge" ? Fault::SkipRightMerge : Fault::None;
    fp.repro_dir = repro;
    return cmd_fuzz(fp, out, err);
  }
  return kExitUsage;
}

}  // namespace limla
