#include "limla/fuzz.hpp"

#include <fstream>
#include <sstream>

#include "limla/format.hpp"
#include "limla/naive.hpp"

namespace limla {

EngineComparison compare_engines(const Automaton& aut, std::span<const SymbolId> word, const LinearOptions& linear_opts) {
  EngineComparison cmp;
  cmp.naive = run_naive(aut, word, RunOptions{true, std::nullopt});

  LinearOptions lo = linear_opts;
  lo.trace = true;
  try {
    cmp.linear = run_linear(aut, word, lo);
  } catch (const ShadowMismatch& e) {
    cmp.agree = false;
    cmp.shadow_mismatch = true;
    cmp.difference = e.what();
    lo.shadow = false;
    cmp.linear = run_linear(aut, word, lo);
    return cmp;
  }

  if (cmp.naive.verdict.accepted != cmp.linear.verdict.accepted) {
    cmp.agree = false;
    cmp.difference = std::string("verdicts differ: naive ") + to_string(cmp.naive.verdict) + ", linear " +
                     to_string(cmp.linear.verdict);
    return cmp;
  }
  auto a = regular_trace(cmp.naive);
  auto b = regular_trace(cmp.linear);
  if (a != b) {
    std::ostringstream msg;
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    msg << "regular traces differ at move " << i << " (naive " << a.size() << " moves, linear " << b.size()
        << " moves)";
    if (i < a.size()) msg << "; naive " << a[i];
    if (i < b.size()) msg << "; linear " << b[i];
    cmp.agree = false;
    cmp.difference = msg.str();
  }
  return cmp;
}

void write_reproducer(const std::filesystem::path& dir, const Automaton& aut, std::span<const SymbolId> word,
                      const EngineComparison& cmp) {
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "machine.limla", std::ios::binary) << serialize_machine(aut);
  std::ofstream(dir / "word.txt", std::ios::binary)
      << format_word(aut, std::vector<SymbolId>(word.begin(), word.end())) << '\n';
  {
    std::ofstream out(dir / "naive.trace.jsonl", std::ios::binary);
    write_trace_jsonl(out, aut, cmp.naive);
  }
  {
    std::ofstream out(dir / "linear.trace.jsonl", std::ios::binary);
    write_trace_jsonl(out, aut, cmp.linear);
  }
  std::ofstream(dir / "diff.txt", std::ios::binary) << cmp.difference << '\n';
}

std::vector<std::vector<SymbolId>> all_words(std::size_t alphabet_size, std::size_t length) {
  std::vector<std::vector<SymbolId>> out;
  std::vector<SymbolId> w(length, 0);
  for (;;) {
    out.push_back(w);
    std::size_t i = length;
    while (i > 0) {
      --i;
      if (static_cast<std::size_t>(++w[i]) < alphabet_size) break;
      w[i] = 0;
      if (i == 0) return out;
    }
    if (length == 0) return out;
  }
}

std::uint64_t fuzz_machine_seed(std::uint64_t seed, std::size_t k) {
  SplitMix64 rng(seed);
  std::uint64_t s = 0;
  for (std::size_t i = 0; i <= k; ++i) s = rng.next();
  return s;
}

FuzzReport run_fuzz(const FuzzParams& p) {
  FuzzReport report;
  SplitMix64 seeds(p.seed);
  LinearOptions lo;
  lo.shadow = p.shadow;
  lo.fault = p.fault;

  const std::size_t exhaustive = std::min(p.maxlen, p.exhaustive_cap);
  for (std::size_t k = 0; k < p.machines; ++k) {
    GenParams g;
    g.state_count = p.states;
    g.mode = p.mode;
    g.dlimit = p.dlimit;
    g.input_alphabet_size = p.alphabet_size;
    g.symbols_per_rank = p.symbols_per_rank;
    g.seed = seeds.next();
    Automaton aut = random_automaton(g);
    ++report.machines;

    std::vector<std::vector<SymbolId>> words;
    for (std::size_t len = 0; len <= exhaustive; ++len) {
      auto batch = all_words(p.alphabet_size, len);
      words.insert(words.end(), batch.begin(), batch.end());
    }
    SplitMix64 wrng(g.seed ^ 0xd1b54a32d192ed03ULL);
    const std::size_t hi = std::max<std::size_t>(2 * p.maxlen, exhaustive + 1);
    for (std::size_t r = 0; r < p.random_words; ++r) {
      std::size_t len = exhaustive + 1 + wrng.below(hi - exhaustive);
      std::vector<SymbolId> w(len);
      for (auto& s : w) s = static_cast<SymbolId>(wrng.below(p.alphabet_size));
      words.push_back(std::move(w));
    }

    for (const auto& w : words) {
      auto cmp = compare_engines(aut, w, lo);
      ++report.runs;
      if (cmp.naive.verdict.accepted) ++report.accepts;
      if (cmp.agree) continue;
      Divergence d{k, g.seed, format_word(aut, w), cmp.difference};
      if (p.repro_dir && report.divergences.size() < p.max_repros) {
        std::string word_tag = d.word.empty() ? "eps" : d.word;
        if (word_tag.size() > 40) word_tag = word_tag.substr(0, 40);
        write_reproducer(*p.repro_dir / ("machine" + std::to_string(k) + "-" + word_tag), aut, w, cmp);
      }
      report.divergences.push_back(std::move(d));
    }
  }
  return report;
}

}  // namespace limla
