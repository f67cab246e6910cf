// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "limla/bench.hpp"
#include "limla/fuzz.hpp"
#include "limla/linear.hpp"
#include "limla/mapping.hpp"
#include "limla/naive.hpp"
#include "limla/zoo.hpp"
#include "support/oracle.hpp"

using namespace limla;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Tallies shared by several criteria.
struct Ledger {
  std::uint64_t bound_checks = 0;
  std::uint64_t bound_violations = 0;
  std::uint64_t compose_runs = 0;
  std::uint64_t edge_violations = 0;
  std::uint64_t shadow_runs = 0;
  std::uint64_t shadow_mismatches = 0;

  void linear_run(const RunOutcome& r, std::size_t q, std::size_t n) {
    ++bound_checks;
    if (r.loop_iterations > linear_iteration_bound(r.d, q, n)) ++bound_violations;
    edges(r.max_compose_edges, q);
  }
  void edges(std::uint64_t e, std::size_t q) {
    ++compose_runs;
    if (e > 8 * q) ++edge_violations;
  }
};

Ledger ledger;
int failures = 0;
bool linear_ratio_ok = false;
std::string linear_ratio_detail;

std::map<int, std::string> results;

void report(int id, bool ok, const std::string& detail) {
  results[id] = std::string(ok ? "PASS" : "FAIL") + "  " + detail;
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<SymbolId> anbn_word(std::size_t n) {
  std::vector<SymbolId> w(n / 2, 0);
  w.insert(w.end(), n - n / 2, 1);
  return w;
}

double slope(const std::vector<std::size_t>& ns, const std::vector<std::uint64_t>& steps) {
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    BenchRow r;
    r.machine = "x";
    r.n = ns[i];
    r.steps = steps[i];
    rows.push_back(r);
  }
  return fit_scaling(rows).slope;
}

void differential() {
  const auto t0 = Clock::now();
  std::size_t runs = 0, divergences = 0;
  LinearOptions lo;
  lo.shadow = true;

  auto one = [&](const Automaton& aut, const std::vector<SymbolId>& w) {
    auto cmp = compare_engines(aut, w, lo);
    ++runs;
    ++ledger.shadow_runs;
    if (cmp.shadow_mismatch) ++ledger.shadow_mismatches;
    if (!cmp.agree) {
      if (divergences < 5) std::printf("  divergence: %s on '%s'\n", cmp.difference.c_str(), format_word(aut, w).c_str());
      ++divergences;
    }
    ledger.linear_run(cmp.linear, aut.state_count(), w.size());
  };

  SplitMix64 seeds(20240501);
  for (int m = 0; m < 200; ++m) {
    GenParams p;
    p.seed = seeds.next();
    p.state_count = 1 + seeds.below(5);
    p.dlimit = DLimitSpec::constant(static_cast<std::int64_t>(seeds.below(4)));
    auto aut = random_automaton(p);
    for (std::size_t len = 0; len <= 10; ++len)
      for (const auto& w : all_words(2, len)) one(aut, w);
  }
  for (const auto& entry : zoo()) {
    auto aut = entry.build();
    for (std::size_t len = 0; len <= 12; ++len)
      for (const auto& w : all_words(2, len)) one(aut, w);
  }
  const double secs = seconds_since(t0);
  report(1, divergences == 0 && secs < 120.0,
         fmt("%zu runs, %zu divergences, %.1f s (limit 120 s)", runs, divergences, secs));
}

void algebra() {
  const auto t0 = Clock::now();
  SplitMix64 rng(31337);
  std::size_t bad_pairs = 0, bad_assoc = 0, bad_identity = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t q = 1 + rng.below(6);
    auto f = oracle::random_map(rng, q, i % 4 == 0 ? 0 : 20);
    auto g = oracle::random_map(rng, q, i % 7 == 0 ? 0 : 20);
    auto c = compose_full(f, g);
    ledger.edges(c.edge_traversals, q);
    auto o = oracle::compose(f, g);
    if (!(c.map == o.h) || !(c.departure == o.dep)) ++bad_pairs;
    auto t = SegmentMap::transparent(q);
    if (!(compose(t, f) == f) || !(compose(f, t) == f)) ++bad_identity;
  }
  for (int i = 0; i < 1000; ++i) {
    const std::size_t q = 1 + rng.below(6);
    auto f = oracle::random_map(rng, q);
    auto g = oracle::random_map(rng, q);
    auto h = oracle::random_map(rng, q);
    auto fg = compose_full(f, g);
    auto fg_h = compose_full(fg.map, h);
    auto gh = compose_full(g, h);
    auto f_gh = compose_full(f, gh.map);
    for (auto e : {fg.edge_traversals, fg_h.edge_traversals, gh.edge_traversals, f_gh.edge_traversals})
      ledger.edges(e, q);
    if (!(fg_h.map == f_gh.map)) ++bad_assoc;
  }
  const double secs = seconds_since(t0);
  report(2, bad_pairs == 0 && bad_assoc == 0 && bad_identity == 0 && secs < 10.0,
         fmt("oracle mismatches %zu/10000, associativity failures %zu/1000, identity failures %zu, %.2f s", bad_pairs,
             bad_assoc, bad_identity, secs));
}

void homomorphism() {
  SplitMix64 rng(8080);
  std::size_t bad = 0, total = 0;
  while (total < 10000) {
    GenParams p;
    p.seed = rng.next();
    p.state_count = 1 + rng.below(6);
    p.dlimit = DLimitSpec::constant(static_cast<std::int64_t>(rng.below(4)));
    auto aut = random_automaton(p);
    std::vector<SymbolId> frozen;
    for (SymbolId s = 0; s < static_cast<SymbolId>(aut.tape.size()); ++s)
      if (aut.rank(s) == p.dlimit.k) frozen.push_back(s);
    for (int k = 0; k < 20 && total < 10000; ++k, ++total) {
      std::vector<SymbolId> w(1 + rng.below(8));
      for (auto& s : w) s = frozen[rng.below(frozen.size())];
      SegmentMap fold = cf(aut, w[0]);
      for (std::size_t i = 1; i < w.size(); ++i) {
        auto c = compose_full(fold, cf(aut, w[i]));
        ledger.edges(c.edge_traversals, aut.state_count());
        fold = c.map;
      }
      auto direct = describe_segment(aut, w);
      if (!(fold == direct) || !(direct == oracle::describe(aut, w))) ++bad;
    }
  }
  report(3, bad == 0, fmt("%zu/%zu frozen strings differ", bad, total));
}

void quadratic_and_linear() {
  auto aut = build_anbn();
  const std::vector<std::size_t> ns{128, 256, 512};
  std::vector<std::uint64_t> naive_steps, linear_steps;
  bool verdicts = true;
  for (auto n : ns) {
    auto w = anbn_word(n);
    auto a = run_naive(aut, w);
    auto b = run_linear(aut, w);
    verdicts = verdicts && a.verdict.accepted && b.verdict.accepted;
    naive_steps.push_back(a.steps);
    linear_steps.push_back(b.steps);
    ledger.linear_run(b, aut.state_count(), n);
  }
  bool ok4 = verdicts;
  std::string d4;
  for (std::size_t i = 1; i < ns.size(); ++i) {
    double r = static_cast<double>(naive_steps[i]) / static_cast<double>(naive_steps[i - 1]);
    ok4 = ok4 && r >= 3.4 && r <= 4.6;
    d4 += fmt("ratio %zu/%zu = %.3f; ", ns[i], ns[i - 1], r);
  }
  double s4 = slope(ns, naive_steps);
  ok4 = ok4 && s4 >= 1.8 && s4 <= 2.2;
  report(4, ok4, d4 + fmt("slope %.3f (want [1.8, 2.2])", s4));

  bool ok5 = verdicts;
  std::string d5;
  for (std::size_t i = 1; i < ns.size(); ++i) {
    double r = static_cast<double>(linear_steps[i]) / static_cast<double>(linear_steps[i - 1]);
    ok5 = ok5 && r >= 1.6 && r <= 2.4;
    d5 += fmt("ratio %zu/%zu = %.3f; ", ns[i], ns[i - 1], r);
  }
  // Reported after sweeper(), whose runs also count toward the bound.
  linear_ratio_ok = ok5;
  linear_ratio_detail = d5;
}

void sweeper() {
  auto aut = build_sweeper();
  SplitMix64 rng(606);
  std::size_t mismatches = 0, write_errors = 0;
  for (std::size_t n = 0; n <= 128; ++n) {
    std::vector<SymbolId> w(n);
    for (auto& s : w) s = static_cast<SymbolId>(rng.below(2));
    auto a = run_naive(aut, w);
    auto b = run_linear(aut, w);
    ledger.linear_run(b, aut.state_count(), n);
    if (!(a.verdict.accepted == b.verdict.accepted)) ++mismatches;
    for (std::size_t i = 1; i <= n; ++i)
      if (a.writes[i] != n) ++write_errors;
  }
  const std::vector<std::size_t> ns{32, 64, 128, 256};
  std::vector<std::uint64_t> steps;
  for (auto n : ns) {
    std::vector<SymbolId> w(n, 0);
    auto a = run_naive(aut, w);
    for (std::size_t i = 1; i <= n; ++i)
      if (a.writes[i] != n) ++write_errors;
    steps.push_back(a.steps);
    ledger.linear_run(run_linear(aut, w), aut.state_count(), n);
  }
  double s = slope(ns, steps);
  report(6, mismatches == 0 && write_errors == 0 && s >= 1.8 && s <= 2.2,
         fmt("verdict mismatches %zu (n <= 128), cells with writes != n: %zu, naive slope %.3f (want [1.8, 2.2])",
             mismatches, write_errors, s));
}

void loops() {
  std::size_t runs = 0, accepted = 0, slow_detect = 0, over_bound = 0;
  auto check = [&](const Automaton& aut, SplitMix64& rng) {
    for (int k = 0; k < 100; ++k) {
      std::vector<SymbolId> w(1 + rng.below(40));
      for (auto& s : w) s = static_cast<SymbolId>(rng.below(aut.input.size()));
      auto a = run_naive(aut, w);
      auto b = run_linear(aut, w);
      ++runs;
      if (a.verdict.accepted || b.verdict.accepted) ++accepted;
      if (a.steps - a.last_write_step > 2 * (w.size() + 2) * aut.state_count()) ++slow_detect;
      if (b.loop_iterations > linear_iteration_bound(b.d, aut.state_count(), w.size())) ++over_bound;
      ledger.edges(b.max_compose_edges, aut.state_count());
    }
  };
  SplitMix64 rng(4242);
  check(build_bouncer(), rng);
  for (int m = 0; m < 50; ++m) {
    GenParams p;
    p.seed = rng.next();
    p.state_count = 2 + rng.below(4);
    p.dlimit = DLimitSpec::constant(static_cast<std::int64_t>(rng.below(4)));
    p.unreachable_accept = true;
    check(random_automaton(p), rng);
  }
  report(8, accepted == 0 && slow_detect == 0 && over_bound == 0,
         fmt("%zu runs: %zu accepted, %zu slow naive detections, %zu linear bound violations", runs, accepted,
             slow_detect, over_bound));
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  differential();
  algebra();
  homomorphism();
  quadratic_and_linear();
  sweeper();
  report(5, linear_ratio_ok && ledger.bound_violations == 0,
         linear_ratio_detail + fmt("iteration bound held on %llu/%llu runs (criteria 1, 4, 6)",
             static_cast<unsigned long long>(ledger.bound_checks - ledger.bound_violations),
             static_cast<unsigned long long>(ledger.bound_checks)));
  loops();
  report(7, ledger.edge_violations == 0,
         fmt("%llu composition records, %llu over 8|Q| edges",
             static_cast<unsigned long long>(ledger.compose_runs),
             static_cast<unsigned long long>(ledger.edge_violations)));
  report(9, ledger.shadow_mismatches == 0,
         fmt("%llu shadowed runs, %llu ShadowMismatch events",
             static_cast<unsigned long long>(ledger.shadow_runs),
             static_cast<unsigned long long>(ledger.shadow_mismatches)));
  for (const auto& [id, line] : results) std::printf("criterion %d: %s\n", id, line.c_str());
  std::printf("%s in %.1f s\n", failures == 0 ? "all criteria passed" : "FAILURES", seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
