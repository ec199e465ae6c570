// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qsim/classical.hpp"
#include "qsim/gates.hpp"
#include "qsim/grover.hpp"
#include "qsim/matrix.hpp"
#include "qsim/qft.hpp"
#include "qsim/shor.hpp"
#include "qsim/state.hpp"
#include "test_util.hpp"

using namespace qsim;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

template <typename... Args>
std::string fmt(Args&&... args) {
  std::ostringstream os;
  os.precision(6);
  (os << ... << args);
  return os.str();
}

Verdict interference_exactness() {
  StateVector s = new_basis_state(1, 0);
  apply_gate(s, sqrt_not_gate(0));
  apply_gate(s, sqrt_not_gate(0));
  const double quantum = probability_of(s, 1);

  ProbVector p = ProbVector::point_mass(1, 0);
  const LocalStochasticOp coin(0, fair_coin_matrix());
  apply_local_stochastic(p, coin);
  apply_local_stochastic(p, coin);
  const double classical = p[1];
  return {std::abs(quantum - 1.0) < 1e-12 && std::abs(classical - 0.5) < 1e-12,
          fmt("P_quantum(1)=", quantum, " P_classical(1)=", classical)};
}

Verdict gate_semantics() {
  RandomSource rng(1001);
  double worst = 0.0;
  for (int c = 0; c < 200; ++c) {
    const auto n = static_cast<unsigned>(rng.uniform_int(1, 6));
    const Gate g = test::random_gate(n, rng);
    StateVector s = random_state(n, rng);
    const auto expected = multiply(embed_gate_dense(g, n), s.amplitudes());
    apply_gate(s, g);
    worst = std::max(worst, test::max_abs_diff(s.amplitudes(), expected));
  }
  return {worst < 1e-10, fmt("200 cases, max deviation ", worst)};
}

Verdict qft_equivalence() {
  RandomSource rng(1002);
  double worst = 0.0, worst_unitarity = 0.0;
  for (unsigned n = 1; n <= 8; ++n) {
    const ComplexMatrix f = qft_matrix(n);
    worst_unitarity = std::max(worst_unitarity, unitarity_deviation(f));
    for (int k = 0; k < 50; ++k) {
      StateVector s = random_state(n, rng);
      const auto expected = multiply(f, s.amplitudes());
      apply_qft_circuit(s);
      worst = std::max(worst, test::max_abs_diff(s.amplitudes(), expected));
    }
  }
  return {worst < 1e-10 && worst_unitarity < 1e-10,
          fmt("n<=8 x 50 states, max deviation ", worst, ", unitarity deviation ", worst_unitarity)};
}

Verdict grover_advantage() {
  const unsigned n = 10;
  PredicateOracle oracle = PredicateOracle::marking(n, {700});
  RandomSource rng(1003);
  int successes = 0;
  bool counts_ok = true;
  for (int t = 0; t < 1000; ++t) {
    const GroverResult r = grover_search(oracle, 1, rng);
    successes += r.success ? 1 : 0;
    counts_ok = counts_ok && r.iterations == 25 && r.oracle_calls == 26;
  }
  const double rate = successes / 1000.0;
  return {counts_ok && rate >= 0.99, fmt("iterations=25 oracle_calls=26 ", counts_ok ? "ok" : "WRONG",
                                         ", success rate ", rate, ", classical expected draws ",
                                         classical_expected_draws(n, 1))};
}

Verdict period_comb() {
  RandomSource rng(1004);
  double worst_mass = 0.0;
  std::uint64_t off_comb_samples = 0, cases = 0;
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned e = 0; e <= n; ++e) {
      const u64 r = u64{1} << e;
      const u64 spacing = (u64{1} << n) / r;
      const auto probs = period_measurement_probabilities(n, r);
      double off = 0.0;
      for (BasisIndex y = 0; y < probs.size(); ++y)
        if (y % spacing != 0) off += probs[y];
      worst_mass = std::max(worst_mass, off);
      for (BasisIndex y : sample_period_measurements(n, r, 10000, rng)) off_comb_samples += y % spacing != 0;
      ++cases;
    }
  return {off_comb_samples == 0 && worst_mass < 1e-10,
          fmt(cases, " (n, r) pairs x 1e4 samples, off-comb samples ", off_comb_samples, ", max off-comb mass ",
              worst_mass)};
}

Verdict period_recovery() {
  RandomSource rng(1005);
  int correct = 0;
  for (int i = 0; i < 100; ++i) {
    const auto n = static_cast<unsigned>(rng.uniform_int(1, 12));
    const u64 r = rng.uniform_int(1, integer_sqrt(u64{1} << n));
    const PeriodSearch s = find_period_traced(PeriodicOracle::residue(n, r), 32, rng);
    correct += s.period && *s.period == r;
  }
  return {correct == 100, fmt(correct, "/100 exact")};
}

Verdict end_to_end_factoring() {
  bool ok = true;
  std::string detail;
  for (u64 n : {15, 21, 33, 35, 77, 91}) {
    const auto start = std::chrono::steady_clock::now();
    RandomSource rng(2000 + n);
    const FactorResult r = factor(n, 20, rng);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool good = r.factor > 1 && r.factor < n && n % r.factor == 0 && secs < 10.0;
    ok = ok && good;
    detail += fmt(n, "=", r.factor, "x", n / r.factor, " (", r.attempts, " rounds, ", secs, "s) ");
  }
  return {ok, detail};
}

Verdict measurement_statistics() {
  RandomSource rng(1008);
  int passed = 0;
  std::string worst;
  double worst_ratio = 0.0;
  for (int k = 0; k < 10; ++k) {
    const auto n = static_cast<unsigned>(rng.uniform_int(1, 4));
    const StateVector s = random_state(n, rng);
    std::vector<double> probs(s.dimension());
    for (BasisIndex i = 0; i < s.dimension(); ++i) probs[i] = std::norm(s[i]);
    std::vector<std::uint64_t> counts(s.dimension());
    for (int i = 0; i < 100000; ++i) ++counts[measure_all(s, rng).outcome];
    const auto chi = test::chi_square(counts, probs, 0.001);
    passed += chi.pass;
    if (chi.statistic / chi.critical > worst_ratio) {
      worst_ratio = chi.statistic / chi.critical;
      worst = fmt("chi2=", chi.statistic, " crit=", chi.critical, " dof=", chi.dof);
    }
  }
  return {passed == 10, fmt(passed, "/10 states pass at 0.001; worst ", worst)};
}

Verdict classical_track() {
  RandomSource rng(1009);
  double worst_norm = 0.0, worst_dense = 0.0;
  for (int c = 0; c < 100; ++c) {
    const auto n = static_cast<unsigned>(rng.uniform_int(1, 6));
    const LocalStochasticOp op = test::random_op(n, rng);
    ProbVector p = test::random_distribution(n, rng);
    const auto expected = multiply(embed_stochastic_dense(op, n), p.probs());
    apply_local_stochastic(p, op);
    worst_norm = std::max(worst_norm, std::abs(l1_norm(p) - 1.0));
    worst_dense = std::max(worst_dense, test::max_abs_diff(p.probs(), expected));
  }
  return {worst_norm < 1e-10 && worst_dense < 1e-10,
          fmt("100 ops, max |l1-1| ", worst_norm, ", max dense deviation ", worst_dense)};
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(QSIM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

Verdict reproducibility() {
  const std::vector<std::string> invocations{
      "interference",
      "grover --n 8 --solutions 3,77 --trials 30",
      "period-find --n-bits 12 --period 5 --trials 5",
      "factor --n 91",
      "--seed 7 factor --n 1040399",
      "qft-check --max-n 4 --states 3",
      "--output-format text period-find --n-bits 9 --period 6 --trials 2",
  };
  int identical = 0;
  for (const auto& args : invocations) {
    const std::string a = capture(args);
    const std::string b = capture(args);
    identical += !a.empty() && a == b;
  }
  const bool ok = identical == static_cast<int>(invocations.size());
  return {ok, fmt(identical, "/", invocations.size(), " invocations byte-identical across two runs")};
}

struct Criterion {
  const char* name;
  double limit_seconds;  // <= 0: no runtime bound
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"interference exactness", 1, interference_exactness},
      {"gate semantics vs dense embedding", 10, gate_semantics},
      {"QFT circuit vs Fourier matrix", 30, qft_equivalence},
      {"Grover success at n=10", 30, grover_advantage},
      {"period measurement comb", 30, period_comb},
      {"period recovery", 120, period_recovery},
      {"end-to-end factoring", 60, end_to_end_factoring},
      {"measurement statistics", 30, measurement_statistics},
      {"classical stochastic track", 10, classical_track},
      {"CLI reproducibility", 0, reproducibility},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    const bool pass = v.pass && in_time;
    failures += !pass;
    std::printf("[%s] %2zu. %-36s %8.3fs%s  %s\n", pass ? "PASS" : "FAIL", i + 1, c.name, secs,
                in_time ? "" : " (over time limit)", v.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
