#include "qsim/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "qsim/circuit_io.hpp"
#include "qsim/classical.hpp"
#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "qsim/grover.hpp"
#include "qsim/qft.hpp"
#include "qsim/shor.hpp"

namespace qsim::cli {

namespace {

Json header(const char* command, std::uint64_t seed) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["seed"] = seed;
  j["duration_ms"] = nullptr;
  return j;
}

void check_register(unsigned n, const char* flag) {
  if (n < 1) throw UsageError(std::string(flag) + " must be at least 1");
  if (n > kMaxCliQubits)
    throw UsageError(std::string(flag) + " = " + std::to_string(n) + " exceeds the " +
                     std::to_string(kMaxCliQubits) + "-qubit limit (2^n amplitudes would not fit in memory)");
}

Json distribution_json(std::span<const double> probs, unsigned n) {
  Json j = Json::object();
  for (std::size_t i = 0; i < probs.size(); ++i) j[to_bitstring(i, n)] = probs[i];
  return j;
}

Json fractions_json(const std::vector<Fraction>& fs) {
  Json j = Json::array();
  for (const Fraction& f : fs) j.push_back({f.num, f.den});
  return j;
}

Json attempts_json(const std::vector<PeriodAttempt>& attempts) {
  Json j = Json::array();
  for (const PeriodAttempt& a : attempts) {
    Json rec;
    rec["y"] = a.y;
    rec["convergents"] = fractions_json(a.convergents);
    rec["candidate"] = a.candidate ? Json(*a.candidate) : Json(nullptr);
    rec["tested"] = a.tested;
    rec["verified"] = a.verified;
    j.push_back(std::move(rec));
  }
  return j;
}

BasisIndex parse_bitstring(const std::string& bits, unsigned n) {
  if (bits.empty() || bits.size() > n)
    throw UsageError("input must be a bitstring of 1.." + std::to_string(n) + " characters");
  BasisIndex value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw UsageError("input must contain only 0 and 1");
    value = (value << 1) | static_cast<BasisIndex>(c - '0');
  }
  return value;
}

}  // namespace

CommandOutput interference(std::uint64_t seed) {
  StateVector q = new_basis_state(1, 0);
  apply_gate(q, sqrt_not_gate(0));
  const ProbVector quantum_one = quantum_to_distribution(q);
  apply_gate(q, sqrt_not_gate(0));
  const ProbVector quantum_two = quantum_to_distribution(q);

  const LocalStochasticOp coin(0, fair_coin_matrix());
  ProbVector c = ProbVector::point_mass(1, 0);
  apply_local_stochastic(c, coin);
  const ProbVector classical_one = c;
  apply_local_stochastic(c, coin);
  const ProbVector classical_two = c;

  Json j = header("interference", seed);
  j["quantum_one_step"] = quantum_one[1];
  j["quantum_two_step"] = quantum_two[1];
  j["classical_one_step"] = classical_one[1];
  j["classical_two_step"] = classical_two[1];
  j["quantum"] = {{"gate", "SQRTNOT"},
                  {"one_step", distribution_json(quantum_one.probs(), 1)},
                  {"two_step", distribution_json(quantum_two.probs(), 1)}};
  j["classical"] = {{"matrix", "[[0.5,0.5],[0.5,0.5]]"},
                    {"one_step", distribution_json(classical_one.probs(), 1)},
                    {"two_step", distribution_json(classical_two.probs(), 1)}};
  return {std::move(j), kExitOk};
}

CommandOutput run_circuit_text(const std::string& text, const RunCircuitOptions& opts) {
  const Circuit circuit = parse_circuit(text);
  check_register(circuit.num_qubits(), "QUBITS");
  const unsigned n = circuit.num_qubits();
  const BasisIndex input = parse_bitstring(opts.input, n);

  StateVector s = new_basis_state(n, input);
  run_circuit(s, circuit);

  RandomSource rng(opts.seed);
  const OutcomeSampler sampler(s);
  std::map<BasisIndex, std::uint64_t> counts;
  for (std::uint64_t i = 0; i < opts.shots; ++i) ++counts[sampler.sample(rng)];

  Json j = header("run-circuit", opts.seed);
  j["qubits"] = n;
  j["gates"] = circuit.size();
  j["input"] = to_bitstring(input, n);
  j["shots"] = opts.shots;
  Json hist = Json::object();
  for (const auto& [outcome, count] : counts) hist[to_bitstring(outcome, n)] = count;
  j["histogram"] = std::move(hist);
  j["norm"] = l2_norm(s);
  if (opts.dump) j["dump"] = dump_state(s);
  return {std::move(j), kExitOk};
}

CommandOutput run_circuit_file(const RunCircuitOptions& opts) {
  std::ifstream in(opts.path);
  if (!in) throw UsageError("cannot open circuit file '" + opts.path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return run_circuit_text(text.str(), opts);
}

CommandOutput grover(const GroverOptions& opts) {
  check_register(opts.n, "--n");
  if (opts.trials < 1) throw UsageError("--trials must be at least 1");
  std::vector<BasisIndex> solutions = opts.solutions;
  std::sort(solutions.begin(), solutions.end());
  solutions.erase(std::unique(solutions.begin(), solutions.end()), solutions.end());
  const std::uint64_t dim = std::uint64_t{1} << opts.n;
  for (BasisIndex s : solutions)
    if (s >= dim) throw UsageError("solution " + std::to_string(s) + " outside 0.." + std::to_string(dim - 1));
  const std::uint64_t m = solutions.size();
  if (m < 1 || m >= dim) throw UsageError("need 1 <= number of solutions < 2^n");

  PredicateOracle oracle = PredicateOracle::marking(opts.n, solutions);
  RandomSource rng(opts.seed);
  std::uint64_t successes = 0, calls = 0, iterations = 0;
  for (std::uint64_t t = 0; t < opts.trials; ++t) {
    const GroverResult r = grover_search(oracle, m, rng);
    successes += r.success ? 1 : 0;
    calls = r.oracle_calls;
    iterations = r.iterations;
  }

  const double theta = std::asin(std::sqrt(static_cast<double>(m) / static_cast<double>(dim)));
  const double predicted = std::pow(std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta), 2);

  Json j = header("grover", opts.seed);
  j["n"] = opts.n;
  j["solutions"] = m;
  j["trials"] = opts.trials;
  j["iterations"] = iterations;
  j["oracle_calls_per_trial"] = calls;
  j["successes"] = successes;
  j["success_rate"] = static_cast<double>(successes) / static_cast<double>(opts.trials);
  j["predicted_success_probability"] = predicted;
  j["classical_expected_draws"] = classical_expected_draws(opts.n, m);
  return {std::move(j), kExitOk};
}

CommandOutput period_find(const PeriodFindOptions& opts) {
  check_register(opts.n_bits, "--n-bits");
  const std::uint64_t dim = std::uint64_t{1} << opts.n_bits;
  if (opts.period < 1 || opts.period > dim) throw UsageError("--period must satisfy 1 <= r <= 2^n");
  if (opts.trials < 1) throw UsageError("--trials must be at least 1");
  if (opts.max_attempts < 1) throw UsageError("--max-attempts must be at least 1");

  const PeriodicOracle oracle = PeriodicOracle::residue(opts.n_bits, opts.period);
  RandomSource rng(opts.seed);
  Json trials = Json::array();
  std::uint64_t successes = 0, total_attempts = 0;
  for (std::uint64_t t = 0; t < opts.trials; ++t) {
    const PeriodSearch search = find_period_traced(oracle, opts.max_attempts, rng);
    const bool ok = search.period && *search.period == opts.period;
    successes += ok ? 1 : 0;
    total_attempts += search.attempts.size();
    trials.push_back({{"period", search.period ? Json(*search.period) : Json(nullptr)},
                      {"correct", ok},
                      {"attempts", attempts_json(search.attempts)}});
  }

  Json j = header("period-find", opts.seed);
  j["n_bits"] = opts.n_bits;
  j["period"] = opts.period;
  j["q_bound"] = default_q_bound(opts.n_bits);
  j["trials"] = opts.trials;
  j["successes"] = successes;
  j["success_rate"] = static_cast<double>(successes) / static_cast<double>(opts.trials);
  j["mean_attempts"] = static_cast<double>(total_attempts) / static_cast<double>(opts.trials);
  j["runs"] = std::move(trials);
  return {std::move(j), successes == opts.trials ? kExitOk : kExitFailure};
}

CommandOutput factor(const FactorOptions& opts) {
  if (opts.n < 4) throw UsageError("--n must be at least 4");
  if (opts.n >= kMaxFactorN) throw UsageError("--n must be below 2^20");
  if (opts.max_rounds < 1) throw UsageError("--max-rounds must be at least 1");

  Json j = header("factor", opts.seed);
  j["n"] = opts.n;
  const ClassicalCheck check = classical_precheck(opts.n);
  const auto classical = [&](const char* route, const char* note) {
    j["route"] = route;
    j["factor"] = *check.factor;
    j["cofactor"] = opts.n / *check.factor;
    j["note"] = note;
    return CommandOutput{std::move(j), kExitOk};
  };
  switch (check.route) {
    case ClassicalRoute::kEven:
      return classical("classical-even", "N is even; quantum pipeline bypassed");
    case ClassicalRoute::kPrimePower:
      return classical("classical-prime-power", "N is a prime power; quantum pipeline bypassed");
    case ClassicalRoute::kPrime:
      j["route"] = "classical-prime";
      j["factor"] = nullptr;
      j["note"] = "N is prime; no nontrivial factor exists";
      return {std::move(j), kExitFailure};
    case ClassicalRoute::kNone:
      break;
  }

  RandomSource rng(opts.seed);
  const FactorSearch search = factor_traced(opts.n, opts.max_rounds, rng, opts.max_period_attempts);
  j["route"] = "quantum";
  j["factor"] = search.factor ? Json(*search.factor) : Json(nullptr);
  j["cofactor"] = search.factor ? Json(opts.n / *search.factor) : Json(nullptr);
  j["rounds_used"] = search.rounds.size();
  Json rounds = Json::array();
  for (const FactorRound& r : search.rounds) {
    Json rec;
    rec["a"] = r.base;
    rec["gcd"] = r.gcd_with_n;
    rec["register_qubits"] = r.register_qubits;
    rec["period"] = r.period ? Json(*r.period) : Json(nullptr);
    rec["outcome"] = r.outcome;
    rec["factor"] = r.factor ? Json(*r.factor) : Json(nullptr);
    rec["attempts"] = attempts_json(r.attempts);
    rounds.push_back(std::move(rec));
  }
  j["rounds"] = std::move(rounds);
  return {std::move(j), search.factor ? kExitOk : kExitFailure};
}

CommandOutput qft_check(const QftCheckOptions& opts) {
  if (opts.max_n < 1 || opts.max_n > kMaxDenseQubits)
    throw UsageError("--max-n must be in 1.." + std::to_string(kMaxDenseQubits));
  if (opts.states < 1) throw UsageError("--states must be at least 1");

  RandomSource rng(opts.seed);
  Json per_n = Json::array();
  double worst = 0.0, worst_unitarity = 0.0;
  for (unsigned n = 1; n <= opts.max_n; ++n) {
    const ComplexMatrix dense = qft_matrix(n);
    const double unitarity = unitarity_deviation(dense);
    double deviation = 0.0;
    for (std::uint64_t k = 0; k < opts.states; ++k) {
      StateVector s = random_state(n, rng);
      const std::vector<Complex> expected = multiply(dense, s.amplitudes());
      apply_qft_circuit(s);
      for (std::size_t i = 0; i < expected.size(); ++i) deviation = std::max(deviation, std::abs(s[i] - expected[i]));
    }
    worst = std::max(worst, deviation);
    worst_unitarity = std::max(worst_unitarity, unitarity);
    per_n.push_back({{"n", n},
                     {"gates", qft_circuit(n).size()},
                     {"max_deviation", deviation},
                     {"unitarity_deviation", unitarity}});
  }
  Json j = header("qft-check", opts.seed);
  j["max_n"] = opts.max_n;
  j["states_per_n"] = opts.states;
  j["max_deviation"] = worst;
  j["max_unitarity_deviation"] = worst_unitarity;
  j["tolerance"] = 1e-10;
  j["pass"] = worst < 1e-10 && worst_unitarity < 1e-10;
  j["per_n"] = std::move(per_n);
  return {std::move(j), worst < 1e-10 && worst_unitarity < 1e-10 ? kExitOk : kExitFailure};
}

std::vector<BasisIndex> parse_index_list(const std::string& text) {
  std::vector<BasisIndex> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad index '" + item + "' in list '" + text + "'");
    out.push_back(std::stoull(item));
  }
  if (out.empty()) throw UsageError("empty index list");
  return out;
}

namespace {

void render_into(const Json& node, const std::string& path, std::string& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) render_into(value, path.empty() ? key : path + "." + key, out);
    return;
  }
  if (node.is_array() && !node.empty() && (node.front().is_object() || node.front().is_array())) {
    for (std::size_t i = 0; i < node.size(); ++i) render_into(node[i], path + "[" + std::to_string(i) + "]", out);
    return;
  }
  if (node.is_string() && node.get_ref<const std::string&>().find('\n') != std::string::npos) {
    out += path + ":\n" + node.get<std::string>();
    return;
  }
  out += path + ": " + (node.is_string() ? node.get<std::string>() : node.dump()) + "\n";
}

}  // namespace

std::string render_text(const Json& body) {
  std::string out;
  render_into(body, "", out);
  return out;
}

}  // namespace qsim::cli
