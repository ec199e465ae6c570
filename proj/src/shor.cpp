#include "qsim/shor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "qsim/errors.hpp"
#include "qsim/qft.hpp"

namespace qsim {

ContinuedFraction continued_fraction_expansion(u64 num, u64 den) {
  if (den == 0) throw DomainError("continued fraction of x/0");
  if (num >= den) throw DomainError("continued fraction expects 0 <= num < den");
  ContinuedFraction cf;
  // h/k recurrences seeded with h_{-2}/k_{-2} = 0/1 and h_{-1}/k_{-1} = 1/0.
  u128 h_prev2 = 0, h_prev1 = 1, k_prev2 = 1, k_prev1 = 0;
  u64 a = num, b = den;
  while (b != 0) {
    const u64 term = a / b;
    cf.terms.push_back(term);
    const u128 h = term * h_prev1 + h_prev2;
    const u128 k = term * k_prev1 + k_prev2;
    const Fraction next{static_cast<u64>(h), static_cast<u64>(k)};
    if (!cf.convergents.empty() && cf.convergents.back().den == next.den) {
      cf.convergents.back() = next;
    } else {
      cf.convergents.push_back(next);
    }
    h_prev2 = h_prev1;
    h_prev1 = h;
    k_prev2 = k_prev1;
    k_prev1 = k;
    const u64 rem = a % b;
    a = b;
    b = rem;
  }
  return cf;
}

u64 default_q_bound(unsigned num_qubits) {
  if (num_qubits > 62) throw DomainError("register size out of range");
  return integer_sqrt(u64{1} << num_qubits);
}

std::optional<u64> recover_period_candidate(BasisIndex y, unsigned num_qubits, u64 q_bound) {
  if (num_qubits < 1 || num_qubits > 62) throw DomainError("register size out of range");
  if (q_bound < 1) throw DomainError("denominator bound must be positive");
  if (y == 0) return std::nullopt;
  const u64 dim = u64{1} << num_qubits;
  if (y >= dim) throw DomainError("measurement outside register");
  std::optional<u64> best;
  for (const Fraction& c : continued_fraction_expansion(y, dim).convergents) {
    if (c.den > q_bound) break;
    best = c.den;
  }
  return best;
}

StateVector prepare_periodic_superposition(unsigned num_qubits, u64 period, u64 offset) {
  const u64 m = spike_count(num_qubits, period, offset);
  StateVector s = StateVector::from_amplitudes(std::vector<Complex>(std::size_t{1} << num_qubits));
  const double amp = 1.0 / std::sqrt(static_cast<double>(m));
  for (u64 j = 0; j < m; ++j) s[offset + j * period] = amp;
  return s;
}

StateVector prepare_periodic_superposition(unsigned num_qubits, u64 period, RandomSource& rng) {
  spike_count(num_qubits, period, 0);
  return prepare_periodic_superposition(num_qubits, period, rng.uniform_int(0, period - 1));
}

BasisIndex sample_period_measurement_statevector(unsigned num_qubits, u64 period, RandomSource& rng) {
  StateVector s = prepare_periodic_superposition(num_qubits, period, rng);
  apply_qft_circuit(s);
  return measure_all(s, rng).outcome;
}

namespace {

// |sum_{j<m} exp(2 pi i j t / L)|^2 for signed offset d = t (mod L).
double fejer_weight(u64 m, u64 period_len, u64 abs_d) {
  if (abs_d % period_len == 0) return static_cast<double>(m) * static_cast<double>(m);
  const auto md = static_cast<u64>(static_cast<u128>(m) * abs_d % period_len);
  const double num = std::sin(std::numbers::pi * static_cast<double>(md) / static_cast<double>(period_len));
  const double den =
      std::sin(std::numbers::pi * static_cast<double>(abs_d % period_len) / static_cast<double>(period_len));
  return (num * num) / (den * den);
}

u64 sample_fejer_enumerated(u64 m, u64 period_len, RandomSource& rng) {
  std::vector<double> cumulative(period_len);
  double acc = 0.0;
  for (u64 t = 0; t < period_len; ++t) {
    acc += fejer_weight(m, period_len, t);
    cumulative[t] = acc;
  }
  const double u = rng.uniform() * acc;
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return it == cumulative.end() ? period_len - 1 : static_cast<u64>(it - cumulative.begin());
}

// Rejection sampling of t in [0, L) with weight fejer_weight, using the bounds
// W <= m^2 and W <= 1 / sin^2(pi d / L) <= L^2 / (4 d^2) for |d| <= L/2.
u64 sample_fejer_rejection(u64 m, u64 period_len, RandomSource& rng) {
  const double len = static_cast<double>(period_len);
  const double m2 = static_cast<double>(m) * static_cast<double>(m);
  const auto half = static_cast<std::int64_t>(period_len / 2);
  const auto core = static_cast<std::int64_t>(period_len / (2 * m));
  const double core_mass = static_cast<double>(2 * core + 1) * m2;
  const double tail_start = static_cast<double>(core) + 0.5;
  const double tail_mass = 2.0 * len * len / (4.0 * tail_start);

  for (;;) {
    std::int64_t d;
    double accept;
    if (rng.uniform() * (core_mass + tail_mass) < core_mass) {
      d = static_cast<std::int64_t>(rng.uniform_int(0, static_cast<u64>(2 * core))) - core;
      if (d <= -half || d > half) continue;
      accept = fejer_weight(m, period_len, static_cast<u64>(d < 0 ? -d : d)) / m2;
    } else {
      const double x = tail_start / rng.uniform_open_closed();
      if (x > static_cast<double>(half) + 1.0) continue;
      const auto mag = static_cast<std::int64_t>(std::floor(x + 0.5));
      const bool negative = rng.uniform() < 0.5;
      if (mag > half || (negative && mag >= half)) continue;
      d = negative ? -mag : mag;
      const double dd = static_cast<double>(mag);
      accept = fejer_weight(m, period_len, static_cast<u64>(mag)) * 4.0 * (dd * dd - 0.25) / (len * len);
    }
    if (rng.uniform() < accept) return d < 0 ? period_len - static_cast<u64>(-d) : static_cast<u64>(d);
  }
}

}  // namespace

BasisIndex sample_period_measurement_analytic(unsigned num_qubits, u64 period, RandomSource& rng,
                                              u64 enumeration_limit) {
  const u64 offset = rng.uniform_int(0, std::max<u64>(period, 1) - 1);
  const u64 m = spike_count(num_qubits, period, offset);
  // y r = 2^s (y r') with r' odd, so the phase only sees t = y r' mod L, L = 2^(n-s).
  const unsigned twos = std::min<unsigned>(static_cast<unsigned>(std::countr_zero(period)), num_qubits);
  const unsigned low_bits = num_qubits - twos;
  const u64 period_len = u64{1} << low_bits;
  const u64 odd_part = period >> twos;

  u64 t = 0;
  if (period_len > 1) {
    t = period_len <= enumeration_limit ? sample_fejer_enumerated(m, period_len, rng)
                                        : sample_fejer_rejection(m, period_len, rng);
  }
  const u64 y_low = low_bits == 0 ? 0 : (t * inverse_mod_pow2(odd_part, low_bits)) & (period_len - 1);
  const u64 y_high = twos == 0 ? 0 : rng.uniform_int(0, (u64{1} << twos) - 1);
  return y_low | (y_high << low_bits);
}

std::vector<BasisIndex> sample_period_measurements(unsigned num_qubits, u64 period, std::size_t shots,
                                                   RandomSource& rng) {
  std::vector<BasisIndex> out(shots);
  if (num_qubits > kMaxSimulatedQubits) {
    for (auto& y : out) y = sample_period_measurement_analytic(num_qubits, period, rng);
    return out;
  }
  spike_count(num_qubits, period, 0);
  std::map<u64, std::vector<std::size_t>> by_offset;
  for (std::size_t i = 0; i < shots; ++i) by_offset[rng.uniform_int(0, period - 1)].push_back(i);
  for (const auto& [offset, positions] : by_offset) {
    StateVector s = prepare_periodic_superposition(num_qubits, period, offset);
    apply_qft_circuit(s);
    const OutcomeSampler sampler(s);
    for (std::size_t i : positions) out[i] = sampler.sample(rng);
  }
  return out;
}

BasisIndex sample_period_measurement(unsigned num_qubits, u64 period, RandomSource& rng) {
  if (num_qubits <= kMaxSimulatedQubits) return sample_period_measurement_statevector(num_qubits, period, rng);
  return sample_period_measurement_analytic(num_qubits, period, rng);
}

std::vector<double> period_measurement_probabilities(unsigned num_qubits, u64 period) {
  if (num_qubits < 1 || num_qubits > 20) throw ResourceError("exact distribution limited to 20 qubits");
  const u64 dim = u64{1} << num_qubits;
  spike_count(num_qubits, period, 0);
  // Offsets z < (2^n mod r) see one extra spike.
  const u64 q = dim / period;
  const u64 s = dim % period;
  const std::pair<u64, double> groups[2] = {
      {q + 1, static_cast<double>(s) / static_cast<double>(period)},
      {q, static_cast<double>(period - s) / static_cast<double>(period)},
  };
  std::vector<double> probs(dim, 0.0);
  for (u64 y = 0; y < dim; ++y) {
    const u64 k = static_cast<u64>(static_cast<u128>(y) * period % dim);
    const u64 d = std::min(k, dim - k);
    double p = 0.0;
    for (const auto& [m, weight] : groups) {
      if (weight == 0.0) continue;
      p += weight * fejer_weight(m, dim, d) / (static_cast<double>(m) * static_cast<double>(dim));
    }
    probs[y] = p;
  }
  return probs;
}

PeriodicOracle::PeriodicOracle(unsigned num_bits, u64 hidden_period, Function f)
    : num_bits_(num_bits), period_(hidden_period), f_(std::move(f)) {
  if (num_bits < 1 || num_bits > 62) throw DomainError("oracle width out of range");
  if (hidden_period < 1 || hidden_period > (u64{1} << num_bits))
    throw DomainError("period must satisfy 1 <= r <= 2^n");
  if (!f_) throw DomainError("oracle function is empty");
}

PeriodicOracle PeriodicOracle::residue(unsigned num_bits, u64 period) {
  return PeriodicOracle(num_bits, period, [period](u64 x) { return x % period; });
}

PeriodicOracle PeriodicOracle::modular_exponentiation(unsigned num_bits, u64 base, u64 modulus) {
  const u64 order = multiplicative_order(base, modulus);
  return PeriodicOracle(num_bits, order, [base, modulus](u64 x) { return mod_exp(base, x, modulus); });
}

bool PeriodicOracle::is_valid() const {
  if (num_bits_ > 16) throw ResourceError("exhaustive oracle check limited to 16 bits");
  const u64 dim = u64{1} << num_bits_;
  // f(x) = f(x mod r) everywhere and f injective on [0, r) together give
  // f(x) = f(y) <=> r | x - y.
  std::vector<u64> head;
  for (u64 x = 0; x < std::min(period_, dim); ++x) head.push_back(f_(x));
  std::vector<u64> sorted = head;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (u64 x = period_; x < dim; ++x)
    if (f_(x) != head[x % period_]) return false;
  return true;
}

BlackBoxFunction black_box(const PeriodicOracle& oracle) {
  return {oracle.num_bits(), [&oracle](u64 x) { return oracle.evaluate(x); }};
}

PeriodSearch recover_period(const BlackBoxFunction& f, MeasurementSource& source, u64 max_attempts,
                            RandomSource& rng) {
  if (max_attempts < 1) throw DomainError("need at least one attempt");
  if (source.num_bits() != f.num_bits) throw DomainError("measurement register differs from oracle width");
  const unsigned n = f.num_bits;
  const u64 dim = u64{1} << n;
  const u64 q_bound = default_q_bound(n);
  const u64 f0 = f.evaluate(0);

  // Smallest divisor d of v with f(d) = f(0); v must already satisfy f(v) = f(0).
  const auto reduce = [&](u64 v) {
    for (u64 p : distinct_prime_factors(v))
      while (v % p == 0 && f.evaluate(v / p) == f0) v /= p;
    return v;
  };

  PeriodSearch search;
  std::vector<u64> seen;
  for (u64 attempt = 0; attempt < max_attempts; ++attempt) {
    PeriodAttempt record{};
    record.y = source.measure(rng);
    if (record.y >= dim) throw DomainError("measurement outside register");
    record.convergents = continued_fraction_expansion(record.y, dim).convergents;
    record.candidate = recover_period_candidate(record.y, n, q_bound);

    std::vector<u64> to_test;
    if (attempt == 0) to_test.push_back(1);
    if (record.candidate && std::find(seen.begin(), seen.end(), *record.candidate) == seen.end()) {
      const u64 q = *record.candidate;
      to_test.push_back(q);
      for (u64 p : seen) {
        const u128 l = static_cast<u128>(p / gcd(p, q)) * q;
        if (l < dim) to_test.push_back(static_cast<u64>(l));
      }
      seen.push_back(q);
    }

    for (u64 v : to_test) {
      if (std::find(record.tested.begin(), record.tested.end(), v) != record.tested.end()) continue;
      record.tested.push_back(v);
      if (v < dim && f.evaluate(v) == f0) {
        search.period = reduce(v);
        record.verified = true;
        break;
      }
    }
    search.attempts.push_back(std::move(record));
    if (search.period) break;
  }
  return search;
}

PeriodSearch find_period_traced(const PeriodicOracle& oracle, u64 max_attempts, RandomSource& rng) {
  SimulatedPeriodSampler device(oracle);
  return recover_period(black_box(oracle), device, max_attempts, rng);
}

u64 find_period(const PeriodicOracle& oracle, u64 max_attempts, RandomSource& rng) {
  const PeriodSearch search = find_period_traced(oracle, max_attempts, rng);
  if (!search.period)
    throw RecoveryFailure("period not recovered in " + std::to_string(max_attempts) + " attempts");
  return *search.period;
}

ClassicalCheck classical_precheck(u64 n) {
  if (n < 4) throw DomainError("factoring needs N >= 4");
  if (n % 2 == 0) return {ClassicalRoute::kEven, 2};
  if (is_prime(n)) return {ClassicalRoute::kPrime, std::nullopt};
  if (const auto p = prime_power_base(n)) return {ClassicalRoute::kPrimePower, *p};
  return {ClassicalRoute::kNone, std::nullopt};
}

namespace {

constexpr u64 kMaxFactorInput = u64{1} << 31;

void require_quantum_route(u64 n) {
  if (n >= kMaxFactorInput) throw DomainError("N too large for simulated factoring");
  const ClassicalCheck check = classical_precheck(n);
  switch (check.route) {
    case ClassicalRoute::kNone:
      return;
    case ClassicalRoute::kEven:
      throw DomainError(std::to_string(n) + " is even; classical factor 2");
    case ClassicalRoute::kPrime:
      throw DomainError(std::to_string(n) + " is prime; no nontrivial factor");
    case ClassicalRoute::kPrimePower:
      throw DomainError(std::to_string(n) + " is a prime power; classical factor " + std::to_string(*check.factor));
  }
}

}  // namespace

FactorRound factor_round(u64 n, u64 base, RandomSource& rng, u64 max_period_attempts) {
  if (base < 2 || base + 2 > n) throw DomainError("base must satisfy 2 <= a <= N - 2");
  FactorRound round{};
  round.base = base;
  round.gcd_with_n = gcd(base, n);
  if (round.gcd_with_n > 1) {
    round.factor = round.gcd_with_n;
    round.outcome = "shared-factor";
    return round;
  }

  round.register_qubits = ceil_log2(static_cast<u128>(n) * n);
  const PeriodicOracle oracle = PeriodicOracle::modular_exponentiation(round.register_qubits, base, n);
  PeriodSearch search = find_period_traced(oracle, max_period_attempts, rng);
  round.attempts = std::move(search.attempts);
  round.period = search.period;
  if (!round.period) {
    round.outcome = "period-not-found";
    return round;
  }
  const u64 r = *round.period;
  if (r % 2 != 0) {
    round.outcome = "odd-period";
    return round;
  }
  const u64 half_power = mod_exp(base, r / 2, n);
  if (half_power == n - 1) {
    round.outcome = "trivial-square-root";
    return round;
  }
  for (u64 d : {gcd(half_power + n - 1, n), gcd(half_power + 1, n)}) {
    if (d > 1 && d < n) {
      round.factor = d;
      round.outcome = "factor";
      return round;
    }
  }
  round.outcome = "no-split";
  return round;
}

FactorSearch factor_traced(u64 n, u64 max_rounds, RandomSource& rng, u64 max_period_attempts) {
  require_quantum_route(n);
  if (max_rounds < 1) throw DomainError("need at least one round");
  FactorSearch search;
  for (u64 i = 0; i < max_rounds; ++i) {
    const u64 base = rng.uniform_int(2, n - 2);
    search.rounds.push_back(factor_round(n, base, rng, max_period_attempts));
    if (search.rounds.back().factor) {
      search.factor = search.rounds.back().factor;
      break;
    }
  }
  return search;
}

FactorResult factor(u64 n, u64 max_rounds, RandomSource& rng, u64 max_period_attempts) {
  FactorSearch search = factor_traced(n, max_rounds, rng, max_period_attempts);
  if (!search.factor)
    throw RecoveryFailure("no factor of " + std::to_string(n) + " in " + std::to_string(max_rounds) + " rounds");
  const u64 rounds = search.rounds.size();
  return {n, *search.factor, rounds, std::move(search.rounds)};
}

}  // namespace qsim
