// qsim: command-line front end for the state-vector simulator.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qsim/commands.hpp"
#include "qsim/errors.hpp"

namespace cli = qsim::cli;

int main(int argc, char** argv) {
  CLI::App app{"State-vector quantum simulator: interference, Grover search, period finding, factoring"};
  app.fallthrough();
  app.require_subcommand(1);

  std::uint64_t seed = cli::kDefaultSeed;
  std::string format = "json";
  bool timing = false;
  app.add_option("--seed", seed, "Random seed (fixed default for reproducible runs)");
  app.add_option("--output-format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", timing, "Fill duration_ms with measured wall-clock time");

  std::function<cli::CommandOutput()> run;

  auto* interference = app.add_subcommand("interference", "SQRTNOT twice versus a fair coin twice");
  interference->callback([&] { run = [&] { return cli::interference(seed); }; });

  cli::RunCircuitOptions rc;
  auto* run_circuit = app.add_subcommand("run-circuit", "Run a circuit file on a basis input and sample it");
  run_circuit->add_option("path", rc.path, "Circuit file")->required();
  run_circuit->add_option("--input", rc.input, "Input basis state as a bitstring, most significant qubit first");
  run_circuit->add_option("--shots", rc.shots, "Number of measurement shots");
  run_circuit->add_flag("--dump", rc.dump, "Include the final state amplitudes");
  run_circuit->callback([&] {
    run = [&] {
      rc.seed = seed;
      return cli::run_circuit_file(rc);
    };
  });

  cli::GroverOptions gr;
  std::string solutions;
  auto* grover = app.add_subcommand("grover", "Grover search for marked indices");
  grover->add_option("--n", gr.n, "Number of qubits")->required();
  grover->add_option("--solutions", solutions, "Comma-separated marked indices")->required();
  grover->add_option("--trials", gr.trials, "Independent searches");
  grover->callback([&] {
    run = [&] {
      gr.seed = seed;
      gr.solutions = cli::parse_index_list(solutions);
      return cli::grover(gr);
    };
  });

  cli::PeriodFindOptions pf;
  auto* period = app.add_subcommand("period-find", "Recover the period of f(x) = x mod r");
  period->add_option("--n-bits", pf.n_bits, "Register size")->required();
  period->add_option("--period", pf.period, "Hidden period r")->required();
  period->add_option("--trials", pf.trials, "Independent recoveries");
  period->add_option("--max-attempts", pf.max_attempts, "Measurements per recovery");
  period->callback([&] {
    run = [&] {
      pf.seed = seed;
      return cli::period_find(pf);
    };
  });

  cli::FactorOptions fo;
  auto* factor = app.add_subcommand("factor", "Factor N through order finding");
  factor->add_option("--n", fo.n, "Integer to factor (< 2^20)")->required();
  factor->add_option("--max-rounds", fo.max_rounds, "Random bases to try");
  factor->add_option("--max-attempts", fo.max_period_attempts, "Measurements per period search");
  factor->callback([&] {
    run = [&] {
      fo.seed = seed;
      return cli::factor(fo);
    };
  });

  cli::QftCheckOptions qc;
  auto* qft = app.add_subcommand("qft-check", "Compare the QFT circuit with the dense Fourier matrix");
  qft->add_option("--max-n", qc.max_n, "Largest register size checked");
  qft->add_option("--states", qc.states, "Random states per register size");
  qft->callback([&] {
    run = [&] {
      qc.seed = seed;
      return cli::qft_check(qc);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    cli::CommandOutput out = run();
    if (timing) {
      out.body["duration_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    if (format == "text") {
      std::cout << cli::render_text(out.body);
    } else {
      std::cout << out.body.dump(2) << '\n';
    }
    return out.exit_code;
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const qsim::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const qsim::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const qsim::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << '\n';
    return cli::kExitFailure;
  }
}
