#include "qsim/circuit_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qsim/errors.hpp"

namespace qsim {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string t; ss >> t;) tokens.push_back(t);
  return tokens;
}

unsigned parse_unsigned(const std::string& tok, std::size_t line_no) {
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected a non-negative integer, got '" + tok + "'");
  return value;
}

double parse_angle(const std::string& tok, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "expected an angle in radians, got '" + tok + "'");
  return value;
}

void expect_args(const std::vector<std::string>& tokens, std::size_t count, std::size_t line_no) {
  if (tokens.size() != count + 1)
    throw ParseError(line_no, tokens[0] + " takes " + std::to_string(count) + " argument(s)");
}

}  // namespace

Circuit parse_circuit(std::istream& in) {
  std::optional<Circuit> circuit;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& op = tokens[0];

    if (!circuit) {
      if (op != "QUBITS") throw ParseError(line_no, "first statement must be 'QUBITS n'");
      expect_args(tokens, 1, line_no);
      const unsigned n = parse_unsigned(tokens[1], line_no);
      if (n < 1) throw ParseError(line_no, "QUBITS must be at least 1");
      circuit.emplace(n);
      continue;
    }
    if (op == "QUBITS") throw ParseError(line_no, "QUBITS may appear only once");

    const auto qubit = [&](std::size_t pos) {
      const unsigned q = parse_unsigned(tokens[pos], line_no);
      if (q >= circuit->num_qubits())
        throw ParseError(line_no, "qubit " + std::to_string(q) + " outside register of " +
                                      std::to_string(circuit->num_qubits()));
      return q;
    };
    const auto distinct = [&](unsigned a, unsigned b) {
      if (a == b) throw ParseError(line_no, op + " needs two distinct qubits");
    };

    if (op == "NOT") {
      expect_args(tokens, 1, line_no);
      circuit->add(not_gate(qubit(1)));
    } else if (op == "SQRTNOT") {
      expect_args(tokens, 1, line_no);
      circuit->add(sqrt_not_gate(qubit(1)));
    } else if (op == "H") {
      expect_args(tokens, 1, line_no);
      circuit->add(hadamard(qubit(1)));
    } else if (op == "PHASE") {
      expect_args(tokens, 2, line_no);
      circuit->add(phase(qubit(1), parse_angle(tokens[2], line_no)));
    } else if (op == "CNOT") {
      expect_args(tokens, 2, line_no);
      const unsigned c = qubit(1), t = qubit(2);
      distinct(c, t);
      circuit->add(controlled_not(c, t));
    } else if (op == "CPHASE") {
      expect_args(tokens, 3, line_no);
      const unsigned c = qubit(1), t = qubit(2);
      distinct(c, t);
      circuit->add(controlled_phase(c, t, parse_angle(tokens[3], line_no)));
    } else {
      throw ParseError(line_no, "unknown gate '" + op + "'");
    }
  }
  if (!circuit) throw ParseError(line_no == 0 ? 1 : line_no, "missing 'QUBITS n' header");
  return std::move(*circuit);
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_circuit(in);
}

}  // namespace qsim
