#include <doctest.h>

#include <numbers>

#include "qsim/circuit_io.hpp"
#include "qsim/errors.hpp"

using namespace qsim;

TEST_CASE("parses every mnemonic") {
  const Circuit c = parse_circuit(
      "# demo\n"
      "QUBITS 3\n"
      "\n"
      "NOT 0\n"
      "SQRTNOT 1   # trailing comment\n"
      "H 2\n"
      "PHASE 0 1.5707963267948966\n"
      "CNOT 0 2\n"
      "CPHASE 2 1 -0.25\n");
  REQUIRE(c.num_qubits() == 3);
  REQUIRE(c.size() == 6);
  CHECK(c.gates()[0].name() == "NOT");
  CHECK(c.gates()[1].name() == "SQRTNOT");
  CHECK(c.gates()[2].name() == "H");
  CHECK(c.gates()[3].matrix()(1, 1) == std::polar(1.0, std::numbers::pi / 2));
  CHECK(c.gates()[4].targets()[0] == 0);
  CHECK(c.gates()[4].targets()[1] == 2);
  CHECK(c.gates()[5].matrix()(3, 3) == std::polar(1.0, -0.25));
}

TEST_CASE("header only is an empty circuit") {
  const Circuit c = parse_circuit("QUBITS 2\n");
  CHECK(c.size() == 0);
}

namespace {

std::size_t error_line(const char* text) {
  try {
    parse_circuit(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse errors name the offending line") {
  CHECK(error_line("QUBITS 1\nHADAMARD 0\n") == 2);
  CHECK(error_line("# c\nNOT 0\n") == 2);  // missing header
  CHECK(error_line("QUBITS 2\nNOT 2\n") == 2);
  CHECK(error_line("QUBITS 2\nCNOT 1 1\n") == 2);
  CHECK(error_line("QUBITS 2\nPHASE 0 abc\n") == 2);
  CHECK(error_line("QUBITS 2\nNOT 0\nNOT\n") == 3);
  CHECK(error_line("QUBITS 2\nQUBITS 3\n") == 2);
  CHECK(error_line("QUBITS 0\n") == 1);
  CHECK(error_line("") == 1);
}
