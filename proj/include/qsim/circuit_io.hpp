#pragma once

#include <istream>
#include <string_view>

#include "qsim/gates.hpp"

namespace qsim {

// Text circuit format, one statement per line:
//
//   QUBITS n                       (first non-comment line)
//   NOT q | SQRTNOT q | H q | PHASE q theta
//   CNOT control target | CPHASE control target theta
//
// '#' starts a comment; blank lines are ignored; angles are radians.
// Errors throw ParseError carrying the 1-based line number.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(std::string_view text);

}  // namespace qsim
