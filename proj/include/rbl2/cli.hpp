#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rbl2/document.hpp"
#include "rbl2/report.hpp"

namespace rbl2 {

/// Exit codes of the command-line tool.
enum ExitCode : int { kPass = 0, kViolations = 1, kUsage = 2 };

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The verifier a `verify` run applies to a structure of this kind.
VerificationReport verify_any(const AnyStructure& s, const Exec& exec = {});

/// Canonical text of a search result: coefficient list and one operator per line.
std::string write_operator_list(const std::vector<Scalar>& coeffs, const std::vector<LinearMap>& ops);

}  // namespace rbl2
