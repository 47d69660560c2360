#pragma once

#include "stieltjes/cli/job.hpp"

#include <json.hpp>

#include <iosfwd>

namespace stieltjes::cli {

enum ExitCode { kOk = 0, kParseError = 2, kDomainError = 3, kInternalError = 4 };

struct Outcome {
  nlohmann::json report;
  /// kOk, or kInternalError when a verification suite failed.
  int exit_code = kOk;
};

/// Runs one pipeline stage. Library errors propagate as exceptions.
Outcome execute(const JobSpec& job);

/// execute() plus rendering and the exit-code mapping: parse errors 2,
/// domain errors 3, internal or verification failures 4. Errors go to err
/// as a JSON object.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

void render(const nlohmann::json& report, Format format, std::ostream& out);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const SFraction& sf);
nlohmann::json to_json(const PFraction& p);

}  // namespace stieltjes::cli
