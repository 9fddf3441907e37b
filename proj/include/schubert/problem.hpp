#pragma once

// Problem files and reports for the command-line front end.

#include <optional>
#include <string>
#include <vector>

#include "schubert/errors.hpp"
#include "schubert/halving.hpp"
#include "schubert/json_io.hpp"

namespace schubert {

/// m generic maps E -> F over the space, degenerating to rank <= rho.
struct DegeneracySpec {
  int e = 0;
  int f = 0;
  int rho = 0;
  int maps = 0;
};

struct ProblemFile {
  SchubertProblem problem;
  std::optional<DegeneracySpec> degeneracy;
  Json echo;
};

struct ReportError {
  ErrorKind kind;
  std::string message;
};

struct Report {
  Json echo;
  Json result;
  std::string provenance;
  Json halved_problem;  // null unless the problem was moved to a fixed-point space
  std::optional<ReportError> error;
  double seconds = 0;
};

std::string_view to_string(SolveMode mode) noexcept;
SolveMode parse_mode(const std::string& text);

ProblemFile problem_from_json(const Json& j);
/// A single problem object, an array of them, or {"problems": [...]}.
std::vector<ProblemFile> problems_from_json(const Json& j);

/// Never throws for engine or schema errors on the problem itself; they are
/// recorded in Report::error.
Report solve(const ProblemFile& file, std::optional<SolveMode> mode_override = std::nullopt);

/// Solves independent problems on up to `jobs` threads; reports keep input order.
std::vector<Report> solve_batch(const std::vector<ProblemFile>& files, std::optional<SolveMode> mode_override,
                                int jobs);

Json report_to_json(const Report& report, bool timing = false);
std::string report_to_text(const Report& report, bool timing = false);

/// 0 for success, 2 for schema violations, 3 for dimension mismatches and
/// undoubled real indices, 4 for any other engine error.
int exit_code(ErrorKind kind) noexcept;
int exit_code(const Report& report) noexcept;

}  // namespace schubert
