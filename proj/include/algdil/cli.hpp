#pragma once

// Command-line front end. Kept in the library so tests can drive it in-process.
//
// Exit codes: 0 all checks pass, 1 a check failed (report written),
// 2 input or usage error, 3 non-commuting input to `ando`.

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algdil/pairs.hpp"
#include "algdil/report.hpp"

namespace algdil::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2, kNotCommuting = 3 };

/// Parsed problem file: explicit matrices (scalar strings) or a recipe.
struct ProblemFile {
  FieldSpec field;
  std::size_t dim = 0;
  std::optional<std::vector<std::vector<std::string>>> t;
  std::optional<std::vector<std::vector<std::string>>> s;
  std::optional<PairRecipe> recipe;

  /// Throws ParseError / InvalidField / InvalidRecipe.
  static ProblemFile from_json(const json& j);
  json to_json() const;
};

json recipe_to_json(const PairRecipe& r);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algdil::cli
