#pragma once
// Line-oriented problem files:
//
//   field: Q(t)                      # or Q, or Q(t1,t2) derivations: 2
//   vars: z y
//   point: z = t, y = t
//   eqs: z*y' - y; ...
//   module: 2                        # instead of vars/point/eqs
//   gens: [d, -1]; [0, t*d - 1]      # or linear forms: e1' - e2
//   reduce: [d^2, 0]
//   leaders: [(1,1)]; [(2,0),(0,3)]  # one bracket per component
//   ranking: orderly | elim

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lindiff/cli/expr_parser.hpp"
#include "lindiff/numpoly.hpp"

namespace lindiff::cli {

struct ProblemFile {
  /// Q(t) with one derivation unless a `field:` line says otherwise.
  DiffFieldConfig cfg{1, 1};
  bool field_declared = false;
  std::vector<std::string> field_names{"t"};

  /// Names of the indeterminates, or of the module components.
  std::vector<std::string> var_names;
  std::optional<std::vector<RatFun>> point;
  std::vector<DiffPoly> equations;

  std::optional<std::size_t> module_rank;
  std::vector<ModElement> generators;

  std::optional<ModElement> reduce_target;
  std::optional<Antichain> leaders;
  std::optional<RankingKind> ranking;

  bool has_variety() const { return point.has_value() || !equations.empty(); }
  bool has_module() const { return module_rank.has_value(); }
  Scope scope() const { return Scope{cfg, field_names, var_names}; }
};

/// Throws ParseError with the line and column of the offending text.
ProblemFile parse_input(std::string_view text);

}  // namespace lindiff::cli
