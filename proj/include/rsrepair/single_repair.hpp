#pragma once

#include <map>
#include <vector>

#include "rsrepair/code.hpp"
#include "rsrepair/linalg.hpp"

namespace rsrepair {

/// Repair plan for one erased symbol f(a*): t checks p_i = p_{u_i, a*}
/// built from a deterministic basis U of F over B. Every surviving node
/// contributes the single sub-symbol Tr(lambda_a f(a) / (a - a*)); the plan
/// combines them with the coefficient matrix Tr(u_i (a - a*)).
struct SinglePlan {
  std::uint32_t erased_index = 0;
  BBasis basis_u;                     // size t
  BBasis dual_u;                      // trace-orthogonal dual of U
  std::vector<CheckSpec> checks;      // t checks centered at a*
  std::vector<Felem> demands;         // per node: lambda_a/(a - a*), unused at a*
  std::vector<std::vector<Belem>> combine;  // combine[i][node] = Tr(u_i(a - a*))
};

/// Builds the plan. Throws SchemeInapplicableError when
/// n - k < |B|^(t-1) and std::out_of_range for a bad index.
SinglePlan build_single_plan(const Code& code, std::uint32_t erased_index);

/// The one sub-symbol a surviving node at point `alpha` sends:
/// Tr(lambda * symbol / (alpha - alpha_star)). Throws std::domain_error
/// when alpha = alpha_star.
Belem node_repair_trace(const Tower& tw, Felem symbol, Felem alpha,
                        Felem alpha_star, Felem lambda);

/// Combines the n-1 repair traces into the t target traces of
/// lambda_{a*} f(a*), reconstructs, and strips the multiplier.
/// Throws IncompleteDownloadError unless every surviving node is present.
Felem recover_single(const Code& code, const SinglePlan& plan,
                     const std::map<std::uint32_t, Belem>& traces);

}  // namespace rsrepair
