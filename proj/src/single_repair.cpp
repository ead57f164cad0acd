#include "rsrepair/single_repair.hpp"

#include <sstream>
#include <stdexcept>

#include "rsrepair/errors.hpp"

namespace rsrepair {

SinglePlan build_single_plan(const Code& code, std::uint32_t erased_index) {
  const Tower& tw = code.tower();
  if (erased_index >= code.n())
    throw std::out_of_range("erased index out of range");
  if (!code.repair_eligible()) {
    std::ostringstream os;
    os << "trace repair needs n-k >= |B|^(t-1): " << code.n() << "-" << code.k()
       << " is too small";
    throw SchemeInapplicableError(os.str());
  }

  SinglePlan plan;
  plan.erased_index = erased_index;
  plan.basis_u = complete_basis(tw, {});
  plan.dual_u = dual_basis(tw, plan.basis_u);

  const Felem a_star = code.points()[erased_index];
  plan.checks.reserve(tw.t());
  for (Felem u : plan.basis_u)
    plan.checks.push_back(CheckSpec{u, a_star, tw.one()});

  const std::uint32_t n = code.n();
  plan.demands.assign(n, tw.zero());
  plan.combine.assign(tw.t(), std::vector<Belem>(n, tw.b_zero()));
  for (std::uint32_t node = 0; node < n; ++node) {
    if (node == erased_index) continue;
    const Felem a = code.points()[node];
    const Felem diff = tw.sub(a, a_star);
    plan.demands[node] = tw.div(code.multipliers()[node], diff);
    for (std::uint32_t i = 0; i < tw.t(); ++i)
      plan.combine[i][node] = tw.trace(tw.mul(plan.basis_u[i], diff));
  }
  return plan;
}

Belem node_repair_trace(const Tower& tw, Felem symbol, Felem alpha,
                        Felem alpha_star, Felem lambda) {
  if (alpha == alpha_star)
    throw std::domain_error("repair trace is undefined at the erased point");
  return respond_demand(tw, tw.div(lambda, tw.sub(alpha, alpha_star)), symbol);
}

Felem recover_single(const Code& code, const SinglePlan& plan,
                     const std::map<std::uint32_t, Belem>& traces) {
  const Tower& tw = code.tower();
  const std::uint32_t n = code.n();
  if (traces.size() != n - 1)
    throw IncompleteDownloadError("one repair trace per surviving node is required");
  for (std::uint32_t node = 0; node < n; ++node)
    if (node != plan.erased_index && !traces.contains(node))
      throw IncompleteDownloadError("missing repair trace for a surviving node");

  // Tr(u_i lambda f(a*)) = -sum_a Tr(u_i(a - a*)) Tr(lambda_a f(a)/(a - a*))
  std::vector<Belem> target(tw.t(), tw.b_zero());
  for (std::uint32_t i = 0; i < tw.t(); ++i) {
    Belem acc = tw.b_zero();
    for (const auto& [node, tr] : traces)
      acc = tw.b_add(acc, tw.b_mul(plan.combine[i][node], tr));
    target[i] = tw.b_neg(acc);
  }
  const Felem scaled = reconstruct_with_dual(tw, target, plan.dual_u);
  return tw.div(scaled, code.multipliers()[plan.erased_index]);
}

}  // namespace rsrepair
